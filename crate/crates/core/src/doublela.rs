//! Double Lie algebroids on split double vector bundles: the defining
//! bialgebroid check over the dual of the core, its structural
//! consequences, cotangent doubles of Lie bialgebroids and vacant doubles.

use crate::algebroid::vector_field;
use crate::algebroid::{
    algebroid_from_linear_poisson, bracket_sections, check_algebroid, check_bialgebroid_with, differential,
    Derivation, Form, LieAlgebroid, Multivector, PoissonChart, Section,
};
use crate::dvb::{DecomposedDVB, VectorBundle};
use crate::error::{Error, Result};
use crate::exact::chart::is_identifier;
use crate::exact::random::OracleOptions;
use crate::exact::{ChartRef, Polynomial};
use crate::lavb::{check_lavb, induced_dual_algebroid, LAVBundle};
use crate::matched::{actions_from_vacant, build_bowtie, check_matched, vacant_from_actions, MatchedPair};
use crate::verdict::{CheckReport, Verdict, Witness};

/// Two LA-vector bundle structures on one split double vector bundle
/// `(D; A, B; M)` with core `C`: `vertical` is `D -> A` over the side
/// algebroid `B`, `horizontal` is `D -> B` over the side algebroid `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleLieAlgebroid {
    vertical: LAVBundle,
    horizontal: LAVBundle,
}

impl DoubleLieAlgebroid {
    pub fn new(vertical: LAVBundle, horizontal: LAVBundle) -> Result<Self> {
        if horizontal.dvb() != &vertical.dvb().transpose() {
            return Err(Error::Schema(
                "the two LA-vector bundle structures do not share one double vector bundle".into(),
            ));
        }
        Ok(DoubleLieAlgebroid { vertical, horizontal })
    }

    pub fn vertical(&self) -> &LAVBundle {
        &self.vertical
    }

    pub fn horizontal(&self) -> &LAVBundle {
        &self.horizontal
    }

    pub fn dvb(&self) -> &DecomposedDVB {
        self.vertical.dvb()
    }

    pub fn chart(&self) -> &ChartRef {
        self.vertical.chart()
    }

    /// The side algebroid `A`.
    pub fn a(&self) -> &LieAlgebroid {
        self.horizontal.side()
    }

    /// The side algebroid `B`.
    pub fn b(&self) -> &LieAlgebroid {
        self.vertical.side()
    }

    /// `d_A[gamma][alpha]`, the core anchor of `D -> A`.
    pub fn core_map_a(&self) -> &[Vec<Polynomial>] {
        self.vertical.core_anchor()
    }

    /// `d_B[gamma][beta]`, the core anchor of `D -> B`.
    pub fn core_map_b(&self) -> &[Vec<Polynomial>] {
        self.horizontal.core_anchor()
    }

    /// The same double with the roles of `A` and `B` exchanged.
    pub fn transpose(&self) -> DoubleLieAlgebroid {
        DoubleLieAlgebroid {
            vertical: self.horizontal.clone(),
            horizontal: self.vertical.clone(),
        }
    }

    pub fn vertical_mut(&mut self) -> &mut LAVBundle {
        &mut self.vertical
    }

    /// The double tangent bundle of a chart. Both sides and the core are
    /// copies of `TM`, presented by bundles `a`, `b`, `core`; both
    /// structures are tangent doubles.
    pub fn tangent_square(chart: &ChartRef, a: VectorBundle, b: VectorBundle, core: VectorBundle) -> Result<Self> {
        let n = chart.dim();
        let flat = vec![vec![vec![Polynomial::zero(chart); n]; n]; n];
        let vertical = LAVBundle::tangent_double_split(chart, a.clone(), b.clone(), core.clone(), &flat)?;
        let horizontal = LAVBundle::tangent_double_split(chart, b, a, core, &flat)?;
        DoubleLieAlgebroid::new(vertical, horizontal)
    }

    /// `tangent_square` with generated names: side frames `h_x`, `v_x`
    /// with fibre coordinates `s_x`, `u_x`, core frames `k_x` with fibre
    /// coordinates `w_x`.
    pub fn tangent_square_default(chart: &ChartRef) -> Result<Self> {
        let bundle = |f: &str, c: &str| {
            VectorBundle::new(
                chart.names().iter().map(|x| format!("{f}_{x}")).collect(),
                chart.names().iter().map(|x| format!("{c}_{x}")).collect(),
            )
        };
        DoubleLieAlgebroid::tangent_square(chart, bundle("v", "u")?, bundle("h", "s")?, bundle("k", "w")?)
    }
}

/// The two induced algebroids over `C*`: `D⫯A⫯C*` with frames `A*` then
/// `B`, and `D⫯B⫯C*` transported to the dual of the first by negating the
/// `A` frames and listing them first.
pub fn induced_pair(dla: &DoubleLieAlgebroid) -> Result<(LieAlgebroid, LieAlgebroid)> {
    let e1 = induced_dual_algebroid(&dla.vertical)?;
    let e2 = induced_dual_algebroid(&dla.horizontal)?;
    let (ra, rb) = (dla.dvb().a().rank(), dla.dvb().b().rank());
    let mut perm = Vec::with_capacity(ra + rb);
    let mut signs = Vec::with_capacity(ra + rb);
    for k in 0..rb {
        perm.push(ra + k);
        signs.push(1);
    }
    for al in 0..ra {
        perm.push(al);
        signs.push(-1);
    }
    let mut frames = vec![String::new(); ra + rb];
    for (old, &new) in perm.iter().enumerate() {
        frames[new] = e2.frames()[old].clone();
    }
    let e1star = e2.reframe(frames, &perm, &signs)?;
    Ok((e1, e1star))
}

/// The Poisson structure on `C*` induced by the bialgebroid pair:
/// `{f, g} = sum_k e_k(f) eps^k(g)`.
pub fn induced_poisson(e: &LieAlgebroid, estar: &LieAlgebroid) -> Result<std::result::Result<PoissonChart, Witness>> {
    let chart = e.chart();
    let n = chart.dim();
    let entry = |i: usize, j: usize| {
        let mut p = Polynomial::zero(chart);
        for k in 0..e.rank() {
            p = &p + &(&e.anchor(k)[i] * &estar.anchor(k)[j]);
        }
        p
    };
    let mut entries = Vec::new();
    for i in 0..n {
        let d = entry(i, i);
        if !d.is_zero() {
            return Ok(Err(Witness::new("induced poisson", format!("({}, {})", chart.name(i), chart.name(i)), d.to_string())));
        }
        for j in i + 1..n {
            let (p, q) = (entry(i, j), entry(j, i));
            let sum = &p + &q;
            if !sum.is_zero() {
                return Ok(Err(Witness::new(
                    "induced poisson",
                    format!("({}, {})", chart.name(i), chart.name(j)),
                    sum.to_string(),
                )));
            }
            entries.push((i, j, p));
        }
    }
    Ok(Ok(PoissonChart::new(chart, entries)?))
}

/// Both LA-vector bundle checks, then the bialgebroid condition on the
/// induced pair over `C*`.
pub fn check_double(dla: &DoubleLieAlgebroid) -> Result<CheckReport> {
    check_double_with(dla, &OracleOptions::default())
}

pub fn check_double_with(dla: &DoubleLieAlgebroid, opts: &OracleOptions) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    if !report.push("vertical lavb", check_lavb(&dla.vertical)) {
        return Ok(report);
    }
    if !report.push("horizontal lavb", check_lavb(&dla.horizontal)) {
        return Ok(report);
    }
    let (e1, e1star) = induced_pair(dla)?;
    let verdict = check_bialgebroid_with(&e1, &e1star, opts)?;
    let passed = report.push("bialgebroid", verdict);
    report.note("core dual chart", e1.chart().to_string());
    report.note("induced frames", e1.frames().join(", "));
    report.note("dual frames", e1star.frames().join(", "));
    if passed {
        if let Ok(pi) = induced_poisson(&e1, &e1star)? {
            report.note("induced poisson", pi.format());
        }
    }
    Ok(report)
}

fn matrix_apply(m: &[Vec<Polynomial>], row: usize) -> Vec<Polynomial> {
    m[row].clone()
}

/// `f(d(c_gamma))` as a vector field, for a core map `d` into an algebroid `l`.
fn anchor_after(l: &LieAlgebroid, d: &[Vec<Polynomial>], gamma: usize) -> Vec<Polynomial> {
    l.anchor_of(&Section::section(l.chart(), matrix_apply(d, gamma)))
}

/// The consequences of the double Lie algebroid axioms, as independent
/// checks: `a . d_A = b . d_B`; the core algebroid read off the induced
/// Poisson structure on `C*` is a Lie algebroid with anchor `a . d_A` and
/// both core maps preserve brackets; the anchors `D -> TA` and `D -> TB`
/// are algebroid morphisms into the tangent prolongations.
pub fn structural_diagnostics(dla: &DoubleLieAlgebroid) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let chart = dla.chart();
    let rc = dla.dvb().core().rank();
    let (a, b) = (dla.a(), dla.b());
    let (da, db) = (dla.core_map_a(), dla.core_map_b());

    let mut v = Verdict::Pass;
    for g in 0..rc {
        let defect = vector_field::sub(&anchor_after(a, da, g), &anchor_after(b, db, g));
        if !vector_field::is_zero(&defect) {
            v = Verdict::Fail(Witness::new(
                "core anchors",
                dla.dvb().core().frames()[g].clone(),
                vector_field::format(chart, &defect),
            ));
            break;
        }
    }
    report.push("core anchors", v);

    let (e1, e1star) = induced_pair(dla)?;
    let core = match induced_poisson(&e1, &e1star)? {
        Err(w) => {
            report.push("core algebroid", Verdict::Fail(w));
            None
        }
        Ok(pi) => {
            let core = algebroid_from_linear_poisson(&pi, chart, dla.dvb().core().frames().to_vec())?;
            report.note("core algebroid", format!("{core:?}"));
            let mut v = check_algebroid(&core);
            if v.passed() {
                for g in 0..rc {
                    let defect = vector_field::sub(core.anchor(g), &anchor_after(a, da, g));
                    if !vector_field::is_zero(&defect) {
                        v = Verdict::Fail(Witness::new(
                            "core algebroid anchor",
                            core.frames()[g].clone(),
                            vector_field::format(chart, &defect),
                        ));
                        break;
                    }
                }
            }
            report.push("core algebroid", v);
            Some(core)
        }
    };
    if let Some(core) = core {
        report.push("core map to A", core_morphism(&core, a, da, "core map to A"));
        report.push("core map to B", core_morphism(&core, b, db, "core map to B"));
    }
    report.push("anchor of D to TA", anchor_morphism(dla, "anchor of D to TA")?);
    report.push("anchor of D to TB", anchor_morphism(&dla.transpose(), "anchor of D to TB")?);
    Ok(report)
}

/// `d[c, c'] = [d c, d c']` on core frames.
fn core_morphism(core: &LieAlgebroid, target: &LieAlgebroid, d: &[Vec<Polynomial>], id: &str) -> Verdict {
    let chart = core.chart();
    let image = |coeffs: &[Polynomial]| {
        let mut out = vec![Polynomial::zero(chart); target.rank()];
        for (g, c) in coeffs.iter().enumerate() {
            for (al, m) in d[g].iter().enumerate() {
                out[al] = &out[al] + &(c * m);
            }
        }
        Section::section(chart, out)
    };
    for g in 0..core.rank() {
        for g2 in g + 1..core.rank() {
            let lhs = image(core.structure(g, g2));
            let x = Section::section(chart, d[g].clone());
            let y = Section::section(chart, d[g2].clone());
            let rhs = bracket_sections(target, &x, &y).expect("same algebroid");
            let defect = lhs.sub(&rhs);
            if !defect.is_zero() {
                return Verdict::Fail(Witness::new(
                    id,
                    format!("({}, {})", core.frames()[g], core.frames()[g2]),
                    target.format_section(&defect),
                ));
            }
        }
    }
    Verdict::Pass
}

/// Dot-suffixed names for the fibre coordinates of `TM`.
fn velocity_names(chart: &ChartRef) -> Vec<String> {
    chart
        .names()
        .iter()
        .map(|x| {
            let mut s = format!("{x}dot");
            while chart.index_of(&s).is_some() {
                s.push('_');
            }
            s
        })
        .collect()
}

/// The tangent prolongation `TA -> TM` on the chart `(x, xdot)`, with
/// frames the tangent lifts `T e_a` followed by the vertical lifts `V e_a`.
pub fn tangent_prolongation(l: &LieAlgebroid) -> Result<LieAlgebroid> {
    let base = l.chart();
    let n = base.dim();
    let r = l.rank();
    let chart = base.extend(&velocity_names(base))?;
    let lift = |p: &Polynomial| p.to_chart(&chart).expect("base chart embeds");
    let dot = |p: &Polynomial| {
        let mut out = Polynomial::zero(&chart);
        for j in 0..n {
            out = &out + &(&Polynomial::var_index(&chart, n + j) * &lift(&p.partial(j)));
        }
        out
    };
    let zero = Polynomial::zero(&chart);
    let mut anchor = Vec::with_capacity(2 * r);
    for al in 0..r {
        let mut v: Vec<Polynomial> = l.anchor(al).iter().map(lift).collect();
        v.extend(l.anchor(al).iter().map(dot));
        anchor.push(v);
    }
    for al in 0..r {
        let mut v = vec![zero.clone(); n];
        v.extend(l.anchor(al).iter().map(lift));
        anchor.push(v);
    }
    let mut structure = vec![vec![vec![zero; 2 * r]; 2 * r]; 2 * r];
    for al in 0..r {
        for be in 0..r {
            for (g, c) in l.structure(al, be).iter().enumerate() {
                structure[al][be][g] = lift(c);
                structure[al][be][r + g] = dot(c);
                structure[al][r + be][r + g] = lift(c);
                structure[r + be][al][r + g] = -lift(c);
            }
        }
    }
    let mut frames: Vec<String> = l.frames().iter().map(|f| format!("T{f}")).collect();
    frames.extend(l.frames().iter().map(|f| format!("V{f}")));
    LieAlgebroid::new(&chart, frames, anchor, structure)
}

/// Pulls forms back along a bundle map `phi` over a base map `psi`.
struct Pullback<'a> {
    source: &'a LieAlgebroid,
    target: &'a LieAlgebroid,
    base_images: Vec<Polynomial>,
    /// `matrix[k][l]`: coefficient of target frame `l` in the image of
    /// source frame `k`.
    matrix: Vec<Vec<Polynomial>>,
}

impl Pullback<'_> {
    fn function(&self, f: &Polynomial) -> Polynomial {
        f.substitute(self.source.chart(), &self.base_images).expect("base map images")
    }

    fn form(&self, omega: &Form) -> Form {
        let rs = self.source.rank();
        let deg = omega.degree();
        let mut out = Multivector::zero(self.source.chart(), rs, deg);
        for idx in crate::algebroid::calculus::combinations(rs, deg) {
            let mut total = Polynomial::zero(self.source.chart());
            for word in words(self.target.rank(), deg) {
                let c = omega.eval_word(&word);
                if c.is_zero() {
                    continue;
                }
                let mut term = self.function(&c);
                for (k, l) in idx.iter().zip(&word) {
                    term = &term * &self.matrix[*k][*l];
                }
                total = &total + &term;
            }
            out.add_to(idx, total);
        }
        out
    }
}

fn words(r: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..r).map(move |i| {
                    let mut w2 = w.clone();
                    w2.push(i);
                    w2
                })
            })
            .collect();
    }
    out
}

/// The anchor `D -> TA` as a map from `D -> B` to `TA -> TM` over the
/// anchor `b` of `B`, tested as a chain map on coordinate functions and
/// dual frames.
fn anchor_morphism(dla: &DoubleLieAlgebroid, id: &str) -> Result<Verdict> {
    let source = dla.horizontal.total_algebroid()?;
    let target = tangent_prolongation(dla.a())?;
    let n = dla.chart().dim();
    let (ra, rb, rc) = (dla.dvb().a().rank(), dla.dvb().b().rank(), dla.dvb().core().rank());
    let sc = source.chart().clone();
    let lift = |p: &Polynomial| p.to_chart(&sc).expect("base chart embeds");
    let s = |be: usize| Polynomial::var_index(&sc, n + be);
    let b = dla.b();
    let mut base_images: Vec<Polynomial> = (0..n).map(|i| Polynomial::var_index(&sc, i)).collect();
    for i in 0..n {
        let mut v = Polynomial::zero(&sc);
        for be in 0..rb {
            v = &v + &(&s(be) * &lift(&b.anchor(be)[i]));
        }
        base_images.push(v);
    }
    let zero = Polynomial::zero(&sc);
    let mut matrix = vec![vec![zero.clone(); 2 * ra]; rc + ra];
    for g in 0..rc {
        for al in 0..ra {
            matrix[g][ra + al] = lift(&dla.core_map_a()[g][al]);
        }
    }
    let lambda = dla.vertical.linear_anchor();
    for al in 0..ra {
        matrix[rc + al][al] = Polynomial::one(&sc);
        for al2 in 0..ra {
            let mut v = zero.clone();
            for (be, lam) in lambda.iter().enumerate() {
                v = &v + &(&s(be) * &lift(&lam.image(al2)[al]));
            }
            matrix[rc + al][ra + al2] = v;
        }
    }
    let pb = Pullback {
        source: &source,
        target: &target,
        base_images,
        matrix,
    };
    let tc = target.chart().clone();
    for i in 0..tc.dim() {
        let f = Polynomial::var_index(&tc, i);
        let lhs = differential(&source, &Multivector::function(source.rank(), pb.function(&f)))?;
        let rhs = pb.form(&differential(&target, &Multivector::function(target.rank(), f))?);
        let defect = lhs.sub(&rhs);
        if !defect.is_zero() {
            return Ok(Verdict::Fail(Witness::new(id, format!("d {}", tc.name(i)), source.format_section(&defect))));
        }
    }
    for l in 0..target.rank() {
        let theta = Multivector::from_words(&tc, target.rank(), 1, [(vec![l], Polynomial::one(&tc))]);
        let lhs = differential(&source, &pb.form(&theta))?;
        let rhs = pb.form(&differential(&target, &theta)?);
        let defect = lhs.sub(&rhs);
        if !defect.is_zero() {
            return Ok(Verdict::Fail(Witness::new(
                id,
                format!("d {}*", target.frames()[l]),
                source.format_section(&defect),
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn identifiers_or_fresh(candidates: &[String], prefix: &str, taken: &mut Vec<String>) -> Vec<String> {
    let ok = candidates.iter().enumerate().all(|(i, c)| {
        is_identifier(c) && !taken.contains(c) && !candidates[..i].contains(c)
    });
    let names = if ok {
        candidates.to_vec()
    } else {
        crate::matched::fresh_names(prefix, candidates.len(), taken)
    };
    taken.extend(names.iter().cloned());
    names
}

/// The split cotangent double `T*A` of a pair `(L, L*)` of algebroids on
/// `A` and `A*`: sides `A` and `A*`, core `T*M`. The structure `T*A -> A`
/// is the cotangent algebroid of the linear Poisson structure dual to
/// `L*`; the structure `T*A -> A*` is the cotangent algebroid of the one
/// dual to `L`, carried over by the reversal isomorphism. Validity is left
/// to `check_double`.
pub fn build_cotangent_double(l: &LieAlgebroid, lstar: &LieAlgebroid) -> Result<DoubleLieAlgebroid> {
    crate::exact::Chart::ensure_same(l.chart(), lstar.chart())?;
    if l.rank() != lstar.rank() {
        return Err(Error::Dimension(format!("ranks {} and {} are not dual", l.rank(), lstar.rank())));
    }
    check_algebroid(l).into_result()?;
    check_algebroid(lstar).into_result()?;
    let chart = l.chart();
    let n = chart.dim();
    let r = l.rank();
    let mut taken = chart.names().to_vec();
    let core_frames = identifiers_or_fresh(&chart.names().iter().map(|x| format!("d{x}")).collect::<Vec<_>>(), "dq", &mut taken);
    let core_coords = identifiers_or_fresh(&chart.names().iter().map(|x| format!("p_{x}")).collect::<Vec<_>>(), "p", &mut taken);
    let ucoords = identifiers_or_fresh(lstar.frames(), "u", &mut taken);
    let vcoords = identifiers_or_fresh(l.frames(), "v", &mut taken);
    let bundle_a = VectorBundle::new(l.frames().to_vec(), ucoords)?;
    let bundle_b = VectorBundle::new(lstar.frames().to_vec(), vcoords)?;
    let core = VectorBundle::new(core_frames, core_coords)?;
    let dvb = DecomposedDVB::new(chart, bundle_a, bundle_b, core)?;

    let action = |s: &LieAlgebroid, al: usize| -> Result<Derivation> {
        let images = (0..n)
            .map(|i| (0..n).map(|j| s.anchor(al)[i].partial(j)).collect())
            .collect();
        Derivation::new(chart, s.anchor(al).to_vec(), images)
    };
    let adjoint = |s: &LieAlgebroid, al: usize| -> Result<Derivation> {
        let images = (0..r).map(|be| s.structure(al, be).to_vec()).collect();
        Derivation::new(chart, s.anchor(al).to_vec(), images)
    };
    let twist = |s: &LieAlgebroid, sign: i64| {
        let mut t = LAVBundle::zero_twist(chart, r, n, r);
        for be in 0..r {
            for be2 in 0..r {
                for i in 0..n {
                    for g in 0..r {
                        let d = s.structure(be, be2)[g].partial(i);
                        t[be][be2][i][g] = if sign < 0 { -d } else { d };
                    }
                }
            }
        }
        t
    };
    let core_map = |s: &LieAlgebroid, sign: i64| -> Vec<Vec<Polynomial>> {
        (0..n)
            .map(|i| {
                (0..r)
                    .map(|al| if sign < 0 { -&s.anchor(al)[i] } else { s.anchor(al)[i].clone() })
                    .collect()
            })
            .collect()
    };
    let vertical = LAVBundle::new(
        dvb.clone(),
        lstar.clone(),
        (0..r).map(|be| adjoint(lstar, be)).collect::<Result<_>>()?,
        core_map(lstar, -1),
        (0..r).map(|be| action(lstar, be)).collect::<Result<_>>()?,
        twist(lstar, 1),
    )?;
    let horizontal = LAVBundle::new(
        dvb.transpose(),
        l.clone(),
        (0..r).map(|al| adjoint(l, al)).collect::<Result<_>>()?,
        core_map(l, 1),
        (0..r).map(|al| action(l, al)).collect::<Result<_>>()?,
        twist(l, -1),
    )?;
    DoubleLieAlgebroid::new(vertical, horizontal)
}

/// The vacant double of a matched pair; rejects pairs failing
/// `check_matched`.
pub fn vacant_from_matched(mp: &MatchedPair) -> Result<DoubleLieAlgebroid> {
    check_matched(mp).into_result()?;
    vacant_from_matched_unchecked(mp)
}

/// The vacant double built from the actions alone.
pub fn vacant_from_matched_unchecked(mp: &MatchedPair) -> Result<DoubleLieAlgebroid> {
    let (vertical, horizontal) = vacant_from_actions(mp)?;
    DoubleLieAlgebroid::new(vertical, horizontal)
}

/// The matched pair carried by a vacant double.
pub fn matched_from_vacant(dla: &DoubleLieAlgebroid) -> Result<MatchedPair> {
    actions_from_vacant(&dla.vertical, &dla.horizontal)
}

/// `A⋈B` for a vacant double.
pub fn diagonal_structure(dla: &DoubleLieAlgebroid) -> Result<LieAlgebroid> {
    if dla.dvb().core().rank() != 0 {
        return Err(Error::Unsupported("the diagonal structure needs a vacant double".into()));
    }
    build_bowtie(&matched_from_vacant(dla)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exact::Chart;
    use crate::liealg::drinfeld_double;

    fn line() -> ChartRef {
        Chart::new(&["x"]).unwrap()
    }

    fn report_line(r: &CheckReport) -> String {
        r.checks.iter().map(|c| format!("{}: {}", c.id, c.verdict)).collect::<Vec<_>>().join("\n")
    }

    #[test]
    fn tangent_square_passes() {
        let dla = DoubleLieAlgebroid::tangent_square_default(&line()).unwrap();
        let r = check_double(&dla).unwrap();
        assert!(r.passed(), "{}", report_line(&r));
        let d = structural_diagnostics(&dla).unwrap();
        assert!(d.passed(), "{}", report_line(&d));
    }

    #[test]
    fn tangent_square_on_plane_passes() {
        let dla = DoubleLieAlgebroid::tangent_square_default(&catalog::plane()).unwrap();
        assert!(check_double(&dla).unwrap().passed());
        let d = structural_diagnostics(&dla).unwrap();
        assert!(d.passed(), "{}", report_line(&d));
    }

    #[test]
    fn cotangent_doubles_follow_bialgebroid_verdict() {
        for (name, l, ls) in catalog::bialgebroids().into_iter().chain(catalog::broken_bialgebroids()) {
            let expected = crate::algebroid::check_bialgebroid(&l, &ls).unwrap().passed();
            let dla = build_cotangent_double(&l, &ls).unwrap();
            let r = check_double(&dla).unwrap();
            assert_eq!(r.passed(), expected, "{name}\n{}", report_line(&r));
            assert_eq!(check_double(&dla.transpose()).unwrap().passed(), expected, "{name} transposed");
            if expected {
                let d = structural_diagnostics(&dla).unwrap();
                assert!(d.passed(), "{name}\n{}", report_line(&d));
            }
        }
    }

    #[test]
    fn vacant_doubles_follow_matched_verdict() {
        for (name, mp, expected) in catalog::matched_pairs() {
            let dla = vacant_from_matched_unchecked(&mp).unwrap();
            let r = check_double(&dla).unwrap();
            assert_eq!(r.passed(), expected, "{name}\n{}", report_line(&r));
            assert_eq!(matched_from_vacant(&dla).unwrap(), mp);
            if expected {
                let d = structural_diagnostics(&dla).unwrap();
                assert!(d.passed(), "{name}\n{}", report_line(&d));
            }
        }
    }

    #[test]
    fn diagonal_of_bialgebra_double_is_drinfeld() {
        let b = catalog::solvable_bialgebra();
        let (l, ls) = catalog::bialgebra_algebroids(&b).unwrap();
        let dla = build_cotangent_double(&l, &ls).unwrap();
        let diag = diagonal_structure(&dla).unwrap();
        let d = drinfeld_double(&b).unwrap().algebra.to_algebroid();
        assert!(diag.same_structure(&d));
    }

    #[test]
    fn rank_one_identity_on_sections_is_vacuous() {
        let (l, ls) = catalog::line_pair_rank_one();
        assert!(crate::algebroid::check_bialgebroid(&l, &ls).unwrap().passed());
        let dla = build_cotangent_double(&l, &ls).unwrap();
        assert!(!check_double(&dla).unwrap().passed());
    }
}
