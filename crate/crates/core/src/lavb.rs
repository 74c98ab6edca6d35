//! LA-vector bundles presented by generator data, and the Lie algebroid
//! they induce on the dual over the core.
//!
//! For a decomposed `D = A x B x C` with side algebroid `B`, the algebroid
//! `D -> A` is generated by core sections `c_bar_gamma` and linear sections
//! `xi_beta` lying over the frames of `B`:
//!
//! ```text
//! anchor(xi_b)   = X_b + sum Lambda_b(eps^a) d/du^a      (fibre-linear)
//! anchor(c_bar)  = vertical lift of d_A(c)
//! [xi_b, xi_b']  = sum c^b''_{bb'} xi_b'' + twist_{bb'}(u)  (a core section)
//! [xi_b, c_bar]  = Q_b(c) bar
//! [c_bar, c_bar'] = 0
//! ```

use crate::algebroid::vector_field::{self, VectorField};
use crate::algebroid::{
    algebroid_from_linear_poisson, check_algebroid, dual_poisson_named, Derivation, LieAlgebroid, Multivector,
    PoissonChart, Section,
};
use crate::dvb::{DecomposedDVB, VectorBundle};
use crate::error::{Error, Result};
use crate::exact::chart::is_identifier;
use crate::exact::{Chart, ChartRef, Polynomial};
use crate::verdict::{Verdict, Witness};

/// `twist[b][b'][gamma][alpha]`: coefficient of `u^alpha c_bar_gamma` in
/// `[xi_b, xi_b']`.
pub type Twist = Vec<Vec<Vec<Vec<Polynomial>>>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LAVBundle {
    dvb: DecomposedDVB,
    side: LieAlgebroid,
    linear_anchor: Vec<Derivation>,
    core_anchor: Vec<Vec<Polynomial>>,
    core_action: Vec<Derivation>,
    twist: Twist,
}

impl LAVBundle {
    /// `linear_anchor[b]` is `Lambda_b`, a derivation of `A*` over `X_b`;
    /// `core_anchor[gamma][alpha]` is the matrix of `d_A: C -> A`;
    /// `core_action[b]` is `Q_b`, a derivation of `C` over `X_b`.
    pub fn new(
        dvb: DecomposedDVB,
        side: LieAlgebroid,
        linear_anchor: Vec<Derivation>,
        core_anchor: Vec<Vec<Polynomial>>,
        core_action: Vec<Derivation>,
        twist: Twist,
    ) -> Result<Self> {
        let chart = dvb.chart().clone();
        Chart::ensure_same(&chart, side.chart())?;
        let (ra, rb, rc) = (dvb.a().rank(), dvb.b().rank(), dvb.core().rank());
        if side.rank() != rb {
            return Err(Error::Dimension(format!(
                "side algebroid has rank {}, bundle B has rank {rb}",
                side.rank()
            )));
        }
        if linear_anchor.len() != rb || linear_anchor.iter().any(|d| d.rank() != ra) {
            return Err(Error::Dimension(format!("need {rb} derivations of A* of rank {ra}")));
        }
        if core_action.len() != rb || core_action.iter().any(|d| d.rank() != rc) {
            return Err(Error::Dimension(format!("need {rb} derivations of C of rank {rc}")));
        }
        if core_anchor.len() != rc || core_anchor.iter().any(|r| r.len() != ra) {
            return Err(Error::Dimension(format!("core anchor must be {rc} x {ra}")));
        }
        if twist.len() != rb
            || twist.iter().any(|r| {
                r.len() != rb || r.iter().any(|m| m.len() != rc || m.iter().any(|v| v.len() != ra))
            })
        {
            return Err(Error::Dimension(format!("twist must be {rb} x {rb} x {rc} x {ra}")));
        }
        for d in linear_anchor.iter().chain(&core_action) {
            Chart::ensure_same(&chart, d.chart())?;
        }
        for p in core_anchor.iter().flatten().chain(twist.iter().flatten().flatten().flatten()) {
            Chart::ensure_same(&chart, p.chart())?;
        }
        for b in 0..rb {
            for b2 in b..rb {
                for g in 0..rc {
                    for a in 0..ra {
                        if twist[b][b2][g][a] != -&twist[b2][b][g][a] {
                            return Err(Error::Schema(format!(
                                "twist({}, {}) is not antisymmetric",
                                side.frames()[b],
                                side.frames()[b2]
                            )));
                        }
                    }
                }
            }
        }
        Ok(LAVBundle {
            dvb,
            side,
            linear_anchor,
            core_anchor,
            core_action,
            twist,
        })
    }

    /// The zero twist of the right shape.
    pub fn zero_twist(chart: &ChartRef, rb: usize, rc: usize, ra: usize) -> Twist {
        vec![vec![vec![vec![Polynomial::zero(chart); ra]; rc]; rb]; rb]
    }

    pub fn dvb(&self) -> &DecomposedDVB {
        &self.dvb
    }

    pub fn side(&self) -> &LieAlgebroid {
        &self.side
    }

    pub fn linear_anchor(&self) -> &[Derivation] {
        &self.linear_anchor
    }

    pub fn core_anchor(&self) -> &[Vec<Polynomial>] {
        &self.core_anchor
    }

    pub fn core_action(&self) -> &[Derivation] {
        &self.core_action
    }

    pub fn twist(&self) -> &Twist {
        &self.twist
    }

    pub fn twist_mut(&mut self) -> &mut Twist {
        &mut self.twist
    }

    pub fn chart(&self) -> &ChartRef {
        self.dvb.chart()
    }

    /// The tangent double `TA` of a vector bundle `A` over a chart, split by
    /// the trivialization: vertical structure over the tangent algebroid,
    /// core `C` a copy of `A`, `d_A` the identity.
    pub fn tangent_double(chart: &ChartRef, a: VectorBundle, core: VectorBundle) -> Result<Self> {
        let n = chart.dim();
        let connection = vec![vec![vec![Polynomial::zero(chart); a.rank()]; a.rank()]; n];
        LAVBundle::tangent_double_with_connection(chart, a, core, &connection)
    }

    /// The tangent double split by a connection with Christoffel symbols
    /// `gamma[i][alpha][beta]` (`nabla_i e_beta = sum_alpha gamma[i][alpha][beta] e_alpha`):
    /// `Q_i = nabla_i` on the core, `Lambda_i` its dual, twist `-R`.
    pub fn tangent_double_with_connection(
        chart: &ChartRef,
        a: VectorBundle,
        core: VectorBundle,
        gamma: &[Vec<Vec<Polynomial>>],
    ) -> Result<Self> {
        LAVBundle::tangent_double_split(chart, a, VectorBundle::tangent(chart), core, gamma)
    }

    /// As `tangent_double_with_connection`, with the side `TM` presented by
    /// the bundle `b`, whose frames name the coordinate vector fields.
    pub fn tangent_double_split(
        chart: &ChartRef,
        a: VectorBundle,
        b: VectorBundle,
        core: VectorBundle,
        gamma: &[Vec<Vec<Polynomial>>],
    ) -> Result<Self> {
        let n = chart.dim();
        let r = a.rank();
        if core.rank() != r || gamma.len() != n || b.rank() != n {
            return Err(Error::Dimension("connection data does not match the bundle".into()));
        }
        let side = LieAlgebroid::tangent(chart).with_frames(b.frames().to_vec())?;
        let dvb = DecomposedDVB::new(chart, a, b, core)?;
        let mut q = Vec::with_capacity(n);
        for (i, g) in gamma.iter().enumerate() {
            let images = (0..r).map(|b| (0..r).map(|al| g[al][b].clone()).collect()).collect();
            q.push(Derivation::new(chart, side.anchor(i).to_vec(), images)?);
        }
        let lambda: Vec<Derivation> = q.iter().map(Derivation::dual).collect();
        let identity = (0..r)
            .map(|g| (0..r).map(|al| Polynomial::int(chart, (g == al) as i64)).collect())
            .collect();
        let mut twist = LAVBundle::zero_twist(chart, n, r, r);
        for i in 0..n {
            for j in 0..n {
                let curv = q[i].commutator(&q[j]);
                for g in 0..r {
                    for al in 0..r {
                        twist[i][j][g][al] = -&curv.images()[al][g];
                    }
                }
            }
        }
        LAVBundle::new(dvb, side, lambda, identity, q, twist)
    }

    /// Names of the frames of `D -> A`: core frames then linear frames.
    pub fn total_frames(&self) -> Vec<String> {
        let mut f: Vec<String> = self.dvb.core().frames().iter().map(|c| format!("{c}_bar")).collect();
        f.extend(self.dvb.b().frames().iter().cloned());
        f
    }

    /// The chart of the total space of `A`: base coordinates then the fibre
    /// coordinates of `A`.
    pub fn total_chart(&self) -> Result<ChartRef> {
        self.chart().extend(self.dvb.a().coords())
    }

    /// The chart of `C*`: base coordinates then `kappa_gamma`, named after
    /// the core frames.
    pub fn core_dual_chart(&self) -> Result<ChartRef> {
        for f in self.dvb.core().frames() {
            if !is_identifier(f) {
                return Err(Error::Schema(format!(
                    "core frame `{f}` must be a valid coordinate name on C*"
                )));
            }
        }
        self.chart().extend(self.dvb.core().frames())
    }

    /// The Lie algebroid `D -> A` on the chart `(x, u)`.
    pub fn total_algebroid(&self) -> Result<LieAlgebroid> {
        let chart = self.total_chart()?;
        let n = self.chart().dim();
        let (ra, rb, rc) = (self.dvb.a().rank(), self.dvb.b().rank(), self.dvb.core().rank());
        let lift = |p: &Polynomial| p.to_chart(&chart).expect("base chart embeds");
        let u = |al: usize| Polynomial::var_index(&chart, n + al);
        let zero = Polynomial::zero(&chart);
        let mut anchor = Vec::with_capacity(rc + rb);
        for g in 0..rc {
            let mut v = vec![zero.clone(); n + ra];
            for al in 0..ra {
                v[n + al] = lift(&self.core_anchor[g][al]);
            }
            anchor.push(v);
        }
        for b in 0..rb {
            let lam = &self.linear_anchor[b];
            let mut v: VectorField = lam.base().iter().map(lift).collect();
            for al in 0..ra {
                let mut comp = zero.clone();
                for (al2, m) in lam.image(al).iter().enumerate() {
                    comp = &comp + &(&lift(m) * &u(al2));
                }
                v.push(comp);
            }
            anchor.push(v);
        }
        let r = rc + rb;
        let mut structure = vec![vec![vec![zero.clone(); r]; r]; r];
        for b in 0..rb {
            for b2 in 0..rb {
                let v = &mut structure[rc + b][rc + b2];
                for (b3, c) in self.side.structure(b, b2).iter().enumerate() {
                    v[rc + b3] = lift(c);
                }
                for g in 0..rc {
                    let mut comp = zero.clone();
                    for al in 0..ra {
                        comp = &comp + &(&lift(&self.twist[b][b2][g][al]) * &u(al));
                    }
                    v[g] = comp;
                }
            }
            for g in 0..rc {
                let img: Vec<Polynomial> = self.core_action[b].image(g).iter().map(lift).collect();
                for (g2, m) in img.iter().enumerate() {
                    structure[rc + b][g][g2] = m.clone();
                    structure[g][rc + b][g2] = -m;
                }
            }
        }
        LieAlgebroid::new(&chart, self.total_frames(), anchor, structure)
    }

    /// The dual of this LA-vector bundle over its core: the LA-vector bundle
    /// `D⫯A` with sides `C*` and `B` and core `A*`, whose total algebroid is
    /// the induced algebroid of `self`.
    pub fn dual_over_core(&self) -> Result<LAVBundle> {
        let d = &self.dvb;
        let dvb = DecomposedDVB::new(self.chart(), d.core().dual(), d.b().clone(), d.a().dual())?;
        let (ra, rb, rc) = (d.a().rank(), d.b().rank(), d.core().rank());
        let core_anchor = (0..ra)
            .map(|al| (0..rc).map(|g| -&self.core_anchor[g][al]).collect())
            .collect();
        let mut twist = LAVBundle::zero_twist(self.chart(), rb, ra, rc);
        for b in 0..rb {
            for b2 in 0..rb {
                for g in 0..rc {
                    for al in 0..ra {
                        twist[b][b2][al][g] = self.twist[b][b2][g][al].clone();
                    }
                }
            }
        }
        LAVBundle::new(
            dvb,
            self.side.clone(),
            self.core_action.clone(),
            core_anchor,
            self.linear_anchor.clone(),
            twist,
        )
    }
}

/// The Lie algebroid induced on `D⫯A⫯C* -> C*`: chart `(x, kappa)`, frames
/// the core sections `phi_bar` for the frames of `A*` followed by `xi^⊓_b`.
pub fn induced_dual_algebroid(v: &LAVBundle) -> Result<LieAlgebroid> {
    let chart = v.core_dual_chart()?;
    let n = v.chart().dim();
    let d = v.dvb();
    let (ra, rb, rc) = (d.a().rank(), d.b().rank(), d.core().rank());
    let lift = |p: &Polynomial| p.to_chart(&chart).expect("base chart embeds");
    let kappa = |g: usize| Polynomial::var_index(&chart, n + g);
    let zero = Polynomial::zero(&chart);
    let mut anchor = Vec::with_capacity(ra + rb);
    for al in 0..ra {
        let mut f = vec![zero.clone(); n + rc];
        for g in 0..rc {
            f[n + g] = -lift(&v.core_anchor[g][al]);
        }
        anchor.push(f);
    }
    for b in 0..rb {
        let q = &v.core_action[b];
        let mut f: VectorField = q.base().iter().map(lift).collect();
        for g in 0..rc {
            let mut comp = zero.clone();
            for (g2, m) in q.image(g).iter().enumerate() {
                comp = &comp + &(&lift(m) * &kappa(g2));
            }
            f.push(comp);
        }
        anchor.push(f);
    }
    let r = ra + rb;
    let mut structure = vec![vec![vec![zero.clone(); r]; r]; r];
    for b in 0..rb {
        for b2 in 0..rb {
            let s = &mut structure[ra + b][ra + b2];
            for (b3, c) in v.side.structure(b, b2).iter().enumerate() {
                s[ra + b3] = lift(c);
            }
            for al in 0..ra {
                let mut comp = zero.clone();
                for g in 0..rc {
                    comp = &comp + &(&lift(&v.twist[b][b2][g][al]) * &kappa(g));
                }
                s[al] = comp;
            }
        }
        for al in 0..ra {
            for (al2, m) in v.linear_anchor[b].image(al).iter().enumerate() {
                let m = lift(m);
                structure[ra + b][al][al2] = m.clone();
                structure[al][ra + b][al2] = -m;
            }
        }
    }
    let mut frames: Vec<String> = d.a().coords().iter().map(|c| format!("{c}_bar")).collect();
    frames.extend(d.b().frames().iter().cloned());
    LieAlgebroid::new(&chart, frames, anchor, structure)
}

/// The induced algebroid read off the linear Poisson structure on `D⫯A`,
/// the dual of `D -> A`. That structure is linear over `C*` as well, so
/// moving the `C*` fibre coordinates into the base and reading brackets of
/// the functions linear in `(u, s)` gives an algebroid over `C*`. It must
/// agree with [`induced_dual_algebroid`].
pub fn induced_via_poisson(v: &LAVBundle) -> Result<LieAlgebroid> {
    let total = v.total_algebroid()?;
    let d = v.dvb();
    let (n, ra, rb, rc) = (v.chart().dim(), d.a().rank(), d.b().rank(), d.core().rank());
    let mut fibre: Vec<String> = d.core().frames().to_vec();
    fibre.extend(d.b().coords().iter().cloned());
    let pi = dual_poisson_named(&total, &fibre)?;
    // (x, u, kappa, s) -> (x, kappa, u, s)
    let base = v.core_dual_chart()?;
    let target = base.extend(d.a().coords())?.extend(d.b().coords())?;
    let perm: Vec<usize> = (0..n)
        .chain((0..ra).map(|al| n + rc + al))
        .chain((0..rc).map(|g| n + g))
        .chain((0..rb).map(|b| n + rc + ra + b))
        .collect();
    let images: Vec<Polynomial> = perm.iter().map(|&k| Polynomial::var_index(&target, k)).collect();
    let dim = pi.chart().dim();
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            entries.push((perm[i], perm[j], pi.pi(i, j).substitute(&target, &images)?));
        }
    }
    let moved = PoissonChart::new(&target, entries)?;
    let mut frames: Vec<String> = d.a().coords().iter().map(|c| format!("{c}_bar")).collect();
    frames.extend(d.b().frames().iter().cloned());
    algebroid_from_linear_poisson(&moved, &base, frames)
}

/// A linear section of `D -> A`: a section `x` of `B` together with a
/// `Hom(A, C)` component `hom[gamma][alpha]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSection {
    pub base: Vec<Polynomial>,
    pub hom: Vec<Vec<Polynomial>>,
}

/// A core section `c_bar`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreSection {
    pub c: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Linear(LinearSection),
    Core(CoreSection),
}

impl LAVBundle {
    /// The section of `D -> A` on the total chart represented by a generator.
    pub fn generator_section(&self, s: &Generator) -> Result<Section> {
        let chart = self.total_chart()?;
        let n = self.chart().dim();
        let (ra, rb, rc) = (self.dvb.a().rank(), self.dvb.b().rank(), self.dvb.core().rank());
        let lift = |p: &Polynomial| p.to_chart(&chart);
        let mut coeffs = vec![Polynomial::zero(&chart); rc + rb];
        match s {
            Generator::Core(c) => {
                for (g, p) in c.c.iter().enumerate() {
                    coeffs[g] = lift(p)?;
                }
            }
            Generator::Linear(l) => {
                for (b, p) in l.base.iter().enumerate() {
                    coeffs[rc + b] = lift(p)?;
                }
                for g in 0..rc {
                    for al in 0..ra {
                        let t = &lift(&l.hom[g][al])? * &Polynomial::var_index(&chart, n + al);
                        coeffs[g] = &coeffs[g] + &t;
                    }
                }
            }
        }
        Ok(Multivector::section(&chart, coeffs))
    }

    /// Reads a section of `D -> A` back as a generator, if it is one.
    pub fn as_generator(&self, s: &Section) -> Option<Generator> {
        let n = self.chart().dim();
        let (ra, rc) = (self.dvb.a().rank(), self.dvb.core().rank());
        let fibre: Vec<usize> = (n..n + ra).collect();
        let coeffs = s.coeffs();
        let down = |p: &Polynomial| p.to_chart(self.chart()).ok();
        let base: Option<Vec<Polynomial>> = coeffs[rc..].iter().map(down).collect();
        let base = base?;
        if base.iter().all(Polynomial::is_zero) {
            if let Some(c) = coeffs[..rc].iter().map(down).collect::<Option<Vec<_>>>() {
                return Some(Generator::Core(CoreSection { c }));
            }
        }
        let mut hom = Vec::with_capacity(rc);
        for c in &coeffs[..rc] {
            let parts = c.split_linear(&fibre).ok()?;
            hom.push(parts.iter().map(down).collect::<Option<Vec<_>>>()?);
        }
        Some(Generator::Linear(LinearSection { base, hom }))
    }
}

/// The bracket of two generators, read back as a generator.
pub fn bracket_generators(v: &LAVBundle, s1: &Generator, s2: &Generator) -> Result<Generator> {
    let total = v.total_algebroid()?;
    let b = crate::algebroid::bracket_sections(&total, &v.generator_section(s1)?, &v.generator_section(s2)?)?;
    v.as_generator(&b)
        .ok_or_else(|| Error::Schema(format!("bracket `{}` is not a generator", total.format_section(&b))))
}

/// The side algebroid, the base fields of `Lambda` and `Q` against the side
/// anchor, then the algebroid axioms of `D -> A` and of the induced dual.
pub fn check_lavb(v: &LAVBundle) -> Verdict {
    let side = v.side();
    let frames = side.frames();
    check_algebroid(side).and_then(|| {
        for (b, (lam, q)) in v.linear_anchor.iter().zip(&v.core_action).enumerate() {
            for (what, field) in [("linear anchor", lam.base()), ("core action", q.base())] {
                let defect = vector_field::sub(field, side.anchor(b));
                if !vector_field::is_zero(&defect) {
                    return Verdict::Fail(Witness::new(
                        "anchor-base",
                        format!("{what} of {}", frames[b]),
                        vector_field::format(v.chart(), &defect),
                    ));
                }
            }
        }
        Verdict::Pass
    })
    .and_then(|| match v.total_algebroid() {
        Ok(t) => prefix(check_algebroid(&t), "total"),
        Err(e) => Verdict::Fail(Witness::new("total", "construction", e.to_string())),
    })
    .and_then(|| match induced_dual_algebroid(v) {
        Ok(t) => prefix(check_algebroid(&t), "induced"),
        Err(e) => Verdict::Fail(Witness::new("induced", "construction", e.to_string())),
    })
}

fn prefix(v: Verdict, p: &str) -> Verdict {
    match v {
        Verdict::Pass => Verdict::Pass,
        Verdict::Fail(w) => Verdict::Fail(Witness::new(format!("{p} {}", w.check), w.location, w.defect)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle(frames: &[&str], coords: &[&str]) -> VectorBundle {
        VectorBundle::new(
            frames.iter().map(|s| s.to_string()).collect(),
            coords.iter().map(|s| s.to_string()).collect(),
        )
        .unwrap()
    }

    fn ta_line() -> LAVBundle {
        let c = Chart::new(&["x"]).unwrap();
        LAVBundle::tangent_double(&c, bundle(&["e"], &["u"]), bundle(&["kappa"], &["w"])).unwrap()
    }

    #[test]
    fn tangent_double_passes() {
        let v = ta_line();
        assert!(check_lavb(&v).passed());
        let t = v.total_algebroid().unwrap();
        assert_eq!(t.frames(), &["kappa_bar".to_string(), "d/dx".to_string()]);
    }

    #[test]
    fn reciprocity_is_exact() {
        let v = ta_line();
        let d = v.dual_over_core().unwrap();
        assert_eq!(d.total_algebroid().unwrap(), induced_dual_algebroid(&v).unwrap());
        assert_eq!(induced_dual_algebroid(&d).unwrap(), v.total_algebroid().unwrap());
    }

    #[test]
    fn curved_connection_split_passes_and_perturbation_fails() {
        let c = Chart::new(&["x", "y"]).unwrap();
        let p = |s: &str| crate::exact::parse_polynomial(s, &c).unwrap();
        let z = p("0");
        // nabla_x e1 = y e2, nabla_y e2 = x e1 + e2; curvature is nonzero.
        let gamma = vec![
            vec![vec![z.clone(), z.clone()], vec![p("y"), z.clone()]],
            vec![vec![z.clone(), p("x")], vec![z.clone(), p("1")]],
        ];
        let v = LAVBundle::tangent_double_with_connection(
            &c,
            bundle(&["e1", "e2"], &["u1", "u2"]),
            bundle(&["k1", "k2"], &["w1", "w2"]),
            &gamma,
        )
        .unwrap();
        assert!(v.twist().iter().flatten().flatten().flatten().any(|t| !t.is_zero()));
        assert_eq!(check_lavb(&v), Verdict::Pass);
        let mut bad = v.clone();
        bad.twist_mut()[0][1][0][0] = &bad.twist()[0][1][0][0] + &p("1");
        bad.twist_mut()[1][0][0][0] = &bad.twist()[1][0][0][0] - &p("1");
        let w = check_lavb(&bad);
        assert_eq!(w.witness().unwrap().check, "total jacobi");
    }

    #[test]
    fn poisson_route_agrees() {
        let v = ta_line();
        assert_eq!(induced_via_poisson(&v).unwrap(), induced_dual_algebroid(&v).unwrap());
        let c = Chart::new(&["x", "y"]).unwrap();
        let p = |s: &str| crate::exact::parse_polynomial(s, &c).unwrap();
        let z = p("0");
        let gamma = vec![
            vec![vec![z.clone(), z.clone()], vec![p("y"), z.clone()]],
            vec![vec![z.clone(), p("x")], vec![z.clone(), p("1")]],
        ];
        let v = LAVBundle::tangent_double_with_connection(
            &c,
            bundle(&["e1", "e2"], &["u1", "u2"]),
            bundle(&["k1", "k2"], &["w1", "w2"]),
            &gamma,
        )
        .unwrap();
        assert_eq!(induced_via_poisson(&v).unwrap(), induced_dual_algebroid(&v).unwrap());
    }

    #[test]
    fn core_brackets_vanish() {
        let v = ta_line();
        let c = v.chart().clone();
        let core = Generator::Core(CoreSection { c: vec![Polynomial::var_index(&c, 0)] });
        match bracket_generators(&v, &core, &core).unwrap() {
            Generator::Core(s) => assert!(s.c[0].is_zero()),
            other => panic!("{other:?}"),
        }
    }
}
