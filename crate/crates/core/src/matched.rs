//! Matched pairs of Lie algebroids, the algebroid `A⋈B`, the semidirect
//! products `A*⋊B` and `A^op⋉B*`, and the correspondence with vacant
//! double Lie algebroids.

use crate::algebroid::vector_field;
use crate::algebroid::{bracket_sections, check_bialgebroid, Derivation, LieAlgebroid, Section};
use crate::dvb::{DecomposedDVB, VectorBundle};
use crate::error::{Error, Result};
use crate::exact::{Chart, ChartRef, Polynomial, Rational};
use crate::lavb::LAVBundle;
use crate::liealg::{dual_bracket, Bialgebra};
use crate::verdict::{Verdict, Witness};

/// One derivation per frame of the acting algebroid.
pub type RepresentationMap = Vec<Derivation>;

/// `rho[alpha]` is the action of `e_alpha` of `A` on `B`, `sigma[beta]` the
/// action of `f_beta` of `B` on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    pub a: LieAlgebroid,
    pub b: LieAlgebroid,
    pub rho: RepresentationMap,
    pub sigma: RepresentationMap,
}

impl MatchedPair {
    pub fn new(a: LieAlgebroid, b: LieAlgebroid, rho: RepresentationMap, sigma: RepresentationMap) -> Result<Self> {
        Chart::ensure_same(a.chart(), b.chart())?;
        if rho.len() != a.rank() || rho.iter().any(|d| d.rank() != b.rank()) {
            return Err(Error::Dimension(format!(
                "rho needs {} derivations of rank {}",
                a.rank(),
                b.rank()
            )));
        }
        if sigma.len() != b.rank() || sigma.iter().any(|d| d.rank() != a.rank()) {
            return Err(Error::Dimension(format!(
                "sigma needs {} derivations of rank {}",
                b.rank(),
                a.rank()
            )));
        }
        for d in rho.iter().chain(&sigma) {
            Chart::ensure_same(a.chart(), d.chart())?;
        }
        Ok(MatchedPair { a, b, rho, sigma })
    }

    /// Zero actions between two algebroids. Their bases are the anchors.
    pub fn trivial(a: LieAlgebroid, b: LieAlgebroid) -> Result<Self> {
        let rho = (0..a.rank()).map(|al| zero_action(&a, al, b.rank())).collect();
        let sigma = (0..b.rank()).map(|be| zero_action(&b, be, a.rank())).collect();
        MatchedPair::new(a, b, rho, sigma)
    }

    /// The coadjoint pair of a Lie bialgebra: `A = g`, `B = g*`, `rho = ad*`
    /// of `g` on `g*`, `sigma = ad*` of `g*` on `g`. The cocycle condition is
    /// not required.
    pub fn coadjoint(bialgebra: &Bialgebra) -> Result<Self> {
        let g = &bialgebra.algebra;
        let gs = dual_bracket(bialgebra)?;
        let n = g.dim();
        let chart = Chart::point();
        let q = |r: &Rational| Polynomial::constant(&chart, r.clone());
        let coad = |c: &dyn Fn(usize, usize, usize) -> Rational, a: usize| {
            let images = (0..n)
                .map(|k| (0..n).map(|j| -q(&c(a, j, k))).collect())
                .collect();
            Derivation::new(&chart, Vec::new(), images)
        };
        let cg = |i: usize, j: usize, k: usize| g.structure(i, j)[k].clone();
        let cs = |i: usize, j: usize, k: usize| gs.structure(i, j)[k].clone();
        let rho = (0..n).map(|a| coad(&cg, a)).collect::<Result<Vec<_>>>()?;
        let sigma = (0..n).map(|b| coad(&cs, b)).collect::<Result<Vec<_>>>()?;
        MatchedPair::new(g.to_algebroid(), gs.to_algebroid(), rho, sigma)
    }

    pub fn chart(&self) -> &ChartRef {
        self.a.chart()
    }
}

fn zero_action(acting: &LieAlgebroid, alpha: usize, rank: usize) -> Derivation {
    let chart = acting.chart();
    let images = vec![vec![Polynomial::zero(chart); rank]; rank];
    Derivation::new(chart, acting.anchor(alpha).to_vec(), images).expect("shapes agree")
}

/// `reps` is a representation of `l`: each derivation lies over the anchor
/// of its frame, and brackets of frames act by commutators.
pub fn check_representation(l: &LieAlgebroid, reps: &[Derivation], target: &[String], label: &str) -> Verdict {
    for (al, d) in reps.iter().enumerate() {
        let defect = vector_field::sub(d.base(), l.anchor(al));
        if !vector_field::is_zero(&defect) {
            return Verdict::Fail(Witness::new(
                format!("{label} base"),
                l.frames()[al].clone(),
                vector_field::format(l.chart(), &defect),
            ));
        }
    }
    let rank = reps.first().map_or(0, Derivation::rank);
    for a in 0..l.rank() {
        for b in a + 1..l.rank() {
            let lhs = Derivation::combine(l.chart(), rank, l.structure(a, b), reps);
            let defect = lhs.sub(&reps[a].commutator(&reps[b]));
            if !defect.is_zero() {
                return Verdict::Fail(Witness::new(
                    format!("{label} flatness"),
                    format!("({}, {})", l.frames()[a], l.frames()[b]),
                    defect.format(target),
                ));
            }
        }
    }
    Verdict::Pass
}

/// `rep_X(s)` for a section `X` of the acting bundle given by coefficients.
fn act(reps: &[Derivation], x: &[Polynomial], s: &[Polynomial], rank: usize, chart: &ChartRef) -> Vec<Polynomial> {
    let d = Derivation::combine(chart, rank, x, reps);
    d.apply(s)
}

fn unit(chart: &ChartRef, rank: usize, i: usize) -> Vec<Polynomial> {
    (0..rank).map(|k| Polynomial::int(chart, (k == i) as i64)).collect()
}

fn bracket(l: &LieAlgebroid, x: &[Polynomial], y: &[Polynomial]) -> Vec<Polynomial> {
    let sx = Section::section(l.chart(), x.to_vec());
    let sy = Section::section(l.chart(), y.to_vec());
    bracket_sections(l, &sx, &sy).expect("same algebroid").coeffs()
}

fn format_coeffs(v: &[Polynomial], frames: &[String]) -> String {
    crate::exact::parse::format_linear(v, frames)
}

/// Representation conditions for `rho` and `sigma`, then the three matched
/// pair identities on frames, in order:
///
/// ```text
/// 1. rho_X[Y1,Y2] = [rho_X Y1, Y2] + [Y1, rho_X Y2] + rho_{sigma_Y2 X} Y1 - rho_{sigma_Y1 X} Y2
/// 2. sigma_Y[X1,X2] = [sigma_Y X1, X2] + [X1, sigma_Y X2] + sigma_{rho_X2 Y} X1 - sigma_{rho_X1 Y} X2
/// 3. a(sigma_Y X) - b(rho_X Y) = [b(Y), a(X)]
/// ```
pub fn check_matched(mp: &MatchedPair) -> Verdict {
    let (a, b) = (&mp.a, &mp.b);
    let chart = mp.chart();
    let (ra, rb) = (a.rank(), b.rank());
    let rho = |x: &[Polynomial], y: &[Polynomial]| act(&mp.rho, x, y, rb, chart);
    let sigma = |y: &[Polynomial], x: &[Polynomial]| act(&mp.sigma, y, x, ra, chart);
    let verdict = check_representation(a, &mp.rho, b.frames(), "rho")
        .and_then(|| check_representation(b, &mp.sigma, a.frames(), "sigma"));
    if !verdict.passed() {
        return verdict;
    }
    for al in 0..ra {
        let x = unit(chart, ra, al);
        for b1 in 0..rb {
            for b2 in b1 + 1..rb {
                let (y1, y2) = (unit(chart, rb, b1), unit(chart, rb, b2));
                let lhs = rho(&x, &bracket(b, &y1, &y2));
                let mut rhs = bracket(b, &rho(&x, &y1), &y2);
                rhs = vector_field::add(&rhs, &bracket(b, &y1, &rho(&x, &y2)));
                rhs = vector_field::add(&rhs, &rho(&sigma(&y2, &x), &y1));
                rhs = vector_field::sub(&rhs, &rho(&sigma(&y1, &x), &y2));
                let defect = vector_field::sub(&lhs, &rhs);
                if !vector_field::is_zero(&defect) {
                    return Verdict::Fail(Witness::new(
                        "matched rho on brackets",
                        format!("({}; {}, {})", a.frames()[al], b.frames()[b1], b.frames()[b2]),
                        format_coeffs(&defect, b.frames()),
                    ));
                }
            }
        }
    }
    for be in 0..rb {
        let y = unit(chart, rb, be);
        for a1 in 0..ra {
            for a2 in a1 + 1..ra {
                let (x1, x2) = (unit(chart, ra, a1), unit(chart, ra, a2));
                let lhs = sigma(&y, &bracket(a, &x1, &x2));
                let mut rhs = bracket(a, &sigma(&y, &x1), &x2);
                rhs = vector_field::add(&rhs, &bracket(a, &x1, &sigma(&y, &x2)));
                rhs = vector_field::add(&rhs, &sigma(&rho(&x2, &y), &x1));
                rhs = vector_field::sub(&rhs, &sigma(&rho(&x1, &y), &x2));
                let defect = vector_field::sub(&lhs, &rhs);
                if !vector_field::is_zero(&defect) {
                    return Verdict::Fail(Witness::new(
                        "matched sigma on brackets",
                        format!("({}; {}, {})", b.frames()[be], a.frames()[a1], a.frames()[a2]),
                        format_coeffs(&defect, a.frames()),
                    ));
                }
            }
        }
    }
    for al in 0..ra {
        let x = unit(chart, ra, al);
        for be in 0..rb {
            let y = unit(chart, rb, be);
            let sx = Section::section(chart, sigma(&y, &x));
            let ry = Section::section(chart, rho(&x, &y));
            let lhs = vector_field::sub(&a.anchor_of(&sx), &b.anchor_of(&ry));
            let rhs = vector_field::commutator(b.anchor(be), a.anchor(al));
            let defect = vector_field::sub(&lhs, &rhs);
            if !vector_field::is_zero(&defect) {
                return Verdict::Fail(Witness::new(
                    "matched anchors",
                    format!("({}, {})", a.frames()[al], b.frames()[be]),
                    vector_field::format(chart, &defect),
                ));
            }
        }
    }
    Verdict::Pass
}

/// `A⋈B` without checking the matched pair identities. Frames are those of
/// `A` followed by those of `B`.
pub fn bowtie_unchecked(mp: &MatchedPair) -> Result<LieAlgebroid> {
    let (a, b) = (&mp.a, &mp.b);
    let chart = mp.chart();
    let (ra, rb) = (a.rank(), b.rank());
    let r = ra + rb;
    let zero = Polynomial::zero(chart);
    let mut anchor = Vec::with_capacity(r);
    anchor.extend((0..ra).map(|al| a.anchor(al).to_vec()));
    anchor.extend((0..rb).map(|be| b.anchor(be).to_vec()));
    let mut structure = vec![vec![vec![zero; r]; r]; r];
    for i in 0..ra {
        for j in 0..ra {
            for (k, c) in a.structure(i, j).iter().enumerate() {
                structure[i][j][k] = c.clone();
            }
        }
    }
    for i in 0..rb {
        for j in 0..rb {
            for (k, c) in b.structure(i, j).iter().enumerate() {
                structure[ra + i][ra + j][ra + k] = c.clone();
            }
        }
    }
    for al in 0..ra {
        for be in 0..rb {
            for (k, c) in mp.sigma[be].image(al).iter().enumerate() {
                structure[al][ra + be][k] = -c;
                structure[ra + be][al][k] = c.clone();
            }
            for (k, c) in mp.rho[al].image(be).iter().enumerate() {
                structure[al][ra + be][ra + k] = c.clone();
                structure[ra + be][al][ra + k] = -c;
            }
        }
    }
    let mut frames = a.frames().to_vec();
    frames.extend(b.frames().iter().cloned());
    LieAlgebroid::new(chart, frames, anchor, structure)
}

/// The algebroid `A⋈B`; rejects pairs failing `check_matched`.
pub fn build_bowtie(mp: &MatchedPair) -> Result<LieAlgebroid> {
    check_matched(mp).into_result()?;
    bowtie_unchecked(mp)
}

/// Reads `rho` and `sigma` off the mixed brackets of an algebroid whose
/// first `rank_a` frames span `A` and the rest span `B`:
/// `[e_alpha, f_beta] = -sigma_beta(e_alpha) + rho_alpha(f_beta)`.
pub fn extract_actions(l: &LieAlgebroid, rank_a: usize) -> Result<MatchedPair> {
    let r = l.rank();
    if rank_a > r {
        return Err(Error::Dimension(format!("split {rank_a} exceeds rank {r}")));
    }
    let rb = r - rank_a;
    let chart = l.chart();
    let in_a = |k: usize| k < rank_a;
    for i in 0..r {
        for j in i + 1..r {
            if in_a(i) != in_a(j) {
                continue;
            }
            let leak: Vec<usize> = (0..r)
                .filter(|&k| in_a(k) != in_a(i) && !l.structure(i, j)[k].is_zero())
                .collect();
            if !leak.is_empty() {
                return Err(Error::Rejected {
                    witness: Witness::new(
                        "closure",
                        format!("({}, {})", l.frames()[i], l.frames()[j]),
                        l.format_section(&l.bracket_frames(i, j)),
                    ),
                });
            }
        }
    }
    let restrict = |idx: std::ops::Range<usize>| -> Result<LieAlgebroid> {
        let off = idx.start;
        let n = idx.len();
        let anchor = idx.clone().map(|i| l.anchor(i).to_vec()).collect();
        let structure = idx
            .clone()
            .map(|i| {
                idx.clone()
                    .map(|j| (0..n).map(|k| l.structure(i, j)[off + k].clone()).collect())
                    .collect()
            })
            .collect();
        LieAlgebroid::new(chart, l.frames()[idx].to_vec(), anchor, structure)
    };
    let a = restrict(0..rank_a)?;
    let b = restrict(rank_a..r)?;
    let mut rho = Vec::with_capacity(rank_a);
    for al in 0..rank_a {
        let images = (0..rb)
            .map(|be| (0..rb).map(|k| l.structure(al, rank_a + be)[rank_a + k].clone()).collect())
            .collect();
        rho.push(Derivation::new(chart, l.anchor(al).to_vec(), images)?);
    }
    let mut sigma = Vec::with_capacity(rb);
    for be in 0..rb {
        let images = (0..rank_a)
            .map(|al| (0..rank_a).map(|k| -&l.structure(al, rank_a + be)[k]).collect())
            .collect();
        sigma.push(Derivation::new(chart, l.anchor(rank_a + be).to_vec(), images)?);
    }
    MatchedPair::new(a, b, rho, sigma)
}

/// Dual frame names `f*`, with further stars appended to avoid `taken`.
fn starred(frames: &[String], taken: &[String]) -> Vec<String> {
    frames
        .iter()
        .map(|f| {
            let mut s = format!("{f}*");
            while taken.contains(&s) {
                s.push('*');
            }
            s
        })
        .collect()
}

/// `A*⋊B` on `A*⊕B` and `A^op⋉B*` on `A⊕B*`, in dual frame order so that
/// the i-th frame of one pairs with the i-th frame of the other.
pub fn build_semidirects(mp: &MatchedPair) -> Result<(LieAlgebroid, LieAlgebroid)> {
    let (a, b) = (&mp.a, &mp.b);
    let chart = mp.chart();
    let (ra, rb) = (a.rank(), b.rank());
    let r = ra + rb;
    let n = chart.dim();
    let zero = Polynomial::zero(chart);

    let mut anchor = vec![vec![zero.clone(); n]; ra];
    anchor.extend((0..rb).map(|be| b.anchor(be).to_vec()));
    let mut structure = vec![vec![vec![zero.clone(); r]; r]; r];
    for i in 0..rb {
        for j in 0..rb {
            for (k, c) in b.structure(i, j).iter().enumerate() {
                structure[ra + i][ra + j][ra + k] = c.clone();
            }
        }
        let dual = mp.sigma[i].dual();
        for al in 0..ra {
            for (k, c) in dual.image(al).iter().enumerate() {
                structure[ra + i][al][k] = c.clone();
                structure[al][ra + i][k] = -c;
            }
        }
    }
    let mut frames = starred(a.frames(), b.frames());
    frames.extend(b.frames().iter().cloned());
    let e = LieAlgebroid::new(chart, frames, anchor, structure)?;

    let mut anchor: Vec<Vec<Polynomial>> = (0..ra).map(|al| vector_field::scale(&Polynomial::int(chart, -1), a.anchor(al))).collect();
    anchor.extend(vec![vec![zero.clone(); n]; rb]);
    let mut structure = vec![vec![vec![zero; r]; r]; r];
    for i in 0..ra {
        for j in 0..ra {
            for (k, c) in a.structure(i, j).iter().enumerate() {
                structure[i][j][k] = -c;
            }
        }
        let dual = mp.rho[i].dual();
        for be in 0..rb {
            for (k, c) in dual.image(be).iter().enumerate() {
                structure[i][ra + be][ra + k] = -c;
                structure[ra + be][i][ra + k] = c.clone();
            }
        }
    }
    let mut frames = a.frames().to_vec();
    frames.extend(starred(b.frames(), a.frames()));
    let estar = LieAlgebroid::new(chart, frames, anchor, structure)?;
    Ok((e, estar))
}

/// Representation conditions, then the bialgebroid condition on the
/// semidirect products.
pub fn check_cor_sdp(mp: &MatchedPair) -> Result<Verdict> {
    let verdict = check_representation(&mp.a, &mp.rho, mp.b.frames(), "rho")
        .and_then(|| check_representation(&mp.b, &mp.sigma, mp.a.frames(), "sigma"));
    if !verdict.passed() {
        return Ok(verdict);
    }
    let (e, estar) = build_semidirects(mp)?;
    check_bialgebroid(&e, &estar)
}

/// `rank` fresh coordinate names `{prefix}1, ...` avoiding `taken`.
pub(crate) fn fresh_names(prefix: &str, rank: usize, taken: &[String]) -> Vec<String> {
    let mut p = prefix.to_string();
    loop {
        let names: Vec<String> = (1..=rank).map(|k| format!("{p}{k}")).collect();
        if names.iter().all(|n| !taken.contains(n)) {
            return names;
        }
        p.push('_');
    }
}

/// The two action algebroid structures on `D = A x_M B` with zero core:
/// `D -> A` is the action algebroid of `B` on `A` through the
/// contragredient of `sigma`, and `D -> B` that of `A` on `B` through the
/// contragredient of `rho`. No identities are checked.
pub fn vacant_from_actions(mp: &MatchedPair) -> Result<(LAVBundle, LAVBundle)> {
    let chart = mp.chart();
    let (ra, rb) = (mp.a.rank(), mp.b.rank());
    let mut taken: Vec<String> = chart.names().to_vec();
    let ua = fresh_names("u", ra, &taken);
    taken.extend(ua.iter().cloned());
    let ub = fresh_names("v", rb, &taken);
    let bundle_a = VectorBundle::new(mp.a.frames().to_vec(), ua)?;
    let bundle_b = VectorBundle::new(mp.b.frames().to_vec(), ub)?;
    let core = VectorBundle::new(Vec::new(), Vec::new())?;
    let dvb = DecomposedDVB::new(chart, bundle_a, bundle_b, core)?;
    let vertical = LAVBundle::new(
        dvb.clone(),
        mp.b.clone(),
        mp.sigma.iter().map(Derivation::dual).collect(),
        Vec::new(),
        (0..rb).map(|be| zero_action(&mp.b, be, 0)).collect(),
        LAVBundle::zero_twist(chart, rb, 0, ra),
    )?;
    let horizontal = LAVBundle::new(
        dvb.transpose(),
        mp.a.clone(),
        mp.rho.iter().map(Derivation::dual).collect(),
        Vec::new(),
        (0..ra).map(|al| zero_action(&mp.a, al, 0)).collect(),
        LAVBundle::zero_twist(chart, ra, 0, rb),
    )?;
    Ok((vertical, horizontal))
}

/// Reads `rho` and `sigma` back from the two structures of a vacant double.
pub fn actions_from_vacant(vertical: &LAVBundle, horizontal: &LAVBundle) -> Result<MatchedPair> {
    if vertical.dvb().core().rank() != 0 || horizontal.dvb().core().rank() != 0 {
        return Err(Error::Unsupported("the double is not vacant".into()));
    }
    MatchedPair::new(
        horizontal.side().clone(),
        vertical.side().clone(),
        horizontal.linear_anchor().iter().map(Derivation::dual).collect(),
        vertical.linear_anchor().iter().map(Derivation::dual).collect(),
    )
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::check_algebroid;
    use crate::catalog;
    use crate::liealg::drinfeld_double;

    #[test]
    fn catalog_verdicts() {
        for (name, mp, expected) in catalog::matched_pairs() {
            assert_eq!(check_matched(&mp).passed(), expected, "{name}: {}", check_matched(&mp));
        }
    }

    #[test]
    fn line_without_action_fails_anchor_compatibility() {
        let (_, mp, _) = catalog::matched_pairs().remove(4);
        let w = check_matched(&mp).witness().cloned().unwrap();
        assert_eq!(w.check, "matched anchors");
        assert_eq!(w.defect, "d/dx");
    }

    #[test]
    fn doubled_sigma_is_not_a_representation() {
        let mut mp = MatchedPair::coadjoint(&catalog::solvable_bialgebra()).unwrap();
        let two = Polynomial::int(mp.chart(), 2);
        mp.sigma = mp.sigma.iter().map(|d| d.scale(&two)).collect();
        let w = check_matched(&mp).witness().cloned().unwrap();
        assert_eq!(w.check, "sigma flatness");
    }

    #[test]
    fn bowtie_of_coadjoint_pair_is_drinfeld_double() {
        let b = catalog::solvable_bialgebra();
        let l = build_bowtie(&MatchedPair::coadjoint(&b).unwrap()).unwrap();
        let d = drinfeld_double(&b).unwrap().algebra.to_algebroid();
        assert_eq!(l, d);
    }

    #[test]
    fn bowtie_mixed_bracket_on_line() {
        let (_, mp, _) = catalog::matched_pairs().remove(3);
        let l = build_bowtie(&mp).unwrap();
        assert!(check_algebroid(&l).passed());
        // [e, f] = -sigma_f(e) + rho_e(f) = e
        assert_eq!(l.format_section(&l.bracket_frames(0, 1)), "e");
        let back = extract_actions(&l, 1).unwrap();
        assert_eq!(back, mp);
    }

    #[test]
    fn bowtie_rejects_failing_pair() {
        let (_, mp, _) = catalog::matched_pairs().remove(4);
        assert!(matches!(build_bowtie(&mp), Err(Error::Rejected { .. })));
    }

    #[test]
    fn extract_rejects_unclosed_split() {
        let b = catalog::solvable_bialgebra();
        let l = build_bowtie(&MatchedPair::coadjoint(&b).unwrap()).unwrap();
        // frames (e1, e2, e1*, e2*): splitting after e1 leaves [e1, e2] = e2 inside B
        // but [e1*, e2*] = e2* in B too; the split after e2* is trivially closed.
        assert!(extract_actions(&l, 4).is_ok());
        let reordered = l.reframe(l.frames().to_vec(), &[0, 2, 1, 3], &[1, 1, 1, 1]).unwrap();
        assert!(matches!(extract_actions(&reordered, 2), Err(Error::Rejected { .. })));
    }

    #[test]
    fn semidirect_anchors_and_brackets() {
        let (_, mp, _) = catalog::matched_pairs().remove(3);
        let (e, estar) = build_semidirects(&mp).unwrap();
        // frames (e*, f) and (e, f*)
        assert_eq!(crate::algebroid::vector_field::format(e.chart(), e.anchor(1)), "x * d/dx");
        assert_eq!(crate::algebroid::vector_field::format(estar.chart(), estar.anchor(0)), "-d/dx");
        // sigma_f(e) = -e over x d/dx, so its contragredient sends e* to e*
        assert_eq!(e.format_section(&e.bracket_frames(1, 0)), "e*");
        assert!(check_algebroid(&e).passed());
        assert!(check_algebroid(&estar).passed());
    }

    #[test]
    fn corollary_agrees_with_check_matched() {
        for (name, mp, expected) in catalog::matched_pairs() {
            assert_eq!(check_cor_sdp(&mp).unwrap().passed(), expected, "{name}");
        }
    }

    #[test]
    fn vacant_round_trip() {
        for (name, mp, _) in catalog::matched_pairs() {
            let (v, h) = vacant_from_actions(&mp).unwrap();
            assert_eq!(actions_from_vacant(&v, &h).unwrap(), mp, "{name}");
        }
    }
}
