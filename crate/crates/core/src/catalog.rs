//! Named sample structures used by the bundled examples and the test suites.

use crate::algebroid::{cotangent_algebroid, Derivation, LieAlgebroid, PoissonChart};
use crate::error::Result;
use crate::exact::{parse_polynomial, Chart, ChartRef, Polynomial, Rational};
use crate::liealg::{Bialgebra, Cobracket, LieAlgebra};
use crate::matched::MatchedPair;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn q(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::integer(x)).collect()
}

fn poly(chart: &ChartRef, s: &str) -> Polynomial {
    parse_polynomial(s, chart).expect("catalog polynomial")
}

/// `[e1, e2] = e2` with `delta(e2) = e1 ^ e2`.
pub fn solvable_bialgebra() -> Bialgebra {
    let g = LieAlgebra::from_brackets(names(&["e1", "e2"]), [(0, 1, q(&[0, 1]))]).unwrap();
    let d = Cobracket::from_entries(2, [(1, 0, 1, Rational::one())]).unwrap();
    Bialgebra::new(g, d).unwrap()
}

pub fn abelian_bialgebra(n: usize) -> Bialgebra {
    let basis = (1..=n).map(|i| format!("e{i}")).collect();
    Bialgebra::new(LieAlgebra::abelian(basis), Cobracket::zero(n)).unwrap()
}

/// The solvable algebra plus a central `e3`, with `delta(e2) = e1 ^ e2`.
pub fn extended_bialgebra() -> Bialgebra {
    let g = LieAlgebra::from_brackets(names(&["e1", "e2", "e3"]), [(0, 1, q(&[0, 1, 0]))]).unwrap();
    let d = Cobracket::from_entries(3, [(1, 0, 1, Rational::one())]).unwrap();
    Bialgebra::new(g, d).unwrap()
}

/// `extended_bialgebra` with `delta(e3) = e1 ^ e2` added: the dual bracket
/// still satisfies Jacobi but `delta` is not a 1-cocycle.
pub fn non_cocycle_bialgebra() -> Bialgebra {
    let g = LieAlgebra::from_brackets(names(&["e1", "e2", "e3"]), [(0, 1, q(&[0, 1, 0]))]).unwrap();
    let d = Cobracket::from_entries(3, [(1, 0, 1, Rational::one()), (2, 0, 1, Rational::one())]).unwrap();
    Bialgebra::new(g, d).unwrap()
}

/// `[e1, e2] = e3` (Heisenberg) with `delta(e3) = e1 ^ e2`, which is
/// co-Jacobi but not a cocycle.
pub fn heisenberg_non_cocycle() -> Bialgebra {
    let g = LieAlgebra::from_brackets(names(&["e1", "e2", "e3"]), [(0, 1, q(&[0, 0, 1]))]).unwrap();
    let d = Cobracket::from_entries(3, [(2, 0, 1, Rational::one())]).unwrap();
    Bialgebra::new(g, d).unwrap()
}

/// Bialgebra viewed as a pair of algebroids over a point.
pub fn bialgebra_algebroids(b: &Bialgebra) -> Result<(LieAlgebroid, LieAlgebroid)> {
    let gs = crate::liealg::dual_bracket(b)?;
    Ok((b.algebra.to_algebroid(), gs.to_algebroid()))
}

pub fn plane() -> ChartRef {
    Chart::new(&["x", "y"]).unwrap()
}

/// `pi = x d/dx ^ d/dy` on the plane.
pub fn plane_poisson() -> PoissonChart {
    let c = plane();
    PoissonChart::new(&c, [(0, 1, poly(&c, "x"))]).unwrap()
}

/// `(TM, T*M)` for `pi = x d/dx ^ d/dy`.
pub fn tangent_cotangent_pair() -> (LieAlgebroid, LieAlgebroid) {
    let tm = LieAlgebroid::tangent(&plane());
    let tstar = cotangent_algebroid(&plane_poisson()).unwrap();
    (tm, tstar)
}

/// Rank-one algebroids on the line with anchors `d/dx` and `x d/dx`.
fn line_pair() -> (LieAlgebroid, LieAlgebroid) {
    let c = Chart::new(&["x"]).unwrap();
    let a = LieAlgebroid::new(&c, names(&["e"]), vec![vec![poly(&c, "1")]], vec![vec![vec![Polynomial::zero(&c)]]]).unwrap();
    let b = LieAlgebroid::new(&c, names(&["f"]), vec![vec![poly(&c, "x")]], vec![vec![vec![Polynomial::zero(&c)]]]).unwrap();
    (a, b)
}

/// Pairs `(L, L*)` for which the bialgebroid condition fails.
pub fn broken_bialgebroids() -> Vec<(&'static str, LieAlgebroid, LieAlgebroid)> {
    let mut out = Vec::new();
    let (g, gs) = bialgebra_algebroids(&non_cocycle_bialgebra()).unwrap();
    out.push(("non-cocycle extension", g, gs));
    let (g, gs) = bialgebra_algebroids(&heisenberg_non_cocycle()).unwrap();
    out.push(("heisenberg non-cocycle", g, gs));
    let c = plane();
    let tm = LieAlgebroid::tangent(&c);
    let zero = Polynomial::zero(&c);
    let anchor = vec![vec![poly(&c, "1"), zero.clone()], vec![zero.clone(), zero.clone()]];
    let structure = vec![vec![vec![zero; 2]; 2]; 2];
    let flow = LieAlgebroid::new(&c, names(&["dx", "dy"]), anchor, structure).unwrap();
    out.push(("tangent with a constant flow", tm, flow));
    out
}

/// Rank one: the bialgebroid identity on sections is vacuous, while the
/// cotangent double still detects that `a . a*^T = x` is not skew.
pub fn line_pair_rank_one() -> (LieAlgebroid, LieAlgebroid) {
    line_pair()
}

/// Pairs `(L, L*)` forming Lie bialgebroids.
pub fn bialgebroids() -> Vec<(&'static str, LieAlgebroid, LieAlgebroid)> {
    let mut out = Vec::new();
    let (g, gs) = bialgebra_algebroids(&solvable_bialgebra()).unwrap();
    out.push(("solvable bialgebra", g, gs));
    let (g, gs) = bialgebra_algebroids(&abelian_bialgebra(2)).unwrap();
    out.push(("abelian bialgebra", g, gs));
    let (tm, tstar) = tangent_cotangent_pair();
    out.push(("tangent and cotangent of x d/dx ^ d/dy", tm, tstar));
    out
}

fn line_matched(sigma_image: &str) -> MatchedPair {
    let (a, b) = line_pair();
    let c = a.chart().clone();
    let rho = vec![Derivation::new(&c, a.anchor(0).to_vec(), vec![vec![Polynomial::zero(&c)]]).unwrap()];
    let sigma = vec![Derivation::new(&c, b.anchor(0).to_vec(), vec![vec![poly(&c, sigma_image)]]).unwrap()];
    MatchedPair::new(a, b, rho, sigma).unwrap()
}

/// Matched pairs with valid representations, tagged with whether the
/// matched pair identities hold.
pub fn matched_pairs() -> Vec<(&'static str, MatchedPair, bool)> {
    let point = Chart::point();
    let a = LieAlgebroid::abelian(&point, names(&["e1"])).unwrap();
    let b = LieAlgebroid::abelian(&point, names(&["f1", "f2"])).unwrap();
    vec![
        ("abelian", MatchedPair::trivial(a, b).unwrap(), true),
        ("coadjoint solvable", MatchedPair::coadjoint(&solvable_bialgebra()).unwrap(), true),
        ("coadjoint extended", MatchedPair::coadjoint(&extended_bialgebra()).unwrap(), true),
        ("line action", line_matched("-1"), true),
        ("line without action", line_matched("0"), false),
        ("line doubled action", line_matched("-2"), false),
        ("coadjoint non-cocycle", MatchedPair::coadjoint(&non_cocycle_bialgebra()).unwrap(), false),
        ("coadjoint heisenberg", MatchedPair::coadjoint(&heisenberg_non_cocycle()).unwrap(), false),
    ]
}
