//! Finite-dimensional Lie algebras and Lie bialgebras over the rationals,
//! the Drinfel'd double and Manin triples.
//!
//! Exterior squares are stored as antisymmetric matrices `m` standing for
//! `sum_{j<k} m[j][k] e_j ^ e_k`, paired with the dual by the determinant
//! convention `<a ^ b, x ^ y> = <a,x><b,y> - <a,y><b,x>`.

use std::collections::BTreeMap;

use crate::algebroid::LieAlgebroid;
use crate::error::{Error, Result};
use crate::exact::parse::{format_exterior, format_linear};
use crate::exact::{rank, Chart, Polynomial, Rational};
use crate::verdict::{Verdict, Witness};

type Vector = Vec<Rational>;
type Matrix = Vec<Vec<Rational>>;

fn zeros(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

fn format_vector(v: &[Rational], names: &[String]) -> String {
    let c = Chart::point();
    let p: Vec<Polynomial> = v.iter().map(|x| Polynomial::constant(&c, x.clone())).collect();
    format_linear(&p, names)
}

fn format_wedge2(m: &Matrix, names: &[String]) -> String {
    let c = Chart::point();
    let mut terms = BTreeMap::new();
    for (j, row) in m.iter().enumerate() {
        for (k, x) in row.iter().enumerate().skip(j + 1) {
            if !x.is_zero() {
                terms.insert(vec![j, k], Polynomial::constant(&c, x.clone()));
            }
        }
    }
    format_exterior(&terms, names)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    basis: Vec<String>,
    /// `[e_i, e_j] = sum_k c[i][j][k] e_k`
    c: Vec<Vec<Vector>>,
}

impl LieAlgebra {
    pub fn new(basis: Vec<String>, c: Vec<Vec<Vector>>) -> Result<Self> {
        let n = basis.len();
        if c.len() != n || c.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::Dimension(format!("structure constants must be {n} x {n} x {n}")));
        }
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if c[i][j][k] != -&c[j][i][k] {
                        return Err(Error::Schema(format!(
                            "bracket({}, {}) is not antisymmetric",
                            basis[i], basis[j]
                        )));
                    }
                }
            }
        }
        Ok(LieAlgebra { basis, c })
    }

    /// Unlisted pairs bracket to zero; reversed pairs follow by antisymmetry.
    pub fn from_brackets(
        basis: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Self> {
        let n = basis.len();
        let mut c = vec![vec![zeros(n); n]; n];
        for (i, j, v) in brackets {
            if i >= n || j >= n || v.len() != n {
                return Err(Error::Dimension("bracket index or length out of range".into()));
            }
            if i == j {
                if v.iter().any(|x| !x.is_zero()) {
                    return Err(Error::Schema(format!(
                        "bracket({0}, {0}) must be 0 by antisymmetry",
                        basis[i]
                    )));
                }
                continue;
            }
            c[j][i] = v.iter().map(|x| -x).collect();
            c[i][j] = v;
        }
        LieAlgebra::new(basis, c)
    }

    pub fn abelian(basis: Vec<String>) -> Self {
        let n = basis.len();
        LieAlgebra {
            basis,
            c: vec![vec![zeros(n); n]; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn structure(&self, i: usize, j: usize) -> &[Rational] {
        &self.c[i][j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zeros(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let s = &x[i] * &y[j];
                for k in 0..n {
                    out[k] += &(&s * &self.c[i][j][k]);
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vector {
        let mut v = zeros(self.dim());
        v[i] = Rational::one();
        v
    }

    /// Matrix of `ad_x`: column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket(x, &self.unit(j))).collect();
        (0..n).map(|l| (0..n).map(|j| cols[j][l].clone()).collect()).collect()
    }

    pub fn check_jacobi(&self) -> Verdict {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (self.unit(i), self.unit(j), self.unit(k));
                    let t1 = self.bracket(&self.bracket(&a, &b), &c);
                    let t2 = self.bracket(&self.bracket(&b, &c), &a);
                    let t3 = self.bracket(&self.bracket(&c, &a), &b);
                    let s: Vector = (0..n).map(|m| &(&t1[m] + &t2[m]) + &t3[m]).collect();
                    if s.iter().any(|x| !x.is_zero()) {
                        return Verdict::Fail(Witness::new(
                            "jacobi",
                            format!("({}, {}, {})", self.basis[i], self.basis[j], self.basis[k]),
                            format_vector(&s, &self.basis),
                        ));
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// The same algebra as a Lie algebroid over the point.
    pub fn to_algebroid(&self) -> LieAlgebroid {
        let c = Chart::point();
        let n = self.dim();
        let structure = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.c[i][j].iter().map(|x| Polynomial::constant(&c, x.clone())).collect())
                    .collect()
            })
            .collect();
        LieAlgebroid::new(&c, self.basis.clone(), vec![vec![]; n], structure)
            .expect("antisymmetric constants")
    }

    pub fn from_algebroid(l: &LieAlgebroid) -> Result<Self> {
        if l.chart().dim() != 0 {
            return Err(Error::Unsupported("a Lie algebra needs the point base".into()));
        }
        let n = l.rank();
        let c = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        l.structure(i, j)
                            .iter()
                            .map(|p| p.as_constant().unwrap_or_else(Rational::zero))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        LieAlgebra::new(l.frames().to_vec(), c)
    }
}

/// `delta(e_i) = sum_{j<k} d[i][j][k] e_j ^ e_k`, stored antisymmetrically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cobracket {
    d: Vec<Matrix>,
}

impl Cobracket {
    pub fn new(d: Vec<Matrix>) -> Result<Self> {
        let n = d.len();
        for (i, m) in d.iter().enumerate() {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(Error::Dimension(format!("cobracket must be {n} x {n} x {n}")));
            }
            for j in 0..n {
                for k in j..n {
                    if m[j][k] != -&m[k][j] {
                        return Err(Error::Schema(format!(
                            "delta of basis element {} is not antisymmetric",
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(Cobracket { d })
    }

    pub fn zero(n: usize) -> Self {
        Cobracket {
            d: vec![vec![zeros(n); n]; n],
        }
    }

    /// Builds from the upper-triangular entries `(i, j, k, value)` with `j < k`.
    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>) -> Result<Self> {
        let mut d = vec![vec![zeros(n); n]; n];
        for (i, j, k, v) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::Dimension("cobracket index out of range".into()));
            }
            if j == k {
                continue;
            }
            d[i][k][j] = &d[i][k][j] - &v;
            d[i][j][k] = &d[i][j][k] + &v;
        }
        Cobracket::new(d)
    }

    pub fn dim(&self) -> usize {
        self.d.len()
    }

    pub fn of(&self, i: usize) -> &Matrix {
        &self.d[i]
    }

    pub fn apply(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut out = vec![zeros(n); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    out[j][k] += &(xi * &self.d[i][j][k]);
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub algebra: LieAlgebra,
    pub cobracket: Cobracket,
}

impl Bialgebra {
    pub fn new(algebra: LieAlgebra, cobracket: Cobracket) -> Result<Self> {
        if algebra.dim() != cobracket.dim() {
            return Err(Error::Dimension("cobracket dimension differs from the algebra".into()));
        }
        Ok(Bialgebra { algebra, cobracket })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Basis names of the dual, `e1 -> e1*`.
    pub fn dual_names(&self) -> Vec<String> {
        self.algebra.basis().iter().map(|b| format!("{b}*")).collect()
    }

    /// The dual bialgebra `(g*, g)`, with the bracket of `g` read as a
    /// cobracket on `g*`.
    pub fn dual(&self) -> Result<Bialgebra> {
        let n = self.dim();
        let algebra = dual_bracket(self)?;
        let d = (0..n)
            .map(|k| {
                (0..n)
                    .map(|i| (0..n).map(|j| self.algebra.c[i][j][k].clone()).collect())
                    .collect()
            })
            .collect();
        Bialgebra::new(algebra, Cobracket::new(d)?)
    }
}

/// The bracket on the dual, `[eps^i, eps^j]_* = sum_k delta^{ij}_k eps^k`.
/// Rejected when the result violates Jacobi (delta is not co-Jacobi).
pub fn dual_bracket(b: &Bialgebra) -> Result<LieAlgebra> {
    let n = b.dim();
    let c = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| b.cobracket.d[k][i][j].clone()).collect())
                .collect()
        })
        .collect();
    let g = LieAlgebra::new(b.dual_names(), c)?;
    g.check_jacobi().into_result()?;
    Ok(g)
}

/// `ad_x` extended to the exterior square as a derivation.
fn ad_wedge2(g: &LieAlgebra, x: &[Rational], m: &Matrix) -> Matrix {
    let a = g.ad(x);
    let n = g.dim();
    let mut out = vec![zeros(n); n];
    for l in 0..n {
        for k in 0..n {
            let mut s = Rational::zero();
            for j in 0..n {
                s += &(&a[l][j] * &m[j][k]);
                s += &(&m[l][j] * &a[k][j]);
            }
            out[l][k] = s;
        }
    }
    out
}

/// `delta([e_i, e_j]) = ad_{e_i} delta(e_j) - ad_{e_j} delta(e_i)` on all
/// basis pairs.
pub fn check_cocycle(b: &Bialgebra) -> Verdict {
    let g = &b.algebra;
    let n = g.dim();
    g.check_jacobi().and_then(|| {
        for i in 0..n {
            for j in i + 1..n {
                let lhs = b.cobracket.apply(&g.c[i][j]);
                let r1 = ad_wedge2(g, &g.unit(i), &b.cobracket.d[j]);
                let r2 = ad_wedge2(g, &g.unit(j), &b.cobracket.d[i]);
                let defect: Matrix = (0..n)
                    .map(|p| (0..n).map(|q| &(&lhs[p][q] - &r1[p][q]) + &r2[p][q]).collect())
                    .collect();
                if defect.iter().flatten().any(|x| !x.is_zero()) {
                    return Verdict::Fail(Witness::new(
                        "cocycle",
                        format!("({}, {})", g.basis[i], g.basis[j]),
                        format_wedge2(&defect, &g.basis),
                    ));
                }
            }
        }
        Verdict::Pass
    })
}

/// A Lie algebra with a bilinear pairing and two marked subspaces given by
/// spanning vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedAlgebra {
    pub algebra: LieAlgebra,
    pub pairing: Matrix,
    pub first: Vec<Vector>,
    pub second: Vec<Vector>,
}

impl PairedAlgebra {
    pub fn new(algebra: LieAlgebra, pairing: Matrix, first: Vec<Vector>, second: Vec<Vector>) -> Result<Self> {
        let n = algebra.dim();
        if pairing.len() != n || pairing.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("pairing must be {n} x {n}")));
        }
        for i in 0..n {
            for j in 0..i {
                if pairing[i][j] != pairing[j][i] {
                    return Err(Error::Schema("pairing is not symmetric".into()));
                }
            }
        }
        if crate::exact::determinant(&pairing).is_zero() {
            return Err(Error::Schema("pairing is degenerate".into()));
        }
        if n % 2 != 0 || first.len() != n / 2 || second.len() != n / 2 {
            return Err(Error::Schema("marked subspaces must each have half the dimension".into()));
        }
        if first.iter().chain(&second).any(|v| v.len() != n) {
            return Err(Error::Dimension("marked vector of the wrong length".into()));
        }
        let all: Vec<Vector> = first.iter().chain(&second).cloned().collect();
        if rank(&all) != n {
            return Err(Error::Schema("marked subspaces are not complementary".into()));
        }
        Ok(PairedAlgebra {
            algebra,
            pairing,
            first,
            second,
        })
    }

    /// The abelian algebra of dimension `2n` with the hyperbolic pairing.
    pub fn abelian_hyperbolic(n: usize) -> Self {
        let mut names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
        names.extend((1..=n).map(|i| format!("e{i}*")));
        let g = LieAlgebra::abelian(names);
        let (pairing, first, second) = hyperbolic(n);
        PairedAlgebra::new(g, pairing, first, second).expect("hyperbolic form")
    }

    pub fn pair(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                s += &(&(xi * &self.pairing[i][j]) * yj);
            }
        }
        s
    }
}

fn hyperbolic(n: usize) -> (Matrix, Vec<Vector>, Vec<Vector>) {
    let m = 2 * n;
    let mut pairing = vec![zeros(m); m];
    for i in 0..n {
        pairing[i][n + i] = Rational::one();
        pairing[n + i][i] = Rational::one();
    }
    let unit = |i: usize| {
        let mut v = zeros(m);
        v[i] = Rational::one();
        v
    };
    (pairing, (0..n).map(unit).collect(), (n..m).map(unit).collect())
}

/// The Lie algebra on `g + g*` with brackets of `g`, the dual bracket on
/// `g*`, and `[x, psi] = ad*_x psi - ad*_psi x`; paired by
/// `<x + phi, y + psi> = <psi, x> + <phi, y>`.
pub fn drinfeld_double(b: &Bialgebra) -> Result<PairedAlgebra> {
    check_cocycle(b).into_result()?;
    let gs = dual_bracket(b)?;
    let g = &b.algebra;
    let n = g.dim();
    let m = 2 * n;
    let mut c = vec![vec![zeros(m); m]; m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[i][j][k] = g.c[i][j][k].clone();
                c[n + i][n + j][n + k] = gs.c[i][j][k].clone();
                // [e_i, eps^j] = sum_k c*^i_{jk} e_k - sum_k c^j_{ik} eps^k
                let v = gs.c[j][k][i].clone();
                let w = -&g.c[i][k][j];
                c[i][n + j][k] = v.clone();
                c[n + j][i][k] = -&v;
                c[i][n + j][n + k] = w.clone();
                c[n + j][i][n + k] = -&w;
            }
        }
    }
    let mut names = g.basis().to_vec();
    names.extend(gs.basis().iter().cloned());
    let d = LieAlgebra::new(names, c)?;
    let (pairing, first, second) = hyperbolic(n);
    PairedAlgebra::new(d, pairing, first, second)
}

/// Invariance of the pairing, isotropy of both marked subspaces, and their
/// closure under the bracket, in that order.
pub fn check_manin(p: &PairedAlgebra) -> Verdict {
    let g = &p.algebra;
    let n = g.dim();
    let names = g.basis();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (a, b, c) = (g.unit(i), g.unit(j), g.unit(k));
                let s = &p.pair(&g.bracket(&a, &b), &c) + &p.pair(&b, &g.bracket(&a, &c));
                if !s.is_zero() {
                    return Verdict::Fail(Witness::new(
                        "invariance",
                        format!("({}, {}, {})", names[i], names[j], names[k]),
                        s.to_string(),
                    ));
                }
            }
        }
    }
    for (label, sub) in [("first", &p.first), ("second", &p.second)] {
        for (a, u) in sub.iter().enumerate() {
            for v in sub.iter().skip(a) {
                let s = p.pair(u, v);
                if !s.is_zero() {
                    return Verdict::Fail(Witness::new(
                        "isotropy",
                        format!(
                            "{label} subspace ({}, {})",
                            format_vector(u, names),
                            format_vector(v, names)
                        ),
                        s.to_string(),
                    ));
                }
            }
        }
    }
    for (label, sub) in [("first", &p.first), ("second", &p.second)] {
        let r = rank(sub);
        for (a, u) in sub.iter().enumerate() {
            for v in sub.iter().skip(a + 1) {
                let w = g.bracket(u, v);
                let mut rows = sub.clone();
                rows.push(w.clone());
                if rank(&rows) > r {
                    return Verdict::Fail(Witness::new(
                        "closure",
                        format!(
                            "{label} subspace ({}, {})",
                            format_vector(u, names),
                            format_vector(v, names)
                        ),
                        format_vector(&w, names),
                    ));
                }
            }
        }
    }
    Verdict::Pass
}

/// Restricts a bracket to the span of the given basis indices, failing if
/// the span is not closed.
pub fn restrict(g: &LieAlgebra, idx: &[usize]) -> Result<LieAlgebra> {
    let mut c = Vec::new();
    for &i in idx {
        let mut row = Vec::new();
        for &j in idx {
            let v = &g.c[i][j];
            for (k, x) in v.iter().enumerate() {
                if !x.is_zero() && !idx.contains(&k) {
                    return Err(Error::Schema(format!(
                        "bracket({}, {}) leaves the subspace",
                        g.basis[i], g.basis[j]
                    )));
                }
            }
            row.push(idx.iter().map(|&k| v[k].clone()).collect());
        }
        c.push(row);
    }
    LieAlgebra::new(idx.iter().map(|&i| g.basis[i].clone()).collect(), c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn q(v: &[i64]) -> Vector {
        v.iter().map(|&x| Rational::integer(x)).collect()
    }

    fn solvable_bialgebra() -> Bialgebra {
        let g = LieAlgebra::from_brackets(names(&["e1", "e2"]), [(0, 1, q(&[0, 1]))]).unwrap();
        let d = Cobracket::from_entries(2, [(1, 0, 1, Rational::one())]).unwrap();
        Bialgebra::new(g, d).unwrap()
    }

    #[test]
    fn dual_of_solvable_example() {
        let gs = dual_bracket(&solvable_bialgebra()).unwrap();
        assert_eq!(gs.structure(0, 1), &q(&[0, 1])[..]);
    }

    #[test]
    fn biduality() {
        let b = solvable_bialgebra();
        let back = dual_bracket(&b.dual().unwrap()).unwrap();
        assert_eq!(back.c, b.algebra.c);
    }

    #[test]
    fn manin_with_identity_pairing_fails_isotropy() {
        let p = PairedAlgebra::abelian_hyperbolic(2);
        assert!(check_manin(&p).passed());
        let mut id = vec![zeros(4); 4];
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = Rational::one();
        }
        let bad = PairedAlgebra::new(p.algebra.clone(), id, p.first.clone(), p.second.clone()).unwrap();
        assert_eq!(check_manin(&bad).witness().unwrap().check, "isotropy");
    }

    #[test]
    fn wedge_formatting() {
        let mut m = vec![zeros(3); 3];
        m[0][2] = Rational::new(1, 2);
        m[2][0] = Rational::new(-1, 2);
        assert_eq!(format_wedge2(&m, &names(&["a", "b", "c"])), "1/2 * a ^ c");
    }
}
