//! Sparse multivariate polynomials with rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::chart::{Chart, ChartRef};
use crate::exact::rational::Rational;

/// Exponent vector, one entry per chart coordinate.
///
/// Ordered so that iteration over a polynomial visits monomials in printing
/// order: higher total degree first, then lexicographically larger exponent
/// vectors first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone)]
pub struct Polynomial {
    chart: ChartRef,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(chart: &ChartRef) -> Self {
        Polynomial {
            chart: chart.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(chart: &ChartRef, c: Rational) -> Self {
        let mut p = Polynomial::zero(chart);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(chart.dim()), c);
        }
        p
    }

    pub fn int(chart: &ChartRef, n: i64) -> Self {
        Polynomial::constant(chart, Rational::integer(n))
    }

    pub fn one(chart: &ChartRef) -> Self {
        Polynomial::int(chart, 1)
    }

    pub fn var(chart: &ChartRef, name: &str) -> Result<Self> {
        let i = chart.require(name)?;
        Ok(Polynomial::var_index(chart, i))
    }

    pub fn var_index(chart: &ChartRef, i: usize) -> Self {
        let mut exps = vec![0; chart.dim()];
        exps[i] = 1;
        Polynomial::from_terms(chart, [(Monomial(exps), Rational::one())])
    }

    pub fn from_terms(
        chart: &ChartRef,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Polynomial::zero(chart);
        for (m, c) in terms {
            assert_eq!(m.0.len(), chart.dim(), "monomial arity does not match chart");
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn chart(&self) -> &ChartRef {
        &self.chart
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The value if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        Chart::ensure_same(&self.chart, &other.chart)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        Chart::ensure_same(&self.chart, &other.chart)?;
        let mut out = Polynomial::zero(&self.chart);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.chart);
        }
        Polynomial {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.chart);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to coordinate `i`.
    pub fn partial(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.chart);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), &(c * &Rational::integer(e as i64)));
        }
        out
    }

    pub fn partial_by_name(&self, name: &str) -> Result<Polynomial> {
        let i = self.chart.require(name)?;
        Ok(self.partial(i))
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.chart.dim() {
            return Err(Error::Dimension(format!(
                "point has {} coordinates, chart has {}",
                point.len(),
                self.chart.dim()
            )));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, e) in point.iter().zip(&m.0) {
                if *e > 0 {
                    t = &t * &x.pow(*e);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Composition: replaces coordinate `i` by `images[i]`, producing a
    /// polynomial on the images' chart.
    pub fn substitute(&self, target: &ChartRef, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.chart.dim() {
            return Err(Error::Dimension(format!(
                "{} images for a {}-dimensional chart",
                images.len(),
                self.chart.dim()
            )));
        }
        for img in images {
            Chart::ensure_same(target, img.chart())?;
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target), p.clone()])
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Re-expresses this polynomial on `target`, matching coordinates by name.
    /// Fails if a coordinate actually used here is missing from `target`.
    pub fn to_chart(&self, target: &ChartRef) -> Result<Polynomial> {
        if Chart::same(&self.chart, target) {
            return Ok(self.clone());
        }
        let n = self.chart.dim();
        let mut map = Vec::with_capacity(n);
        for i in 0..n {
            map.push(target.index_of(self.chart.name(i)));
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.dim()];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] = e,
                    None => {
                        return Err(Error::UnknownCoordinate(self.chart.name(i).to_string()))
                    }
                }
            }
            out.add_term(Monomial(exps), c);
        }
        Ok(out)
    }

    /// Largest total degree in the coordinates `vars` over all terms.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        self.terms
            .keys()
            .map(|m| vars.iter().map(|&v| m.0[v]).sum())
            .max()
            .unwrap_or(0)
    }

    /// Splits a polynomial that is homogeneous of degree one in `vars` into
    /// the coefficients of each of those coordinates.
    pub fn split_linear(&self, vars: &[usize]) -> Result<Vec<Polynomial>> {
        let mut out = vec![Polynomial::zero(&self.chart); vars.len()];
        for (m, c) in &self.terms {
            let hits: Vec<usize> = vars
                .iter()
                .enumerate()
                .filter(|(_, &v)| m.0[v] > 0)
                .map(|(k, _)| k)
                .collect();
            if hits.len() != 1 || m.0[vars[hits[0]]] != 1 {
                return Err(Error::Schema(format!(
                    "`{self}` is not linear homogeneous in the fibre coordinates"
                )));
            }
            let mut exps = m.0.clone();
            exps[vars[hits[0]]] = 0;
            out[hits[0]].add_term(Monomial(exps), c);
        }
        Ok(out)
    }

    /// True when no coordinate in `vars` occurs.
    pub fn free_of(&self, vars: &[usize]) -> bool {
        self.degree_in(vars) == 0
    }

    fn write_monomial(&self, f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
        let mut first = true;
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            write!(f, "{}", self.chart.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Chart::same(&self.chart, &other.chart) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.degree() == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                self.write_monomial(f, m)?;
            } else {
                write!(f, "{a} * ")?;
                self.write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Operator forms panic on chart mismatch; use `checked_*` at API boundaries.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial chart mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(&-rhs).expect("polynomial chart mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial chart mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_polynomial;

    fn xy() -> ChartRef {
        Chart::new(&["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &xy()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x + 1") * &p("x - 1"), p("x^2 - 1"));
    }

    #[test]
    fn additive_identity() {
        let q = p("3 * x * y - 1/2");
        assert_eq!(&q + &Polynomial::zero(&xy()), q);
    }

    #[test]
    fn square_of_binomial_by_distribution() {
        // Distribute term by term: (x+y)(x+y) = x*x + x*y + y*x + y*y.
        let (x, y) = (p("x"), p("y"));
        let oracle = &(&(&(&x * &x) + &(&x * &y)) + &(&y * &x)) + &(&y * &y);
        let sq = (&x + &y).pow(2);
        assert_eq!(sq, oracle);
        assert_eq!(sq.to_string(), "x^2 + 2 * x * y + y^2");
    }

    #[test]
    fn power_rule() {
        assert_eq!(p("x^2 * y").partial(0), p("2 * x * y"));
        assert!(p("5/3").partial(0).is_zero());
    }

    #[test]
    fn chart_mismatch_is_an_error() {
        let other = Chart::new(&["x"]).unwrap();
        let a = p("x");
        let b = parse_polynomial("x", &other).unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::ChartMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::ChartMismatch { .. })));
    }

    #[test]
    fn unknown_coordinate() {
        assert!(matches!(
            p("x").partial_by_name("z"),
            Err(Error::UnknownCoordinate(_))
        ));
    }

    #[test]
    fn printing_order_is_graded_then_lex() {
        assert_eq!(p("1 + y + x + x*y + y^2 + x^2").to_string(), "x^2 + x * y + y^2 + x + y + 1");
        assert_eq!(p("-x + 2").to_string(), "-x + 2");
        assert_eq!(p("0 * x").to_string(), "0");
    }

    #[test]
    fn substitute_and_rechart() {
        let t = Chart::new(&["t"]).unwrap();
        let images = vec![
            parse_polynomial("t + 1", &t).unwrap(),
            parse_polynomial("t", &t).unwrap(),
        ];
        let q = p("x * y").substitute(&t, &images).unwrap();
        assert_eq!(q, parse_polynomial("t^2 + t", &t).unwrap());

        let bigger = Chart::new(&["y", "z", "x"]).unwrap();
        let moved = p("x^2 * y").to_chart(&bigger).unwrap();
        assert_eq!(moved.to_string(), "y * x^2");
        assert!(p("x").to_chart(&t).is_err());
    }

    #[test]
    fn linear_split() {
        let c = Chart::new(&["x", "a", "b"]).unwrap();
        let q = parse_polynomial("x * a + 2 * b", &c).unwrap();
        let parts = q.split_linear(&[1, 2]).unwrap();
        assert_eq!(parts[0], parse_polynomial("x", &c).unwrap());
        assert_eq!(parts[1], parse_polynomial("2", &c).unwrap());
        assert!(parse_polynomial("a * b", &c).unwrap().split_linear(&[1, 2]).is_err());
        assert!(parse_polynomial("x", &c).unwrap().split_linear(&[1, 2]).is_err());
    }
}
