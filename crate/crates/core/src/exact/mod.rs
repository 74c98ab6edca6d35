//! Exact scalar and polynomial arithmetic.

pub mod chart;
pub mod parse;
pub mod polynomial;
pub mod random;
pub mod rational;

pub use chart::{Chart, ChartRef};
pub use parse::{parse_linear, parse_polynomial};
pub use polynomial::{Monomial, Polynomial};
pub use rational::Rational;

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
}

pub fn poly_arith(p: &Polynomial, q: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    match op {
        PolyOp::Add => p.checked_add(q),
        PolyOp::Mul => p.checked_mul(q),
    }
}

pub fn partial(p: &Polynomial, coord: &str) -> Result<Polynomial> {
    p.partial_by_name(coord)
}

/// Exact rank of a rational matrix by Gaussian elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][col].recip().unwrap();
        for i in 0..m.len() {
            if i == r || m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] * &inv;
            for j in col..ncols {
                let delta = &factor * &m[r][j];
                m[i][j] -= &delta;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Exact determinant of a square rational matrix.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(col, pivot);
            det = -det;
        }
        det = &det * &m[col][col];
        let inv = m[col][col].recip().unwrap();
        for i in col + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] * &inv;
            for j in col..n {
                let delta = &factor * &m[col][j];
                m[i][j] -= &delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_rank() {
        let q = |v: &[i64]| v.iter().map(|&x| Rational::integer(x)).collect::<Vec<_>>();
        let m = vec![q(&[0, 2, 1]), q(&[1, 0, 0]), q(&[3, 1, 4])];
        assert_eq!(determinant(&m), Rational::integer(-7));
        assert_eq!(rank(&m), 3);
        let singular = vec![q(&[1, 2]), q(&[2, 4])];
        assert!(determinant(&singular).is_zero());
        assert_eq!(rank(&singular), 1);
    }

    #[test]
    fn arith_entry_points() {
        let c = Chart::new(&["x"]).unwrap();
        let x = parse_polynomial("x", &c).unwrap();
        let one = Polynomial::one(&c);
        assert_eq!(poly_arith(&x, &one, PolyOp::Add).unwrap().to_string(), "x + 1");
        assert_eq!(poly_arith(&x, &x, PolyOp::Mul).unwrap().to_string(), "x^2");
        assert_eq!(partial(&x, "x").unwrap().to_string(), "1");
        assert!(partial(&x, "y").is_err());
    }
}
