use crate::algebroid::vector_field::{self, VectorField};
use crate::error::{Error, Result};
use crate::exact::{Chart, ChartRef, Polynomial};

/// A covariant differential operator on a trivialized vector bundle:
/// `D(f e_j) = X(f) e_j + f D(e_j)` with `D(e_j) = sum_k images[j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    chart: ChartRef,
    base: VectorField,
    images: Vec<Vec<Polynomial>>,
}

impl Derivation {
    pub fn new(chart: &ChartRef, base: VectorField, images: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = images.len();
        if base.len() != chart.dim() || images.iter().any(|row| row.len() != r) {
            return Err(Error::Dimension(format!(
                "derivation needs a {}-component base field and a {r} x {r} frame action",
                chart.dim()
            )));
        }
        for p in base.iter().chain(images.iter().flatten()) {
            Chart::ensure_same(chart, p.chart())?;
        }
        Ok(Derivation {
            chart: chart.clone(),
            base,
            images,
        })
    }

    pub fn zero(chart: &ChartRef, rank: usize) -> Self {
        Derivation {
            chart: chart.clone(),
            base: vector_field::zero(chart),
            images: vec![vec![Polynomial::zero(chart); rank]; rank],
        }
    }

    pub fn chart(&self) -> &ChartRef {
        &self.chart
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn base(&self) -> &[Polynomial] {
        &self.base
    }

    pub fn images(&self) -> &[Vec<Polynomial>] {
        &self.images
    }

    pub fn image(&self, j: usize) -> &[Polynomial] {
        &self.images[j]
    }

    /// Applies to a section given by its coefficient vector.
    pub fn apply(&self, s: &[Polynomial]) -> Vec<Polynomial> {
        let r = self.rank();
        let mut out = vec![Polynomial::zero(&self.chart); r];
        for (j, f) in s.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            out[j] = &out[j] + &vector_field::apply(&self.base, f);
            for (k, m) in self.images[j].iter().enumerate() {
                out[k] = &out[k] + &(f * m);
            }
        }
        out
    }

    /// The contragredient derivation on the dual bundle, characterized by
    /// `X<phi, s> = <D* phi, s> + <phi, D s>`.
    pub fn dual(&self) -> Derivation {
        let r = self.rank();
        let images = (0..r)
            .map(|k| (0..r).map(|j| -&self.images[j][k]).collect())
            .collect();
        Derivation {
            chart: self.chart.clone(),
            base: self.base.clone(),
            images,
        }
    }

    pub fn commutator(&self, other: &Derivation) -> Derivation {
        let r = self.rank();
        let base = vector_field::commutator(&self.base, &other.base);
        let images = (0..r)
            .map(|j| {
                let a = self.apply(&other.images[j]);
                let b = other.apply(&self.images[j]);
                a.iter().zip(&b).map(|(x, y)| x - y).collect()
            })
            .collect();
        Derivation {
            chart: self.chart.clone(),
            base,
            images,
        }
    }

    /// `sum_k coeffs[k] * ds[k]`, a C-infinity combination of derivations.
    pub fn combine(chart: &ChartRef, rank: usize, coeffs: &[Polynomial], ds: &[Derivation]) -> Derivation {
        let mut out = Derivation::zero(chart, rank);
        for (c, d) in coeffs.iter().zip(ds) {
            if c.is_zero() {
                continue;
            }
            out.base = vector_field::add(&out.base, &vector_field::scale(c, &d.base));
            for j in 0..rank {
                for k in 0..rank {
                    out.images[j][k] = &out.images[j][k] + &(c * &d.images[j][k]);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Derivation) -> Derivation {
        let r = self.rank();
        Derivation {
            chart: self.chart.clone(),
            base: vector_field::sub(&self.base, &other.base),
            images: (0..r)
                .map(|j| vector_field::sub(&self.images[j], &other.images[j]))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Polynomial) -> Derivation {
        Derivation {
            chart: self.chart.clone(),
            base: vector_field::scale(c, &self.base),
            images: self.images.iter().map(|row| vector_field::scale(c, row)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        vector_field::is_zero(&self.base) && self.images.iter().all(|r| vector_field::is_zero(r))
    }

    pub fn format(&self, frames: &[String]) -> String {
        let parts: Vec<String> = (0..self.rank())
            .map(|j| {
                format!(
                    "{} -> {}",
                    frames[j],
                    crate::exact::parse::format_linear(&self.images[j], frames)
                )
            })
            .collect();
        format!(
            "base {}; {}",
            vector_field::format(&self.chart, &self.base),
            parts.join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_polynomial;

    #[test]
    fn leibniz_and_duality() {
        let c = Chart::new(&["x"]).unwrap();
        let p = |s: &str| parse_polynomial(s, &c).unwrap();
        let d = Derivation::new(&c, vec![p("x")], vec![vec![p("0"), p("1")], vec![p("x"), p("0")]]).unwrap();
        // D(x^2 e1) = 2x^2 e1 + x^2 e2
        let out = d.apply(&[p("x^2"), p("0")]);
        assert_eq!(out[0].to_string(), "2 * x^2");
        assert_eq!(out[1].to_string(), "x^2");
        // X<phi, s> = <D* phi, s> + <phi, D s> on phi = eps1 + x eps2, s = x e1 + e2
        let phi = [p("1"), p("x")];
        let s = [p("x"), p("1")];
        let pair = |a: &[Polynomial], b: &[Polynomial]| {
            a.iter().zip(b).fold(Polynomial::zero(&c), |acc, (u, v)| &acc + &(u * v))
        };
        let lhs = vector_field::apply(d.base(), &pair(&phi, &s));
        let rhs = &pair(&d.dual().apply(&phi), &s) + &pair(&phi, &d.apply(&s));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_of_commuting_derivations() {
        let c = Chart::point();
        let one = Polynomial::one(&c);
        let z = Polynomial::zero(&c);
        let d = Derivation::new(&c, vec![], vec![vec![one.clone(), z.clone()], vec![z, one]]).unwrap();
        assert!(d.commutator(&d).is_zero());
    }
}
