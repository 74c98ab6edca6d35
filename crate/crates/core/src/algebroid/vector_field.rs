//! Polynomial vector fields on a chart, stored as dense component vectors.

use crate::exact::parse::format_linear;
use crate::exact::{ChartRef, Polynomial};

pub type VectorField = Vec<Polynomial>;

pub fn zero(chart: &ChartRef) -> VectorField {
    vec![Polynomial::zero(chart); chart.dim()]
}

pub fn apply(x: &[Polynomial], f: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(f.chart());
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let d = f.partial(i);
        if !d.is_zero() {
            out = &out + &(xi * &d);
        }
    }
    out
}

/// `[X, Y] = X(Y^i) - Y(X^i)` componentwise.
pub fn commutator(x: &[Polynomial], y: &[Polynomial]) -> VectorField {
    x.iter()
        .zip(y)
        .map(|(xi, yi)| &apply(x, yi) - &apply(y, xi))
        .collect()
}

pub fn add(x: &[Polynomial], y: &[Polynomial]) -> VectorField {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[Polynomial], y: &[Polynomial]) -> VectorField {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale(f: &Polynomial, x: &[Polynomial]) -> VectorField {
    x.iter().map(|xi| f * xi).collect()
}

pub fn is_zero(x: &[Polynomial]) -> bool {
    x.iter().all(Polynomial::is_zero)
}

pub fn coordinate_names(chart: &ChartRef) -> Vec<String> {
    chart.names().iter().map(|n| format!("d/d{n}")).collect()
}

pub fn format(chart: &ChartRef, x: &[Polynomial]) -> String {
    format_linear(x, &coordinate_names(chart))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_polynomial, Chart};

    #[test]
    fn commutator_of_dx_and_x_dx() {
        let c = Chart::new(&["x"]).unwrap();
        let one = vec![Polynomial::one(&c)];
        let xdx = vec![parse_polynomial("x", &c).unwrap()];
        assert_eq!(format(&c, &commutator(&one, &xdx)), "d/dx");
        assert_eq!(format(&c, &commutator(&xdx, &one)), "-d/dx");
    }
}
