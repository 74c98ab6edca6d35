use crate::algebroid::calculus::schouten;
use crate::algebroid::lie::LieAlgebroid;
use crate::algebroid::multivector::Multivector;
use crate::algebroid::vector_field::{self, VectorField};
use crate::error::{Error, Result};
use crate::exact::{Chart, ChartRef, Polynomial};
use crate::verdict::{Verdict, Witness};

/// A polynomial bivector `pi = sum_{i<j} pi^{ij} d/dx^i ^ d/dx^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonChart {
    bivector: Multivector,
}

impl PoissonChart {
    pub fn new(
        chart: &ChartRef,
        entries: impl IntoIterator<Item = (usize, usize, Polynomial)>,
    ) -> Result<Self> {
        let n = chart.dim();
        let mut m = Multivector::zero(chart, n, 2);
        for (i, j, p) in entries {
            Chart::ensure_same(chart, p.chart())?;
            if i >= n || j >= n {
                return Err(Error::Dimension("bivector index out of range".into()));
            }
            if i == j {
                if !p.is_zero() {
                    return Err(Error::Schema(format!(
                        "pi({0}, {0}) must be 0 by antisymmetry",
                        chart.name(i)
                    )));
                }
                continue;
            }
            m.add_word(&[i, j], p);
        }
        Ok(PoissonChart { bivector: m })
    }

    pub fn from_bivector(bivector: Multivector) -> Result<Self> {
        if bivector.degree() != 2 || bivector.rank() != bivector.chart().dim() {
            return Err(Error::Dimension("a bivector on the tangent bundle is required".into()));
        }
        Ok(PoissonChart { bivector })
    }

    pub fn chart(&self) -> &ChartRef {
        self.bivector.chart()
    }

    pub fn bivector(&self) -> &Multivector {
        &self.bivector
    }

    /// `pi^{ij} = {x^i, x^j}`.
    pub fn pi(&self, i: usize, j: usize) -> Polynomial {
        self.bivector.eval_word(&[i, j])
    }

    pub fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let n = self.chart().dim();
        let mut out = Polynomial::zero(self.chart());
        for i in 0..n {
            let fi = f.partial(i);
            if fi.is_zero() {
                continue;
            }
            for j in 0..n {
                let p = self.pi(i, j);
                if !p.is_zero() {
                    out = &out + &(&(&fi * &p) * &g.partial(j));
                }
            }
        }
        out
    }

    /// `pi#(df) = sum_{ij} d_i f pi^{ij} d/dx^j`, so that `pi#(df)(g) = {f, g}`.
    pub fn sharp(&self, f: &Polynomial) -> VectorField {
        let n = self.chart().dim();
        (0..n)
            .map(|j| {
                (0..n).fold(Polynomial::zero(self.chart()), |acc, i| {
                    &acc + &(&f.partial(i) * &self.pi(i, j))
                })
            })
            .collect()
    }

    /// `[pi, pi] = 0` for the Schouten bracket of the tangent algebroid.
    pub fn check_poisson(&self) -> Verdict {
        let t = LieAlgebroid::tangent(self.chart());
        let s = schouten(&t, &self.bivector, &self.bivector).expect("tangent multivectors");
        if s.is_zero() {
            Verdict::Pass
        } else {
            Verdict::Fail(Witness::new("poisson", "[pi, pi]", t.format_section(&s)))
        }
    }

    pub fn format(&self) -> String {
        self.bivector
            .format(&vector_field::coordinate_names(self.chart()))
    }
}

/// Default names `xi1..xir` for fibre-linear coordinates on the dual.
pub fn default_fibre_names(rank: usize) -> Vec<String> {
    (1..=rank).map(|k| format!("xi{k}")).collect()
}

/// The linear Poisson structure on the dual bundle with default fibre
/// coordinate names.
pub fn dual_poisson(l: &LieAlgebroid) -> Result<PoissonChart> {
    dual_poisson_named(l, &default_fibre_names(l.rank()))
}

/// `{xi_a, xi_b} = sum c^g_{ab} xi_g`, `{xi_a, x^i} = a^i_a`, `{x^i, x^j} = 0`
/// on the chart `(x^i, xi_a)`.
pub fn dual_poisson_named(l: &LieAlgebroid, fibre: &[String]) -> Result<PoissonChart> {
    if fibre.len() != l.rank() {
        return Err(Error::Dimension("one fibre coordinate per frame is required".into()));
    }
    let chart = l.chart().extend(fibre)?;
    let n = l.chart().dim();
    let r = l.rank();
    let lift = |p: &Polynomial| p.to_chart(&chart).expect("base chart embeds");
    let mut entries = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            let mut v = Polynomial::zero(&chart);
            for (g, c) in l.structure(a, b).iter().enumerate() {
                v = &v + &(&lift(c) * &Polynomial::var_index(&chart, n + g));
            }
            entries.push((n + a, n + b, v));
        }
        for i in 0..n {
            entries.push((n + a, i, lift(&l.anchor(a)[i])));
        }
    }
    PoissonChart::new(&chart, entries)
}

/// Recovers the algebroid whose dual Poisson structure is `pi`. The chart of
/// `pi` must be `base` followed by one fibre-linear coordinate per frame.
pub fn algebroid_from_linear_poisson(
    pi: &PoissonChart,
    base: &ChartRef,
    frames: Vec<String>,
) -> Result<LieAlgebroid> {
    let chart = pi.chart();
    let n = base.dim();
    let r = frames.len();
    if chart.dim() != n + r || chart.names()[..n] != base.names()[..] {
        return Err(Error::Dimension(
            "Poisson chart must be the base chart followed by the fibre coordinates".into(),
        ));
    }
    let fibre: Vec<usize> = (n..n + r).collect();
    let down = |p: &Polynomial| -> Result<Polynomial> {
        if !p.free_of(&fibre) {
            return Err(Error::Schema(format!("`{p}` is not constant along the fibres")));
        }
        p.to_chart(base)
    };
    for i in 0..n {
        for j in i + 1..n {
            if !pi.pi(i, j).is_zero() {
                return Err(Error::Schema("base coordinates must Poisson-commute".into()));
            }
        }
    }
    let mut anchor = Vec::with_capacity(r);
    for a in 0..r {
        anchor.push((0..n).map(|i| down(&pi.pi(n + a, i))).collect::<Result<Vec<_>>>()?);
    }
    let mut brackets = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            let coeffs = pi.pi(n + a, n + b).split_linear(&fibre)?;
            brackets.push((a, b, coeffs.iter().map(down).collect::<Result<Vec<_>>>()?));
        }
    }
    LieAlgebroid::from_brackets(base, frames, anchor, brackets)
}

/// The cotangent algebroid of a Poisson chart: frames `dx^i`, anchor
/// `pi#(dx^i) = sum_j pi^{ij} d/dx^j`, bracket `[dx^i, dx^j] = d(pi^{ij})`.
pub fn cotangent_algebroid(p: &PoissonChart) -> Result<LieAlgebroid> {
    p.check_poisson().into_result()?;
    let chart = p.chart();
    let n = chart.dim();
    let frames = chart.names().iter().map(|x| format!("d{x}")).collect();
    let anchor = (0..n).map(|i| (0..n).map(|j| p.pi(i, j)).collect()).collect();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let pij = p.pi(i, j);
            brackets.push((i, j, (0..n).map(|k| pij.partial(k)).collect()));
        }
    }
    LieAlgebroid::from_brackets(chart, frames, anchor, brackets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::lie::check_algebroid;
    use crate::exact::parse_polynomial;

    #[test]
    fn cotangent_of_x_dx_dy() {
        let c = Chart::new(&["x", "y"]).unwrap();
        let x = parse_polynomial("x", &c).unwrap();
        let p = PoissonChart::new(&c, [(0, 1, x)]).unwrap();
        assert!(p.check_poisson().passed());
        let l = cotangent_algebroid(&p).unwrap();
        assert_eq!(l.format_section(&l.bracket_frames(0, 1)), "dx");
        assert_eq!(vector_field::format(&c, l.anchor(0)), "x * d/dy");
        assert_eq!(vector_field::format(&c, l.anchor(1)), "-x * d/dx");
        assert!(check_algebroid(&l).passed());
    }

    #[test]
    fn non_poisson_is_rejected() {
        let c = Chart::new(&["x", "y", "z"]).unwrap();
        let p = |s: &str| parse_polynomial(s, &c).unwrap();
        let pi = PoissonChart::new(&c, [(0, 1, p("y^2")), (1, 2, p("x"))]).unwrap();
        assert!(!pi.check_poisson().passed());
        assert!(matches!(cotangent_algebroid(&pi), Err(Error::Rejected { .. })));
    }

    #[test]
    fn dual_of_tangent_line_is_canonical() {
        let c = Chart::new(&["x"]).unwrap();
        let t = LieAlgebroid::tangent(&c);
        let pi = dual_poisson(&t).unwrap();
        assert_eq!(pi.chart().names(), &["x".to_string(), "xi1".to_string()]);
        assert_eq!(pi.pi(1, 0).to_string(), "1");
        let back = algebroid_from_linear_poisson(&pi, &c, t.frames().to_vec()).unwrap();
        assert_eq!(back, t);
    }
}
