use crate::algebroid::calculus::{differential, schouten};
use crate::algebroid::lie::LieAlgebroid;
use crate::algebroid::multivector::{Multivector, Section};
use crate::error::{Error, Result};
use crate::exact::random::{self, OracleOptions};
use crate::exact::{Chart, Polynomial};
use crate::verdict::{Verdict, Witness};

/// Defect of `d_*[X,Y] = [d_*X, Y] + [X, d_*Y]`, where `d_*` is the
/// differential of `lstar` acting on multisections of `l`.
pub fn bialgebroid_defect(l: &LieAlgebroid, lstar: &LieAlgebroid, x: &Section, y: &Section) -> Result<Multivector> {
    let lhs = differential(lstar, &schouten(l, x, y)?)?;
    let r1 = schouten(l, &differential(lstar, x)?, y)?;
    let r2 = schouten(l, x, &differential(lstar, y)?)?;
    Ok(lhs.sub(&r1).sub(&r2))
}

pub fn check_bialgebroid(l: &LieAlgebroid, lstar: &LieAlgebroid) -> Result<Verdict> {
    check_bialgebroid_with(l, lstar, &OracleOptions::default())
}

/// Checks the compatibility condition on all frame pairs, on every pair
/// `(e_a, x^i e_b)` and `(x^j e_a, x^i e_b)` of coordinate-scaled frames,
/// and on seeded random sections. The defect is a derivation in each
/// function factor, so the scaled pairs determine it.
pub fn check_bialgebroid_with(l: &LieAlgebroid, lstar: &LieAlgebroid, opts: &OracleOptions) -> Result<Verdict> {
    Chart::ensure_same(l.chart(), lstar.chart())?;
    if l.rank() != lstar.rank() {
        return Err(Error::Dimension(format!(
            "dual pair of ranks {} and {}",
            l.rank(),
            lstar.rank()
        )));
    }
    let chart = l.chart();
    let r = l.rank();
    let fail = |loc: String, d: &Multivector| {
        Ok(Verdict::Fail(Witness::new("bialgebroid", loc, l.format_section(d))))
    };
    for a in 0..r {
        for b in a + 1..r {
            let d = bialgebroid_defect(l, lstar, &l.frame(a), &l.frame(b))?;
            if !d.is_zero() {
                return fail(format!("({}, {})", l.frames()[a], l.frames()[b]), &d);
            }
        }
    }
    for a in 0..r {
        for b in 0..r {
            for i in 0..chart.dim() {
                let xi = Polynomial::var_index(chart, i);
                let y = Multivector::frame_scaled(xi, r, b);
                let d = bialgebroid_defect(l, lstar, &l.frame(a), &y)?;
                if !d.is_zero() {
                    return fail(
                        format!("({}, {} * {})", l.frames()[a], chart.name(i), l.frames()[b]),
                        &d,
                    );
                }
            }
        }
    }
    for a in 0..r {
        for b in a..r {
            for j in 0..chart.dim() {
                for i in 0..chart.dim() {
                    if a == b && j >= i {
                        continue;
                    }
                    let x = Multivector::frame_scaled(Polynomial::var_index(chart, j), r, a);
                    let y = Multivector::frame_scaled(Polynomial::var_index(chart, i), r, b);
                    let d = bialgebroid_defect(l, lstar, &x, &y)?;
                    if !d.is_zero() {
                        return fail(
                            format!(
                                "({} * {}, {} * {})",
                                chart.name(j),
                                l.frames()[a],
                                chart.name(i),
                                l.frames()[b]
                            ),
                            &d,
                        );
                    }
                }
            }
        }
    }
    if chart.dim() > 0 {
        let mut rng = random::rng(opts.seed);
        for k in 0..opts.samples {
            let mut section = || {
                Multivector::section(
                    chart,
                    (0..r)
                        .map(|_| random::polynomial(&mut rng, chart, opts.max_degree, 3))
                        .collect(),
                )
            };
            let x = section();
            let y = section();
            let d = bialgebroid_defect(l, lstar, &x, &y)?;
            if !d.is_zero() {
                return fail(
                    format!(
                        "random sample {k} ({}, {})",
                        l.format_section(&x),
                        l.format_section(&y)
                    ),
                    &d,
                );
            }
        }
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::poisson::{cotangent_algebroid, PoissonChart};
    use crate::exact::parse_polynomial;

    #[test]
    fn abelian_pair() {
        let c = Chart::point();
        let l = LieAlgebroid::abelian(&c, vec!["e1".into(), "e2".into()]).unwrap();
        assert!(check_bialgebroid(&l, &l).unwrap().passed());
    }

    #[test]
    fn tangent_and_poisson_cotangent() {
        let c = Chart::new(&["x", "y"]).unwrap();
        let x = parse_polynomial("x", &c).unwrap();
        let p = PoissonChart::new(&c, [(0, 1, x)]).unwrap();
        let t = LieAlgebroid::tangent(&c);
        let cot = cotangent_algebroid(&p).unwrap();
        assert!(check_bialgebroid(&t, &cot).unwrap().passed());
        assert!(check_bialgebroid(&cot, &t).unwrap().passed());
    }
}
