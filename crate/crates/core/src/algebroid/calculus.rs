//! Cartan differential and Schouten bracket of a Lie algebroid.

use crate::algebroid::lie::LieAlgebroid;
use crate::algebroid::multivector::{Form, Multisection, Multivector};
use crate::error::Result;

/// All strictly increasing index lists of length `k` from `0..n`.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The Lie algebroid differential on forms (sections of the exterior
/// powers of the dual bundle), by the Cartan formula on frames.
pub fn differential(l: &LieAlgebroid, omega: &Form) -> Result<Form> {
    l.check_section(omega, None)?;
    let k = omega.degree();
    let r = l.rank();
    let mut out = Multivector::zero(l.chart(), r, k + 1);
    for idx in combinations(r, k + 1) {
        for p in 0..=k {
            let mut rest = idx.clone();
            let ip = rest.remove(p);
            let v = l.act(ip, &omega.eval_word(&rest));
            out.add_to(idx.clone(), if sign(p) < 0 { -v } else { v });
        }
        for p in 0..=k {
            for q in p + 1..=k {
                let rest: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != p && t != q)
                    .map(|(_, &i)| i)
                    .collect();
                let c = l.structure(idx[p], idx[q]);
                for (g, cg) in c.iter().enumerate() {
                    if cg.is_zero() {
                        continue;
                    }
                    let mut word = vec![g];
                    word.extend(&rest);
                    let v = cg * &omega.eval_word(&word);
                    out.add_to(idx.clone(), if sign(p + q) < 0 { -v } else { v });
                }
            }
        }
    }
    Ok(out)
}

/// `[e_j, P]`: the degree-preserving derivation extending `a(e_j)` on
/// functions and the bracket on frames.
pub fn ad_frame(l: &LieAlgebroid, j: usize, p: &Multisection) -> Multisection {
    let mut out = Multivector::zero(l.chart(), l.rank(), p.degree());
    for (idx, f) in p.components() {
        out.add_to(idx.clone(), l.act(j, f));
        for (k, &ik) in idx.iter().enumerate() {
            for (m, c) in l.structure(j, ik).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut word = idx.clone();
                word[k] = m;
                out.add_word(&word, f * c);
            }
        }
    }
    out
}

/// `[g, P]` for a function `g`: lowers degree by one, with `[g, e_i] = -a(e_i)(g)`.
pub fn ad_function(l: &LieAlgebroid, g: &crate::exact::Polynomial, p: &Multisection) -> Multisection {
    if p.degree() == 0 {
        return Multivector::zero(l.chart(), l.rank(), 0);
    }
    let mut out = Multivector::zero(l.chart(), l.rank(), p.degree() - 1);
    for (idx, f) in p.components() {
        for (k, &ik) in idx.iter().enumerate() {
            let mut rest = idx.clone();
            rest.remove(k);
            let v = f * &l.act(ik, g);
            // (-1)^k from moving past k factors, times the minus in [g, e_i].
            out.add_to(rest, if sign(k) > 0 { -v } else { v });
        }
    }
    out
}

/// The Schouten bracket of multisections, of degree `p + q - 1`.
pub fn schouten(l: &LieAlgebroid, p: &Multisection, q: &Multisection) -> Result<Multisection> {
    l.check_section(p, None)?;
    l.check_section(q, None)?;
    let (dp, dq) = (p.degree(), q.degree());
    if dp + dq == 0 {
        return Ok(Multivector::zero(l.chart(), l.rank(), 0));
    }
    let r = l.rank();
    let mut out = Multivector::zero(l.chart(), r, dp + dq - 1);
    let mut p_with_frame = Vec::with_capacity(r);
    for j in 0..r {
        // [P, e_j] = -[e_j, P]
        p_with_frame.push(ad_frame(l, j, p).neg());
    }
    for (jdx, g) in q.components() {
        // [P, g] e_J, with [P, g] = (-1)^p [g, P].
        if dp > 0 {
            let pg = ad_function(l, g, p);
            let pg = if dp % 2 == 1 { pg.neg() } else { pg };
            for (idx, c) in pg.components() {
                let mut word = idx.clone();
                word.extend(jdx);
                out.add_word(&word, c.clone());
            }
        }
        // g * sum_k (-1)^{(p-1)k} e_{j_0..j_{k-1}} [P, e_{j_k}] e_{j_{k+1}..}
        for (k, &jk) in jdx.iter().enumerate() {
            let s = if dp == 0 { sign(k) } else { sign((dp - 1) * k) };
            for (idx, c) in p_with_frame[jk].components() {
                let mut word = jdx[..k].to_vec();
                word.extend(idx);
                word.extend(&jdx[k + 1..]);
                let v = g * c;
                out.add_word(&word, if s < 0 { -v } else { v });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_polynomial, Chart, Polynomial};

    #[test]
    fn de_rham_example() {
        let c = Chart::new(&["x", "y"]).unwrap();
        let t = LieAlgebroid::tangent(&c);
        let x = parse_polynomial("x", &c).unwrap();
        let x_dy = Multivector::frame_scaled(x, 2, 1);
        let d = differential(&t, &x_dy).unwrap();
        assert_eq!(d.get(&[0, 1]).to_string(), "1");
        assert_eq!(d.degree(), 2);
    }

    #[test]
    fn constant_function_is_closed() {
        let c = Chart::point();
        let l = LieAlgebroid::abelian(&c, vec!["e1".into()]).unwrap();
        let f = Multivector::function(1, Polynomial::int(&c, 5));
        assert!(differential(&l, &f).unwrap().is_zero());
    }

    #[test]
    fn schouten_extends_anchor_and_bracket() {
        let c = Chart::new(&["x"]).unwrap();
        let t = LieAlgebroid::tangent(&c);
        let x2 = parse_polynomial("x^2", &c).unwrap();
        let f = Multivector::function(1, x2);
        let b = schouten(&t, &t.frame(0), &f).unwrap();
        assert_eq!(b.scalar().to_string(), "2 * x");
        let b = schouten(&t, &f, &t.frame(0)).unwrap();
        assert_eq!(b.scalar().to_string(), "-2 * x");
    }

    #[test]
    fn combinations_in_order() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(1, 2).is_empty());
    }
}
