//! Elements of the exterior algebra of a trivialized vector bundle with
//! polynomial coefficients. The same type stores multisections of A and
//! forms on A (multisections of A*); only the interpretation differs.

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::parse::{format_exterior, sort_with_sign};
use crate::exact::{ChartRef, Polynomial};

#[derive(Clone, PartialEq, Eq)]
pub struct Multivector {
    chart: ChartRef,
    rank: usize,
    degree: usize,
    comps: BTreeMap<Vec<usize>, Polynomial>,
}

pub type Multisection = Multivector;
pub type Form = Multivector;
/// A degree-one multivector.
pub type Section = Multivector;

impl Multivector {
    pub fn zero(chart: &ChartRef, rank: usize, degree: usize) -> Self {
        Multivector {
            chart: chart.clone(),
            rank,
            degree,
            comps: BTreeMap::new(),
        }
    }

    pub fn function(rank: usize, f: Polynomial) -> Self {
        let mut m = Multivector::zero(f.chart(), rank, 0);
        m.add_to(Vec::new(), f);
        m
    }

    pub fn frame(chart: &ChartRef, rank: usize, alpha: usize) -> Self {
        Multivector::frame_scaled(Polynomial::one(chart), rank, alpha)
    }

    /// `f * e_alpha`.
    pub fn frame_scaled(f: Polynomial, rank: usize, alpha: usize) -> Self {
        assert!(alpha < rank);
        let mut m = Multivector::zero(f.chart(), rank, 1);
        m.add_to(vec![alpha], f);
        m
    }

    /// A degree-one element from its dense coefficient vector.
    pub fn section(chart: &ChartRef, coeffs: Vec<Polynomial>) -> Self {
        let mut m = Multivector::zero(chart, coeffs.len(), 1);
        for (k, c) in coeffs.into_iter().enumerate() {
            m.add_to(vec![k], c);
        }
        m
    }

    /// Builds from arbitrary index words; words are antisymmetrized.
    pub fn from_words(
        chart: &ChartRef,
        rank: usize,
        degree: usize,
        words: impl IntoIterator<Item = (Vec<usize>, Polynomial)>,
    ) -> Self {
        let mut m = Multivector::zero(chart, rank, degree);
        for (w, c) in words {
            assert_eq!(w.len(), degree, "word length must equal the degree");
            m.add_word(&w, c);
        }
        m
    }

    pub fn chart(&self) -> &ChartRef {
        &self.chart
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial)> {
        self.comps.iter()
    }

    /// Component on a strictly increasing index list.
    pub fn get(&self, idx: &[usize]) -> Polynomial {
        self.comps
            .get(idx)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&self.chart))
    }

    /// Component on an arbitrary index word, with the antisymmetry sign.
    pub fn eval_word(&self, word: &[usize]) -> Polynomial {
        match sort_with_sign(word) {
            None => Polynomial::zero(&self.chart),
            Some((w, s)) => {
                let c = self.get(&w);
                if s < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// Dense coefficient vector of a degree-one element.
    pub fn coeffs(&self) -> Vec<Polynomial> {
        assert_eq!(self.degree, 1);
        (0..self.rank).map(|k| self.get(&[k])).collect()
    }

    /// The function of a degree-zero element.
    pub fn scalar(&self) -> Polynomial {
        assert_eq!(self.degree, 0);
        self.get(&[])
    }

    pub(crate) fn add_to(&mut self, idx: Vec<usize>, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        let sum = match self.comps.remove(&idx) {
            Some(e) => &e + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.comps.insert(idx, sum);
        }
    }

    pub(crate) fn add_word(&mut self, word: &[usize], c: Polynomial) {
        if let Some((w, s)) = sort_with_sign(word) {
            self.add_to(w, if s < 0 { -c } else { c });
        }
    }

    fn check_compatible(&self, other: &Multivector) {
        assert!(
            crate::exact::Chart::same(&self.chart, &other.chart) && self.rank == other.rank,
            "multivectors over different bundles"
        );
    }

    pub fn add(&self, other: &Multivector) -> Multivector {
        self.check_compatible(other);
        assert_eq!(self.degree, other.degree, "degree mismatch in sum");
        let mut out = self.clone();
        for (w, c) in &other.comps {
            out.add_to(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Multivector) -> Multivector {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Multivector {
        self.map(|c| -c)
    }

    pub fn mul_fn(&self, f: &Polynomial) -> Multivector {
        self.map(|c| c * f)
    }

    fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Multivector {
        let mut out = Multivector::zero(&self.chart, self.rank, self.degree);
        for (w, c) in &self.comps {
            out.add_to(w.clone(), f(c));
        }
        out
    }

    pub fn wedge(&self, other: &Multivector) -> Multivector {
        self.check_compatible(other);
        let mut out = Multivector::zero(&self.chart, self.rank, self.degree + other.degree);
        for (wa, ca) in &self.comps {
            for (wb, cb) in &other.comps {
                let mut w = wa.clone();
                w.extend(wb);
                out.add_word(&w, ca * cb);
            }
        }
        out
    }

    /// Applies `f` to every coefficient (for example a derivative or a
    /// change of chart).
    pub fn map_coeffs(&self, chart: &ChartRef, f: impl Fn(&Polynomial) -> Polynomial) -> Multivector {
        let mut out = Multivector::zero(chart, self.rank, self.degree);
        for (w, c) in &self.comps {
            out.add_to(w.clone(), f(c));
        }
        out
    }

    /// Relabels frame indices through `perm` (old index -> new index) with
    /// per-frame signs; used to compare bundles presented in different frame
    /// orders.
    pub fn reindex(&self, rank: usize, perm: &[usize], signs: &[i64]) -> Multivector {
        let mut out = Multivector::zero(&self.chart, rank, self.degree);
        for (w, c) in &self.comps {
            let nw: Vec<usize> = w.iter().map(|&i| perm[i]).collect();
            let s: i64 = w.iter().map(|&i| signs[i]).product();
            out.add_word(&nw, if s < 0 { -c } else { c.clone() });
        }
        out
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.degree == 0 {
            return self.get(&[]).to_string();
        }
        format_exterior(&self.comps, names)
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.rank).map(|i| format!("e{i}")).collect();
        write!(f, "{}", self.format(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_polynomial, Chart};

    #[test]
    fn wedge_signs() {
        let c = Chart::point();
        let e = |i| Multivector::frame(&c, 3, i);
        let w = e(1).wedge(&e(0));
        assert_eq!(w.get(&[0, 1]).to_string(), "-1");
        assert!(e(2).wedge(&e(2)).is_zero());
        let t = e(0).wedge(&e(1)).wedge(&e(2));
        assert_eq!(t, e(2).wedge(&e(0)).wedge(&e(1)));
        assert_eq!(t, e(1).wedge(&e(0)).wedge(&e(2)).neg());
    }

    #[test]
    fn eval_word_antisymmetry() {
        let c = Chart::new(&["x"]).unwrap();
        let x = parse_polynomial("x", &c).unwrap();
        let m = Multivector::from_words(&c, 2, 2, [(vec![1, 0], x.clone())]);
        assert_eq!(m.eval_word(&[0, 1]), -x.clone());
        assert_eq!(m.eval_word(&[1, 0]), x);
        assert!(m.eval_word(&[1, 1]).is_zero());
    }
}
