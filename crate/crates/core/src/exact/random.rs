//! Seeded generators for property-oracle instances.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::exact::chart::ChartRef;
use crate::exact::polynomial::{Monomial, Polynomial};
use crate::exact::rational::Rational;

pub type OracleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> OracleRng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// Default cap on the total degree of random coefficient polynomials,
/// overridable with `DOUBLEALG_MAX_DEGREE`.
pub fn max_degree_from_env() -> u32 {
    std::env::var("DOUBLEALG_MAX_DEGREE")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(2)
}

pub fn rational(rng: &mut OracleRng, bound: i64) -> Rational {
    let n = rng.gen_range(-bound..=bound);
    let d = if rng.gen_bool(0.25) { rng.gen_range(1..=3) } else { 1 };
    Rational::new(n, d)
}

/// A sparse random polynomial with at most `max_terms` terms of total
/// degree at most `max_degree`.
pub fn polynomial(
    rng: &mut OracleRng,
    chart: &ChartRef,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    let n = chart.dim();
    let count = rng.gen_range(0..=max_terms);
    let mut terms = Vec::with_capacity(count);
    for _ in 0..count {
        let mut exps = vec![0u32; n];
        let deg = if n == 0 { 0 } else { rng.gen_range(0..=max_degree) };
        for _ in 0..deg {
            exps[rng.gen_range(0..n)] += 1;
        }
        terms.push((Monomial(exps), rational(rng, 3)));
    }
    Polynomial::from_terms(chart, terms)
}

/// Controls the randomized part of checks that go beyond generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub seed: u64,
    pub samples: usize,
    pub max_degree: u32,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            seed: 0,
            samples: 3,
            max_degree: 2,
        }
    }
}

impl OracleOptions {
    pub fn from_env(seed: u64) -> Self {
        OracleOptions {
            seed,
            max_degree: max_degree_from_env(),
            ..OracleOptions::default()
        }
    }
}
