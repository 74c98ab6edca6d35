//! Seeded generators shared by the property suites and the acceptance run.
#![allow(dead_code)]

use doublealg::algebroid::calculus::combinations;
use doublealg::algebroid::{cotangent_algebroid, dual_poisson, LieAlgebroid, Multivector, PoissonChart};
use doublealg::dvb::{random_dvb, random_vector, DVBElement, DecomposedDVB, DualDVBElement, TangentElement};
use doublealg::exact::random::{polynomial, rational, OracleRng};
use doublealg::exact::{Chart, ChartRef, Polynomial, Rational};
use doublealg::liealg::LieAlgebra;
use rand::Rng;

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// `R ⋉ R^2` with `ad(e1)` a random 2x2 matrix; Jacobi holds for every matrix.
pub fn random_semidirect_algebra(rng: &mut OracleRng) -> LieAlgebra {
    let m: Vec<Rational> = (0..4).map(|_| rational(rng, 3)).collect();
    let z = Rational::zero();
    LieAlgebra::from_brackets(
        names("e", 3),
        [
            (0, 1, vec![z.clone(), m[0].clone(), m[1].clone()]),
            (0, 2, vec![z.clone(), m[2].clone(), m[3].clone()]),
        ],
    )
    .unwrap()
}

/// A Lie algebroid drawn from families that are valid by construction:
/// tangent bundles, `T*M` for `pi = f d/dx ^ d/dy`, 2- and 3-dim Lie
/// algebras, and `T*(g*)` for a linear Poisson structure.
pub fn random_algebroid(rng: &mut OracleRng, max_degree: u32) -> LieAlgebroid {
    match rng.gen_range(0..5) {
        0 => {
            let n = rng.gen_range(1..=3);
            LieAlgebroid::tangent(&Chart::new(&names("x", n)).unwrap())
        }
        1 => {
            let c = Chart::new(&["x", "y"]).unwrap();
            let f = polynomial(rng, &c, max_degree, 3);
            cotangent_algebroid(&PoissonChart::new(&c, [(0, 1, f)]).unwrap()).unwrap()
        }
        2 => {
            let (a, b) = (rational(rng, 3), rational(rng, 3));
            LieAlgebra::from_brackets(names("e", 2), [(0, 1, vec![a, b])]).unwrap().to_algebroid()
        }
        3 => random_semidirect_algebra(rng).to_algebroid(),
        _ => {
            let g = random_semidirect_algebra(rng).to_algebroid();
            cotangent_algebroid(&dual_poisson(&g).unwrap()).unwrap()
        }
    }
}

pub fn random_multivector(rng: &mut OracleRng, chart: &ChartRef, rank: usize, degree: usize, max_degree: u32) -> Multivector {
    let mut words = Vec::new();
    for w in combinations(rank, degree) {
        if rng.gen_bool(0.7) {
            words.push((w, polynomial(rng, chart, max_degree, 2)));
        }
    }
    Multivector::from_words(chart, rank, degree, words)
}

pub fn random_polynomial(rng: &mut OracleRng, max_degree: u32) -> Polynomial {
    let n = rng.gen_range(1..=3);
    let c = Chart::new(&names("x", n)).unwrap();
    polynomial(rng, &c, max_degree + 1, 4)
}

/// A decomposed bundle over a point and a pair `(Phi over A, Psi over B)`
/// with a shared `kappa`.
pub fn random_dual_pair(rng: &mut OracleRng, max_rank: usize) -> (DecomposedDVB, DualDVBElement, DualDVBElement) {
    let d = random_dvb(rng, max_rank);
    let (ra, rb, rc) = (d.a().rank(), d.b().rank(), d.core().rank());
    let kappa = random_vector(rng, rc);
    let phi = DualDVBElement::over_a(vec![], random_vector(rng, ra), random_vector(rng, rb), kappa.clone());
    let psi = DualDVBElement::over_b(vec![], random_vector(rng, rb), random_vector(rng, ra), kappa);
    (d, phi, psi)
}

/// `F` in the cotangent double of a rank-`k` bundle over an `n`-dim base,
/// with `X` tangent to `A*` at the foot of `F` and `xi` tangent to `A`
/// over the same base vector.
pub fn random_r_instance(rng: &mut OracleRng) -> (DVBElement, TangentElement, TangentElement) {
    let (n, k) = (rng.gen_range(0..=3), rng.gen_range(0..=4));
    let m = random_vector(rng, n);
    let dm = random_vector(rng, n);
    let f = DVBElement {
        m: m.clone(),
        a: random_vector(rng, k),
        b: random_vector(rng, k),
        c: random_vector(rng, n),
    };
    let x = TangentElement {
        m: m.clone(),
        point: f.a.clone(),
        dm: dm.clone(),
        dpoint: random_vector(rng, k),
    };
    let xi = TangentElement {
        m,
        point: f.b.clone(),
        dm,
        dpoint: random_vector(rng, k),
    };
    (f, x, xi)
}
