mod common;

use doublealg::algebroid::{differential, schouten, Multivector};
use doublealg::exact::random::rng;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::Rng;

use common::{random_algebroid, random_multivector, random_polynomial};

fn config(seed: u64) -> ProptestConfig {
    ProptestConfig {
        cases: 200,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn scale(p: &Multivector, s: i64) -> Multivector {
    if s < 0 {
        p.neg()
    } else {
        p.clone()
    }
}

proptest! {
    #![proptest_config(config(11))]
    #[test]
    fn differential_squares_to_zero(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_algebroid(&mut r, 2);
        let k = r.gen_range(0..=l.rank().saturating_sub(2));
        let w = random_multivector(&mut r, l.chart(), l.rank(), k, 2);
        let dd = differential(&l, &differential(&l, &w).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
    }
}

proptest! {
    #![proptest_config(config(12))]
    #[test]
    fn schouten_is_graded_antisymmetric(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_algebroid(&mut r, 2);
        let n = l.rank();
        let (p, q) = (r.gen_range(0..=n.min(2)), r.gen_range(0..=n.min(2)));
        let a = random_multivector(&mut r, l.chart(), n, p, 2);
        let b = random_multivector(&mut r, l.chart(), n, q, 2);
        let ab = schouten(&l, &a, &b).unwrap();
        let ba = schouten(&l, &b, &a).unwrap();
        // [P, Q] = -(-1)^{(p-1)(q-1)} [Q, P]
        let s = -sign((p + 1) * (q + 1));
        prop_assert_eq!(ab, scale(&ba, s));
    }
}

proptest! {
    #![proptest_config(config(13))]
    #[test]
    fn schouten_satisfies_graded_jacobi(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_algebroid(&mut r, 1);
        let n = l.rank();
        // total degree at most four, at most one function, so that no
        // bracket of two functions appears
        let degs = loop {
            let d: [usize; 3] = std::array::from_fn(|_| r.gen_range(0..=n.min(2)));
            if d.iter().sum::<usize>() <= 4 && d.iter().filter(|&&x| x == 0).count() <= 1 {
                break d;
            }
        };
        let [p, q, _] = degs;
        let a = random_multivector(&mut r, l.chart(), n, degs[0], 1);
        let b = random_multivector(&mut r, l.chart(), n, degs[1], 1);
        let c = random_multivector(&mut r, l.chart(), n, degs[2], 1);
        let s = |x: &Multivector, y: &Multivector| schouten(&l, x, y).unwrap();
        // [P,[Q,R]] = [[P,Q],R] + (-1)^{(p-1)(q-1)} [Q,[P,R]]
        let lhs = s(&a, &s(&b, &c));
        let rhs = s(&s(&a, &b), &c).add(&scale(&s(&b, &s(&a, &c)), sign((p + 1) * (q + 1))));
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(config(14))]
    #[test]
    fn partial_derivatives_commute(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_polynomial(&mut r, 3);
        let n = f.chart().dim();
        let (i, j) = (r.gen_range(0..n), r.gen_range(0..n));
        prop_assert_eq!(f.partial(i).partial(j), f.partial(j).partial(i));
    }
}
