mod common;

use doublealg::dvb::{evaluate_core_dual, is_nondegenerate, pair, pair_via, r_identity_defect, r_map, random_vector, z_iso, Leg, ZMap};
use doublealg::exact::random::rng;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

use common::{random_dual_pair, random_r_instance};

fn config(seed: u64) -> ProptestConfig {
    ProptestConfig {
        cases: 200,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(21))]
    #[test]
    fn pairing_ignores_the_core_choice(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (d, phi, psi) = random_dual_pair(&mut r, 4);
        let c = random_vector(&mut r, d.core().rank());
        prop_assert_eq!(pair_via(&phi, &psi, &c).unwrap(), pair(&phi, &psi).unwrap());
    }

    #[test]
    fn fibre_pairing_is_nondegenerate(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (d, phi, _) = random_dual_pair(&mut r, 4);
        prop_assert!(is_nondegenerate(&d, &vec![], &phi.kappa).unwrap());
    }

    #[test]
    fn z_maps_realize_the_pairing(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (_, phi, psi) = random_dual_pair(&mut r, 4);
        let p = pair(&phi, &psi).unwrap();
        let za = z_iso(&phi, ZMap::ZA).unwrap();
        let zb = z_iso(&psi, ZMap::ZB).unwrap();
        prop_assert_eq!(za.dual_of, Leg::B);
        prop_assert_eq!(&za.kappa, &phi.kappa);
        prop_assert_eq!(zb.dual_of, Leg::A);
        prop_assert_eq!(&zb.kappa, &psi.kappa);
        prop_assert_eq!(&zb.side, &psi.side);
        prop_assert_eq!(evaluate_core_dual(&za, &psi).unwrap(), p.clone());
        prop_assert_eq!(evaluate_core_dual(&zb, &phi).unwrap(), p);
    }

    #[test]
    fn r_identity_holds(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (f, x, xi) = random_r_instance(&mut r);
        prop_assert!(r_identity_defect(&f, &x, &xi).unwrap().is_zero());
        prop_assert_eq!(r_map(&r_map(&f)), f);
    }
}
