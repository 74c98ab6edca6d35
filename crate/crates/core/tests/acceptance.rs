//! One PASS/FAIL line per acceptance criterion. Every comparison is exact.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use doublealg::algebroid::{check_bialgebroid, differential, schouten, LieAlgebroid, Multivector};
use doublealg::catalog;
use doublealg::doublela::{
    build_cotangent_double, check_double, diagonal_structure, matched_from_vacant, structural_diagnostics,
    vacant_from_matched_unchecked, DoubleLieAlgebroid,
};
use doublealg::dvb::{
    evaluate_core_dual, is_nondegenerate, pair, pair_via, r_identity_defect, r_map, random_vector, z_iso,
    VectorBundle, ZMap,
};
use doublealg::exact::random::rng;
use doublealg::exact::Chart;
use doublealg::lavb::{induced_dual_algebroid, induced_via_poisson, LAVBundle};
use doublealg::liealg::{check_cocycle, check_manin, drinfeld_double};
use doublealg::matched::{check_cor_sdp, check_matched};
use doublealg::Error;
use rand::Rng;

use common::{random_algebroid, random_dual_pair, random_multivector, random_polynomial, random_r_instance};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dvb_pairing() -> Outcome {
    let mut r = rng(101);
    for i in 0..50 {
        let (d, phi, psi) = random_dual_pair(&mut r, 4);
        let c = random_vector(&mut r, d.core().rank());
        let p = pair(&phi, &psi).map_err(|e| e.to_string())?;
        ensure(pair_via(&phi, &psi, &c).unwrap() == p, || format!("bundle {i}: pairing depends on c"))?;
        ensure(is_nondegenerate(&d, &vec![], &phi.kappa).unwrap(), || format!("bundle {i}: degenerate"))?;
    }
    Ok("50 bundles, ranks <= 4".into())
}

fn z_and_r() -> Outcome {
    let mut r = rng(102);
    for i in 0..100 {
        let (_, phi, psi) = random_dual_pair(&mut r, 4);
        let p = pair(&phi, &psi).unwrap();
        let za = z_iso(&phi, ZMap::ZA).unwrap();
        let zb = z_iso(&psi, ZMap::ZB).unwrap();
        let neg = |v: &[doublealg::exact::Rational]| v.iter().map(|x| -x).collect::<Vec<_>>();
        ensure(za.kappa == phi.kappa && za.side == neg(&phi.side) && za.core == phi.covector, || {
            format!("instance {i}: Z_A components")
        })?;
        ensure(zb.kappa == psi.kappa && zb.side == psi.side && zb.core == neg(&psi.covector), || {
            format!("instance {i}: Z_B components")
        })?;
        ensure(evaluate_core_dual(&za, &psi).unwrap() == p, || format!("instance {i}: <Z_A(X), Y>"))?;
        ensure(evaluate_core_dual(&zb, &phi).unwrap() == p, || format!("instance {i}: <Z_B(Y), X>"))?;

        let (f, x, xi) = random_r_instance(&mut r);
        let rf = r_map(&f);
        ensure(rf.a == f.b && rf.b == f.a && rf.c == neg(&f.c), || format!("instance {i}: R components"))?;
        let defect = r_identity_defect(&f, &x, &xi).unwrap();
        ensure(defect.is_zero(), || format!("instance {i}: R identity defect {defect}"))?;
    }
    Ok("100 instances".into())
}

fn bundle(frames: &[&str], coords: &[&str]) -> VectorBundle {
    VectorBundle::new(
        frames.iter().map(|s| s.to_string()).collect(),
        coords.iter().map(|s| s.to_string()).collect(),
    )
    .unwrap()
}

fn tangent_dual() -> Outcome {
    let c = Chart::new(&["x"]).unwrap();
    let v = LAVBundle::tangent_double(&c, bundle(&["e"], &["u"]), bundle(&["kappa"], &["w"])).unwrap();
    let induced = induced_dual_algebroid(&v).map_err(|e| e.to_string())?;
    let via = induced_via_poisson(&v).map_err(|e| e.to_string())?;
    ensure(via == induced, || "Poisson route differs from the generator route".into())?;
    let tangent = LieAlgebroid::tangent(induced.chart());
    // first frame -> -d/dkappa, second frame d/dx -> d/dx
    let mapped = induced.reframe(tangent.frames().to_vec(), &[1, 0], &[-1, 1]).unwrap();
    ensure(mapped.same_structure(&tangent), || {
        format!("induced frames {:?} on {:?} do not match the tangent algebroid", induced.frames(), induced.chart().names())
    })?;
    Ok(format!("frames {:?} on {:?}", induced.frames(), induced.chart().names()))
}

fn drinfeld() -> Outcome {
    for (name, b) in [("solvable", catalog::solvable_bialgebra()), ("abelian", catalog::abelian_bialgebra(2))] {
        let d = drinfeld_double(&b).map_err(|e| format!("{name}: {e}"))?;
        ensure(d.algebra.check_jacobi().passed(), || format!("{name}: Jacobi fails"))?;
        let m = check_manin(&d);
        ensure(m.passed(), || format!("{name}: {m}"))?;
    }
    let bad = catalog::non_cocycle_bialgebra();
    ensure(check_cocycle(&bad).witness().is_some(), || "non-cocycle accepted".into())?;
    match drinfeld_double(&bad) {
        Err(Error::Rejected { witness }) => Ok(format!("non-cocycle rejected at {}", witness.location)),
        Err(e) => Err(format!("non-cocycle: unexpected error {e}")),
        Ok(_) => Err("non-cocycle produced a double".into()),
    }
}

fn cotangent_doubles() -> Outcome {
    let good = catalog::bialgebroids();
    let broken = catalog::broken_bialgebroids();
    for (name, l, ls) in &good {
        ensure(check_bialgebroid(l, ls).unwrap().passed(), || format!("{name}: not a bialgebroid"))?;
    }
    for (name, l, ls) in good.iter().chain(&broken) {
        let expected = check_bialgebroid(l, ls).unwrap().passed();
        let r = check_double(&build_cotangent_double(l, ls).unwrap()).unwrap();
        ensure(r.passed() == expected, || format!("{name}: double {} vs bialgebroid {expected}", r.passed()))?;
    }
    ensure(broken.iter().all(|(_, l, ls)| !check_bialgebroid(l, ls).unwrap().passed()), || {
        "a broken pair passes".into()
    })?;
    Ok(format!("{} bialgebroids, {} broken pairs", good.len(), broken.len()))
}

fn matched_vacant() -> Outcome {
    let pairs = catalog::matched_pairs();
    for (name, mp, expected) in &pairs {
        let m = check_matched(mp).passed();
        let dla = vacant_from_matched_unchecked(mp).unwrap();
        let v = check_double(&dla).unwrap().passed();
        let s = check_cor_sdp(mp).unwrap().passed();
        ensure(m == *expected && v == m && s == m, || {
            format!("{name}: matched {m}, vacant {v}, semidirects {s}, expected {expected}")
        })?;
        ensure(&matched_from_vacant(&dla).unwrap() == mp, || format!("{name}: round trip"))?;
    }
    Ok(format!("{} matched pairs", pairs.len()))
}

fn diagonal() -> Outcome {
    for (name, b) in [("solvable", catalog::solvable_bialgebra()), ("extended", catalog::extended_bialgebra())] {
        let (l, ls) = catalog::bialgebra_algebroids(&b).unwrap();
        let diag = diagonal_structure(&build_cotangent_double(&l, &ls).unwrap()).unwrap();
        let d = drinfeld_double(&b).unwrap().algebra.to_algebroid();
        ensure(diag.same_structure(&d), || format!("{name}: diagonal differs from the Drinfeld double"))?;
    }
    Ok("solvable, extended".into())
}

fn diagnostics() -> Outcome {
    let mut doubles: Vec<(String, DoubleLieAlgebroid)> = vec![
        ("T2 line".into(), DoubleLieAlgebroid::tangent_square_default(&Chart::new(&["x"]).unwrap()).unwrap()),
        ("T2 plane".into(), DoubleLieAlgebroid::tangent_square_default(&catalog::plane()).unwrap()),
    ];
    for (name, l, ls) in catalog::bialgebroids() {
        doubles.push((format!("cotangent {name}"), build_cotangent_double(&l, &ls).unwrap()));
    }
    for (name, mp, ok) in catalog::matched_pairs() {
        if ok {
            doubles.push((format!("vacant {name}"), vacant_from_matched_unchecked(&mp).unwrap()));
        }
    }
    for (name, d) in &doubles {
        ensure(check_double(d).unwrap().passed(), || format!("{name}: check_double fails"))?;
        let r = structural_diagnostics(d).unwrap();
        if let Some(f) = r.failure() {
            return Err(format!("{name}: {} {}", f.id, f.verdict));
        }
    }
    Ok(format!("{} doubles", doubles.len()))
}

fn calculus() -> Outcome {
    let mut r = rng(109);
    for i in 0..200 {
        let l = random_algebroid(&mut r, 2);
        let n = l.rank();
        let k = r.gen_range(0..=n.saturating_sub(2));
        let w = random_multivector(&mut r, l.chart(), n, k, 2);
        let dd = differential(&l, &differential(&l, &w).unwrap()).unwrap();
        ensure(dd.is_zero(), || format!("instance {i}: d^2 != 0"))?;
    }
    let sign = |p: &Multivector, k: usize| if k % 2 == 0 { p.clone() } else { p.neg() };
    for i in 0..200 {
        let l = random_algebroid(&mut r, 1);
        let n = l.rank();
        let degs = loop {
            let d: [usize; 3] = std::array::from_fn(|_| r.gen_range(0..=n.min(2)));
            if d.iter().sum::<usize>() <= 4 && d.iter().filter(|&&x| x == 0).count() <= 1 {
                break d;
            }
        };
        let [p, q, _] = degs;
        let m: Vec<Multivector> = degs.iter().map(|&d| random_multivector(&mut r, l.chart(), n, d, 1)).collect();
        let s = |x: &Multivector, y: &Multivector| schouten(&l, x, y).unwrap();
        let lhs = s(&m[0], &s(&m[1], &m[2]));
        let rhs = s(&s(&m[0], &m[1]), &m[2]).add(&sign(&s(&m[1], &s(&m[0], &m[2])), (p + 1) * (q + 1)));
        ensure(lhs == rhs, || format!("instance {i}: graded Jacobi, degrees {degs:?}"))?;
        let anti = sign(&s(&m[1], &m[0]), (p + 1) * (q + 1) + 1);
        ensure(s(&m[0], &m[1]) == anti, || format!("instance {i}: graded antisymmetry"))?;
    }
    for i in 0..200 {
        let f = random_polynomial(&mut r, 3);
        let n = f.chart().dim();
        let (a, b) = (r.gen_range(0..n), r.gen_range(0..n));
        ensure(f.partial(a).partial(b) == f.partial(b).partial(a), || format!("instance {i}: mixed partials"))?;
    }
    Ok("200 instances per identity".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("dvb pairing independent of the core and nondegenerate", dvb_pairing),
        ("Z maps and R identity", z_and_r),
        ("dual of the tangent double is a tangent algebroid", tangent_dual),
        ("Drinfeld doubles are Manin triples", drinfeld),
        ("cotangent double checks agree with bialgebroid checks", cotangent_doubles),
        ("matched pairs, vacant doubles and semidirects agree", matched_vacant),
        ("diagonal of a bialgebra double is the Drinfeld double", diagonal),
        ("structural diagnostics on passing doubles", diagnostics),
        ("calculus identities", calculus),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
