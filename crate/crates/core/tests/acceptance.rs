//! Acceptance criteria, one PASS/FAIL line each. Every random instance comes
//! from a ChaCha generator with a fixed seed per criterion.

mod common;

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use cubic_bundles::cubic_bundle::{
    collinear_test, cubic_form, cubic_residual, gamma_at, group_multiple, osculating_points,
    osculating_sections_near_cusp, GmPoint, PlanePoint,
};
use cubic_bundles::exact_field::{CurvePoint, Moebius, Order, Polynomial, ProjValue, Scalar};
use cubic_bundles::pipeline::{construct_bundle, recover_construction};
use cubic_bundles::projectivity::{
    decide_projective, normalize_configuration, q_cartier_reduce, verify_ab_decomposition, ConstructionInput,
};
use cubic_bundles::ruled_surface::{
    elt_composite, elt_composite_scheduled, intersection_multiplicity, recover_divisor, roundtrip_verify, CurveDivisor,
    EltData, Section,
};
use rand::Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, &'static str, u64, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ac1() -> Check {
    let mut rng = common::rng(1);
    for i in 0..100 {
        let a = common::admissible(&mut rng, 0);
        let ok = roundtrip_verify(&a.data, &a.tracked).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(ok, || format!("instance {i} does not round-trip: {:?}", a.data))?;
    }
    Ok("100 admissible instances round-trip".into())
}

fn ac2() -> Check {
    let mut rng = common::rng(2);
    for i in 0..50 {
        let n = common::conductor(&mut rng);
        let consts = common::distinct_points(&mut rng, n, 3);
        let twist: Vec<Scalar> = (0..rng.gen_range(0..=3)).map(|_| common::field_element(&mut rng, n)).collect();
        let twist = Polynomial::new(twist);
        let sections: Vec<Section> =
            consts.iter().map(|c| Section::graph(&Polynomial::constant(c.clone()) + &twist)).collect();
        let total = rng.gen_range(1..=3);
        let mults = common::multiplicities(&mut rng, 3, total);
        let points = common::distinct_points(&mut rng, n, mults.len());
        let d1 = CurveDivisor::from_entries(points.into_iter().map(CurvePoint::new).zip(mults)).unwrap();
        let data = EltData::new(vec![(sections[0].clone(), d1.clone())]).unwrap();
        let r = elt_composite(&data, &sections).map_err(|e| format!("instance {i}: {e}"))?;
        let found = recover_divisor(&r.tracked[1], &r.tracked[2]).map_err(|e| e.to_string())?;
        ensure(found == d1, || format!("instance {i}: recovered {found}, expected {d1}"))?;
    }
    Ok("50 single transformations recovered exactly".into())
}

fn ac3() -> Check {
    let mut rng = common::rng(3);
    let mut orders = 0;
    for i in 0..25 {
        let a = common::admissible(&mut rng, 2);
        ensure(a.data.pairs.iter().filter(|p| !p.divisor.is_empty()).count() >= 2, || format!("instance {i}"))?;
        let reference = elt_composite(&a.data, &a.tracked).map_err(|e| e.to_string())?.tracked;
        for schedule in common::permutations(&a.steps) {
            let r = elt_composite_scheduled(&a.data, &a.tracked, &schedule).map_err(|e| e.to_string())?;
            ensure(r.tracked == reference, || format!("instance {i}: schedule {schedule:?} differs"))?;
            orders += 1;
        }
    }
    Ok(format!("25 instances, {orders} processing orders agree"))
}

fn ac4() -> Check {
    ensure(cubic_residual().is_zero(), || "cubic residual is not zero".into())?;
    let mut rng = common::rng(4);
    let node = PlanePoint::new([Scalar::zero(), Scalar::zero(), Scalar::one()]).unwrap();
    for i in 0..100 {
        let n = common::conductor(&mut rng);
        let h = common::nonzero_element(&mut rng, n);
        let c = &h * &h;
        let y = if rng.gen_bool(0.1) {
            ProjValue::infinity()
        } else {
            ProjValue::finite(common::field_element(&mut rng, n))
        };
        let p = gamma_at(&c, &y);
        ensure(cubic_form(&c, &p).is_zero(), || format!("point {i} off the cubic"))?;
        for b in [ProjValue::finite(h.clone()), ProjValue::finite(-&h)] {
            ensure(gamma_at(&c, &b) == node, || format!("node preimage {b} of fiber {i} maps elsewhere"))?;
        }
    }
    Ok("residual is zero, 100 fiber points on the cubic, node preimages map to [0:0:1]".into())
}

fn ac5() -> Check {
    let mut rng = common::rng(5);
    for k in 2..=4u32 {
        for trial in 0..4 {
            let h = common::nonzero_element(&mut rng, 1);
            let base =
                if trial == 0 { GmPoint::one() } else { GmPoint::new(common::nonzero_element(&mut rng, 1)).unwrap() };
            let base = GmPoint::new(base.t().embed(k).unwrap()).unwrap();
            let points = osculating_points(k, &base).map_err(|e| e.to_string())?;
            ensure(points.len() == k as usize, || format!("k = {k}: {} points", points.len()))?;
            let target = group_multiple(&h, k, &base).map_err(|e| e.to_string())?;
            for tau in &points {
                let ktau = group_multiple(&h, k, tau).map_err(|e| e.to_string())?;
                ensure(ktau == target, || format!("k = {k}: {k} iota({tau}) is not {k} iota({base})"))?;
                if k == 3 && trial == 0 {
                    ensure(collinear_test(&h, tau, tau, tau).map_err(|e| e.to_string())?, || {
                        format!("iota({tau}) is not a flex")
                    })?;
                }
            }
            if k == 3 {
                let other = GmPoint::new(Scalar::from_int(2)).unwrap();
                ensure(!collinear_test(&h, &other, &other, &other).unwrap(), || "t = 2 taken for a flex".into())?;
            }
        }
    }
    Ok("k = 2, 3, 4: exactly k points, chord-tangent and flex checks agree".into())
}

fn ac6() -> Check {
    let origin = CurvePoint::from(0);
    for m in 1..=3u32 {
        for k in 2..=4u32 {
            let branch = |s: i64| Section::graph(Polynomial::monomial(Scalar::from_int(s), m as usize));
            let osc = osculating_sections_near_cusp(m, k);
            ensure(osc.len() == k as usize, || format!("m = {m}, k = {k}: {} sections", osc.len()))?;
            let mut rest = vec![branch(1), branch(-1)];
            rest.extend(osc[1..].iter().cloned());
            for (i, a) in rest.iter().enumerate() {
                let zero = intersection_multiplicity(&osc[0], a, &origin);
                ensure(zero == Order::Finite(0), || format!("m = {m}, k = {k}: xi = 1 section meets {a}"))?;
                for b in &rest[i + 1..] {
                    let got = intersection_multiplicity(a, b, &origin);
                    ensure(got == Order::Finite(m), || format!("m = {m}, k = {k}: mult({a}, {b}) = {got}"))?;
                }
            }
        }
    }
    Ok("m in 1..=3, k in 2..=4".into())
}

fn ac7() -> Check {
    let mut count = 0;
    for k in 1..=6u32 {
        // xi = 1 gives the section [1:0], which misses the cusp; it has no certificate
        for j in 1..k as i64 {
            let xi = Scalar::root_of_unity(k, j);
            for m in 1..=4 {
                let member = q_cartier_reduce(&xi, k, m).map_err(|e| e.to_string())?.member;
                let ab = verify_ab_decomposition(&xi, k, m).map_err(|e| e.to_string())?;
                ensure(member && ab, || format!("xi = {xi}, k = {k}, m = {m}: member {member}, A - B {ab}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (xi, k, m) with xi^k = 1, xi != 1"))
}

fn ac8() -> Check {
    let xis = [Scalar::from_int(2), Scalar::from_ratio(3, 2), &Scalar::one() + &Scalar::root_of_unity(4, 1)];
    for xi in &xis {
        for k in 1..=24 {
            for m in 1..=2 {
                let member = q_cartier_reduce(xi, k, m).map_err(|e| e.to_string())?.member;
                ensure(!member, || format!("xi = {xi}, k = {k}, m = {m} reported member"))?;
            }
        }
    }
    let mut rng = common::rng(8);
    for xi in &xis {
        for _ in 0..10 {
            let n = if xi.conductor() == 1 { *[1u32, 3, 4, 12].get(rng.gen_range(0..4)).unwrap() } else { 4 };
            let lambda = common::nonzero_element(&mut rng, n);
            let mut values = vec![lambda.clone(), &lambda * xi];
            if n > 2 {
                values.push(&lambda * &Scalar::root_of_unity(n, 1));
            }
            let m = loop {
                let e = [0, 1, 2, 3].map(|_| common::field_element(&mut rng, n));
                if let Ok(m) = Moebius::new([[e[0].clone(), e[1].clone()], [e[2].clone(), e[3].clone()]]) {
                    break m;
                }
            };
            let input = ConstructionInput {
                conductor: n,
                c0: m.apply(&ProjValue::finite(Scalar::zero())),
                c_inf: m.apply(&ProjValue::infinity()),
                constants: values.iter().map(|v| m.apply(&ProjValue::finite(v.clone()))).collect(),
                divisors: (0..values.len()).map(|i| CurveDivisor::point(CurvePoint::from(i as i64), 1)).collect(),
            };
            let v = decide_projective(&input).map_err(|e| e.to_string())?;
            ensure(!v.projective, || format!("configuration with ratio {xi} accepted"))?;
        }
    }
    Ok("no membership for k <= 24, m <= 2; 30 configurations rejected".into())
}

fn ac9() -> Check {
    let mut rng = common::rng(9);
    for i in 0..50 {
        let input = common::construction_input(&mut rng, true);
        let desc = construct_bundle(&input).map_err(|e| format!("instance {i}: {e}"))?;
        let back = recover_construction(&desc).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(back.divisors == input.divisors, || format!("instance {i}: divisors differ"))?;
        let (a, b) = (normalize_configuration(&input).unwrap(), normalize_configuration(&back).unwrap());
        ensure(a.ratios() == b.ratios(), || format!("instance {i}: constants differ beyond a Möbius map"))?;
    }
    Ok("50 projective inputs recovered".into())
}

fn ac10() -> Check {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios");
    let mut files: Vec<PathBuf> =
        std::fs::read_dir(&dir).map_err(|e| e.to_string())?.map(|e| e.unwrap().path()).collect();
    files.sort();
    ensure(!files.is_empty(), || "no bundled scenarios".into())?;
    for f in &files {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_cubic-bundles"))
                .args(["run", "--format", "structured"])
                .arg(f)
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (run()?, run()?);
        ensure(a.status.success(), || format!("{}: exit {:?}", f.display(), a.status.code()))?;
        ensure(a.stdout == b.stdout, || format!("{}: reports differ", f.display()))?;
    }
    Ok(format!("{} scenarios, byte-identical reports", files.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1", "elementary-transformation round-trip", 10, ac1),
        ("AC2", "divisor recovery from strict transforms", 5, ac2),
        ("AC3", "order independence", 10, ac3),
        ("AC4", "gamma identity", 5, ac4),
        ("AC5", "osculating points", 10, ac5),
        ("AC6", "intersection grid near a cusp", 5, ac6),
        ("AC7", "sufficiency grid", 10, ac7),
        ("AC8", "necessity probe", 30, ac8),
        ("AC9", "pipeline round-trip", 30, ac9),
        ("AC10", "CLI determinism", 5, ac10),
    ];
    let mut failed = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}, but over the {budget} s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} {id} {name}: {detail} ({:.2} s)", elapsed.as_secs_f64());
    }
    println!("{} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
