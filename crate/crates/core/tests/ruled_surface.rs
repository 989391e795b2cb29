use cubic_bundles::exact_field::{CurvePoint, Order, Polynomial, Scalar};
use cubic_bundles::ruled_surface::{
    elt_composite, elt_composite_scheduled, elt_single, evaluate_section, intersection_multiplicity, recover_divisor,
    roundtrip_verify, CurveDivisor, EltData, Section,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn scalar(re: i64, im: i64) -> Scalar {
    &Scalar::from_int(re) + &(&Scalar::from_int(im) * &Scalar::root_of_unity(4, 1))
}

fn point() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        4 => (-6i64..=6).prop_map(Scalar::from_int),
        1 => ((-3i64..=3), (1i64..=3)).prop_map(|(re, im)| scalar(re, im)),
    ]
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-4i64..=4, 0..=3).prop_map(|c| Polynomial::from_ints(&c))
}

fn section() -> impl Strategy<Value = Section> {
    prop_oneof![
        6 => (poly(), poly()).prop_filter_map("zero section", |(a, b)| Section::new(a, b).ok()),
        1 => poly().prop_filter_map("zero section", |b| Section::new(Polynomial::one(), b).ok()),
    ]
}

/// Removes every factor `x - mu`.
fn strip(p: &Polynomial, mu: &CurvePoint) -> Polynomial {
    let lin = Polynomial::linear_factor(mu.value());
    let mut p = p.clone();
    while p.vanishing_order(mu) > Order::Finite(0) {
        p = p.exact_div(&lin).unwrap();
    }
    p
}

fn proportional(p: &Polynomial, q: &Polynomial) -> bool {
    match (p.leading(), q.leading()) {
        (Some(a), Some(b)) => p.scale(b) == q.scale(a),
        (None, None) => true,
        _ => false,
    }
}

fn lagrange(points: &[Scalar], values: &[Scalar]) -> Polynomial {
    let mut out = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().zip(values).enumerate() {
        let mut term = Polynomial::constant(yi.clone());
        for (j, xj) in points.iter().enumerate() {
            if i != j {
                let inv = (xi - xj).inverse().unwrap();
                term = &term * &Polynomial::linear_factor(xj).scale(&inv);
            }
        }
        out = &out + &term;
    }
    out
}

#[derive(Debug, Clone)]
struct Admissible {
    data: EltData,
    tracked: Vec<Section>,
    schedule: Vec<(usize, usize)>,
}

/// Data satisfying the inverse hypothesis: over each point of `|D_i|`
/// exactly one other data section leaves `sigma_i`, all others pass through it.
fn admissible() -> impl Strategy<Value = Admissible> {
    (1usize..=4)
        .prop_flat_map(|n| {
            (
                Just(n),
                subsequence((-8i64..=8).collect::<Vec<_>>(), n..=2 * n),
                prop::collection::vec(1u32..=3, 2 * n),
                prop::collection::vec(0usize..16, 2 * n),
                prop::collection::vec(-3i64..=3, n),
                any::<u64>(),
            )
        })
        .prop_map(|(n, pts, mults, partners, lifts, seed)| {
            // point k belongs to D_{k mod n}
            let points: Vec<Scalar> = pts.iter().map(|&p| Scalar::from_int(p)).collect();
            let owner: Vec<usize> = (0..points.len()).map(|k| k % n).collect();
            let partner: Vec<usize> = (0..points.len())
                .map(|k| if n == 1 { 0 } else { (owner[k] + 1 + partners[k] % (n - 1)) % n })
                .collect();
            let vanish = points.iter().fold(Polynomial::one(), |acc, p| &acc * &Polynomial::linear_factor(p));
            let sections: Vec<Section> = (0..n)
                .map(|i| {
                    let values: Vec<Scalar> = (0..points.len())
                        .map(|k| Scalar::from_int(if n > 1 && partner[k] == i { 1 } else { 0 }))
                        .collect();
                    let f = &lagrange(&points, &values) + &vanish.scale(&Scalar::from_int(lifts[i] * 10 + i as i64));
                    Section::graph(f)
                })
                .collect();
            let mut divisors = vec![CurveDivisor::new(); n];
            for k in 0..points.len() {
                divisors[owner[k]].add(CurvePoint(points[k].clone()), mults[k]);
            }
            let data = EltData::new(sections.iter().cloned().zip(divisors).collect()).unwrap();
            let mut tracked = sections;
            tracked.push(Section::new(Polynomial::one(), Polynomial::zero()).unwrap());
            tracked.rotate_left((seed % (n as u64 + 1)) as usize);

            let mut schedule: Vec<(usize, usize)> = Vec::new();
            for (i, p) in data.pairs.iter().enumerate() {
                for (j, e) in p.divisor.entries().iter().enumerate() {
                    schedule.extend(std::iter::repeat_n((i, j), e.mult as usize));
                }
            }
            // deterministic shuffle driven by the seed
            let mut s = seed;
            for i in (1..schedule.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                schedule.swap(i, (s >> 33) as usize % (i + 1));
            }
            Admissible { data, tracked, schedule }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn single_step_contract(s in prop::collection::vec(section(), 3), center in 0usize..3, mu in point()) {
        prop_assume!(s[0] != s[1] && s[1] != s[2] && s[0] != s[2]);
        let mu = CurvePoint(mu);
        let c = evaluate_section(&s[center], &mu);
        let after = elt_single(&s, center, &mu).unwrap().tracked;
        for i in 0..3 {
            for j in i + 1..3 {
                let before_m = intersection_multiplicity(&s[i], &s[j], &mu).finite().unwrap();
                let after_m = intersection_multiplicity(&after[i], &after[j], &mu).finite().unwrap();
                let through_i = evaluate_section(&s[i], &mu) == c;
                let through_j = evaluate_section(&s[j], &mu) == c;
                match (through_i, through_j) {
                    (true, true) => prop_assert_eq!(after_m + 1, before_m),
                    (false, false) => prop_assert_eq!(after_m, before_m + 1),
                    _ => prop_assert_eq!(after_m, 0),
                }
                // away from mu nothing changes
                let before_rest = strip(&s[i].cross(&s[j]), &mu);
                let after_rest = strip(&after[i].cross(&after[j]), &mu);
                prop_assert!(proportional(&before_rest, &after_rest));
            }
        }
    }

    #[test]
    fn total_multiplicity_is_root_count(s in section(), t in section()) {
        prop_assume!(s != t);
        let d = recover_divisor(&s, &t).unwrap();
        let cross = s.cross(&t);
        // every root found is a root of the cross polynomial, with its order
        for e in d.entries() {
            prop_assert_eq!(intersection_multiplicity(&s, &t, &e.point), Order::Finite(e.mult));
        }
        prop_assert!(d.polynomial().degree() <= cross.degree());
        prop_assert!(cross.div_rem(&d.polynomial()).unwrap().1.is_zero());
    }

    #[test]
    fn processing_order_is_irrelevant(a in admissible()) {
        let default = elt_composite(&a.data, &a.tracked).unwrap();
        let shuffled = elt_composite_scheduled(&a.data, &a.tracked, &a.schedule).unwrap();
        prop_assert_eq!(default.tracked, shuffled.tracked);
    }

    #[test]
    fn inverse_data_round_trips(a in admissible()) {
        prop_assert!(roundtrip_verify(&a.data, &a.tracked).unwrap());
    }

    #[test]
    fn cross_polynomial_recovers_divisor(
        consts in subsequence((-5i64..=5).collect::<Vec<_>>(), 3),
        twist in poly(),
        pts in subsequence((-4i64..=4).collect::<Vec<_>>(), 1..=3),
        mults in prop::collection::vec(1u32..=3, 3),
    ) {
        // mutually disjoint, made non-constant by the automorphism y0 -> y0 + twist * y1
        let sections: Vec<Section> = consts
            .iter()
            .map(|&c| Section::graph(&Polynomial::from_ints(&[c]) + &twist))
            .collect();
        let d1 = CurveDivisor::from_entries(pts.iter().zip(&mults).map(|(&p, &m)| (CurvePoint::from(p), m))).unwrap();
        let data = EltData::new(vec![(sections[0].clone(), d1.clone())]).unwrap();
        let r = elt_composite(&data, &sections).unwrap();
        prop_assert_eq!(recover_divisor(&r.tracked[1], &r.tracked[2]).unwrap(), d1);
    }
}

#[test]
fn composite_example_frame() {
    let c = |v: i64| Section::graph(Polynomial::from_ints(&[v]));
    let inf = Section::new(Polynomial::one(), Polynomial::zero()).unwrap();
    let data = EltData::new(vec![(c(1), CurveDivisor::point(0.into(), 1)), (c(-1), CurveDivisor::point(1.into(), 1))])
        .unwrap();
    let r = elt_composite(&data, &[c(0), inf, c(1), c(-1)]).unwrap();
    let [[d1, e], [zero, d2]] = r.frame().entries();
    assert_eq!(d1, &Polynomial::one());
    assert_eq!(e, &Polynomial::from_ints(&[-1, 2]));
    assert!(zero.is_zero());
    assert_eq!(d2, &Polynomial::from_ints(&[0, -1, 1]));
}
