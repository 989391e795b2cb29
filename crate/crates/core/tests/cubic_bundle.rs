use cubic_bundles::cubic_bundle::{
    collinear_test, cubic_form, cubic_residual, curve_point, gamma_at, group_multiple, osculating_points,
    osculating_sections_near_cusp, BundleDescriptor, GmPoint, PlanePoint,
};
use cubic_bundles::exact_field::{CurvePoint, MultiPoly, Order, Polynomial, ProjValue, Scalar};
use cubic_bundles::pipeline::construct_bundle;
use cubic_bundles::projectivity::ConstructionInput;
use cubic_bundles::ruled_surface::{intersection_multiplicity, CurveDivisor, Section};
use proptest::prelude::*;

fn ratio() -> impl Strategy<Value = Scalar> {
    ((-9i64..=9), (1i64..=5)).prop_map(|(p, q)| Scalar::from_ratio(p, q))
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    ratio().prop_filter("nonzero", |s| !s.is_zero())
}

fn gm() -> impl Strategy<Value = GmPoint> {
    nonzero().prop_map(|t| GmPoint::new(t).unwrap())
}

/// The determinant of three parametrized points, as a polynomial in
/// `(t1, t2, t3, h)`, built directly from `y = [h(1 + t) : 1 - t]`.
fn symbolic_determinant() -> MultiPoly {
    let h = MultiPoly::var(4, 3);
    let one = MultiPoly::constant(4, Scalar::one());
    let rows: Vec<[MultiPoly; 3]> = (0..3)
        .map(|i| {
            let t = MultiPoly::var(4, i);
            let y0 = &h * &(&one + &t);
            let y1 = &one - &t;
            let w = &(&y0 * &y0) - &(&(&h * &h) * &(&y1 * &y1));
            [&w * &y1, &w * &y0, y1.pow(3)]
        })
        .collect();
    let minor = |a: usize, b: usize| &(&rows[1][a] * &rows[2][b]) - &(&rows[1][b] * &rows[2][a]);
    &(&(&rows[0][0] * &minor(1, 2)) - &(&rows[0][1] * &minor(0, 2))) + &(&rows[0][2] * &minor(0, 1))
}

#[test]
fn collinearity_constant_is_one() {
    let t = |i| MultiPoly::var(4, i);
    let mut q = symbolic_determinant();
    let one = MultiPoly::constant(4, Scalar::one());
    let factors = [&t(0) - &t(1), &t(0) - &t(2), &t(1) - &t(2), &(&(&t(0) * &t(1)) * &t(2)) - &one];
    for f in &factors {
        let (quot, rem) = q.div_rem(f).unwrap();
        assert!(rem.is_zero(), "not divisible by {f}");
        q = quot;
    }
    // what remains depends on h alone and is a single monomial, so for distinct
    // parameters and h != 0 the points are collinear iff t1 t2 t3 = 1
    let terms: Vec<_> = q.terms().collect();
    assert_eq!(terms.len(), 1, "{q}");
    assert_eq!(&terms[0].0[..3], &[0, 0, 0]);
}

#[test]
fn residual_vanishes() {
    assert!(cubic_residual().is_zero());
}

#[test]
fn node_preimages_and_flex() {
    let h = Scalar::from_int(3);
    let node = PlanePoint::new([Scalar::zero(), Scalar::zero(), Scalar::one()]).unwrap();
    for y in [ProjValue::finite(h.clone()), ProjValue::finite(-&h)] {
        assert_eq!(gamma_at(&(&h * &h), &y), node);
    }
    let one = GmPoint::one();
    assert!(collinear_test(&h, &one, &one, &one).unwrap());
    assert_eq!(curve_point(&h, &one), PlanePoint::new([Scalar::zero(), Scalar::one(), Scalar::zero()]).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gamma_is_two_to_one_on_the_node(h in nonzero(), y in ratio(), y2 in ratio()) {
        let c = &h * &h;
        let node = PlanePoint::new([Scalar::zero(), Scalar::zero(), Scalar::one()]).unwrap();
        let p = gamma_at(&c, &ProjValue::finite(y.clone()));
        prop_assert!(cubic_form(&c, &p).is_zero());
        let is_node = y == h || y == -&h;
        prop_assert_eq!(p == node, is_node);
        if !is_node && y != y2 && y2 != h && y2 != -&h {
            prop_assert_ne!(p, gamma_at(&c, &ProjValue::finite(y2)));
        }
    }

    #[test]
    fn collinear_iff_product_is_one(h in nonzero(), t1 in gm(), t2 in gm(), t3 in gm()) {
        let ts = [t1.t(), t2.t(), t3.t()];
        prop_assume!(ts[0] != ts[1] && ts[0] != ts[2] && ts[1] != ts[2]);
        let product = &(ts[0] * ts[1]) * ts[2];
        prop_assert_eq!(collinear_test(&h, &t1, &t2, &t3).unwrap(), product.is_one());
        let closing = GmPoint::new((ts[0] * ts[1]).inverse().unwrap()).unwrap();
        if closing != t1 && closing != t2 {
            prop_assert!(collinear_test(&h, &t1, &t2, &closing).unwrap());
        }
    }

    #[test]
    fn tangent_lines(h in nonzero(), t in gm()) {
        // the tangent at t meets the cubic again at 1 / t^2
        let third = GmPoint::new((t.t() * t.t()).inverse().unwrap()).unwrap();
        prop_assert!(collinear_test(&h, &t, &t, &third).unwrap());
    }

    #[test]
    fn osculating_points_are_the_kth_roots(h in nonzero(), b in nonzero(), k in 1u32..=6) {
        let base = GmPoint::new(b.embed(k).unwrap()).unwrap();
        let points = osculating_points(k, &base).unwrap();
        prop_assert_eq!(points.len(), k as usize);
        let target = group_multiple(&h, k, &base).unwrap();
        let mut orders = vec![];
        for (i, p) in points.iter().enumerate() {
            prop_assert!(!points[..i].contains(p));
            let xi = p.t() * &base.t().inverse().unwrap();
            prop_assert!(xi.pow(k).is_one());
            orders.push(xi.root_of_unity_order().unwrap());
            prop_assert_eq!(&group_multiple(&h, k, p).unwrap(), &target);
        }
        // every divisor d of k occurs as an order, k itself among them
        prop_assert!(orders.contains(&k));
    }
}

#[test]
fn flexes_are_the_cube_roots() {
    let h = Scalar::from_int(2);
    for tau in osculating_points(3, &GmPoint::new(Scalar::one().embed(3).unwrap()).unwrap()).unwrap() {
        assert!(collinear_test(&h, &tau, &tau, &tau).unwrap());
    }
    let not_flex = GmPoint::new(Scalar::from_int(2)).unwrap();
    assert!(!collinear_test(&h, &not_flex, &not_flex, &not_flex).unwrap());
}

#[test]
fn intersection_grid_near_a_cusp() {
    let origin = CurvePoint::from(0);
    for m in 1..=3u32 {
        for k in 1..=4u32 {
            let xm = |sign: i64| Section::graph(Polynomial::monomial(Scalar::from_int(sign), m as usize));
            let osc = osculating_sections_near_cusp(m, k);
            assert_eq!(osc.len(), k as usize);
            let mut others = vec![xm(1), xm(-1)];
            others.extend(osc[1..].iter().cloned());
            for (i, a) in others.iter().enumerate() {
                assert_eq!(intersection_multiplicity(&osc[0], a, &origin), Order::Finite(0));
                for b in &others[i + 1..] {
                    assert_eq!(intersection_multiplicity(a, b, &origin), Order::Finite(m), "m = {m}, k = {k}");
                }
            }
        }
    }
}

fn example_descriptor() -> BundleDescriptor {
    let f = |n: i64| ProjValue::finite(Scalar::from_int(n));
    construct_bundle(&ConstructionInput {
        conductor: 1,
        c0: f(0),
        c_inf: ProjValue::infinity(),
        constants: vec![f(1), f(-1)],
        divisors: vec![CurveDivisor::point(0.into(), 1), CurveDivisor::point(1.into(), 1)],
    })
    .unwrap()
}

#[test]
fn descriptor_rejects_broken_structure() {
    let desc = example_descriptor();
    desc.validate().unwrap();
    // a second section avoiding the node point at x = 0
    let mut two_avoid = desc.clone();
    two_avoid.osculating[1] = Section::new(Polynomial::from_ints(&[3]), Polynomial::from_ints(&[-1, 1])).unwrap();
    assert!(two_avoid.validate().is_err());
    let mut wrong_k = desc.clone();
    wrong_k.relative_degree = 3;
    assert!(wrong_k.validate().is_err());
    let mut wrong_cusps = desc.clone();
    wrong_cusps.cusp_divisor = CurveDivisor::point(0.into(), 1);
    assert!(wrong_cusps.validate().is_err());
    let mut repeated = desc;
    repeated.osculating[1] = repeated.osculating[0].clone();
    assert!(repeated.validate().is_err());
}
