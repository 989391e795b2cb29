//! Seeded generators shared by the integration tests and the acceptance suite.
#![allow(dead_code)]

use cubic_bundles::exact_field::{CurvePoint, Moebius, Polynomial, ProjValue, Scalar};
use cubic_bundles::projectivity::ConstructionInput;
use cubic_bundles::ruled_surface::{CurveDivisor, EltData, Section};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn conductor(rng: &mut impl Rng) -> u32 {
    *[1u32, 2, 3, 4, 5, 6, 8, 10, 12].choose(rng).unwrap()
}

/// A small element `a + b zeta_n^j`.
pub fn field_element(rng: &mut impl Rng, n: u32) -> Scalar {
    let a = Scalar::from_int(rng.gen_range(-4..=4));
    if n <= 2 || rng.gen_bool(0.5) {
        return a.embed(n).unwrap();
    }
    let b = Scalar::from_int(rng.gen_range(1..=2) * if rng.gen_bool(0.5) { 1 } else { -1 });
    let z = Scalar::root_of_unity(n, rng.gen_range(1..n as i64));
    (&a + &(&b * &z)).embed(n).unwrap()
}

pub fn nonzero_element(rng: &mut impl Rng, n: u32) -> Scalar {
    loop {
        let s = field_element(rng, n);
        if !s.is_zero() {
            return s;
        }
    }
}

/// `count` distinct field elements.
pub fn distinct_points(rng: &mut impl Rng, n: u32, count: usize) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::with_capacity(count);
    while out.len() < count {
        let s = field_element(rng, n);
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Multiplicities of at most `max_points` distinct points with total at most `total`.
pub fn multiplicities(rng: &mut impl Rng, max_points: usize, total: u32) -> Vec<u32> {
    let count = rng.gen_range(1..=max_points.min(total as usize));
    let mut mults = vec![1u32; count];
    let mut left = total - count as u32;
    for m in mults.iter_mut() {
        let extra = rng.gen_range(0..=left);
        *m += extra;
        left -= extra;
    }
    mults
}

pub fn lagrange(points: &[Scalar], values: &[Scalar]) -> Polynomial {
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

#[derive(Clone, Debug)]
pub struct Admissible {
    pub data: EltData,
    pub tracked: Vec<Section>,
    /// Every `(pair, point)` repeated by its multiplicity.
    pub steps: Vec<(usize, usize)>,
    pub conductor: u32,
}

/// Elementary-transformation data satisfying the inverse hypothesis: over
/// each point of `|D_i|` exactly one other data section leaves `sigma_i`,
/// and `[1:0]` is tracked as well.
pub fn admissible(rng: &mut impl Rng, min_divisors: usize) -> Admissible {
    let n = rng.gen_range(min_divisors.max(1)..=4);
    let conductor = conductor(rng);
    let total = rng.gen_range(min_divisors.max(1) as u32..=3);
    let mults = multiplicities(rng, 3, total);
    let mults = if mults.len() < min_divisors { vec![1; min_divisors] } else { mults };
    let points = distinct_points(rng, conductor, mults.len());
    let mut owner: Vec<usize> = (0..points.len()).map(|_| rng.gen_range(0..n)).collect();
    // the first `min_divisors` points go to different pairs
    for (k, o) in owner.iter_mut().enumerate().take(min_divisors) {
        *o = k;
    }
    let partner: Vec<usize> = owner.iter().map(|&o| if n == 1 { 0 } else { (o + rng.gen_range(1..n)) % n }).collect();
    let vanish = points.iter().fold(Polynomial::one(), |acc, p| &acc * &Polynomial::linear_factor(p));
    let sections: Vec<Section> = (0..n)
        .map(|i| {
            let values: Vec<Scalar> = partner.iter().map(|&p| Scalar::from_int(i64::from(n > 1 && p == i))).collect();
            let lift = Scalar::from_int(rng.gen_range(-3..=3) * 10 + i as i64);
            Section::graph(&lagrange(&points, &values) + &vanish.scale(&lift))
        })
        .collect();
    let mut divisors = vec![CurveDivisor::new(); n];
    for (k, p) in points.iter().enumerate() {
        divisors[owner[k]].add(CurvePoint::new(p.clone()), mults[k]);
    }
    let data = EltData::new(sections.iter().cloned().zip(divisors).collect()).unwrap();
    let mut tracked = sections;
    tracked.push(Section::new(Polynomial::one(), Polynomial::zero()).unwrap());
    let shift = rng.gen_range(0..tracked.len());
    tracked.rotate_left(shift);
    let mut steps = Vec::new();
    for (i, p) in data.pairs.iter().enumerate() {
        for (j, e) in p.divisor.entries().iter().enumerate() {
            steps.extend(std::iter::repeat_n((i, j), e.mult as usize));
        }
    }
    Admissible { data, tracked, steps, conductor }
}

/// All distinct orderings of a list.
pub fn permutations<T: Clone + PartialEq>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out: Vec<Vec<T>> = Vec::new();
    for i in 0..items.len() {
        if items[..i].contains(&items[i]) {
            continue;
        }
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head.clone());
            out.push(p);
        }
    }
    out
}

fn random_moebius(rng: &mut impl Rng, n: u32) -> Moebius {
    loop {
        let e = [[field_element(rng, n), field_element(rng, n)], [field_element(rng, n), field_element(rng, n)]];
        if let Ok(m) = Moebius::new(e) {
            return m;
        }
    }
}

/// A random construction input, with constants `lambda zeta_N^{e_i}` moved
/// by a random Möbius map. Without `projective` one ratio is scaled by an
/// integer of absolute value at least 2.
pub fn construction_input(rng: &mut impl Rng, projective: bool) -> ConstructionInput {
    let conductor = conductor(rng);
    let mut roots: Vec<Scalar> = if conductor == 1 {
        vec![Scalar::one(), Scalar::from_int(-1)]
    } else {
        (0..conductor as i64).map(|e| Scalar::root_of_unity(conductor, e)).collect()
    };
    roots.shuffle(rng);
    let n = rng.gen_range(if projective { 1 } else { 2 }..=4usize.min(roots.len()));
    let lambda = nonzero_element(rng, conductor);
    let mut values: Vec<Scalar> = roots[..n].iter().map(|z| (&lambda * z).embed(conductor).unwrap()).collect();
    if !projective {
        let i = rng.gen_range(1..n);
        values[i] = &values[i] * &Scalar::from_int(*[2i64, 3, -2, 5].choose(rng).unwrap());
    }
    let m = random_moebius(rng, conductor);
    let c0 = m.apply(&ProjValue::finite(Scalar::zero()));
    let c_inf = m.apply(&ProjValue::infinity());
    let constants: Vec<ProjValue> = values.iter().map(|v| m.apply(&ProjValue::finite(v.clone()))).collect();
    let n = constants.len();
    let mut divisors = vec![CurveDivisor::new(); n];
    let total = rng.gen_range(1..=3);
    let mults = multiplicities(rng, 3, total);
    let points = distinct_points(rng, conductor, mults.len());
    for (p, m) in points.into_iter().zip(mults) {
        divisors[rng.gen_range(0..n)].add(CurvePoint::new(p), m);
    }
    ConstructionInput { conductor, c0, c_inf, constants, divisors }
}
