//! Integer cyclotomic polynomials, built by exact division of `t^n - 1`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let p = Arc::new(compute(n));
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn compute(n: u32) -> Vec<BigInt> {
    // t^n - 1 = prod_{d | n} Phi_d(t)
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_div_monic(&num, &cyclotomic(d));
        }
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quo = vec![BigInt::zero(); num.len() - dn];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quo[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quo
}

/// Degree of the `n`-th cyclotomic polynomial, i.e. Euler's totient.
pub fn totient(n: u32) -> usize {
    cyclotomic(n).len() - 1
}

/// Reduce an integer-coefficient vector modulo the monic `phi`, in place.
pub(crate) fn reduce_mod(coeffs: &mut Vec<BigInt>, phi: &[BigInt]) {
    let deg = phi.len() - 1;
    while coeffs.len() > deg {
        let top = coeffs.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = coeffs.len() - deg;
        for (j, p) in phi[..deg].iter().enumerate() {
            coeffs[shift + j] -= &top * p;
        }
    }
    coeffs.resize(deg, BigInt::zero());
}

pub fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}

/// Whether every element of `Q(zeta_m)` also lies in `Q(zeta_n)`.
pub fn field_contains(n: u32, m: u32) -> bool {
    n.is_multiple_of(m) || (n % 2 == 1 && (2 * n).is_multiple_of(m))
}
