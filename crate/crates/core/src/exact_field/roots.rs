//! Roots in `Q(zeta_N)` of polynomials over `Q(zeta_N)`.
//!
//! The squarefree part is scaled to a monic polynomial with coefficients in
//! `Z[zeta_N]`, whose roots in the field are then algebraic integers. Roots
//! are found modulo a prime `p = 1 (mod N)` at which `zeta_N` reduces to an
//! element of `F_p`, lifted p-adically, and read back as short vectors of
//! the lattice of elements congruent to the lift. Every candidate is checked
//! by exact division by `x - mu`; nothing unverified is returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclotomic::{cyclotomic, lcm_u32, totient};
use super::lattice::{lll, nearest_plane};
use super::poly::{CurvePoint, Order, Polynomial};
use super::scalar::Scalar;

/// Distinct roots with their multiplicities, in a deterministic order.
pub fn roots(p: &Polynomial) -> Vec<(Scalar, u32)> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let squarefree = p.exact_div(&p.gcd(&p.derivative())).expect("gcd divides").monic();
    let candidates =
        if squarefree.degree() == Some(1) { vec![-&squarefree.coeff(0)] } else { padic_candidates(&squarefree) };
    let mut out: Vec<(Scalar, u32)> = Vec::new();
    for c in candidates {
        if out.iter().any(|(r, _)| *r == c) {
            continue;
        }
        if let Order::Finite(m) = p.vanishing_order(&CurvePoint(c.clone())) {
            if m > 0 {
                out.push((c, m));
            }
        }
    }
    out
}

fn padic_candidates(monic: &Polynomial) -> Vec<Scalar> {
    let n = monic.degree().unwrap();
    let conductor = monic.coeffs().iter().fold(1, |acc, c| lcm_u32(acc, c.conductor()));
    let coeffs: Vec<Scalar> = monic.coeffs().iter().map(|c| c.embed(conductor).unwrap()).collect();
    let d = totient(conductor);

    // q(x) = D^n s(x / D) is monic with coefficients in Z[zeta]
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.integral_parts().1));
    let mut q: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for (i, c) in coeffs.iter().enumerate() {
        let (num, cden) = c.integral_parts();
        let scale = num_traits::pow(den.clone(), n - i) / cden;
        q.push(num.iter().map(|x| x * &scale).collect());
    }

    // Every conjugate of a root is bounded by 1 + max |coefficient|.
    let height = q[..n].iter().map(|c| c.iter().map(|x| x.abs()).sum::<BigInt>()).max().unwrap();
    let root_bound: BigInt = height + 1;
    let phi_height: BigInt = cyclotomic(conductor).iter().map(|x| x.abs()).sum();
    let coeff_bound: BigInt = root_bound * BigInt::from(d) * phi_height * (BigInt::one() << conductor as usize);

    let (p, omega) = choose_prime(conductor, &q);
    let pb = BigInt::from(p);
    let bits = d as u64 * (d as u64 / 2 + 3 + (d as u64).ilog2() as u64 + 1 + coeff_bound.bits()) + 1;
    let k = bits.div_ceil(p.ilog2() as u64).max(2) as u32;
    let modulus = num_traits::pow(pb.clone(), k as usize);

    let omega_hat = hensel_lift(&phi_as_bigint(conductor), &BigInt::from(omega), &modulus);
    let powers: Vec<BigInt> = (0..d)
        .scan(BigInt::one(), |acc, _| {
            let cur = acc.clone();
            *acc = (&*acc * &omega_hat).mod_floor(&modulus);
            Some(cur)
        })
        .collect();
    let q_hat: Vec<BigInt> = q.iter().map(|c| reduce_at(c, &powers, &modulus)).collect();

    // lattice {c : sum c_i omega^i = 0 mod p^k}
    let mut basis = vec![vec![BigInt::zero(); d]; d];
    basis[0][0] = modulus.clone();
    for i in 1..d {
        basis[i][0] = (-&powers[i]).mod_floor(&modulus);
        basis[i][i] = BigInt::one();
    }
    let reduced = lll(basis);

    let q_mod_p: Vec<u64> = q_hat.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    let mut out = Vec::new();
    for r in 0..p {
        if eval_mod(&q_mod_p, r, p) != 0 {
            continue;
        }
        let lifted = hensel_lift(&q_hat, &BigInt::from(r), &modulus);
        let mut target = vec![BigInt::zero(); d];
        target[0] = lifted;
        let close = nearest_plane(&reduced, &target);
        let c: Vec<BigInt> = target.iter().zip(&close).map(|(t, l)| t - l).collect();
        out.push(Scalar::from_integral(conductor, c, den.clone()));
    }
    out
}

fn phi_as_bigint(n: u32) -> Vec<BigInt> {
    cyclotomic(n).to_vec()
}

fn reduce_at(c: &[BigInt], powers: &[BigInt], modulus: &BigInt) -> BigInt {
    c.iter().zip(powers).fold(BigInt::zero(), |acc, (a, w)| acc + a * w).mod_floor(modulus)
}

fn eval_mod(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0u64, |acc, &c| ((acc as u128 * x as u128 + c as u128) % p as u128) as u64)
}

fn eval_big(poly: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    poly.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn derivative_big(poly: &[BigInt]) -> Vec<BigInt> {
    poly.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

/// Newton iteration from a simple root mod p to a root mod `modulus`.
fn hensel_lift(poly: &[BigInt], root: &BigInt, modulus: &BigInt) -> BigInt {
    let deriv = derivative_big(poly);
    let mut r = root.clone();
    loop {
        let value = eval_big(poly, &r, modulus);
        if value.is_zero() {
            return r;
        }
        let slope = eval_big(&deriv, &r, modulus);
        let inv = mod_inverse(&slope, modulus).expect("simple root modulo p");
        r = (&r - value * inv).mod_floor(modulus);
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn primitive_root_of_unity(n: u32, p: u64) -> u64 {
    let n = n as u64;
    let prime_factors: Vec<u64> = (2..=n).filter(|f| n.is_multiple_of(*f) && is_prime(*f)).collect();
    (2..p)
        .map(|g| pow_mod(g, (p - 1) / n, p))
        .find(|&w| prime_factors.iter().all(|f| pow_mod(w, n / f, p) != 1))
        .expect("p = 1 mod n has primitive n-th roots")
}

/// A prime `p = 1 (mod n)` at which `q` stays squarefree, with the image of `zeta_n`.
fn choose_prime(n: u32, q: &[Vec<BigInt>]) -> (u64, u64) {
    let deg = q.len() as u64 - 1;
    let mut p = (64 + 4 * deg).div_ceil(n as u64) * n as u64 + 1;
    loop {
        if is_prime(p) {
            let w = primitive_root_of_unity(n, p);
            let pb = BigInt::from(p);
            let wb = BigInt::from(w);
            let powers: Vec<BigInt> = (0..q[0].len()).map(|i| num_traits::pow(wb.clone(), i)).collect();
            let reduced: Vec<u64> = q.iter().map(|c| reduce_at(c, &powers, &pb).to_u64().unwrap()).collect();
            if squarefree_mod(&reduced, p) {
                return (p, w);
            }
        }
        p += n as u64;
    }
}

fn squarefree_mod(poly: &[u64], p: u64) -> bool {
    let deriv: Vec<u64> =
        poly.iter().enumerate().skip(1).map(|(i, &c)| (c as u128 * i as u128 % p as u128) as u64).collect();
    let g = gcd_mod(poly.to_vec(), deriv, p);
    g.len() == 1
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim_mod(&mut a);
    trim_mod(&mut b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() && !a.is_empty() {
            let shift = a.len() - b.len();
            let c = (*a.last().unwrap() as u128 * inv as u128 % p as u128) as u64;
            for (i, &bi) in b.iter().enumerate() {
                let sub = (c as u128 * bi as u128 % p as u128) as u64;
                a[shift + i] = (a[shift + i] + p - sub) % p;
            }
            trim_mod(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}
