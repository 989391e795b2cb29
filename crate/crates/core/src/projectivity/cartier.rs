//! Local Q-Cartier test for an osculating section through a cusp.
//!
//! Near a cusp of multiplicity `m` the section with parameter `xi` is cut
//! out by `f = y0 (xi - 1) + x^m (xi + 1)`. Its image is Q-Cartier when some
//! power `f^k` lies in the subring generated by `x`, `y0^2` and the ideal
//! `(y0^2 - x^{2m})`. Modulo `y0^2 -> x^{2m}` every element has the form
//! `a(x) + b(x) y0`, and the subring is exactly the part with `b = 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_field::{MultiPoly, Polynomial, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartierCertificate {
    pub xi: Scalar,
    pub k: u32,
    pub m: u32,
    pub member: bool,
    /// `a(x)` of the reduced form `a + b y0`.
    #[serde(rename = "evenPart")]
    pub even_part: Polynomial,
    /// `b(x)`; the reduced form has odd part `b(x) y0`.
    #[serde(rename = "oddPart")]
    pub odd_part: Polynomial,
}

/// `a + b y0` modulo `y0^2 = x^{2m}`.
#[derive(Clone)]
struct Reduced {
    a: Polynomial,
    b: Polynomial,
}

impl Reduced {
    fn mul(&self, other: &Reduced, x2m: &Polynomial) -> Reduced {
        let a = &(&self.a * &other.a) + &(&(&self.b * &other.b) * x2m);
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        Reduced { a, b }
    }

    fn pow(&self, mut e: u32, x2m: &Polynomial) -> Reduced {
        let mut base = self.clone();
        let mut acc = Reduced { a: Polynomial::one(), b: Polynomial::zero() };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, x2m);
            }
            base = base.mul(&base, x2m);
            e >>= 1;
        }
        acc
    }
}

fn check_km(k: u32, m: u32) -> Result<()> {
    if k == 0 || m == 0 {
        return Err(Error::Validation("k and m must be positive".into()));
    }
    Ok(())
}

pub fn q_cartier_reduce(xi: &Scalar, k: u32, m: u32) -> Result<CartierCertificate> {
    check_km(k, m)?;
    if xi.is_one() {
        return Err(Error::XiIsOne);
    }
    let one = Scalar::one();
    let f = Reduced { a: Polynomial::monomial(xi + &one, m as usize), b: Polynomial::constant(xi - &one) };
    let x2m = Polynomial::monomial(one, 2 * m as usize);
    let r = f.pow(k, &x2m);
    Ok(CartierCertificate { xi: xi.clone(), k, m, member: r.b.is_zero(), even_part: r.a, odd_part: r.b })
}

/// Smallest `k <= bound` for which `f^k` lies in the subring.
pub fn minimal_cartier_exponent(xi: &Scalar, m: u32, bound: u32) -> Result<Option<u32>> {
    for k in 1..=bound {
        if q_cartier_reduce(xi, k, m)?.member {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

fn binomial(n: u32, i: u32) -> Scalar {
    let c = num_integer::binomial(BigInt::from(n), BigInt::from(i));
    Scalar::from_rational(&BigRational::from(c))
}

/// Checks `f^k = A - B` with `A = 2 sum_{i even} C(k, i) x^{m(k-i)} y0^i`
/// and `B` a multiple of `y0^2 - x^{2m}`, by bivariate division in
/// `(x, y0)` and multiplying back.
pub fn verify_ab_decomposition(xi: &Scalar, k: u32, m: u32) -> Result<bool> {
    check_km(k, m)?;
    if !xi.pow(k).is_one() {
        return Err(Error::NotRootOfUnity { k });
    }
    let one = Scalar::one();
    let x = MultiPoly::var(2, 0);
    let y0 = MultiPoly::var(2, 1);
    let f = &y0.scale(&(xi - &one)) + &x.pow(m).scale(&(xi + &one));
    let fk = f.pow(k);
    let mut a = MultiPoly::zero(2);
    for i in (0..=k).step_by(2) {
        let c = &binomial(k, i) * &Scalar::from_int(2);
        a = &a + &MultiPoly::term(2, vec![m * (k - i), i], c);
    }
    let relation = &y0.pow(2) - &x.pow(2 * m);
    let (q, r) = (&fk - &a).div_rem(&relation)?;
    Ok(r.is_zero() && &(&q * &relation) + &a == fk)
}
