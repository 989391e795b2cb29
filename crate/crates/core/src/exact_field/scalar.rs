//! Elements of cyclotomic fields `Q(zeta_N)`.
//!
//! A [`Scalar`] stores an integer coefficient vector over the power basis
//! `1, t, ..., t^(phi(N)-1)` of `Q[t]/Phi_N(t)` together with one positive
//! common denominator. Values with different conductors are combined in
//! `Q(zeta_lcm)`.

use std::borrow::Cow;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::{cyclotomic, lcm_u32, reduce_mod, totient};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Scalar {
    conductor: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { conductor: 1, num: vec![BigInt::zero()], den: BigInt::one() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { conductor: 1, num: vec![BigInt::from(n)], den: BigInt::one() }
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Scalar::from_rational(&BigRational::new(p.into(), q.into()))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Scalar { conductor: 1, num: vec![r.numer().clone()], den: r.denom().clone() }.normalized()
    }

    /// Build from rational coordinates over the power basis of `Q(zeta_conductor)`.
    pub fn from_coeffs(conductor: u32, coeffs: &[BigRational]) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::InvalidScalar("conductor must be positive".into()));
        }
        let phi = totient(conductor);
        if coeffs.len() != phi {
            return Err(Error::InvalidScalar(format!(
                "conductor {conductor} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Scalar { conductor, num, den }.normalized())
    }

    /// `zeta_n^power`.
    pub fn root_of_unity(n: u32, power: i64) -> Self {
        assert!(n >= 1, "root of unity of order 0");
        let e = power.rem_euclid(n as i64) as usize;
        let mut num = vec![BigInt::zero(); e + 1];
        num[e] = BigInt::one();
        reduce_mod(&mut num, &cyclotomic(n));
        Scalar { conductor: n, num, den: BigInt::one() }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Rational coordinates over the power basis, each in lowest terms.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num.iter().map(|n| BigRational::new(n.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number, when it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        // 1 = t^0 is a basis vector, so rationals are exactly the vectors
        // supported on the constant coordinate.
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Image under `Q(zeta_N) -> Q(zeta_M)`, `zeta_N -> zeta_M^(M/N)`; requires `N | M`.
    pub fn embed(&self, target: u32) -> Result<Scalar> {
        if target == 0 || !target.is_multiple_of(self.conductor) {
            return Err(Error::InvalidScalar(format!("cannot embed conductor {} into {target}", self.conductor)));
        }
        if target == self.conductor {
            return Ok(self.clone());
        }
        let step = (target / self.conductor) as usize;
        let mut num = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (i, c) in self.num.iter().enumerate() {
            num[i * step] = c.clone();
        }
        reduce_mod(&mut num, &cyclotomic(target));
        Ok(Scalar { conductor: target, num, den: self.den.clone() }.normalized())
    }

    fn lift<'a>(a: &'a Scalar, b: &'a Scalar) -> (Cow<'a, Scalar>, Cow<'a, Scalar>) {
        if a.conductor == b.conductor {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let l = lcm_u32(a.conductor, b.conductor);
        let lift = |s: &'a Scalar| -> Cow<'a, Scalar> {
            if s.conductor == l {
                Cow::Borrowed(s)
            } else {
                Cow::Owned(s.embed(l).expect("lcm is a multiple"))
            }
        };
        (lift(a), lift(b))
    }

    fn normalized(mut self) -> Self {
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
        if self.is_zero() {
            self.den = BigInt::one();
        }
        self
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.conductor == 1 || self.num[1..].iter().all(Zero::is_zero) {
            let n = &self.num[0];
            let mut s = Scalar { conductor: self.conductor, num: vec![BigInt::zero(); self.num.len()], den: n.clone() };
            s.num[0] = self.den.clone();
            return Ok(s.normalized());
        }
        // Extended Euclid in Q[t]: find u with u * a = 1 (mod Phi_N).
        let phi: Vec<BigRational> = cyclotomic(self.conductor).iter().map(|c| BigRational::from(c.clone())).collect();
        let a: Vec<BigRational> = self.coeffs();
        let (g, u) = rat_ext_gcd(&phi, &a);
        debug_assert_eq!(g.len(), 1, "Phi_N is irreducible");
        let inv_g = g[0].recip();
        let mut coeffs: Vec<BigRational> = u.into_iter().map(|c| c * &inv_g).collect();
        coeffs.resize(self.num.len(), BigRational::zero());
        Scalar::from_coeffs(self.conductor, &coeffs)
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut result = Scalar::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Signed power; negative exponents require a nonzero value.
    pub fn powi(&self, e: i64) -> Result<Scalar> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs() as u32))
        }
    }

    /// Multiplicative order if the value is a root of unity.
    ///
    /// The torsion of `Q(zeta_N)` is `{+-zeta_N^j}`, so every order divides `lcm(2, N)`.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let bound = lcm_u32(2, self.conductor);
        (1..=bound).filter(|d| bound.is_multiple_of(*d)).find(|&d| self.pow(d).is_one())
    }

    /// Integer numerators over the power basis and the common denominator.
    pub(crate) fn integral_parts(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }

    pub(crate) fn from_integral(conductor: u32, mut num: Vec<BigInt>, den: BigInt) -> Scalar {
        reduce_mod(&mut num, &cyclotomic(conductor));
        Scalar { conductor, num, den }.normalized()
    }
}

pub fn make_root_of_unity(n: u32, power: i64) -> Scalar {
    Scalar::root_of_unity(n, power)
}

pub fn is_root_of_unity(u: &Scalar) -> Option<u32> {
    u.root_of_unity_order()
}

type RatPoly = Vec<BigRational>;

fn rat_trim(p: &mut RatPoly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn rat_divrem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let mut r = a.clone();
    rat_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if r.len() < b.len() {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    rat_trim(&mut r);
    (q, r)
}

fn rat_sub_mul(a: &RatPoly, q: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut out = a.clone();
    let len = (q.len() + b.len() - 1).max(out.len());
    out.resize(len, BigRational::zero());
    for (i, qi) in q.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] -= qi * bj;
        }
    }
    rat_trim(&mut out);
    out
}

fn rat_is_zero(p: &RatPoly) -> bool {
    p.iter().all(Zero::is_zero)
}

/// Returns `(g, v)` with `v * b = g (mod a)`, `g = gcd(a, b)`.
fn rat_ext_gcd(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    rat_trim(&mut r1);
    let (mut v0, mut v1) = (vec![BigRational::zero()], vec![BigRational::one()]);
    while !rat_is_zero(&r1) {
        let (q, r) = rat_divrem(&r0, &r1);
        let v = rat_sub_mul(&v0, &q, &v1);
        r0 = std::mem::replace(&mut r1, r);
        v0 = std::mem::replace(&mut v1, v);
    }
    rat_trim(&mut r0);
    (r0, v0)
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Scalar::lift(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Scalar {}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { conductor: self.conductor, num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let (a, b) = Scalar::lift(self, rhs);
        let num = if a.den == b.den {
            a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect::<Vec<_>>()
        } else {
            a.num.iter().zip(&b.num).map(|(x, y)| x * &b.den + y * &a.den).collect()
        };
        let den = if a.den == b.den { a.den.clone() } else { &a.den * &b.den };
        Scalar { conductor: a.conductor, num, den }.normalized()
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let (a, b) = Scalar::lift(self, rhs);
        if a.is_zero() || b.is_zero() {
            return Scalar::zero();
        }
        let mut num = vec![BigInt::zero(); a.num.len() + b.num.len() - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                num[i + j] += x * y;
            }
        }
        reduce_mod(&mut num, &cyclotomic(a.conductor));
        Scalar { conductor: a.conductor, num, den: &a.den * &b.den }.normalized()
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: &Scalar) -> Scalar {
                (&self).$f(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    /// `3/2`, `1 + 2*z12^3`, where `zN` denotes `zeta_N`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let z = match i {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{}", self.conductor, i),
            };
            if i == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{z}")?;
            } else {
                write!(f, "{abs}*{z}")?;
            }
        }
        Ok(())
    }
}
