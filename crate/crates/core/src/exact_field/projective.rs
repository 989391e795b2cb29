//! Points of the projective line over the scalar field and Möbius maps.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// `[u : v]`, stored normalized: `v = 1` when `v != 0`, otherwise `u = 1`.
/// Serialized as the pair `[u, v]`; a bare scalar `c` or `"inf"` is also
/// accepted on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "[Scalar; 2]")]
pub struct ProjValue {
    u: Scalar,
    v: Scalar,
}

impl ProjValue {
    pub fn new(u: Scalar, v: Scalar) -> Result<Self> {
        if !v.is_zero() {
            let inv = v.inverse()?;
            Ok(ProjValue { u: &u * &inv, v: Scalar::one() })
        } else if !u.is_zero() {
            Ok(ProjValue { u: Scalar::one(), v: Scalar::zero() })
        } else {
            Err(Error::ZeroProjectivePoint)
        }
    }

    /// The affine point `[c : 1]`.
    pub fn finite(c: Scalar) -> Self {
        ProjValue { u: c, v: Scalar::one() }
    }

    pub fn infinity() -> Self {
        ProjValue { u: Scalar::one(), v: Scalar::zero() }
    }

    pub fn u(&self) -> &Scalar {
        &self.u
    }

    pub fn v(&self) -> &Scalar {
        &self.v
    }

    pub fn is_infinity(&self) -> bool {
        self.v.is_zero()
    }

    /// `u / v` when finite.
    pub fn affine(&self) -> Option<&Scalar> {
        (!self.is_infinity()).then_some(&self.u)
    }
}

impl From<ProjValue> for [Scalar; 2] {
    fn from(p: ProjValue) -> Self {
        [p.u, p.v]
    }
}

impl<'de> Deserialize<'de> for ProjValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Pair([Scalar; 2]),
            Word(String),
            Single(Scalar),
        }
        let p = match Repr::deserialize(d)? {
            Repr::Pair([u, v]) => ProjValue::new(u, v),
            Repr::Word(w) if matches!(w.trim(), "inf" | "infinity") => Ok(ProjValue::infinity()),
            Repr::Word(w) => super::text::parse_scalar(&w).map(ProjValue::finite),
            Repr::Single(c) => Ok(ProjValue::finite(c)),
        };
        p.map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for ProjValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.u, self.v)
    }
}

/// An invertible 2x2 matrix acting on `[u : v]` column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Moebius {
    m: [[Scalar; 2]; 2],
}

impl Moebius {
    pub fn new(m: [[Scalar; 2]; 2]) -> Result<Self> {
        let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Moebius { m })
    }

    pub fn identity() -> Self {
        Moebius { m: [[Scalar::one(), Scalar::zero()], [Scalar::zero(), Scalar::one()]] }
    }

    pub fn entries(&self) -> &[[Scalar; 2]; 2] {
        &self.m
    }

    pub fn det(&self) -> Scalar {
        &(&self.m[0][0] * &self.m[1][1]) - &(&self.m[0][1] * &self.m[1][0])
    }

    pub fn apply(&self, p: &ProjValue) -> ProjValue {
        let u = &(&self.m[0][0] * &p.u) + &(&self.m[0][1] * &p.v);
        let v = &(&self.m[1][0] * &p.u) + &(&self.m[1][1] * &p.v);
        ProjValue::new(u, v).expect("invertible matrix maps nonzero vectors to nonzero vectors")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Moebius) -> Moebius {
        let a = &self.m;
        let b = &other.m;
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Moebius { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    pub fn inverse(&self) -> Moebius {
        let [[a, b], [c, d]] = &self.m;
        Moebius { m: [[d.clone(), -b], [-c, a.clone()]] }
    }

    /// The map with `zero -> [0:1]` and `infinity -> [1:0]`, the identity
    /// when both are already in place.
    pub fn normalizing(zero: &ProjValue, infinity: &ProjValue) -> Result<Moebius> {
        // rows vanish at `zero` and `infinity` respectively
        Moebius::new([[zero.v.clone(), -&zero.u], [-&infinity.v, infinity.u.clone()]])
    }
}

pub fn moebius_apply(m: &Moebius, p: &ProjValue) -> ProjValue {
    m.apply(p)
}
