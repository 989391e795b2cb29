//! Exact textual forms.
//!
//! A scalar is written `{"conductor": N, "coeffs": ["p/q", ...]}`, or as a
//! bare rational string `"p/q"` when its conductor is 1. When reading, a JSON
//! integer is also accepted and taken in conductor 1.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::Scalar;
use crate::error::{Error, Result};

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidScalar(format!("not a rational: {s:?}"));
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| bad())?;
    let q = BigInt::from_str(q).map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(p, q))
}

#[derive(Serialize, Deserialize)]
struct ScalarObject {
    conductor: u32,
    coeffs: Vec<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Object(ScalarObject),
    Text(String),
    Int(i64),
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.conductor() == 1 {
            return format_rational(&self.to_rational().expect("conductor 1")).serialize(s);
        }
        ScalarObject { conductor: self.conductor(), coeffs: self.coeffs().iter().map(format_rational).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(d)?;
        scalar_from_repr(repr).map_err(serde::de::Error::custom)
    }
}

fn scalar_from_repr(repr: ScalarRepr) -> Result<Scalar> {
    match repr {
        ScalarRepr::Int(n) => Ok(Scalar::from_int(n)),
        ScalarRepr::Text(s) => Ok(Scalar::from_rational(&parse_rational(&s)?)),
        ScalarRepr::Object(o) => {
            let coeffs = o.coeffs.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>()?;
            Scalar::from_coeffs(o.conductor, &coeffs)
        }
    }
}

/// Parse a scalar from either the JSON object form or a bare rational.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    if t.starts_with('{') {
        Ok(serde_json::from_str(t)?)
    } else {
        Ok(Scalar::from_rational(&parse_rational(t)?))
    }
}
