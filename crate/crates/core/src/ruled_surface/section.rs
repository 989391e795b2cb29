use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::exact_field::roots::roots;
use crate::exact_field::{CurvePoint, Order, Polynomial, ProjValue};

/// The section `x -> [a(x) : b(x)]` of `P^1 x A^1`, kept coprime with the
/// leading coefficient of `b` (or of `a` when `b = 0`) equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    a: Polynomial,
    b: Polynomial,
}

impl Section {
    pub fn new(a: Polynomial, b: Polynomial) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroSection);
        }
        let g = a.gcd(&b);
        let (a, b) = (a.exact_div(&g)?, b.exact_div(&g)?);
        let lead = if b.is_zero() { a.leading() } else { b.leading() }.unwrap().inverse()?;
        Ok(Section { a: a.scale(&lead), b: b.scale(&lead) })
    }

    /// The constant section through `p` in every fiber.
    pub fn constant(p: &ProjValue) -> Self {
        Section::new(Polynomial::constant(p.u().clone()), Polynomial::constant(p.v().clone()))
            .expect("projective values are nonzero")
    }

    /// The affine section `[f : 1]`.
    pub fn graph(f: Polynomial) -> Self {
        Section { a: f, b: Polynomial::one() }
    }

    pub fn a(&self) -> &Polynomial {
        &self.a
    }

    pub fn b(&self) -> &Polynomial {
        &self.b
    }

    pub fn is_constant(&self) -> bool {
        self.a.is_constant() && self.b.is_constant()
    }

    /// `a_self b_other - a_other b_self`; its roots are where the sections meet.
    pub fn cross(&self, other: &Section) -> Polynomial {
        &(&self.a * &other.b) - &(&other.a * &self.b)
    }
}

impl<'de> Deserialize<'de> for Section {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            a: Polynomial,
            b: Polynomial,
        }
        let raw = Raw::deserialize(d)?;
        Section::new(raw.a, raw.b).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {}]", self.a, self.b)
    }
}

pub fn evaluate_section(s: &Section, mu: &CurvePoint) -> ProjValue {
    ProjValue::new(s.a.eval(mu.value()), s.b.eval(mu.value())).expect("coprime sections never vanish")
}

pub fn intersection_multiplicity(s: &Section, t: &Section, mu: &CurvePoint) -> Order {
    s.cross(t).vanishing_order(mu)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DivisorEntry {
    pub point: CurvePoint,
    pub mult: u32,
}

/// A finite effective divisor on the base line. Equality ignores the order
/// in which points are listed.
#[derive(Clone, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct CurveDivisor {
    entries: Vec<DivisorEntry>,
}

impl CurveDivisor {
    pub fn new() -> Self {
        CurveDivisor::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (CurvePoint, u32)>>(entries: I) -> Result<Self> {
        let mut d = CurveDivisor::new();
        for (point, mult) in entries {
            if mult == 0 {
                return Err(Error::Validation(format!("divisor multiplicity at x = {point} must be positive")));
            }
            if d.mult(&point) > 0 {
                return Err(Error::Validation(format!("point x = {point} listed twice in a divisor")));
            }
            d.add(point, mult);
        }
        Ok(d)
    }

    /// `mu` with multiplicity `mult`.
    pub fn point(mu: CurvePoint, mult: u32) -> Self {
        let mut d = CurveDivisor::new();
        d.add(mu, mult);
        d
    }

    pub fn add(&mut self, point: CurvePoint, mult: u32) {
        if mult == 0 {
            return;
        }
        match self.entries.iter_mut().find(|e| e.point == point) {
            Some(e) => e.mult += mult,
            None => self.entries.push(DivisorEntry { point, mult }),
        }
    }

    pub fn mult(&self, point: &CurvePoint) -> u32 {
        self.entries.iter().find(|e| &e.point == point).map_or(0, |e| e.mult)
    }

    pub fn entries(&self) -> &[DivisorEntry] {
        &self.entries
    }

    pub fn support(&self) -> impl Iterator<Item = &CurvePoint> {
        self.entries.iter().map(|e| &e.point)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.entries.iter().map(|e| e.mult).sum()
    }

    /// `prod (x - mu)^mult`.
    pub fn polynomial(&self) -> Polynomial {
        self.entries
            .iter()
            .fold(Polynomial::one(), |acc, e| &acc * &Polynomial::linear_factor(e.point.value()).pow(e.mult))
    }
}

impl PartialEq for CurveDivisor {
    fn eq(&self, other: &Self) -> bool {
        self.entries.len() == other.entries.len() && self.entries.iter().all(|e| other.mult(&e.point) == e.mult)
    }
}

impl Eq for CurveDivisor {}

impl<'de> Deserialize<'de> for CurveDivisor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<DivisorEntry>::deserialize(d)?;
        CurveDivisor::from_entries(raw.into_iter().map(|e| (e.point, e.mult))).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for CurveDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*({})", e.mult, e.point)?;
        }
        Ok(())
    }
}

/// `sum_mu mult_mu(s2, s3) mu`, the divisor over which two sections meet.
pub fn recover_divisor(s2: &Section, s3: &Section) -> Result<CurveDivisor> {
    let cross = s2.cross(s3);
    if cross.is_zero() {
        return Err(Error::InfiniteDivisor);
    }
    let mut d = CurveDivisor::new();
    for (mu, m) in roots(&cross) {
        d.add(CurvePoint(mu), m);
    }
    Ok(d)
}

/// Divisor of a nonzero polynomial's roots in its coefficient field.
pub fn root_divisor(p: &Polynomial) -> CurveDivisor {
    let mut d = CurveDivisor::new();
    for (mu, m) in roots(p) {
        d.add(CurvePoint(mu), m);
    }
    d
}
