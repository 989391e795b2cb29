use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::exact_field::{CurvePoint, Moebius, MultiPoly, Polynomial, ProjValue, Scalar};
use crate::ruled_surface::{evaluate_section, Section};

/// A point of `P^2`, scaled so that its last nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PlanePoint([Scalar; 3]);

impl PlanePoint {
    pub fn new(z: [Scalar; 3]) -> Result<Self> {
        let last = z.iter().rev().find(|c| !c.is_zero()).ok_or(Error::ZeroProjectivePoint)?;
        let inv = last.inverse()?;
        Ok(PlanePoint(z.map(|c| &c * &inv)))
    }

    pub fn coords(&self) -> &[Scalar; 3] {
        &self.0
    }
}

impl<'de> Deserialize<'de> for PlanePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let z = <[Scalar; 3]>::deserialize(d)?;
        PlanePoint::new(z).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {} : {}]", self.0[0], self.0[1], self.0[2])
    }
}

/// `[y0^2 y1 - c y1^3 : y0^3 - c y0 y1^2 : y1^3]` on the fiber where `g = c`.
pub fn gamma_at(c: &Scalar, y: &ProjValue) -> PlanePoint {
    let (y0, y1) = (y.u(), y.v());
    let w = &(y0 * y0) - &(&(c * y1) * y1);
    let z = [&w * y1, &w * y0, &(y1 * y1) * y1];
    PlanePoint::new(z).expect("y1 = 0 forces w = y0^2 != 0")
}

pub fn gamma_map(g: &Polynomial, y: &ProjValue, mu: &CurvePoint) -> PlanePoint {
    gamma_at(&g.eval(mu.value()), y)
}

/// `z1^2 z2 - z0^3 - g z0^2 z2`, the plane cubic of the fiber with parameter `g`.
pub fn cubic_form(g: &Scalar, z: &PlanePoint) -> Scalar {
    let [z0, z1, z2] = z.coords();
    let z0sq = z0 * z0;
    &(&(&(z1 * z1) * z2) - &(&z0sq * z0)) - &(&(g * &z0sq) * z2)
}

/// The cubic form composed with the gamma coordinates, as a polynomial in
/// `(y0, y1, g)`. It is identically zero: the image of every fiber lies on
/// the cubic `z1^2 z2 = z0^3 + g z0^2 z2`.
pub fn cubic_residual() -> MultiPoly {
    let (y0, y1, g) = (MultiPoly::var(3, 0), MultiPoly::var(3, 1), MultiPoly::var(3, 2));
    let w = &(&y0 * &y0) - &(&(&g * &y1) * &y1);
    let z0 = &w * &y1;
    let z1 = &w * &y0;
    let z2 = &(&y1 * &y1) * &y1;
    let z0sq = &z0 * &z0;
    &(&(&(&z1 * &z1) * &z2) - &(&z0sq * &z0)) - &(&(&g * &z0sq) * &z2)
}

/// Fiber coordinates in which the two branches of the double section are
/// `[h : 1]` and `[-h : 1]`, so the double section reads `y0^2 = g y1^2`
/// with `g = h^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleSectionChart {
    pub g: Polynomial,
    pub h: Polynomial,
    /// Rows of the polynomial matrix taking bundle coordinates to chart coordinates.
    pub symmetrizer: [[Polynomial; 2]; 2],
}

impl DoubleSectionChart {
    /// A chart for the branches `sigma0`, `sigma_inf`, invertible over `mu`.
    pub fn new(sigma0: &Section, sigma_inf: &Section, mu: &CurvePoint) -> Result<Self> {
        let h = sigma0.cross(sigma_inf).scale(&Scalar::from_ratio(1, 2));
        if h.is_zero() {
            return Err(Error::Degenerate("the two branches of the double section coincide".into()));
        }
        // shear [y0 : y1] -> [y0 : s y0 + y1] until neither branch passes through [1:0] over mu
        let s = (0..)
            .map(Scalar::from_int)
            .find(|s| {
                let b0 = &(&sigma0.a().eval(mu.value()) * s) + &sigma0.b().eval(mu.value());
                let binf = &(&sigma_inf.a().eval(mu.value()) * s) + &sigma_inf.b().eval(mu.value());
                !b0.is_zero() && !binf.is_zero()
            })
            .expect("two points of P^1 avoid [1:0] after some shear");
        let shear = |sec: &Section| (sec.a().clone(), &sec.a().scale(&s) + sec.b());
        let (a0, b0) = shear(sigma0);
        let (ai, bi) = shear(sigma_inf);
        let half = Scalar::from_ratio(1, 2);
        let lead = &b0 * &bi;
        let off = -&(&(&a0 * &bi) + &(&ai * &b0)).scale(&half);
        // [[lead, off], [0, 1]] * [[1, 0], [s, 1]]
        let symmetrizer = [[&lead + &off.scale(&s), off], [Polynomial::constant(s), Polynomial::one()]];
        Ok(DoubleSectionChart { g: &h * &h, h, symmetrizer })
    }

    /// The chart over `mu` as a Möbius map of the fiber.
    pub fn at(&self, mu: &CurvePoint) -> Result<Moebius> {
        let e = |i: usize, j: usize| self.symmetrizer[i][j].eval(mu.value());
        Moebius::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    /// `gamma` of a fiber point given in bundle coordinates.
    pub fn gamma(&self, y: &ProjValue, mu: &CurvePoint) -> Result<PlanePoint> {
        Ok(gamma_map(&self.g, &self.at(mu)?.apply(y), mu))
    }

    pub fn h_at(&self, mu: &CurvePoint) -> Scalar {
        self.h.eval(mu.value())
    }
}

/// The value of a section over `mu` in chart coordinates.
pub fn chart_value(chart: &DoubleSectionChart, s: &Section, mu: &CurvePoint) -> Result<ProjValue> {
    Ok(chart.at(mu)?.apply(&evaluate_section(s, mu)))
}
