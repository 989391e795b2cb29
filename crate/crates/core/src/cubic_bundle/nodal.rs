//! The smooth locus of a nodal fiber as `C^*`.
//!
//! On the fiber `y0^2 = h^2 y1^2` the node has the two preimages `[+-h : 1]`.
//! The parametrization `iota(t) = [h (1 + t) : 1 - t]` sends `0` and `infinity`
//! to them and `1` to `[1:0]`, whose image is the flex `[0:1:0]`. Three
//! smooth points are collinear exactly when `t1 t2 t3 = 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::gamma::{gamma_at, PlanePoint};
use crate::error::{Error, Result};
use crate::exact_field::cyclotomic::{field_contains, lcm_u32};
use crate::exact_field::{Polynomial, ProjValue, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GmPoint(Scalar);

impl GmPoint {
    pub fn new(t: Scalar) -> Result<Self> {
        if t.is_zero() {
            return Err(Error::NodePreimage);
        }
        Ok(GmPoint(t))
    }

    pub fn one() -> Self {
        GmPoint(Scalar::one())
    }

    pub fn t(&self) -> &Scalar {
        &self.0
    }
}

impl fmt::Display for GmPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn nodal(h: &Scalar) -> Result<()> {
    if h.is_zero() {
        return Err(Error::Degenerate("h = 0: the fiber is cuspidal".into()));
    }
    Ok(())
}

/// `t = (y0 - h y1) / (y0 + h y1)`.
pub fn gm_coordinate(h: &Scalar, y: &ProjValue) -> Result<GmPoint> {
    nodal(h)?;
    let hy1 = h * y.v();
    let den = y.u() + &hy1;
    if den.is_zero() {
        return Err(Error::NodePreimage);
    }
    GmPoint::new((y.u() - &hy1).try_div(&den)?)
}

/// `iota(t) = [h (1 + t) : 1 - t]`.
pub fn iota(h: &Scalar, t: &GmPoint) -> ProjValue {
    let one = Scalar::one();
    ProjValue::new(h * &(&one + t.t()), &one - t.t()).expect("t and h are nonzero")
}

/// The point of the plane cubic `z1^2 z2 = z0^3 + h^2 z0^2 z2` with parameter `t`.
pub fn curve_point(h: &Scalar, t: &GmPoint) -> PlanePoint {
    gamma_at(&(h * h), &iota(h, t))
}

/// Homogeneous coordinates of the parametrized cubic, as polynomials in `t`.
fn parametrization(h: &Scalar) -> [Polynomial; 3] {
    let y0 = Polynomial::new(vec![h.clone(), h.clone()]);
    let y1 = Polynomial::from_ints(&[1, -1]);
    let g = Polynomial::constant(h * h);
    let w = &(&y0 * &y0) - &(&(&g * &y1) * &y1);
    [&w * &y1, &w * &y0, &(&y1 * &y1) * &y1]
}

fn eval3(z: &[Polynomial; 3], t: &Scalar) -> [Scalar; 3] {
    [z[0].eval(t), z[1].eval(t), z[2].eval(t)]
}

fn derivative3(z: &[Polynomial; 3]) -> [Polynomial; 3] {
    [z[0].derivative(), z[1].derivative(), z[2].derivative()]
}

fn det3(r: [&[Scalar; 3]; 3]) -> Scalar {
    let m = |i: usize, j: usize| &r[i][j];
    let t0 = m(0, 0) * &(&(m(1, 1) * m(2, 2)) - &(m(1, 2) * m(2, 1)));
    let t1 = m(0, 1) * &(&(m(1, 0) * m(2, 2)) - &(m(1, 2) * m(2, 0)));
    let t2 = m(0, 2) * &(&(m(1, 0) * m(2, 1)) - &(m(1, 1) * m(2, 0)));
    &(&t0 - &t1) + &t2
}

fn cross3(a: &[Scalar; 3], b: &[Scalar; 3]) -> [Scalar; 3] {
    [&(&a[1] * &b[2]) - &(&a[2] * &b[1]), &(&a[2] * &b[0]) - &(&a[0] * &b[2]), &(&a[0] * &b[1]) - &(&a[1] * &b[0])]
}

/// Whether the three points `iota(t_i)` on the fiber with `g = h^2` lie on
/// a line, counted with multiplicity: a repeated parameter asks for the
/// tangent line there, a triple one for a flex.
pub fn collinear_test(h: &Scalar, t1: &GmPoint, t2: &GmPoint, t3: &GmPoint) -> Result<bool> {
    nodal(h)?;
    let z = parametrization(h);
    let dz = derivative3(&z);
    let ddz = derivative3(&dz);
    let mut ts = [t1.t(), t2.t(), t3.t()];
    // bring a repeated parameter to the front
    if ts[1] == ts[2] && ts[0] != ts[1] {
        ts.swap(0, 2);
    } else if ts[0] == ts[2] && ts[0] != ts[1] {
        ts.swap(1, 2);
    }
    let rows = if ts[0] == ts[1] && ts[1] == ts[2] {
        [eval3(&z, ts[0]), eval3(&dz, ts[0]), eval3(&ddz, ts[0])]
    } else if ts[0] == ts[1] {
        [eval3(&z, ts[0]), eval3(&dz, ts[0]), eval3(&z, ts[2])]
    } else {
        [eval3(&z, ts[0]), eval3(&z, ts[1]), eval3(&z, ts[2])]
    };
    Ok(det3([&rows[0], &rows[1], &rows[2]]).is_zero())
}

/// The third intersection of the cubic with the chord through `iota(t1)`,
/// `iota(t2)` (the tangent when they agree), found from the line alone.
pub fn third_point(h: &Scalar, t1: &GmPoint, t2: &GmPoint) -> Result<GmPoint> {
    nodal(h)?;
    let z = parametrization(h);
    let p1 = eval3(&z, t1.t());
    let other = if t1 == t2 { eval3(&derivative3(&z), t1.t()) } else { eval3(&z, t2.t()) };
    let line = cross3(&p1, &other);
    let restricted = (0..3).fold(Polynomial::zero(), |acc, i| &acc + &z[i].scale(&line[i]));
    let known = &Polynomial::linear_factor(t1.t()) * &Polynomial::linear_factor(t2.t());
    let rest = restricted.exact_div(&known)?;
    match rest.degree() {
        Some(1) => GmPoint::new(-&rest.coeff(0).try_div(&rest.coeff(1))?),
        _ => Err(Error::Degenerate("the line meets the cubic in the node".into())),
    }
}

/// Chord-tangent sum with the flex `iota(1)` as neutral element.
pub fn group_add(h: &Scalar, a: &GmPoint, b: &GmPoint) -> Result<GmPoint> {
    let c = third_point(h, a, b)?;
    third_point(h, &c, &GmPoint::one())
}

/// `k` times `a` under [`group_add`].
pub fn group_multiple(h: &Scalar, k: u32, a: &GmPoint) -> Result<GmPoint> {
    let mut acc = GmPoint::one();
    for _ in 0..k {
        acc = group_add(h, &acc, a)?;
    }
    Ok(acc)
}

/// The `k` points `base * xi` with `xi^k = 1`, in the field of `base`.
pub fn osculating_points(k: u32, base: &GmPoint) -> Result<Vec<GmPoint>> {
    if k == 0 {
        return Err(Error::Validation("k must be positive".into()));
    }
    let conductor = base.t().conductor();
    if !field_contains(conductor, k) {
        return Err(Error::InsufficientConductor { k, conductor, required: lcm_u32(conductor, k) });
    }
    (0..k as i64).map(|j| GmPoint::new(base.t() * &Scalar::root_of_unity(k, j))).collect()
}
