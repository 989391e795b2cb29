//! Coordinates on a surface reached from `P^1 x A^1` by elementary
//! transformations.
//!
//! Every `P^1`-bundle over `A^1` is trivial, so a surface in the
//! transformation log is again `P^1 x A^1`, glued to the base surface by a
//! birational map `[y0 : y1] -> F [y0 : y1]` with `F` a 2x2 polynomial
//! matrix. Two matrices give the same surface with the same coordinates up
//! to a fiberwise automorphism exactly when they differ by a unimodular
//! factor on the left and a scalar factor, so `F` is kept in row Hermite
//! form with content 1. This makes coordinates depend only on the surface.

use crate::exact_field::{Polynomial, Scalar};

use super::section::Section;

/// `(g, u, v)` with `g = u a + v b` monic (or zero when `a = b = 0`).
pub fn ext_gcd(a: &Polynomial, b: &Polynomial) -> (Polynomial, Polynomial, Polynomial) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut u0, mut u1) = (Polynomial::one(), Polynomial::zero());
    let (mut v0, mut v1) = (Polynomial::zero(), Polynomial::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
        let u2 = &u0 - &(&q * &u1);
        let v2 = &v0 - &(&q * &v1);
        (r0, r1) = (r1, r);
        (u0, u1) = (u1, u2);
        (v0, v1) = (v1, v2);
    }
    match r0.leading() {
        Some(lead) => {
            let inv = lead.inverse().expect("leading coefficient is nonzero");
            (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
        }
        None => (r0, u0, v0),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    m: [[Polynomial; 2]; 2],
}

impl Frame {
    pub fn identity() -> Self {
        Frame { m: [[Polynomial::one(), Polynomial::zero()], [Polynomial::zero(), Polynomial::one()]] }
    }

    pub fn entries(&self) -> &[[Polynomial; 2]; 2] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == Frame::identity()
    }

    pub fn det(&self) -> Polynomial {
        &(&self.m[0][0] * &self.m[1][1]) - &(&self.m[0][1] * &self.m[1][0])
    }

    /// The transformation centered at `[c : 1]` over `x = mu`, composed
    /// after `self`.
    pub fn elt_finite(&self, mu: &Scalar, c: &Scalar) -> Frame {
        let t = Polynomial::linear_factor(mu);
        let [r0, r1] = &self.m;
        let top = [&r0[0] - &r1[0].scale(c), &r0[1] - &r1[1].scale(c)];
        let bottom = [&t * &r1[0], &t * &r1[1]];
        Frame::canonical([top, bottom])
    }

    /// The transformation centered at `[1 : 0]` over `x = mu`.
    pub fn elt_infinite(&self, mu: &Scalar) -> Frame {
        let t = Polynomial::linear_factor(mu);
        let [r0, r1] = &self.m;
        Frame::canonical([[&t * &r0[0], &t * &r0[1]], r1.clone()])
    }

    /// Image of a base section in these coordinates.
    pub fn apply(&self, s: &Section) -> Section {
        let [[p, q], [r, t]] = &self.m;
        let a = &(p * s.a()) + &(q * s.b());
        let b = &(r * s.a()) + &(t * s.b());
        Section::new(a, b).expect("frames are invertible")
    }

    /// Row Hermite form `[[d1, e], [0, d2]]`, `d1`, `d2` monic,
    /// `deg e < deg d2`, divided by the gcd of its entries.
    fn canonical(m: [[Polynomial; 2]; 2]) -> Frame {
        let [[p, q], [r, s]] = m;
        let (d1, mut e, d2) = if r.is_zero() {
            let inv = p.leading().expect("invertible frame").inverse().unwrap();
            let d2inv = s.leading().expect("invertible frame").inverse().unwrap();
            (p.scale(&inv), q.scale(&inv), s.scale(&d2inv))
        } else {
            let (g, u, v) = ext_gcd(&p, &r);
            let e = &(&u * &q) + &(&v * &s);
            let det = &(&p * &s) - &(&r * &q);
            let d2 = det.exact_div(&g).expect("gcd divides the determinant");
            let inv = d2.leading().expect("invertible frame").inverse().unwrap();
            (g, e, d2.scale(&inv))
        };
        e = e.div_rem(&d2).expect("d2 is nonzero").1;
        let content = d1.gcd(&e).gcd(&d2);
        let div = |p: &Polynomial| p.exact_div(&content).expect("content divides");
        Frame { m: [[div(&d1), div(&e)], [Polynomial::zero(), div(&d2)]] }
    }
}
