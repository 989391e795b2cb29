//! Exact arithmetic: cyclotomic scalars, polynomials over them, and the
//! projective line.

pub mod cyclotomic;
pub mod lattice;
pub mod multipoly;
pub mod poly;
pub mod projective;
pub mod roots;
pub mod scalar;
pub mod text;

pub use multipoly::MultiPoly;
pub use poly::{vanishing_order, CurvePoint, Order, Polynomial};
pub use projective::{moebius_apply, Moebius, ProjValue};
pub use scalar::{is_root_of_unity, make_root_of_unity, Scalar};
