//! Bundles of singular plane cubics, computed exactly.
//!
//! A bundle of nodal and cuspidal plane cubics over the affine line is
//! described by its normalization, a P¹-bundle, together with the two
//! sections glued to form the node. This crate builds such bundles from
//! elementary transformations of `P¹ × A¹`, recovers the transformation data
//! from a bundle, and decides projectivity by a roots-of-unity test on the
//! fiber constants. All arithmetic happens in cyclotomic fields `Q(zeta_N)`.
//!
//! * [`exact_field`]: scalars, polynomials, the projective line.
//! * [`ruled_surface`]: sections, divisors, elementary transformations.
//! * [`cubic_bundle`]: the identification map to plane cubics, nodal group law,
//!   osculating points.
//! * [`projectivity`]: the root-of-unity criterion and the local
//!   Q-Cartier certificate.
//! * [`pipeline`]: end-to-end construction and recovery, scenario files,
//!   reports.

pub mod cubic_bundle;
pub mod error;
pub mod exact_field;
pub mod pipeline;
pub mod projectivity;
pub mod ruled_surface;

pub use error::{Error, Result};
