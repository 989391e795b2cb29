//! Sections of `P^1 x A^1`, their intersection multiplicities, and
//! elementary transformations with their inverses.
//!
//! Surfaces are represented birationally: a transformation log over the
//! trivial bundle, with coordinates fixed by a canonical [`Frame`].

mod elt;
mod frame;
mod section;

pub use elt::{
    elt_composite, elt_composite_scheduled, elt_single, inverse_elt_data, roundtrip_verify, EltData, EltPair, Step,
    TransformResult,
};
pub use frame::{ext_gcd, Frame};
pub use section::{
    evaluate_section, intersection_multiplicity, recover_divisor, root_divisor, CurveDivisor, DivisorEntry, Section,
};
