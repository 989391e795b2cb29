//! Deciding projectivity of a constructed bundle, and the local
//! certificate that osculating sections are Q-Cartier.

mod cartier;
mod criterion;

pub use cartier::{minimal_cartier_exponent, q_cartier_reduce, verify_ab_decomposition, CartierCertificate};
pub use criterion::{
    decide_projective, normalize_configuration, ConstructionInput, NormalizedConfig, ProjectivityVerdict, Witness,
};
