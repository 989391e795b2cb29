//! Bundles of singular plane cubics from a `P^1`-bundle with a split double
//! section: the identification map to plane cubics, fiber types, the group
//! law on nodal fibers, and osculating points.

mod descriptor;
mod gamma;
mod nodal;

pub use descriptor::{classify_fiber, osculating_sections_near_cusp, BundleDescriptor, CubicFiber, FiberKind};
pub use gamma::{chart_value, cubic_form, cubic_residual, gamma_at, gamma_map, DoubleSectionChart, PlanePoint};
pub use nodal::{
    collinear_test, curve_point, gm_coordinate, group_add, group_multiple, iota, osculating_points, third_point,
    GmPoint,
};
