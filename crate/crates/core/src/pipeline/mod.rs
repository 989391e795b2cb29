//! End-to-end construction and recovery of bundles, scenario files and reports.

mod construct;
mod report;
mod scenario;

pub use construct::{
    construct_bundle, discriminant, recover_construction, roundtrip, trafo_to_trivial, RoundTrip, Trivialization,
};
pub use report::{render_report, run_scenario, run_standalone, Format, Report, RequestReport, Status, REPORT_SCHEMA};
pub use scenario::{Request, Scenario};
