use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report. Variants are grouped by the layer
/// that raises them; the CLI maps them onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // exact arithmetic
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix (determinant is zero)")]
    SingularMatrix,
    #[error("invalid scalar: {0}")]
    InvalidScalar(String),
    #[error("[0:0] is not a point of the projective line")]
    ZeroProjectivePoint,
    #[error("{k}-th roots of unity are not in Q(zeta_{conductor}); embed into Q(zeta_{required})")]
    InsufficientConductor { k: u32, conductor: u32, required: u32 },

    // sections and elementary transformations
    #[error("a section needs (a, b) != (0, 0)")]
    ZeroSection,
    #[error("sections coincide; their intersection divisor is infinite")]
    InfiniteDivisor,
    #[error("divisor supports overlap at x = {point}")]
    OverlappingSupports { point: String },
    #[error("center index {index} out of range for {len} tracked sections")]
    CenterIndex { index: usize, len: usize },
    #[error("data section {pair} is not among the tracked sections")]
    UntrackedSection { pair: usize },
    #[error("schedule does not match the divisors: {0}")]
    BadSchedule(String),
    #[error("inverse formula needs a unique section avoiding section {pair} over x = {point}, found {candidates}")]
    InverseHypothesis { pair: usize, point: String, candidates: usize },

    // cubic fibers
    #[error("point is a preimage of the node")]
    NodePreimage,
    #[error("fiber over x = {0} is cuspidal; osculating data is only defined on nodal fibers")]
    CuspidalFiber(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("bundle descriptor violates its invariants: {0}")]
    Descriptor(String),
    #[error("transformation to the trivial bundle failed: {0}")]
    NotTrivializable(String),

    // projectivity
    #[error("xi = 1 yields the section [1:0], which never meets the singular locus")]
    XiIsOne,
    #[error("xi^{k} != 1")]
    NotRootOfUnity { k: u32 },

    // input handling
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        let mut message = e.to_string();
        if let Some(at) = message.rfind(" at line ") {
            message.truncate(at);
        }
        Error::Parse { line: e.line(), column: e.column(), message }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
