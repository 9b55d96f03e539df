use thiserror::Error;

/// Errors raised by the exact-arithmetic pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial division is not exact over the integers")]
    InexactDivision,
    #[error("operation would create a non-affine coefficient in the gluing parameters")]
    NonAffine,
    #[error("degenerate rational function: {0}")]
    Degenerate(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid Coxeter graph: {0}")]
    Graph(String),
    #[error("group order exceeds the enumeration cap of {0}")]
    GroupTooLarge(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("polynomial vanishes at an interval endpoint")]
    EndpointRoot,
    #[error("root location routes disagree: {0}")]
    RouteDisagreement(String),
    #[error("repeated root detected")]
    Multiplicity,
    #[error("precision cap exhausted after {0} refinements")]
    PrecisionExhausted(u32),
    #[error("invalid gluing counts ({l},{m},{n}): {reason}")]
    InvalidCounts { l: u64, m: u64, n: u64, reason: String },
    #[error("no printed growth function matches: {0}")]
    Unmatched(String),
    #[error("arithmetic consistency check failed: {0}")]
    Consistency(String),
    #[error("unsupported Coxeter label {0} for exact geometry")]
    UnsupportedLabel(String),
    #[error("singular matrix")]
    Singular,
    #[error("zero leading principal minor of order {0}")]
    ZeroMinor(usize),
    #[error("geometric check failed: {0}")]
    Geometry(String),
}

pub type Result<T> = std::result::Result<T, Error>;
