use thiserror::Error;

/// Errors produced by graph construction, counting and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    IndexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("binary query needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("requested order {requested} exceeds the configured maximum {max}")]
    Overflow { requested: u128, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("graph of order {order} exceeds the limit {limit} for this operation")]
    TooLarge { order: usize, limit: usize },
    #[error("search budget exhausted; best lower bound {best_lower_bound}")]
    Timeout { best_lower_bound: usize },
    #[error("no valid witness after {attempts} attempt(s)")]
    CertificateFailed { attempts: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
