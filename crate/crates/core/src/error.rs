use thiserror::Error;

use crate::verdict::Witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("chart mismatch: [{left}] vs [{right}]")]
    ChartMismatch { left: String, right: String },

    #[error("unknown coordinate `{0}`")]
    UnknownCoordinate(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("schema violation: {0}")]
    Schema(String),

    #[error("unresolved reference `{0}`")]
    Reference(String),

    /// An input failed a structural check that a construction depends on.
    #[error("rejected input: {witness}")]
    Rejected { witness: Witness },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
