use thiserror::Error;

use crate::verify::CheckReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("matrix is singular")]
    Singular,

    #[error("algebra has no unit")]
    NoUnit,

    /// A required equational property failed; the report carries the first violation.
    #[error("{check} failed")]
    PropertyFailed { check: String, report: Box<CheckReport> },

    #[error("search space of {size} candidates exceeds the cap of {cap}")]
    Inconclusive { size: u128, cap: u128 },

    #[error("enumeration guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn property(check: &str, report: CheckReport) -> Self {
        Error::PropertyFailed {
            check: check.to_string(),
            report: Box::new(report),
        }
    }
}
