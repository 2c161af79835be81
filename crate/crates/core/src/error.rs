use thiserror::Error;

use crate::algebra::ValidationReport;
use crate::builders::GcmViolation;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// The algebra data itself is inconsistent (e.g. a Cartan element that
    /// does not act diagonally).
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("algebra failed validation with {} violation(s)", .0.violations.len())]
    Validation(ValidationReport),

    #[error("not a generalized Cartan matrix: {}", describe_gcm(.0))]
    Gcm(Vec<GcmViolation>),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

fn describe_gcm(v: &[GcmViolation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
