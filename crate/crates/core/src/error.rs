//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("measures live on different sample spaces")]
    MismatchedSpaces,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("negative weight {value} at outcome `{label}`")]
    NegativeWeight { label: String, value: f64 },

    #[error("non-finite weight or value at outcome `{label}`")]
    NonFiniteEntry { label: String },

    #[error("total mass is zero; cannot normalize")]
    ZeroMass,

    #[error("mass {mass} is not 1 within {tol}")]
    NotNormalized { mass: f64, tol: f64 },

    #[error("duplicate outcome label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown outcome label `{0}`")]
    UnknownLabel(String),

    #[error("sample space must have at least one outcome")]
    EmptySpace,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("value is not finite: {0}")]
    NotFinite(String),

    #[error("no sign change found while bracketing {what} after {steps} growth steps")]
    BracketFailure { what: String, steps: usize },

    #[error("simplex pivot limit exceeded ({0} pivots)")]
    PivotLimit(usize),

    #[error("polytope is unbounded; vertex enumeration is not defined")]
    UnboundedPolytope,

    #[error("operation limited to dimension <= {limit}, got {got}")]
    DimensionTooLarge { limit: usize, got: usize },

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("marginals of the joint do not match: max deviation {max_dev}")]
    MarginalMismatch {
        max_dev: f64,
        row_marginal: Vec<f64>,
        col_marginal: Vec<f64>,
    },
}
