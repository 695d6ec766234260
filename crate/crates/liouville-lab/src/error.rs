//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("singular matrix (|det| = {abs_det:.3e})")]
    SingularMatrix { abs_det: f64 },

    #[error("decomposition failed: commute residual {residual_commute:.3e}, nilpotent residual {residual_nilpotent:.3e}")]
    DecompositionFailed {
        residual_commute: f64,
        residual_nilpotent: f64,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero vector cannot be projectivized")]
    ZeroVector,

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("empty fixed space: unipotent generators must fix a vector; tolerance likely too tight")]
    EmptyFixedSpace,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
