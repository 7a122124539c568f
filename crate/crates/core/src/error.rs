//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Body is empty or its affine hull has dimension below the ambient one.
    #[error("degenerate body: {0}")]
    DegenerateBody(&'static str),

    /// Hyperplane misses the body centroid beyond tolerance.
    #[error("hyperplane misses centroid by {distance:.3e} (tolerance {tolerance:.3e})")]
    CentroidMismatch { distance: f64, tolerance: f64 },

    /// Requested computation method does not apply to this input.
    #[error("method unsupported: {0}")]
    MethodUnsupported(&'static str),

    /// A documented precondition failed; the message names the condition.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// No rotation of the centroid line attains the requested ratio.
    #[error("ratio {0} is not attained by any centroid hyperplane of this body")]
    RatioUnattainable(f64),

    /// Not enough data points for a comparison.
    #[error("insufficient data: {0}")]
    InsufficientData(&'static str),

    /// Inputs have inconsistent dimensions.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Dimension outside the supported range (n >= 2 for analysis).
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    /// Malformed input values (non-finite coordinates, zero normals, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An internal numerical guard tripped (e.g. too many sign changes in one
    /// profile segment); the input is outside the shapes this code certifies.
    #[error("numerical guard: {0}")]
    NumericalGuard(String),
}

pub type Result<T> = std::result::Result<T, Error>;
