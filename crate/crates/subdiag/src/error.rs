//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by kernel, algebra, solver and circle-grid operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("matrix is not Hermitian: residual {residual:.3e} exceeds {tol:.3e}")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("matrix is not positive definite: eigenvalue {eigenvalue:.3e} at or below {tol:.3e}")]
    NotPositiveDefinite { eigenvalue: f64, tol: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("triangular factor has a zero diagonal entry at index {index}")]
    SingularFactor { index: usize },

    #[error("operand lies outside the algebra: off-pattern mass {mass:.3e} exceeds {tol:.3e}")]
    NotInAlgebra { mass: f64, tol: f64 },

    #[error("operand is not invertible inside the algebra: {reason}")]
    NotInvertibleInAlgebra { reason: String },

    #[error("invalid state density: {0}")]
    InvalidState(String),

    #[error("point violates the block pattern: {0}")]
    InvalidPoint(String),

    #[error("dimension {dim} exceeds the brute-force search limit {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("sample {index} is not strictly positive: {value}")]
    NonpositiveSample { index: usize, value: f64 },

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("degree {degree} requires a grid larger than {points} points")]
    DegreeExceedsGrid { degree: usize, points: usize },

    #[error("grid size {0} must be a power of two, at least 8")]
    InvalidGrid(usize),

    #[error("normal equations are ill-conditioned: estimated condition {cond:.3e}")]
    IllConditionedNormalEquations { cond: f64 },

    #[error("eigendecomposition did not converge")]
    EigDidNotConverge,
}

pub type Result<T> = std::result::Result<T, Error>;
