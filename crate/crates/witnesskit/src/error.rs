//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by the numerical kernel and the operator-algebra layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The iterative eigensolver did not reach the requested off-diagonal
    /// norm within its sweep budget.
    #[error(
        "eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})"
    )]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },

    /// Operand shapes are incompatible.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A matrix failed the Hermiticity check on construction.
    #[error("matrix is not Hermitian: defect {defect:.3e} exceeds {limit:.3e}")]
    NotHermitian { defect: f64, limit: f64 },

    /// A vector family has numerical rank below its cardinality.
    #[error("rank-deficient vector set: residual norm {residual:.3e} at vector {index}")]
    RankDeficient { index: usize, residual: f64 },

    /// Input vectors are not pairwise orthonormal.
    #[error("vectors are not orthonormal: |<v{i}|v{j}> - delta| = {deviation:.3e}")]
    NotOrthonormal { i: usize, j: usize, deviation: f64 },

    /// Requested projector rank is outside [1, d].
    #[error("invalid projector rank {rank} for dimension {dim}")]
    InvalidRank { rank: usize, dim: usize },

    /// A vector expected to be normalized is not.
    #[error("vector is not normalized: |norm - 1| = {deviation:.3e}")]
    NotNormalized { deviation: f64 },

    /// A Hermitian operator failed projector validation.
    #[error("operator is not an orthogonal projector: {reason}")]
    NotAProjector { reason: String },

    /// Family parameters violate a constraint.
    #[error("invalid family parameters: {reason}")]
    InvalidFamilyParams { reason: String },

    /// An expectation value that must be real came out complex.
    #[error("expectation value has imaginary part {imag:.3e}")]
    NonRealExpectation { imag: f64 },

    /// A density-matrix argument failed the state checks.
    #[error("operator is not a quantum state: {reason}")]
    NotAState { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
