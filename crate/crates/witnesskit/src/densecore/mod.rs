//! Dense complex linear-algebra kernel: matrices, tensor products,
//! Hermitian eigendecomposition, PSD testing.
//!
//! All operations are pure functions of their inputs; values are freely
//! shareable across threads for reading.

mod eigen;
mod matrix;

pub use eigen::{
    hermitian_eigen, is_psd, min_eigenvalue, EigenDecomposition, MAX_SWEEPS, OFF_DIAG_TOL,
};
pub use matrix::{
    basis_vector, kron, orthonormalize, outer, random_complex_gaussian, random_complex_matrix,
    random_hermitian, random_unit_vector, vec_inner, vec_kron, vec_norm, ComplexMatrix,
    HermitianOperator, HERMITICITY_REJECT_TOL, RANK_DEFICIENT_TOL,
};
