//! witnesskit constructs entanglement witnesses from non-positive maps
//! and certifies them without a block-positivity search.
//!
//! The pipeline: assemble a PSD operator from the shift-structured family
//! ([`witnessfam`]), push it through 1 (x) R with the reduction map
//! ([`superops`]) to get a witness candidate, then certify by checking
//! that 1 (x) R^{-1} maps the candidate back to a PSD operator
//! ([`verify`]). The inverse reduction map restricts to a bijection from
//! rank-(d-1) projectors onto rank-1 projectors ([`projectors`]), which is
//! what makes the certificate sound. An independent seesaw minimizer over
//! product states cross-checks every certificate numerically.
//!
//! Each major capability has a runnable example under `examples/`; the
//! `witnesskit` binary exposes the same operations as `build`, `verify`,
//! `detect`, and `sweep` subcommands.

pub mod cli;
pub mod densecore;
pub mod error;
pub mod projectors;
pub mod superops;
pub mod verify;
pub mod witnessfam;

#[cfg(test)]
mod test_fixtures;

pub use densecore::{
    hermitian_eigen, is_psd, kron, min_eigenvalue, orthonormalize, ComplexMatrix,
    EigenDecomposition, HermitianOperator,
};
pub use error::{Error, Result};
pub use projectors::OrthoProjector;
pub use superops::{
    identity_map, inverse_reduction_map, maximally_entangled_projector, reduction_map,
    SuperOperator,
};
pub use verify::{
    blockpos_min, certify_via_map, detect, product_expectation, ProductState, WitnessVerdict,
};
pub use witnessfam::{
    build_witness, build_wtilde, feasibility_report, shift_operator, ChoiFamilyParams,
    FeasibilityReport,
};
