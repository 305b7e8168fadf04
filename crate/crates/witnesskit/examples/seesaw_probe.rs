//! Independent block-positivity probe by seesaw minimization.
//!
//! The seesaw alternates exact eigen-minimization over the two factors of
//! a product vector, giving a monotone upper bound on the product-state
//! minimum of a bipartite operator. For a certified witness the bound
//! must stay nonnegative (up to numerics); for operators with negative
//! product expectations it finds them quickly.
//!
//! Run with: cargo run --example seesaw_probe

use num_complex::Complex64;
use witnesskit::densecore::{ComplexMatrix, HermitianOperator};
use witnesskit::verify::{blockpos_min, product_expectation};
use witnesskit::witnessfam::{build_witness, ChoiFamilyParams};

fn main() -> witnesskit::Result<()> {
    let restarts = 50;
    let iters = 50;
    let seed = 1;

    let witness = build_witness(&ChoiFamilyParams::new(3, vec![1.0, 0.0, 0.0], 1.0)?);
    let (value, state) = blockpos_min(&witness, restarts, iters, seed)?;
    println!("Choi-like witness:");
    println!("  seesaw minimum: {value:+.6e} (expected ~0: the witness vanishes on |1>|1>)");
    println!(
        "  achieved on psi (x) phi with expectation {:+.6e}\n",
        product_expectation(&witness, &state)?
    );

    let identity = HermitianOperator::identity(9);
    let (value, _) = blockpos_min(&identity, 5, 20, seed)?;
    println!("identity: seesaw minimum {value:+.6e} (expected 1)\n");

    let negative =
        HermitianOperator::new(ComplexMatrix::identity(9).scale(Complex64::new(-1.0, 0.0)))?;
    let (value, _) = blockpos_min(&negative, 5, 20, seed)?;
    println!("-identity: seesaw minimum {value:+.6e} (not block-positive)");

    Ok(())
}
