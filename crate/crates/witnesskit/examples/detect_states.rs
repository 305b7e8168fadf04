//! Detecting entangled states: Tr(W rho) < 0 certifies entanglement.
//!
//! Family witnesses are evaluated against the maximally entangled state
//! and against a product state. Detection values across the feasible x
//! range show how the corner weight controls detection strength.
//!
//! Run with: cargo run --example detect_states

use witnesskit::densecore::{basis_vector, outer, vec_kron, HermitianOperator};
use witnesskit::superops::maximally_entangled_projector;
use witnesskit::verify::detect;
use witnesskit::witnessfam::{build_witness, ChoiFamilyParams};

fn main() -> witnesskit::Result<()> {
    let tol = 1e-9;
    let maxent = maximally_entangled_projector(3);
    let product_vec = vec_kron(&basis_vector(3, 0), &basis_vector(3, 0));
    let product_state = HermitianOperator::new(outer(&product_vec, &product_vec))?;

    println!("witness family a = (1, 0, 0), varying x:");
    println!("{:>6}  {:>12}  {:>10}", "x", "Tr(W P+)", "detected");
    for k in 0..=10 {
        let x = 0.1 * k as f64;
        let w = build_witness(&ChoiFamilyParams::new(3, vec![1.0, 0.0, 0.0], x)?);
        let (detected, value) = detect(&w, &maxent, tol)?;
        println!("{x:>6.1}  {value:>12.4}  {detected:>10}");
    }

    let choi = build_witness(&ChoiFamilyParams::new(3, vec![1.0, 0.0, 0.0], 1.0)?);
    let (detected, value) = detect(&choi, &product_state, tol)?;
    println!("\nproduct state |11><11| against the x=1 witness:");
    println!("  Tr(W rho) = {value}, detected: {detected} (witnesses never flag separable states)");

    Ok(())
}
