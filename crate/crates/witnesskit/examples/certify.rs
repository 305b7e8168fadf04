//! Certify a witness candidate without a block-positivity search.
//!
//! A Hermitian operator with a negative eigenvalue is an entanglement
//! witness if 1 (x) R^{-1} maps it to a PSD operator. The check needs two
//! eigendecompositions and nothing else. When the transform is not PSD
//! the answer is inconclusive, not a refutation.
//!
//! Run with: cargo run --example certify

use witnesskit::densecore::HermitianOperator;
use witnesskit::superops::inverse_reduction_map;
use witnesskit::verify::certify_via_map;
use witnesskit::witnessfam::{build_witness, ChoiFamilyParams};

fn report(label: &str, verdict: &witnesskit::WitnessVerdict, tol: f64) {
    println!("{label}:");
    println!(
        "  min eigenvalue:             {:+.6e}",
        verdict.min_eigenvalue
    );
    println!(
        "  transformed min eigenvalue: {:+.6e}",
        verdict.transformed_min_eigenvalue
    );
    match verdict.inconclusive_reason(tol) {
        None => println!("  -> certified entanglement witness"),
        Some(reason) => println!("  -> inconclusive ({reason})"),
    }
    println!();
}

fn main() -> witnesskit::Result<()> {
    let tol = 1e-9;
    let lam = inverse_reduction_map(3);

    // The Choi-like witness: certified through the transform route.
    let choi = build_witness(&ChoiFamilyParams::new(3, vec![1.0, 0.0, 0.0], 1.0)?);
    report(
        "Choi-like witness",
        &certify_via_map(&choi, &lam, tol, "inverse-reduction")?,
        tol,
    );

    // A PSD operator is not even a witness candidate.
    let identity = HermitianOperator::identity(9);
    report(
        "identity operator",
        &certify_via_map(&identity, &lam, tol, "inverse-reduction")?,
        tol,
    );

    // Outside the family's PSD interval the method stays silent.
    let outside = build_witness(&ChoiFamilyParams::new(3, vec![1.0, 0.0, 0.0], 1.5)?);
    report(
        "x = 1.5 candidate",
        &certify_via_map(&outside, &lam, tol, "inverse-reduction")?,
        tol,
    );

    Ok(())
}
