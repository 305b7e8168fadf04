//! Assemble a family member and its witness candidate.
//!
//! The family lives on C^d (x) C^d and is parameterized by d diagonal
//! weights a_1..a_d and one corner weight x. The PSD member is pushed
//! through 1 (x) R to obtain the witness candidate. The parameters below
//! reproduce the Choi-like witness; edit them to explore the family.
//!
//! Run with: cargo run --example build_family

use witnesskit::witnessfam::{build_witness, build_wtilde, feasibility_report, ChoiFamilyParams};

fn main() -> witnesskit::Result<()> {
    let params = ChoiFamilyParams::new(3, vec![1.0, 0.0, 0.0], 1.0)?;

    let wtilde = build_wtilde(&params);
    println!("family member (a = {:?}, x = {}):", params.a(), params.x());
    println!("{}\n", wtilde.matrix());

    let report = feasibility_report(&params)?;
    println!("corner-submatrix interval test: {}", report.psd_interval_ok);
    println!(
        "y_k reading: {:?} (all nonnegative: {})",
        report.y, report.y_nonneg
    );
    println!(
        "eigenvalue oracle (the gate):   {}\n",
        report.eigen_confirmed
    );

    let witness = build_witness(&params);
    println!("witness candidate (1 (x) R applied blockwise):");
    println!("{}", witness.matrix());

    Ok(())
}
