//! Map the certification region of the family along the x axis.
//!
//! For each grid point: the smallest eigenvalues of the family member and
//! of the witness candidate, the certification verdict, and the seesaw
//! cross-check. The certified region is the PSD interval of the family
//! minus the points where the candidate has no negative eigenvalue.
//!
//! The `witnesskit sweep` subcommand runs the same computation over
//! arbitrary grids and writes CSV.
//!
//! Run with: cargo run --release --example sweep_family

use witnesskit::densecore::min_eigenvalue;
use witnesskit::superops::inverse_reduction_map;
use witnesskit::verify::{blockpos_min, certify_via_map};
use witnesskit::witnessfam::{build_witness, build_wtilde, ChoiFamilyParams};

fn main() -> witnesskit::Result<()> {
    let d = 3;
    let a = vec![1.0, 0.0, 0.0];
    let lam = inverse_reduction_map(d);

    println!(
        "{:>6}  {:>12}  {:>12}  {:>10}  {:>12}",
        "x", "min eig ~W", "min eig W", "certified", "seesaw min"
    );
    for k in 0..18 {
        let x = -0.6 + 0.1 * k as f64;
        let params = ChoiFamilyParams::new(d, a.clone(), x)?;
        let wtilde_min = min_eigenvalue(&build_wtilde(&params))?;
        let witness = build_witness(&params);
        let verdict = certify_via_map(&witness, &lam, 1e-9, "inverse-reduction")?;
        let (seesaw, _) = blockpos_min(&witness, 30, 50, 1)?;
        println!(
            "{x:>6.2}  {wtilde_min:>12.4e}  {:>12.4e}  {:>10}  {seesaw:>12.4e}",
            verdict.min_eigenvalue, verdict.certified
        );
    }

    Ok(())
}
