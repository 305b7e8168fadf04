//! The reduction map R(A) = Tr(A) 1 - A and its compositional inverse
//! R^{-1}(A) = Tr(A)/(d-1) 1 - A as concrete superoperator matrices.
//!
//! Demonstrates the algebra the certification rests on: R and R^{-1}
//! invert each other, both are self-adjoint for the Hilbert-Schmidt
//! scalar product, they coincide at d = 2, and for d >= 3 the inverse is
//! not positive: on the all-ones matrix it produces exactly one negative
//! eigenvalue d(2-d)/(d-1).
//!
//! Run with: cargo run --example reduction_maps

use num_complex::Complex64;
use witnesskit::densecore::{hermitian_eigen, ComplexMatrix, HermitianOperator};
use witnesskit::superops::{identity_map, inverse_reduction_map, reduction_map};

fn main() -> witnesskit::Result<()> {
    let d = 3;
    let r = reduction_map(d);
    let r_inv = inverse_reduction_map(d);

    let a = ComplexMatrix::diagonal(&[1.0, 2.0, 3.0]);
    println!("A = diag(1, 2, 3)");
    println!("R(A)      =\n{}", r.apply(&a)?);
    println!("R^-1(A)   =\n{}\n", r_inv.apply(&a)?);

    let composed = r.compose(&r_inv)?;
    let drift = composed.rep().max_abs_diff(identity_map(d).rep());
    println!("|| R o R^-1 - id ||_max = {drift:.3e}");
    println!(
        "self-adjointness defects: R {:.3e}, R^-1 {:.3e}",
        r.rep().max_abs_diff(&r.rep().dagger()),
        r_inv.rep().max_abs_diff(&r_inv.rep().dagger()),
    );
    println!(
        "d=2 coincidence: || R - R^-1 ||_max = {:.3e}\n",
        reduction_map(2)
            .rep()
            .max_abs_diff(inverse_reduction_map(2).rep())
    );

    for d in [3usize, 4, 5] {
        let ones = ComplexMatrix::from_fn(d, d, |_, _| Complex64::ONE);
        let image = inverse_reduction_map(d).apply(&ones)?;
        let eig = hermitian_eigen(&HermitianOperator::new(image)?)?;
        let df = d as f64;
        println!(
            "d={d}: spec(R^-1(all-ones)) = {:?}  (predicted minimum {:+.4})",
            eig.eigenvalues
                .iter()
                .map(|v| (v * 1e4).round() / 1e4)
                .collect::<Vec<_>>(),
            df * (2.0 - df) / (df - 1.0),
        );
    }

    Ok(())
}
