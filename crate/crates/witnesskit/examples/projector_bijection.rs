//! The complement bijection between rank-k and rank-(d-k) projectors,
//! and the inverse reduction map as its rank-(d-1) <-> rank-1 instance.
//!
//! On rank-(d-1) projectors the inverse reduction map acts exactly as
//! P -> 1 - P, landing on a rank-1 projector; every rank-1 projector is
//! attained. This surjectivity is the hypothesis that makes the
//! certification route sound.
//!
//! Run with: cargo run --example projector_bijection

use witnesskit::densecore::{basis_vector, HermitianOperator};
use witnesskit::projectors::OrthoProjector;
use witnesskit::superops::inverse_reduction_map;

fn main() -> witnesskit::Result<()> {
    let d = 4;
    let p = OrthoProjector::random(d, d - 1, 7)?;
    println!("random rank-{} projector P in dimension {d}:", p.rank());
    println!("{}\n", p.matrix());

    let q = p.complement();
    println!("complement Q = 1 - P has rank {}:", q.rank());
    println!("{}\n", q.matrix());

    let image = inverse_reduction_map(d).apply(p.matrix())?;
    println!(
        "|| R^-1(P) - Q ||_max = {:.3e}  (the map is the complement on rank d-1)",
        image.max_abs_diff(q.matrix())
    );
    let validated = OrthoProjector::from_operator(HermitianOperator::new(image)?)?;
    println!("validated image rank: {}\n", validated.rank());

    // Surjectivity: a chosen rank-1 target is hit from its complement.
    let target = OrthoProjector::from_orthonormal_vectors(&[basis_vector(d, 2)])?;
    let preimage = target.complement();
    let back = inverse_reduction_map(d).apply(preimage.matrix())?;
    println!(
        "surjectivity witness: || R^-1(1 - |2><2|) - |2><2| ||_max = {:.3e}",
        back.max_abs_diff(target.matrix())
    );

    // Product projectors: rank-k projectors of the bipartite space built
    // from simple tensors, as used to pin expectation values on products.
    let psi = basis_vector(3, 0);
    let phis = [basis_vector(3, 1), basis_vector(3, 2)];
    let product = OrthoProjector::product(&psi, &phis)?;
    println!(
        "\nproduct projector |0><0| (x) (|1><1| + |2><2|) has rank {} in dimension {}",
        product.rank(),
        product.d()
    );

    Ok(())
}
