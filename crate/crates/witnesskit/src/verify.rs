//! Witness certification and independent block-positivity probing.
//!
//! Certification follows the transform route: a Hermitian operator with a
//! negative eigenvalue is certified as an entanglement witness when its
//! blockwise image under a suitable map (the inverse reduction map) is
//! PSD. A failed certification is inconclusive, never a refutation. The
//! seesaw minimizer provides an independent numerical check of
//! non-negativity over product states.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::densecore::{
    hermitian_eigen, is_psd, min_eigenvalue, random_unit_vector, vec_kron, ComplexMatrix,
    HermitianOperator,
};
use crate::error::{Error, Result};
use crate::superops::SuperOperator;

/// Default number of seesaw restarts.
pub const DEFAULT_RESTARTS: usize = 30;
/// Default seesaw iterations per restart.
pub const DEFAULT_ITERS: usize = 50;
/// A restart stops early once the objective improves by less than this.
pub const SEESAW_EARLY_STOP: f64 = 1e-12;

/// Certification record for one operator/map pair.
#[derive(Debug, Clone)]
pub struct WitnessVerdict {
    pub hermitian: bool,
    pub min_eigenvalue: f64,
    /// Eigenvector of the smallest eigenvalue; the state the operator
    /// detects when certification succeeds.
    pub negative_witness_vector: Vec<Complex64>,
    /// Smallest eigenvalue of the blockwise transform.
    pub transformed_min_eigenvalue: f64,
    pub certified: bool,
    pub map_name: String,
}

impl WitnessVerdict {
    /// Human-readable reason when not certified; `None` when certified.
    pub fn inconclusive_reason(&self, tol: f64) -> Option<&'static str> {
        if self.certified {
            None
        } else if !self.hermitian {
            Some("operator is not Hermitian")
        } else if self.min_eigenvalue >= -tol {
            Some("no negative eigenvalue")
        } else {
            Some("transformed operator is not positive semidefinite")
        }
    }
}

/// Normalized bipartite product vector psi (x) phi.
#[derive(Debug, Clone)]
pub struct ProductState {
    psi: Vec<Complex64>,
    phi: Vec<Complex64>,
}

impl ProductState {
    pub fn new(psi: Vec<Complex64>, phi: Vec<Complex64>) -> Result<Self> {
        for v in [&psi, &phi] {
            let deviation = (crate::densecore::vec_norm(v) - 1.0).abs();
            if deviation > 1e-10 {
                return Err(Error::NotNormalized { deviation });
            }
        }
        Ok(Self { psi, phi })
    }

    pub fn psi(&self) -> &[Complex64] {
        &self.psi
    }

    pub fn phi(&self) -> &[Complex64] {
        &self.phi
    }

    /// The joint vector psi (x) phi.
    pub fn joint(&self) -> Vec<Complex64> {
        vec_kron(&self.psi, &self.phi)
    }
}

/// Certify `w` through the transform route.
///
/// Certified means: Hermitian, at least one eigenvalue below -tol, and a
/// PSD blockwise transform at tol. With the inverse reduction map this is
/// a sound entanglement-witness certificate; `certified = false` is
/// inconclusive.
pub fn certify_via_map(
    w: &HermitianOperator,
    lam: &SuperOperator,
    tol: f64,
    map_name: &str,
) -> Result<WitnessVerdict> {
    assert!(tol >= 0.0, "tolerance must be nonnegative");
    if w.dim() != lam.d() * lam.d() {
        return Err(Error::DimensionMismatch {
            expected: lam.d() * lam.d(),
            got: w.dim(),
        });
    }
    let eig = hermitian_eigen(w)?;
    let min_eig = eig.min_eigenvalue();
    let transformed = lam.partial_apply_hermitian(w)?;
    let transformed_min = min_eigenvalue(&transformed)?;
    Ok(WitnessVerdict {
        hermitian: true,
        min_eigenvalue: min_eig,
        negative_witness_vector: eig.eigenvector(0),
        transformed_min_eigenvalue: transformed_min,
        certified: min_eig < -tol && transformed_min >= -tol,
        map_name: map_name.to_string(),
    })
}

/// <psi (x) phi| w |psi (x) phi> for a general square matrix; fails with
/// [`Error::NonRealExpectation`] when the imaginary part exceeds 1e-8.
pub fn product_expectation_raw(w: &ComplexMatrix, s: &ProductState) -> Result<f64> {
    let joint = s.joint();
    if w.rows() != joint.len() || !w.is_square() {
        return Err(Error::DimensionMismatch {
            expected: joint.len(),
            got: w.rows(),
        });
    }
    let value = w.quadratic_form(&joint);
    if value.im.abs() > 1e-8 {
        return Err(Error::NonRealExpectation { imag: value.im });
    }
    Ok(value.re)
}

/// Expectation of a Hermitian operator on a product state.
pub fn product_expectation(w: &HermitianOperator, s: &ProductState) -> Result<f64> {
    product_expectation_raw(w.matrix(), s)
}

/// Seesaw minimization of the product expectation.
///
/// Alternates exact eigen-minimization over the two tensor factors: with
/// psi fixed, the conditional operator M_psi with entries
/// `<psi (x) k| w |psi (x) l>` is diagonalized and phi set to its bottom
/// eigenvector, then symmetrically for psi. The objective is monotone
/// non-increasing within a restart, and the returned value -- the best
/// over all restarts, ties to the lowest restart index -- is an upper
/// bound on the true product-state minimum.
///
/// Each restart draws its starting vector from a sub-seed derived from
/// `(seed, restart index)`, so the result is reproducible for a given
/// `(seed, restarts, iters)` regardless of evaluation order.
pub fn blockpos_min(
    w: &HermitianOperator,
    restarts: usize,
    iters: usize,
    seed: u64,
) -> Result<(f64, ProductState)> {
    assert!(restarts >= 1, "need at least one restart");
    assert!(iters >= 1, "need at least one iteration");
    let d = bipartite_local_dim(w.dim())?;

    let mut best: Option<(f64, ProductState)> = None;
    for restart in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, restart as u64));
        let psi0 = random_unit_vector(d, &mut rng);
        let (value, state, _) = seesaw_restart(w, d, psi0, iters)?;
        let improves = match &best {
            Some((best_value, _)) => value < *best_value,
            None => true,
        };
        if improves {
            best = Some((value, state));
        }
    }
    Ok(best.expect("at least one restart ran"))
}

/// One seesaw run from a fixed starting vector; returns the final value,
/// the achieving product state, and the per-iteration objective trace.
pub(crate) fn seesaw_restart(
    w: &HermitianOperator,
    d: usize,
    psi0: Vec<Complex64>,
    iters: usize,
) -> Result<(f64, ProductState, Vec<f64>)> {
    let mut psi = psi0;
    let mut phi = vec![Complex64::ZERO; d];
    let mut trace = Vec::with_capacity(iters);
    let mut value = f64::INFINITY;
    for _ in 0..iters {
        let m_psi = conditional_operator(w, d, &psi, true)?;
        let eig_phi = hermitian_eigen(&m_psi)?;
        phi = eig_phi.eigenvector(0);

        let m_phi = conditional_operator(w, d, &phi, false)?;
        let eig_psi = hermitian_eigen(&m_phi)?;
        psi = eig_psi.eigenvector(0);

        let current = eig_psi.min_eigenvalue();
        trace.push(current);
        if value - current < SEESAW_EARLY_STOP {
            value = value.min(current);
            break;
        }
        value = current;
    }
    let state = ProductState::new(psi, phi)?;
    Ok((value, state, trace))
}

/// Tr(w rho) and whether it certifies detection (value < -tol).
///
/// `rho` must be a state: PSD within `tol` and unit trace within 1e-9.
pub fn detect(w: &HermitianOperator, rho: &HermitianOperator, tol: f64) -> Result<(bool, f64)> {
    if w.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: w.dim(),
            got: rho.dim(),
        });
    }
    if !is_psd(rho, tol)? {
        return Err(Error::NotAState {
            reason: "not positive semidefinite".to_string(),
        });
    }
    let trace = rho.trace();
    if (trace - 1.0).abs() > 1e-9 {
        return Err(Error::NotAState {
            reason: format!("trace is {trace}, expected 1"),
        });
    }
    let value = (w.matrix() * rho.matrix()).trace().re;
    Ok((value < -tol, value))
}

/// Local dimension d of a bipartite operator of total dimension d^2.
pub fn bipartite_local_dim(total: usize) -> Result<usize> {
    let d = (total as f64).sqrt().round() as usize;
    if d * d != total || d < 2 {
        return Err(Error::DimensionMismatch {
            expected: d * d,
            got: total,
        });
    }
    Ok(d)
}

/// The d x d operator seen by one tensor factor when the other is pinned
/// to `fixed`: entries `<fixed (x) k| w |fixed (x) l>` when `first` is
/// true, `<k (x) fixed| w |l (x) fixed>` otherwise.
fn conditional_operator(
    w: &HermitianOperator,
    d: usize,
    fixed: &[Complex64],
    first: bool,
) -> Result<HermitianOperator> {
    let wm = w.matrix();
    let m = ComplexMatrix::from_fn(d, d, |k, l| {
        let mut sum = Complex64::ZERO;
        for i in 0..d {
            for j in 0..d {
                let (row, col) = if first {
                    (i * d + k, j * d + l)
                } else {
                    (k * d + i, l * d + j)
                };
                sum += fixed[i].conj() * wm[(row, col)] * fixed[j];
            }
        }
        sum
    });
    HermitianOperator::new(m)
}

/// SplitMix64 derivation of per-restart seeds.
fn sub_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
