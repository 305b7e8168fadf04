//! Generalized Choi-type family builder.
//!
//! A family member is a d^2 x d^2 operator assembled from shift-conjugated
//! blocks: diagonal block i is S^i diag(a) S^{i dagger}, off-diagonal
//! block (i, j) is S^i (x e_11) S^{j dagger}. The PSD region of the family
//! is an interval in x; pushing a feasible member through 1 (x) R yields a
//! witness candidate.

use serde::Serialize;

use crate::densecore::{is_psd, ComplexMatrix, HermitianOperator};
use crate::error::{Error, Result};
use crate::superops::reduction_map;

/// Default PSD tolerance; the family boundary sits exactly on eigenvalue 0.
pub const PSD_TOL: f64 = 1e-9;

/// Parameters (d, a_1..a_d, x) of a family member.
///
/// The a_i are the block diagonal weights (nonnegative), x the real
/// off-diagonal corner weight.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiFamilyParams {
    d: usize,
    a: Vec<f64>,
    x: f64,
}

impl ChoiFamilyParams {
    pub fn new(d: usize, a: Vec<f64>, x: f64) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidFamilyParams {
                reason: format!("d must be >= 2, got {d}"),
            });
        }
        if a.len() != d {
            return Err(Error::InvalidFamilyParams {
                reason: format!("expected {d} diagonal weights, got {}", a.len()),
            });
        }
        if a.iter().any(|v| !v.is_finite()) || !x.is_finite() {
            return Err(Error::InvalidFamilyParams {
                reason: "parameters must be finite".to_string(),
            });
        }
        if a.iter().any(|&v| v < 0.0) {
            return Err(Error::InvalidFamilyParams {
                reason: "a_i >= 0 violated".to_string(),
            });
        }
        Ok(Self { d, a, x })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn x(&self) -> f64 {
        self.x
    }
}

/// Feasibility record for one parameter point.
///
/// `eigen_confirmed` is authoritative for the PSD question; the interval
/// test and the y_k conditions are reported alongside so disagreements
/// between the two printed readings stay visible.
#[derive(Debug, Clone, Serialize)]
pub struct FeasibilityReport {
    /// x in [-a_1/(d-1), a_1]: PSD test of the corner submatrix.
    pub psd_interval_ok: bool,
    /// y_k = (1/(d-1)) sum_i a_i - a_k.
    pub y: Vec<f64>,
    /// All y_k >= 0.
    pub y_nonneg: bool,
    /// Eigenvalue oracle on the assembled operator (the feasibility gate).
    pub eigen_confirmed: bool,
}

/// Cyclic shift S|i> = |i+1 mod d> as a permutation matrix.
pub fn shift_operator(d: usize) -> ComplexMatrix {
    assert!(d >= 2, "shift operator needs d >= 2");
    ComplexMatrix::from_fn(d, d, |i, j| {
        if i == (j + 1) % d {
            num_complex::Complex64::ONE
        } else {
            num_complex::Complex64::ZERO
        }
    })
}

/// Assemble the family member for the given parameters.
///
/// All entries are reals drawn from {a_1..a_d, x, 0}; the result is
/// Hermitian for any real x.
pub fn build_wtilde(params: &ChoiFamilyParams) -> HermitianOperator {
    let d = params.d;
    let shift = shift_operator(d);
    let mut shift_powers = vec![ComplexMatrix::identity(d)];
    for _ in 1..d {
        shift_powers.push(&shift * shift_powers.last().unwrap());
    }

    let diag = ComplexMatrix::diagonal(&params.a);
    let mut corner = ComplexMatrix::zeros(d, d);
    corner[(0, 0)] = num_complex::Complex64::new(params.x, 0.0);

    let mut out = ComplexMatrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let inner = if i == j { &diag } else { &corner };
            let block = &(&shift_powers[i] * inner) * &shift_powers[j].dagger();
            out.set_block(i * d, j * d, &block);
        }
    }
    HermitianOperator::new(out).expect("shift-conjugated blocks give a Hermitian operator")
}

/// Check the PSD conditions for a parameter point.
///
/// Both printed readings are evaluated -- the corner-submatrix interval
/// and the y_k system -- but only the eigenvalue oracle gates feasibility.
pub fn feasibility_report(params: &ChoiFamilyParams) -> Result<FeasibilityReport> {
    let d = params.d as f64;
    let a1 = params.a[0];
    let psd_interval_ok = params.x >= -a1 / (d - 1.0) && params.x <= a1;

    let total: f64 = params.a.iter().sum();
    let y: Vec<f64> = params.a.iter().map(|&ak| total / (d - 1.0) - ak).collect();
    let y_nonneg = y.iter().all(|&v| v >= 0.0);

    let eigen_confirmed = is_psd(&build_wtilde(params), PSD_TOL)?;

    Ok(FeasibilityReport {
        psd_interval_ok,
        y,
        y_nonneg,
        eigen_confirmed,
    })
}

/// The witness candidate W = (1 (x) R) of the assembled family member:
/// diagonal blocks (sum_i a_i) 1 - S^k diag(a) S^{k dagger}, off-diagonal
/// blocks -x S^i e_11 S^{j dagger}.
pub fn build_witness(params: &ChoiFamilyParams) -> HermitianOperator {
    reduction_map(params.d)
        .partial_apply_hermitian(&build_wtilde(params))
        .expect("reduction map preserves Hermiticity and dimensions")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densecore::{basis_vector, hermitian_eigen, min_eigenvalue};
    use crate::superops::inverse_reduction_map;
    use crate::test_fixtures::{choi_witness, choi_wtilde};
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shift_permutes_basis_vectors_cyclically() {
        let s = shift_operator(3);
        for (from, to) in [(0usize, 1usize), (1, 2), (2, 0)] {
            let image = s.matvec(&basis_vector(3, from));
            assert_eq!(image, basis_vector(3, to));
        }

        let swap = shift_operator(2);
        assert_eq!(swap.matvec(&basis_vector(2, 0)), basis_vector(2, 1));
        assert_eq!(swap.matvec(&basis_vector(2, 1)), basis_vector(2, 0));

        let cubed = &(&s * &s) * &s;
        assert_eq!(cubed, ComplexMatrix::identity(3));
    }

    #[test]
    fn wtilde_reproduces_the_choi_transform() {
        let params = ChoiFamilyParams::new(3, vec![1.0, 0.0, 0.0], 1.0).unwrap();
        assert_eq!(build_wtilde(&params).matrix(), choi_wtilde().matrix());
    }

    #[test]
    fn wtilde_with_zero_corner_weight_is_diagonal() {
        let params = ChoiFamilyParams::new(3, vec![1.0, 0.0, 0.0], 0.0).unwrap();
        let expected = ComplexMatrix::diagonal(&[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]);
        assert!(build_wtilde(&params).matrix().max_abs_diff(&expected) <= 1e-15);
    }

    #[test]
    fn wtilde_dimension_two_block_expansion() {
        let params = ChoiFamilyParams::new(2, vec![1.0, 1.0], 1.0).unwrap();
        let mut expected = ComplexMatrix::identity(4);
        expected[(0, 3)] = Complex64::ONE;
        expected[(3, 0)] = Complex64::ONE;
        assert!(build_wtilde(&params).matrix().max_abs_diff(&expected) <= 1e-15);
    }

    #[test]
    fn wtilde_structure_is_sparse_and_real() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for d in [2usize, 3, 4, 5] {
            let a: Vec<f64> = (0..d).map(|_| rng.random_range(0.0..2.0)).collect();
            let x = rng.random_range(-2.0..2.0);
            let wtilde = build_wtilde(&ChoiFamilyParams::new(d, a, x).unwrap());
            let nonzero = wtilde
                .matrix()
                .entries()
                .iter()
                .filter(|z| z.norm() > 0.0)
                .count();
            assert!(nonzero <= d * d + d * (d - 1));
            assert!(wtilde.matrix().entries().iter().all(|z| z.im == 0.0));
        }
    }

    #[test]
    fn feasibility_on_the_choi_point_and_just_outside() {
        let inside = ChoiFamilyParams::new(3, vec![1.0, 0.0, 0.0], 1.0).unwrap();
        let report = feasibility_report(&inside).unwrap();
        assert!(report.psd_interval_ok);
        assert!(report.eigen_confirmed);
        // The printed y_k reading disagrees on this very point.
        assert!(!report.y_nonneg);
        assert!((report.y[0] - (-0.5)).abs() <= 1e-15);

        // Corner submatrix spectrum is {a1 + (d-1)x, a1 - x}; at x = 1.01
        // the second branch is -0.01.
        let outside = ChoiFamilyParams::new(3, vec![1.0, 0.0, 0.0], 1.01).unwrap();
        let report = feasibility_report(&outside).unwrap();
        assert!(!report.psd_interval_ok);
        assert!(!report.eigen_confirmed);

        let zero = ChoiFamilyParams::new(3, vec![0.0, 0.0, 0.0], 0.0).unwrap();
        let report = feasibility_report(&zero).unwrap();
        assert!(report.eigen_confirmed);
        assert!(build_wtilde(&zero).matrix().fro_norm() <= 1e-15);
    }

    #[test]
    fn witness_reproduces_the_choi_witness_exactly() {
        let params = ChoiFamilyParams::new(3, vec![1.0, 0.0, 0.0], 1.0).unwrap();
        assert_eq!(build_witness(&params).matrix(), choi_witness().matrix());
    }

    #[test]
    fn witness_with_zero_corner_weight_is_psd() {
        let params = ChoiFamilyParams::new(3, vec![1.0, 0.0, 0.0], 0.0).unwrap();
        let w = build_witness(&params);
        let expected = ComplexMatrix::diagonal(&[0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0]);
        assert!(w.matrix().max_abs_diff(&expected) <= 1e-15);
        assert!(min_eigenvalue(&w).unwrap() >= -1e-12);
    }

    #[test]
    fn witness_round_trips_through_the_inverse_map() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for d in [2usize, 3, 4] {
            let a: Vec<f64> = (0..d).map(|_| rng.random_range(0.0..2.0)).collect();
            let x = rng.random_range(-2.0..2.0);
            let params = ChoiFamilyParams::new(d, a, x).unwrap();
            let wtilde = build_wtilde(&params);
            let back = inverse_reduction_map(d)
                .partial_apply_hermitian(&build_witness(&params))
                .unwrap();
            assert!(back.matrix().max_abs_diff(wtilde.matrix()) <= 1e-12);
        }
    }

    #[test]
    fn interval_reading_matches_the_eigen_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for d in [3usize, 4, 5] {
            for _ in 0..500 {
                let a: Vec<f64> = (0..d).map(|_| rng.random_range(0.0..2.0)).collect();
                let x = rng.random_range(-2.0..2.0);
                let a1 = a[0];
                let lower = -a1 / (d as f64 - 1.0);
                if (x - a1).abs() < 1e-7 || (x - lower).abs() < 1e-7 {
                    continue;
                }
                let params = ChoiFamilyParams::new(d, a, x).unwrap();
                let report = feasibility_report(&params).unwrap();
                assert_eq!(
                    report.psd_interval_ok, report.eigen_confirmed,
                    "disagreement at d={d}, a1={a1}, x={x}"
                );
            }
        }
    }

    #[test]
    fn params_validation() {
        assert!(matches!(
            ChoiFamilyParams::new(3, vec![-1.0, 0.0, 0.0], 0.0).unwrap_err(),
            Error::InvalidFamilyParams { .. }
        ));
        assert!(matches!(
            ChoiFamilyParams::new(3, vec![1.0, 0.0], 0.0).unwrap_err(),
            Error::InvalidFamilyParams { .. }
        ));
        assert!(matches!(
            ChoiFamilyParams::new(1, vec![1.0], 0.0).unwrap_err(),
            Error::InvalidFamilyParams { .. }
        ));
        assert!(matches!(
            ChoiFamilyParams::new(3, vec![1.0, 0.0, f64::NAN], 0.0).unwrap_err(),
            Error::InvalidFamilyParams { .. }
        ));
    }

    #[test]
    fn wtilde_eigenvalues_at_the_choi_point() {
        let params = ChoiFamilyParams::new(3, vec![1.0, 0.0, 0.0], 1.0).unwrap();
        let eig = hermitian_eigen(&build_wtilde(&params)).unwrap();
        for v in &eig.eigenvalues[..8] {
            assert!(v.abs() <= 1e-9);
        }
        assert!((eig.eigenvalues[8] - 3.0).abs() <= 1e-9);
    }
}
