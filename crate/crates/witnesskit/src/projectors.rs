//! Orthogonal projector algebra: construction from orthonormal frames,
//! seeded random sampling, the rank-k <-> rank-(d-k) complement bijection,
//! and product projectors in the bipartite space.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::densecore::{
    hermitian_eigen, orthonormalize, outer, random_complex_gaussian, vec_inner, vec_kron, vec_norm,
    ComplexMatrix, HermitianOperator,
};
use crate::error::{Error, Result};

/// Pairwise inner products may deviate from delta_ij by at most this much.
pub const ORTHONORMALITY_TOL: f64 = 1e-10;

/// Eigenvalues of a validated projector must lie this close to {0, 1}.
pub const PROJECTOR_SPECTRUM_TOL: f64 = 1e-8;

/// Hermitian idempotent with integer rank.
///
/// Rank d - rank 0 outputs of [`OrthoProjector::complement`] are kept but
/// flagged degenerate; every other instance is a member of the rank-k set
/// with 1 <= k <= d.
#[derive(Debug, Clone)]
pub struct OrthoProjector {
    d: usize,
    rank: usize,
    matrix: HermitianOperator,
}

impl OrthoProjector {
    /// Span projector sum_i |v_i><v_i| of a pairwise-orthonormal family.
    pub fn from_orthonormal_vectors(vectors: &[Vec<Complex64>]) -> Result<Self> {
        assert!(!vectors.is_empty(), "need at least one vector");
        let d = vectors[0].len();
        check_orthonormal(vectors)?;
        let mut m = ComplexMatrix::zeros(d, d);
        for v in vectors {
            m = &m + &outer(v, v);
        }
        Ok(Self {
            d,
            rank: vectors.len(),
            matrix: HermitianOperator::new(m).expect("sum of |v><v| is Hermitian"),
        })
    }

    /// Validate an arbitrary Hermitian operator as a projector.
    ///
    /// The rank is the trace rounded to the nearest integer; validation
    /// requires every eigenvalue within [`PROJECTOR_SPECTRUM_TOL`] of
    /// {0, 1} and the trace within 1e-10 of its rounding.
    pub fn from_operator(op: HermitianOperator) -> Result<Self> {
        let eig = hermitian_eigen(&op)?;
        for &v in &eig.eigenvalues {
            if v.abs() > PROJECTOR_SPECTRUM_TOL && (v - 1.0).abs() > PROJECTOR_SPECTRUM_TOL {
                return Err(Error::NotAProjector {
                    reason: format!("eigenvalue {v:.3e} is not within 1e-8 of {{0, 1}}"),
                });
            }
        }
        let trace = op.trace();
        let rank = trace.round();
        if (trace - rank).abs() > 1e-10 {
            return Err(Error::NotAProjector {
                reason: format!("trace {trace} is not within 1e-10 of an integer"),
            });
        }
        Ok(Self {
            d: op.dim(),
            rank: rank as usize,
            matrix: op,
        })
    }

    /// Seeded rank-k projector: the span of the orthonormalized columns of
    /// a standard-complex-Gaussian d x k matrix (unitarily invariant).
    pub fn random(d: usize, k: usize, seed: u64) -> Result<Self> {
        if k < 1 || k > d {
            return Err(Error::InvalidRank { rank: k, dim: d });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let columns: Vec<Vec<Complex64>> = (0..k)
                .map(|_| (0..d).map(|_| random_complex_gaussian(&mut rng)).collect())
                .collect();
            // A Gaussian frame is rank-deficient with probability zero;
            // resample on the measure-zero event instead of failing.
            if let Ok(basis) = orthonormalize(&columns) {
                return Self::from_orthonormal_vectors(&basis);
            }
        }
    }

    /// The unique projector Q with P + Q = 1: rank d - k, PQ = QP = 0.
    /// A full-rank input yields the zero operator, rank 0, flagged
    /// degenerate.
    pub fn complement(&self) -> Self {
        let m = &ComplexMatrix::identity(self.d) - self.matrix.matrix();
        Self {
            d: self.d,
            rank: self.d - self.rank,
            matrix: HermitianOperator::new(m).expect("1 - P is Hermitian"),
        }
    }

    /// Product projector |psi><psi| (x) sum_i |phi_i><phi_i| in dimension
    /// d^2, built from the simple tensors psi (x) phi_i.
    pub fn product(psi: &[Complex64], phis: &[Vec<Complex64>]) -> Result<Self> {
        let norm_dev = (vec_norm(psi) - 1.0).abs();
        if norm_dev > ORTHONORMALITY_TOL {
            return Err(Error::NotNormalized {
                deviation: norm_dev,
            });
        }
        check_orthonormal(phis)?;
        let omegas: Vec<Vec<Complex64>> = phis.iter().map(|phi| vec_kron(psi, phi)).collect();
        Self::from_orthonormal_vectors(&omegas)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// True for the zero operator produced by complementing a full-rank
    /// projector.
    pub fn is_degenerate(&self) -> bool {
        self.rank == 0
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.matrix.matrix()
    }

    pub fn operator(&self) -> &HermitianOperator {
        &self.matrix
    }

    /// A unit vector of the kernel: the eigenvector of the smallest
    /// eigenvalue. Unique up to phase when the kernel is one-dimensional.
    pub fn kernel_vector(&self) -> Result<Vec<Complex64>> {
        Ok(hermitian_eigen(&self.matrix)?.eigenvector(0))
    }
}

fn check_orthonormal(vectors: &[Vec<Complex64>]) -> Result<()> {
    for (i, a) in vectors.iter().enumerate() {
        for (j, b) in vectors.iter().enumerate().skip(i) {
            let delta = if i == j { 1.0 } else { 0.0 };
            let deviation = (vec_inner(a, b) - delta).norm();
            if deviation > ORTHONORMALITY_TOL {
                return Err(Error::NotOrthonormal { i, j, deviation });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densecore::random_unit_vector;
    use crate::superops::inverse_reduction_map;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn real_vec(xs: &[f64]) -> Vec<Complex64> {
        xs.iter().map(|&x| c(x)).collect()
    }

    #[test]
    fn projector_from_single_basis_vector() {
        let p = OrthoProjector::from_orthonormal_vectors(&[real_vec(&[1.0, 0.0, 0.0])]).unwrap();
        assert_eq!(p.rank(), 1);
        assert!(
            p.matrix()
                .max_abs_diff(&ComplexMatrix::diagonal(&[1.0, 0.0, 0.0]))
                <= 1e-15
        );
    }

    #[test]
    fn projector_from_two_basis_vectors() {
        let p = OrthoProjector::from_orthonormal_vectors(&[
            real_vec(&[1.0, 0.0, 0.0]),
            real_vec(&[0.0, 1.0, 0.0]),
        ])
        .unwrap();
        assert_eq!(p.rank(), 2);
        assert!(
            p.matrix()
                .max_abs_diff(&ComplexMatrix::diagonal(&[1.0, 1.0, 0.0]))
                <= 1e-15
        );
    }

    #[test]
    fn projector_is_basis_independent() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let first = OrthoProjector::from_orthonormal_vectors(&[
            real_vec(&[1.0, 0.0, 0.0]),
            real_vec(&[0.0, 1.0, 0.0]),
        ])
        .unwrap();
        let second = OrthoProjector::from_orthonormal_vectors(&[
            real_vec(&[s, s, 0.0]),
            real_vec(&[s, -s, 0.0]),
        ])
        .unwrap();
        assert!(first.matrix().max_abs_diff(second.matrix()) <= 1e-10);
    }

    #[test]
    fn rejects_non_orthonormal_input() {
        let err = OrthoProjector::from_orthonormal_vectors(&[
            real_vec(&[1.0, 0.0]),
            real_vec(&[1.0, 0.0]),
        ])
        .unwrap_err();
        assert!(matches!(err, Error::NotOrthonormal { .. }));
    }

    #[test]
    fn full_rank_random_projector_is_identity() {
        let p = OrthoProjector::random(3, 3, 99).unwrap();
        assert!(p.matrix().max_abs_diff(&ComplexMatrix::identity(3)) <= 1e-10);
    }

    #[test]
    fn random_projector_invariants_and_determinism() {
        let p = OrthoProjector::random(4, 2, 7).unwrap();
        assert!((p.operator().trace() - 2.0).abs() <= 1e-10);
        let squared = p.matrix() * p.matrix();
        assert!(squared.max_abs_diff(p.matrix()) <= 1e-10);

        let again = OrthoProjector::random(4, 2, 7).unwrap();
        assert_eq!(p.matrix(), again.matrix());
    }

    #[test]
    fn random_projector_rejects_bad_rank() {
        assert!(matches!(
            OrthoProjector::random(4, 0, 1).unwrap_err(),
            Error::InvalidRank { .. }
        ));
        assert!(matches!(
            OrthoProjector::random(4, 5, 1).unwrap_err(),
            Error::InvalidRank { .. }
        ));
    }

    #[test]
    fn complement_small_cases() {
        let p = OrthoProjector::from_orthonormal_vectors(&[real_vec(&[1.0, 0.0, 0.0])]).unwrap();
        let q = p.complement();
        assert_eq!(q.rank(), 2);
        assert!(
            q.matrix()
                .max_abs_diff(&ComplexMatrix::diagonal(&[0.0, 1.0, 1.0]))
                <= 1e-15
        );

        let identity = OrthoProjector::from_orthonormal_vectors(&[
            real_vec(&[1.0, 0.0, 0.0]),
            real_vec(&[0.0, 1.0, 0.0]),
            real_vec(&[0.0, 0.0, 1.0]),
        ])
        .unwrap();
        let zero = identity.complement();
        assert!(zero.is_degenerate());
        assert_eq!(zero.rank(), 0);
        assert!(zero.matrix().fro_norm() <= 1e-15);
    }

    #[test]
    fn complement_agrees_with_inverse_reduction() {
        let p = OrthoProjector::from_orthonormal_vectors(&[
            real_vec(&[1.0, 0.0, 0.0]),
            real_vec(&[0.0, 1.0, 0.0]),
        ])
        .unwrap();
        let via_map = inverse_reduction_map(3).apply(p.matrix()).unwrap();
        assert!(via_map.max_abs_diff(p.complement().matrix()) <= 1e-15);
    }

    #[test]
    fn product_projector_on_basis_vectors() {
        let p = OrthoProjector::product(&real_vec(&[1.0, 0.0, 0.0]), &[real_vec(&[0.0, 1.0, 0.0])])
            .unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.d(), 9);
        let mut expected = ComplexMatrix::zeros(9, 9);
        expected[(1, 1)] = Complex64::ONE;
        assert!(p.matrix().max_abs_diff(&expected) <= 1e-15);

        let two = OrthoProjector::product(
            &real_vec(&[1.0, 0.0, 0.0]),
            &[real_vec(&[0.0, 1.0, 0.0]), real_vec(&[0.0, 0.0, 1.0])],
        )
        .unwrap();
        assert_eq!(two.rank(), 2);
        let diag: Vec<f64> = (0..9)
            .map(|i| if i == 1 || i == 2 { 1.0 } else { 0.0 })
            .collect();
        assert!(two.matrix().max_abs_diff(&ComplexMatrix::diagonal(&diag)) <= 1e-15);
    }

    #[test]
    fn product_projector_matches_kron_form() {
        use crate::densecore::kron;
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let d = 3;
        let psi = random_unit_vector(d, &mut rng);
        let pair = {
            let raw: Vec<Vec<Complex64>> = (0..2)
                .map(|_| (0..d).map(|_| random_complex_gaussian(&mut rng)).collect())
                .collect();
            orthonormalize(&raw).unwrap()
        };
        let p = OrthoProjector::product(&psi, &pair).unwrap();
        assert!((p.operator().trace() - 2.0).abs() <= 1e-10);
        let squared = p.matrix() * p.matrix();
        assert!(squared.max_abs_diff(p.matrix()) <= 1e-10);

        let phi_sum = &outer(&pair[0], &pair[0]) + &outer(&pair[1], &pair[1]);
        let kron_form = kron(&outer(&psi, &psi), &phi_sum);
        assert!(p.matrix().max_abs_diff(&kron_form) <= 1e-12);
    }

    #[test]
    fn product_projector_validates_inputs() {
        let err =
            OrthoProjector::product(&real_vec(&[2.0, 0.0, 0.0]), &[real_vec(&[0.0, 1.0, 0.0])])
                .unwrap_err();
        assert!(matches!(err, Error::NotNormalized { .. }));

        let err = OrthoProjector::product(
            &real_vec(&[1.0, 0.0, 0.0]),
            &[real_vec(&[0.0, 1.0, 0.0]), real_vec(&[0.0, 1.0, 0.0])],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotOrthonormal { .. }));
    }

    #[test]
    fn complement_is_an_involution_with_complementary_rank() {
        let mut seed = 1000;
        for d in 2..=6usize {
            for k in 1..=d {
                for _ in 0..100 {
                    seed += 1;
                    let p = OrthoProjector::random(d, k, seed).unwrap();
                    let q = p.complement();
                    assert_eq!(q.rank(), d - k);
                    assert!(q.complement().matrix().max_abs_diff(p.matrix()) <= 1e-10);
                    let pq = p.matrix() * q.matrix();
                    assert!(pq.fro_norm() <= 1e-10);
                }
            }
        }
    }

    #[test]
    fn inverse_reduction_is_the_complement_bijection_on_corank_one() {
        let mut seed = 5000;
        for d in [3usize, 4, 5] {
            let r_inv = inverse_reduction_map(d);
            for _ in 0..100 {
                seed += 1;
                let p = OrthoProjector::random(d, d - 1, seed).unwrap();
                let image = r_inv.apply(p.matrix()).unwrap();
                assert!(image.max_abs_diff(p.complement().matrix()) <= 1e-10);
                let validated =
                    OrthoProjector::from_operator(HermitianOperator::new(image).unwrap()).unwrap();
                assert_eq!(validated.rank(), 1);
            }
        }
    }

    #[test]
    fn every_rank_one_projector_is_attained() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for d in [3usize, 4, 5] {
            let r_inv = inverse_reduction_map(d);
            for _ in 0..100 {
                let psi = random_unit_vector(d, &mut rng);
                let q = OrthoProjector::from_orthonormal_vectors(&[psi]).unwrap();
                let image = r_inv.apply(q.complement().matrix()).unwrap();
                assert!(image.max_abs_diff(q.matrix()) <= 1e-10);
            }
        }
    }

    #[test]
    fn kernel_of_corank_one_projector_is_a_phase_line() {
        let mut rng = ChaCha8Rng::seed_from_u64(123);
        for d in [3usize, 4, 5] {
            let p = OrthoProjector::random(d, d - 1, 314 + d as u64).unwrap();
            let q = p.complement();
            // Two independent kernel samples: project Gaussian vectors
            // onto ker P = im Q and normalize.
            let mut sample = || loop {
                let g: Vec<Complex64> = (0..d).map(|_| random_complex_gaussian(&mut rng)).collect();
                let projected = q.matrix().matvec(&g);
                let n = vec_norm(&projected);
                if n > 1e-8 {
                    return projected.into_iter().map(|z| z / n).collect::<Vec<_>>();
                }
            };
            let first = sample();
            let second = sample();
            let overlap = vec_inner(&first, &second).norm();
            assert!((overlap - 1.0).abs() <= 1e-10);

            // The eigensolver route lands in the same line.
            let from_eigen = p.kernel_vector().unwrap();
            assert!((vec_inner(&first, &from_eigen).norm() - 1.0).abs() <= 1e-10);
        }
    }
}
