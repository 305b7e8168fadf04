//! Hermitian eigendecomposition via cyclic complex Jacobi rotations.

use num_complex::Complex64;

use super::matrix::{ComplexMatrix, HermitianOperator};
use crate::error::{Error, Result};

/// Maximum number of Jacobi sweeps before reporting a convergence failure.
pub const MAX_SWEEPS: usize = 100;

/// Target off-diagonal Frobenius norm, relative to `max(1, ||M||_F)`.
/// An absolute 1e-12 target sits below the f64 rounding floor once
/// `||M||_F` reaches a few tens, so the threshold is scaled.
pub const OFF_DIAG_TOL: f64 = 1e-12;

/// Eigendecomposition of a Hermitian operator.
///
/// Eigenvalues are real and ascending; column k of `eigenvectors` is the
/// orthonormal eigenvector paired with `eigenvalues[k]`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    /// Column `k` of the eigenvector matrix.
    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        (0..self.eigenvectors.rows())
            .map(|i| self.eigenvectors[(i, k)])
            .collect()
    }

    /// V diag(lambda) V^dagger.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| v[(i, k)] * self.eigenvalues[k] * v[(j, k)].conj())
                .sum()
        })
    }
}

/// Diagonalize a Hermitian operator.
///
/// Cyclic sweeps over the upper triangle; each pivot (p, q) is annihilated
/// by a phased plane rotation. Converges when the off-diagonal Frobenius
/// norm drops to [`OFF_DIAG_TOL`] * max(1, ||M||_F), with a budget of
/// [`MAX_SWEEPS`] sweeps.
pub fn hermitian_eigen(m: &HermitianOperator) -> Result<EigenDecomposition> {
    let n = m.dim();
    let mut a = m.matrix().clone();
    let mut v = ComplexMatrix::identity(n);
    let target = OFF_DIAG_TOL * a.fro_norm().max(1.0);
    // Pivots this small cannot push the off-norm above the target.
    let skip = target / n as f64;

    let mut converged = off_diagonal_norm(&a) <= target;
    let mut sweeps = 0;
    while !converged {
        if sweeps == MAX_SWEEPS {
            return Err(Error::ConvergenceFailure {
                sweeps,
                off_norm: off_diagonal_norm(&a),
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[(p, q)].norm() > skip {
                    rotate(&mut a, &mut v, p, q);
                }
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&a) <= target;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);

    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Smallest eigenvalue of a Hermitian operator.
pub fn min_eigenvalue(m: &HermitianOperator) -> Result<f64> {
    Ok(hermitian_eigen(m)?.min_eigenvalue())
}

/// True iff the smallest eigenvalue is >= -tol.
pub fn is_psd(m: &HermitianOperator, tol: f64) -> Result<bool> {
    assert!(tol >= 0.0, "tolerance must be nonnegative");
    Ok(min_eigenvalue(m)? >= -tol)
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            sum += a[(i, j)].norm_sqr();
        }
    }
    (2.0 * sum).sqrt()
}

/// Annihilate a[(p, q)] with the unitary that diagonalizes the 2x2 pivot
/// block, updating the working matrix (two-sided) and the accumulated
/// eigenvector matrix (right side only).
///
/// The pivot block [[a_pp, r e^{i phi}], [r e^{-i phi}, a_qq]] is first
/// de-phased by diag(1, e^{-i phi}) to a real symmetric block, then rotated
/// through the standard stable-root angle.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let tau = (aqq - app) / (2.0 * r);
    let t = if tau == 0.0 {
        1.0
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // Column update: A <- A * V with V_pp = c, V_pq = s,
    // V_qp = -s conj(phase), V_qq = c conj(phase).
    let n = a.rows();
    let phase_conj = phase.conj();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * s * phase_conj;
        a[(k, q)] = akp * s + akq * c * phase_conj;
    }
    // Row update: A <- V^dagger * A.
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * s * phase;
        a[(q, k)] = apk * s + aqk * c * phase;
    }
    // The pivot is zero and the diagonal real by construction; writing the
    // exact values stops rounding residue from accumulating.
    a[(p, q)] = Complex64::ZERO;
    a[(q, p)] = Complex64::ZERO;
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * s * phase_conj;
        v[(k, q)] = vkp * s + vkq * c * phase_conj;
    }
}
