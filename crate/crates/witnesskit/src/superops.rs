//! Linear maps on d x d operators as concrete d^2 x d^2 matrices.
//!
//! A map acts on column-stacked vectorizations: `vec(e_ij)` is the
//! `(j*d + i)`-th basis vector (0-based). Under this convention the
//! Hilbert-Schmidt adjoint of a map is the conjugate transpose of its
//! matrix, and composition is matrix product. The maps shipped here are
//! the identity, the reduction map `A -> Tr(A) 1 - A`, its compositional
//! inverse `A -> Tr(A)/(d-1) 1 - A`, and anything supplied through
//! [`SuperOperator::from_rep`] or [`SuperOperator::from_map_action`].

use num_complex::Complex64;

use crate::densecore::{ComplexMatrix, HermitianOperator};
use crate::error::{Error, Result};

/// Linear map on B(C^d) in canonical matrix form.
///
/// Immutable after construction; safe for concurrent reads.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperOperator {
    d: usize,
    rep: ComplexMatrix,
}

impl SuperOperator {
    /// Wrap an explicit d^2 x d^2 matrix.
    pub fn from_rep(d: usize, rep: ComplexMatrix) -> Result<Self> {
        if rep.rows() != d * d || rep.cols() != d * d {
            return Err(Error::DimensionMismatch {
                expected: d * d,
                got: rep.rows().max(rep.cols()),
            });
        }
        Ok(Self { d, rep })
    }

    /// Build the matrix of a map from its action on the operator basis:
    /// column `j*d + i` is `vec(f(e_ij))`.
    pub fn from_map_action(d: usize, f: impl Fn(&ComplexMatrix) -> ComplexMatrix) -> Self {
        let dd = d * d;
        let mut rep = ComplexMatrix::zeros(dd, dd);
        for col in 0..dd {
            let (i, j) = (col % d, col / d);
            let mut basis = ComplexMatrix::zeros(d, d);
            basis[(i, j)] = Complex64::ONE;
            let image = f(&basis);
            assert_eq!(image.rows(), d, "map must preserve the operator dimension");
            assert_eq!(image.cols(), d, "map must preserve the operator dimension");
            let image_vec = vectorize(&image);
            for (row, z) in image_vec.iter().enumerate() {
                rep[(row, col)] = *z;
            }
        }
        Self { d, rep }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rep(&self) -> &ComplexMatrix {
        &self.rep
    }

    /// Evaluate the map: unvec(rep * vec(a)).
    pub fn apply(&self, a: &ComplexMatrix) -> Result<ComplexMatrix> {
        if a.rows() != self.d || a.cols() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                got: a.rows().max(a.cols()),
            });
        }
        Ok(unvectorize(self.d, &self.rep.matvec(&vectorize(a))))
    }

    /// Composition self after other, as a matrix product of reps.
    pub fn compose(&self, other: &SuperOperator) -> Result<SuperOperator> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                got: other.d,
            });
        }
        Ok(SuperOperator {
            d: self.d,
            rep: &self.rep * &other.rep,
        })
    }

    /// Hilbert-Schmidt adjoint: Tr(A^dagger L(B)) = Tr((L^dagger(A))^dagger B).
    pub fn adjoint(&self) -> SuperOperator {
        SuperOperator {
            d: self.d,
            rep: self.rep.dagger(),
        }
    }

    /// Blockwise application 1 (x) L: writing W = sum_ij e_ij (x) W_ij,
    /// returns sum_ij e_ij (x) L(W_ij). Block (i, j) of a d^2 x d^2 matrix
    /// is the d x d submatrix at row-block i, column-block j.
    pub fn partial_apply(&self, w: &ComplexMatrix) -> Result<ComplexMatrix> {
        let d = self.d;
        if w.rows() != d * d || w.cols() != d * d {
            return Err(Error::DimensionMismatch {
                expected: d * d,
                got: w.rows().max(w.cols()),
            });
        }
        let mut out = ComplexMatrix::zeros(d * d, d * d);
        for i in 0..d {
            for j in 0..d {
                let block = w.block(i * d, j * d, d);
                out.set_block(i * d, j * d, &self.apply(&block)?);
            }
        }
        Ok(out)
    }

    /// [`Self::partial_apply`] with the result re-wrapped as a Hermitian
    /// operator; fails if the map does not preserve Hermiticity on this
    /// input (R and R^{-1} always do).
    pub fn partial_apply_hermitian(&self, w: &HermitianOperator) -> Result<HermitianOperator> {
        HermitianOperator::new(self.partial_apply(w.matrix())?)
    }

    /// Choi matrix (1 (x) L) P_d^+.
    pub fn choi_matrix(&self) -> ComplexMatrix {
        let p = maximally_entangled_projector(self.d);
        self.partial_apply(p.matrix())
            .expect("projector dimension matches by construction")
    }
}

/// Column-stacked vectorization: vec(A)[j*d + i] = A[(i, j)].
pub fn vectorize(a: &ComplexMatrix) -> Vec<Complex64> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut v = Vec::with_capacity(rows * cols);
    for j in 0..cols {
        for i in 0..rows {
            v.push(a[(i, j)]);
        }
    }
    v
}

/// Inverse of [`vectorize`] for square matrices.
pub fn unvectorize(d: usize, v: &[Complex64]) -> ComplexMatrix {
    assert_eq!(v.len(), d * d, "vectorized length must be d^2");
    ComplexMatrix::from_fn(d, d, |i, j| v[j * d + i])
}

/// The identity map on B(C^d).
pub fn identity_map(d: usize) -> SuperOperator {
    assert!(d >= 1, "dimension must be positive");
    SuperOperator {
        d,
        rep: ComplexMatrix::identity(d * d),
    }
}

/// The reduction map A -> Tr(A) 1 - A.
pub fn reduction_map(d: usize) -> SuperOperator {
    assert!(d >= 2, "reduction map needs d >= 2");
    SuperOperator::from_map_action(d, |a| &ComplexMatrix::identity(d).scale(a.trace()) - a)
}

/// The inverse reduction map A -> Tr(A)/(d-1) 1 - A.
///
/// Coincides with the reduction map at d = 2; for d >= 3 it is not
/// positive on all of B(C^d), but it reflects positivity and restricts to
/// a bijection from rank-(d-1) projectors onto rank-1 projectors.
pub fn inverse_reduction_map(d: usize) -> SuperOperator {
    assert!(d >= 2, "inverse reduction map needs d >= 2");
    SuperOperator::from_map_action(d, |a| {
        &ComplexMatrix::identity(d).scale(a.trace() / (d as f64 - 1.0)) - a
    })
}

/// Projector onto the maximally entangled state (1/sqrt d) sum_i |ii>:
/// entries 1/d on the |ii><jj| grid, zero elsewhere.
pub fn maximally_entangled_projector(d: usize) -> HermitianOperator {
    assert!(d >= 2, "maximally entangled state needs d >= 2");
    let mut m = ComplexMatrix::zeros(d * d, d * d);
    let w = Complex64::new(1.0 / d as f64, 0.0);
    for i in 0..d {
        for j in 0..d {
            m[(i * d + i, j * d + j)] = w;
        }
    }
    HermitianOperator::new(m).expect("projector is Hermitian by construction")
}
