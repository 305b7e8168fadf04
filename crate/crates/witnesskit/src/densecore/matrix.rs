//! Dense complex matrices, Hermitian operators, and small-vector helpers.
//!
//! Everything is stored row-major and sized for local dimensions d <= 32;
//! bipartite operators live in dimension d^2.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Pre-symmetrization Hermiticity defect (relative, floored at 1) above
/// which construction of a [`HermitianOperator`] is rejected.
pub const HERMITICITY_REJECT_TOL: f64 = 1e-8;

/// Residual-norm threshold below which a vector counts as linearly
/// dependent during orthonormalization.
pub const RANK_DEFICIENT_TOL: f64 = 1e-10;

/// Dense complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Build from a row-major entry vector. Panics if the length does not
    /// match `rows * cols` or any entry is non-finite.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Complex64>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count must be rows * cols"
        );
        let m = Self {
            rows,
            cols,
            entries,
        };
        assert!(m.all_finite(), "matrix entries must be finite");
        m
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            entries: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::from_entries(rows, cols, entries)
    }

    /// Build a square matrix from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Self {
        Self::from_entries(
            rows,
            cols,
            entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn all_finite(&self) -> bool {
        self.entries
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace requires a square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn fro_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entrywise distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Frobenius distance to the conjugate transpose.
    pub fn hermiticity_defect(&self) -> f64 {
        assert!(self.is_square());
        let mut sum = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                sum += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        sum.sqrt()
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols, "matvec dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let row = &self.entries[i * self.cols..(i + 1) * self.cols];
                row.iter().zip(v).map(|(a, x)| a * x).sum()
            })
            .collect()
    }

    /// Quadratic form v^dagger M v.
    pub fn quadratic_form(&self, v: &[Complex64]) -> Complex64 {
        vec_inner(v, &self.matvec(v))
    }

    /// The d x d submatrix whose (r, c) entry is `self[(base_row + r, base_col + c)]`.
    pub fn block(&self, base_row: usize, base_col: usize, size: usize) -> Self {
        Self::from_fn(size, size, |r, c| self[(base_row + r, base_col + c)])
    }

    /// Overwrite the `size x size` block anchored at `(base_row, base_col)`.
    pub fn set_block(&mut self, base_row: usize, base_col: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(base_row + r, base_col + c)] = block[(r, c)];
            }
        }
    }
}

impl fmt::Display for ComplexMatrix {
    /// Row-per-line layout; imaginary parts are shown only when present.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn compact(x: f64) -> String {
            let s = format!("{x:.4}");
            let s = s.trim_end_matches('0').trim_end_matches('.');
            if s == "-0" {
                "0".to_string()
            } else {
                s.to_string()
            }
        }
        let real_only = self.entries.iter().all(|z| z.im.abs() < 1e-12);
        let cells: Vec<String> = self
            .entries
            .iter()
            .map(|z| {
                if real_only {
                    compact(z.re)
                } else {
                    format!(
                        "{}{}{}i",
                        compact(z.re),
                        if z.im < 0.0 { "-" } else { "+" },
                        compact(z.im.abs())
                    )
                }
            })
            .collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.cols + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

/// Kronecker product a (x) b; output dimensions multiply.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let scale = a[(i, j)];
            if scale == Complex64::ZERO {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out[(i * b.rows() + k, j * b.cols() + l)] = scale * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Hermitian operator: a square [`ComplexMatrix`] with enforced Hermiticity.
///
/// The constructor symmetrizes through `(M + M^dagger) / 2` and rejects
/// inputs whose pre-symmetrization defect exceeds
/// [`HERMITICITY_REJECT_TOL`] relative to `max(1, ||M||_F)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    dim: usize,
    matrix: ComplexMatrix,
}

impl HermitianOperator {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                got: matrix.cols(),
            });
        }
        let limit = HERMITICITY_REJECT_TOL * matrix.fro_norm().max(1.0);
        let defect = matrix.hermiticity_defect();
        if defect > limit {
            return Err(Error::NotHermitian { defect, limit });
        }
        let dim = matrix.rows();
        let symmetrized = ComplexMatrix::from_fn(dim, dim, |i, j| {
            (matrix[(i, j)] + matrix[(j, i)].conj()) * 0.5
        });
        Ok(Self {
            dim,
            matrix: symmetrized,
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            matrix: ComplexMatrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// Real trace; the imaginary part vanishes after symmetrization.
    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }
}

/// <a|b>, conjugate-linear in the first argument.
pub fn vec_inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    assert_eq!(a.len(), b.len(), "inner product dimension mismatch");
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn vec_norm(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Tensor product |a> (x) |b>; component (i * len(b) + j) is a_i * b_j.
pub fn vec_kron(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Rank-one matrix |a><b|.
pub fn outer(a: &[Complex64], b: &[Complex64]) -> ComplexMatrix {
    ComplexMatrix::from_fn(a.len(), b.len(), |i, j| a[i] * b[j].conj())
}

/// Standard basis vector |i> in dimension `dim`.
pub fn basis_vector(dim: usize, i: usize) -> Vec<Complex64> {
    assert!(i < dim);
    let mut v = vec![Complex64::ZERO; dim];
    v[i] = Complex64::ONE;
    v
}

/// Gram-Schmidt orthonormalization with one reorthogonalization pass.
///
/// Preserves the span; fails with [`Error::RankDeficient`] when the
/// residual of a vector drops below [`RANK_DEFICIENT_TOL`] relative to
/// `max(1, ||v||)`.
pub fn orthonormalize(vectors: &[Vec<Complex64>]) -> Result<Vec<Vec<Complex64>>> {
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(vectors.len());
    for (index, v) in vectors.iter().enumerate() {
        assert_eq!(
            v.len(),
            vectors[0].len(),
            "all vectors must share a dimension"
        );
        let original_norm = vec_norm(v);
        let mut w = v.clone();
        // Two projection passes keep the result orthonormal to ~1e-15 even
        // for nearly dependent inputs.
        for _ in 0..2 {
            for u in &basis {
                let coeff = vec_inner(u, &w);
                for (wk, uk) in w.iter_mut().zip(u) {
                    *wk -= coeff * uk;
                }
            }
        }
        let residual = vec_norm(&w);
        if residual < RANK_DEFICIENT_TOL * original_norm.max(1.0) {
            return Err(Error::RankDeficient { index, residual });
        }
        for wk in &mut w {
            *wk /= residual;
        }
        basis.push(w);
    }
    Ok(basis)
}

/// Sample a Hermitian matrix with independent complex-Gaussian entries,
/// symmetrized as (G + G^dagger) / 2. The RNG is caller-owned state.
pub fn random_hermitian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> HermitianOperator {
    let g = random_complex_matrix(dim, dim, rng);
    let sym = ComplexMatrix::from_fn(dim, dim, |i, j| (g[(i, j)] + g[(j, i)].conj()) * 0.5);
    HermitianOperator::new(sym).expect("symmetrized matrix is Hermitian")
}

/// Matrix of independent standard-complex-Gaussian entries.
pub fn random_complex_matrix<R: Rng + ?Sized>(
    rows: usize,
    cols: usize,
    rng: &mut R,
) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| random_complex_gaussian(rng))
}

/// One standard complex Gaussian draw (independent N(0,1) parts).
pub fn random_complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Random unit vector from the complex-Gaussian sphere.
pub fn random_unit_vector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..dim).map(|_| random_complex_gaussian(rng)).collect();
        let n = vec_norm(&v);
        if n > 1e-6 {
            return v.into_iter().map(|z| z / n).collect();
        }
    }
}
