//! Frozen operator literals shared by unit tests.

use num_complex::Complex64;

use crate::densecore::{ComplexMatrix, HermitianOperator};

/// Choi-like witness on C^3 (x) C^3, frozen entrywise: diagonal
/// (0,1,1,1,0,1,1,1,0) with -1 on the off-diagonal |ii><jj| grid.
pub(crate) fn choi_witness() -> HermitianOperator {
    #[rustfmt::skip]
    let rows: [[f64; 9]; 9] = [
        [ 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, -1.0],
        [ 0.0, 1.0, 0.0, 0.0,  0.0, 0.0, 0.0, 0.0,  0.0],
        [ 0.0, 0.0, 1.0, 0.0,  0.0, 0.0, 0.0, 0.0,  0.0],
        [ 0.0, 0.0, 0.0, 1.0,  0.0, 0.0, 0.0, 0.0,  0.0],
        [-1.0, 0.0, 0.0, 0.0,  0.0, 0.0, 0.0, 0.0, -1.0],
        [ 0.0, 0.0, 0.0, 0.0,  0.0, 1.0, 0.0, 0.0,  0.0],
        [ 0.0, 0.0, 0.0, 0.0,  0.0, 0.0, 1.0, 0.0,  0.0],
        [ 0.0, 0.0, 0.0, 0.0,  0.0, 0.0, 0.0, 1.0,  0.0],
        [-1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0,  0.0],
    ];
    let flat: Vec<f64> = rows.iter().flatten().copied().collect();
    HermitianOperator::new(ComplexMatrix::from_real(9, 9, &flat)).unwrap()
}

/// Its positive transform under 1 (x) R^{-1}: ones on the |ii><jj| grid.
pub(crate) fn choi_wtilde() -> HermitianOperator {
    let mut m = ComplexMatrix::zeros(9, 9);
    for i in [0usize, 4, 8] {
        for j in [0usize, 4, 8] {
            m[(i, j)] = Complex64::ONE;
        }
    }
    HermitianOperator::new(m).unwrap()
}
