//! Shared oracles for the integration suites.
//!
//! Kept independent of the library's spectral path: determinants here go
//! through partial-pivot LU, never through singular values.
#![allow(dead_code)] // each test target compiles its own copy

use num_complex::Complex64;
use subdiag::ComplexMatrix;

/// Determinant via LU with partial pivoting.
pub fn lu_det(m: &ComplexMatrix) -> Complex64 {
    let n = m.dim();
    let mut a = m.rows();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let (pivot_row, pivot_mag) = (k..n)
            .map(|r| (r, a[r][k].norm()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).expect("finite"))
            .expect("nonempty range");
        if pivot_mag == 0.0 {
            return Complex64::ZERO;
        }
        if pivot_row != k {
            a.swap(pivot_row, k);
            det = -det;
        }
        det *= a[k][k];
        let pivot_row = a[k].clone();
        for row in a.iter_mut().skip(k + 1) {
            let factor = row[k] / pivot_row[k];
            for (c, entry) in row.iter_mut().enumerate().skip(k) {
                *entry -= factor * pivot_row[c];
            }
        }
    }
    det
}

/// `|det X|^(1/n)`: the independent route to the operator determinant.
pub fn root_abs_det(m: &ComplexMatrix) -> f64 {
    let n = m.dim();
    if n == 0 {
        return 0.0;
    }
    lu_det(m).norm().powf(1.0 / n as f64)
}

/// The index-reversal permutation matrix of dimension `n`.
pub fn reversal(n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |i, j| {
        if i + j == n - 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::ZERO
        }
    })
}
