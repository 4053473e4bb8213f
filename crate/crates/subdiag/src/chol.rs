//! Triangular factorizations of positive-definite matrices.
//!
//! Both factor orientations fix uniqueness with the positive-diagonal
//! convention. Semidefinite input is an error, not a pivoted fallback:
//! the factorization theorems downstream cover invertible positives only.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::tol;

/// Validates Hermitian positive definiteness and returns the eigenvalue
/// floor `tol_pd = PD_REL * |P|_2` that pivots must clear.
fn check_positive_definite(p: &ComplexMatrix) -> Result<f64> {
    let residual = p.hermitian_residual();
    let herm_tol = tol::HERMITIAN_REL * p.frobenius_norm().max(1.0);
    if residual > herm_tol {
        return Err(Error::NotHermitian {
            residual,
            tol: herm_tol,
        });
    }
    let decomp = crate::eig::herm_eig(p)?;
    let tol_pd = tol::PD_REL * decomp.spectral_norm();
    let min = decomp.min_eigenvalue();
    if min <= tol_pd {
        return Err(Error::NotPositiveDefinite {
            eigenvalue: min,
            tol: tol_pd,
        });
    }
    Ok(tol_pd)
}

/// Cholesky factor `L`, lower triangular with positive real diagonal,
/// satisfying `L L* = P`.
pub fn cholesky_lower(p: &ComplexMatrix) -> Result<ComplexMatrix> {
    let tol_pd = check_positive_definite(p)?;
    cholesky_lower_unchecked(p, tol_pd)
}

/// Cholesky recurrence with pivot guard only. Callers that have already
/// certified positive definiteness (e.g. solver inner loops on fixed
/// principal submatrices) use this fast path.
pub(crate) fn cholesky_lower_unchecked(p: &ComplexMatrix, tol_pd: f64) -> Result<ComplexMatrix> {
    let n = p.dim();
    let mut l = ComplexMatrix::zeros(n);
    for j in 0..n {
        let mut pivot = p[(j, j)].re;
        for k in 0..j {
            pivot -= l[(j, k)].norm_sqr();
        }
        // NaN pivots fail this test as well.
        if pivot.partial_cmp(&tol_pd.max(0.0)) != Some(std::cmp::Ordering::Greater) {
            return Err(Error::NotPositiveDefinite {
                eigenvalue: pivot,
                tol: tol_pd,
            });
        }
        let diag = pivot.sqrt();
        l[(j, j)] = Complex64::new(diag, 0.0);
        for i in (j + 1)..n {
            let mut sum = p[(i, j)];
            for k in 0..j {
                sum -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = sum / diag;
        }
    }
    Ok(l)
}

/// Reverse Cholesky factor `R`, lower triangular with positive real
/// diagonal, satisfying `R* R = P`.
///
/// Rows are resolved bottom-up: row `m` depends only on rows below it,
/// since `(R* R)[i][j]` sums over rows `k >= max(i, j)`.
pub fn reverse_cholesky(p: &ComplexMatrix) -> Result<ComplexMatrix> {
    let tol_pd = check_positive_definite(p)?;
    let n = p.dim();
    let mut r = ComplexMatrix::zeros(n);
    for m in (0..n).rev() {
        let mut pivot = p[(m, m)].re;
        for k in (m + 1)..n {
            pivot -= r[(k, m)].norm_sqr();
        }
        if pivot.partial_cmp(&tol_pd.max(0.0)) != Some(std::cmp::Ordering::Greater) {
            return Err(Error::NotPositiveDefinite {
                eigenvalue: pivot,
                tol: tol_pd,
            });
        }
        let diag = pivot.sqrt();
        r[(m, m)] = Complex64::new(diag, 0.0);
        for i in 0..m {
            let mut sum = p[(i, m)];
            for k in (m + 1)..n {
                sum -= r[(k, i)].conj() * r[(k, m)];
            }
            r[(m, i)] = sum.conj() / diag;
        }
    }
    Ok(r)
}

/// Inverse of a lower-triangular matrix by forward substitution.
///
/// Entries above the diagonal of the result are exact zeros.
pub fn invert_lower_triangular(l: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = l.dim();
    for i in 0..n {
        if l[(i, i)].norm() == 0.0 {
            return Err(Error::SingularFactor { index: i });
        }
    }
    let mut inv = ComplexMatrix::zeros(n);
    for j in 0..n {
        inv[(j, j)] = Complex64::new(1.0, 0.0) / l[(j, j)];
        for i in (j + 1)..n {
            let mut sum = Complex64::ZERO;
            for k in j..i {
                sum += l[(i, k)] * inv[(k, j)];
            }
            inv[(i, j)] = -sum / l[(i, i)];
        }
    }
    Ok(inv)
}

/// Solves `L x = b` by forward substitution.
pub(crate) fn solve_lower(l: &ComplexMatrix, b: &[Complex64]) -> Vec<Complex64> {
    let n = l.dim();
    debug_assert_eq!(b.len(), n);
    let mut x = vec![Complex64::ZERO; n];
    for i in 0..n {
        let mut sum = b[i];
        for k in 0..i {
            sum -= l[(i, k)] * x[k];
        }
        x[i] = sum / l[(i, i)];
    }
    x
}

/// Solves `L* x = b` by back substitution.
pub(crate) fn solve_lower_adjoint(l: &ComplexMatrix, b: &[Complex64]) -> Vec<Complex64> {
    let n = l.dim();
    debug_assert_eq!(b.len(), n);
    let mut x = vec![Complex64::ZERO; n];
    for i in (0..n).rev() {
        let mut sum = b[i];
        for k in (i + 1)..n {
            sum -= l[(k, i)].conj() * x[k];
        }
        x[i] = sum / l[(i, i)].conj();
    }
    x
}
