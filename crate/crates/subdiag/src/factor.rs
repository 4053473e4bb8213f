//! Positive factorization inside the algebra.
//!
//! Every invertible positive `X` factors as `X = A* A` with both `A` and
//! `A^{-1}` in the subalgebra. The factor is taken fully lower triangular
//! with positive diagonal — the finest pattern, so one construction serves
//! every block partition, and uniqueness follows from the diagonal
//! convention.

use crate::algebra::SubdiagonalAlgebra;
use crate::chol;
use crate::error::Result;
use crate::fkdet;
use crate::matrix::ComplexMatrix;
use crate::tol;

/// Residuals of a candidate factorization `X ~ A* A`.
#[derive(Debug, Clone)]
pub struct FactorizationReport {
    /// `|A* A - X|_F / |X|_F`.
    pub reconstruction_residual: f64,
    /// Membership of `A` in the algebra.
    pub factor_in_algebra: bool,
    /// Membership of `A^{-1}` in the algebra (false when `A` is singular).
    pub inverse_in_algebra: bool,
    /// `|det(X) - det(A)^2| / det(X)`.
    pub det_residual: f64,
}

impl FactorizationReport {
    /// All residuals within `tol`, memberships included.
    pub fn pass(&self, tol: f64) -> bool {
        self.factor_in_algebra
            && self.inverse_in_algebra
            && self.reconstruction_residual <= tol
            && self.det_residual <= tol
    }
}

/// Factors an invertible positive `X` as `A* A` with `A` lower triangular,
/// positive diagonal. Near-singular input (condition number beyond
/// `1 / PD_REL`) is rejected rather than regularized.
pub fn factorize_positive(alg: &SubdiagonalAlgebra, x: &ComplexMatrix) -> Result<ComplexMatrix> {
    x.expect_dim(alg.dim())?;
    chol::reverse_cholesky(x)
}

/// Measures how well `a` factors `x`: reconstruction, membership of the
/// factor and its inverse, and determinant consistency.
pub fn verify_factorization(
    alg: &SubdiagonalAlgebra,
    x: &ComplexMatrix,
    a: &ComplexMatrix,
) -> Result<FactorizationReport> {
    x.expect_dim(alg.dim())?;
    a.expect_dim(alg.dim())?;

    let recon = &(&a.adjoint() * a) - x;
    let reconstruction_residual =
        recon.frobenius_norm() / x.frobenius_norm().max(f64::MIN_POSITIVE);

    let factor_in_algebra = alg.membership(a, tol::MEMBERSHIP_REL)?;
    let inverse_in_algebra = match a.try_inverse() {
        Some(inv) => alg.membership(&inv, tol::MEMBERSHIP_REL)?,
        None => false,
    };

    let det_x = fkdet::det(x);
    let det_a = fkdet::det(a);
    let det_residual = if det_x > 0.0 {
        (det_x - det_a * det_a).abs() / det_x
    } else {
        det_a * det_a
    };

    Ok(FactorizationReport {
        reconstruction_residual,
        factor_in_algebra,
        inverse_in_algebra,
        det_residual,
    })
}
