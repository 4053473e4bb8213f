//! The determinant `exp tau(log |X|)` for matrices and for states.
//!
//! With the normalized trace on `M_n` this is the positive `n`th root of
//! `|det X|`. Singular operators get determinant 0, the continuous
//! extension from above: singular values at or below
//! `SINGULAR_REL * sigma_max` count as zero.

use num_complex::Complex64;

use crate::algebra::SubdiagonalAlgebra;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::tol;

/// A state on `M_n` represented by its density: `rho(X) = tau(W X)` with
/// `W` Hermitian positive semidefinite and `tau(W) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct State {
    density: ComplexMatrix,
}

impl State {
    /// Validates the density: Hermitian within `1e-12` relative, spectrum
    /// bounded below by `-1e-12 |W|_2`, and `|tau(W) - 1| <= 1e-12`.
    pub fn new(density: ComplexMatrix) -> Result<Self> {
        let herm = density.hermitian_residual();
        let herm_tol = tol::STATE_TOL * density.frobenius_norm().max(1.0);
        if herm > herm_tol {
            return Err(Error::InvalidState(format!(
                "density is not Hermitian: residual {herm:.3e}"
            )));
        }
        let eig = crate::eig::herm_eig(&density)?;
        let floor = -tol::STATE_TOL * eig.spectral_norm();
        if eig.min_eigenvalue() < floor {
            return Err(Error::InvalidState(format!(
                "density is not positive semidefinite: eigenvalue {:.3e}",
                eig.min_eigenvalue()
            )));
        }
        let n = density.dim();
        let tau = density.raw_trace() / n as f64;
        if (tau - Complex64::new(1.0, 0.0)).norm() > tol::STATE_TOL {
            return Err(Error::InvalidState(format!(
                "density must have normalized trace 1, found {tau}"
            )));
        }
        Ok(Self { density })
    }

    pub fn density(&self) -> &ComplexMatrix {
        &self.density
    }

    pub fn dim(&self) -> usize {
        self.density.dim()
    }

    /// Evaluates the state: `rho(X) = tau(W X)`.
    pub fn apply(&self, x: &ComplexMatrix) -> Result<Complex64> {
        x.expect_dim(self.dim())?;
        let n = self.dim();
        let mut tr = Complex64::ZERO;
        for i in 0..n {
            for k in 0..n {
                tr += self.density[(i, k)] * x[(k, i)];
            }
        }
        Ok(tr / n as f64)
    }
}

/// Determinant of a matrix without an algebra context (the normalized
/// trace is intrinsic to the dimension).
pub fn det(x: &ComplexMatrix) -> f64 {
    let sv = x.singular_values();
    let Some(&sigma_max) = sv.first() else {
        return 0.0;
    };
    if sigma_max <= 0.0 {
        return 0.0;
    }
    let cutoff = tol::SINGULAR_REL * sigma_max;
    if sv.iter().any(|&s| s <= cutoff) {
        return 0.0;
    }
    let n = sv.len() as f64;
    (sv.iter().map(|s| s.ln()).sum::<f64>() / n).exp()
}

/// Determinant of `x` in the ambient algebra of `alg`.
pub fn fk_det(alg: &SubdiagonalAlgebra, x: &ComplexMatrix) -> Result<f64> {
    x.expect_dim(alg.dim())?;
    Ok(det(x))
}

/// Determinant of a state: the determinant of its density.
pub fn fk_det_state(rho: &State) -> f64 {
    det(rho.density())
}
