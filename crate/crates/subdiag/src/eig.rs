//! Hermitian eigendecomposition and the functional calculus built on it.

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::tol;

/// Spectral decomposition `H = V diag(lambda) V*` of a Hermitian matrix,
/// eigenvalues ascending, `V` unitary.
#[derive(Debug, Clone)]
pub struct HermEigDecomposition {
    eigenvalues: Vec<f64>,
    vectors: ComplexMatrix,
}

impl HermEigDecomposition {
    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unitary matrix whose columns are the eigenvectors, in eigenvalue order.
    pub fn vectors(&self) -> &ComplexMatrix {
        &self.vectors
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    /// Spectral norm `max |lambda_i|` of the decomposed matrix.
    pub fn spectral_norm(&self) -> f64 {
        self.min_eigenvalue().abs().max(self.max_eigenvalue().abs())
    }

    /// `V f(lambda) V*`: applies `f` to the spectrum. The result is
    /// symmetrized so it is Hermitian entrywise.
    pub fn map_eigenvalues(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let mapped = ComplexMatrix::from_real_diagonal(
            &self.eigenvalues.iter().map(|&l| f(l)).collect::<Vec<_>>(),
        );
        let v = &self.vectors;
        let out = &(v * &mapped) * &v.adjoint();
        debug_assert_eq!(out.dim(), n);
        out.hermitian_part()
    }

    /// `V diag(lambda) V*`, for reconstruction checks.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_eigenvalues(|l| l)
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Fails with [`Error::NotHermitian`] when `|H - H*|_F` exceeds
/// `HERMITIAN_REL * max(1, |H|_F)`.
pub fn herm_eig(h: &ComplexMatrix) -> Result<HermEigDecomposition> {
    let residual = h.hermitian_residual();
    let tol = tol::HERMITIAN_REL * h.frobenius_norm().max(1.0);
    if residual > tol {
        return Err(Error::NotHermitian { residual, tol });
    }
    // The backend sees the exactly Hermitian part; the deviation is
    // already bounded above.
    let sym = h.hermitian_part();
    let decomp = sym
        .inner()
        .clone()
        .try_symmetric_eigen(f64::EPSILON, 10_000)
        .ok_or(Error::EigDidNotConverge)?;

    let n = h.dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        decomp.eigenvalues[a]
            .partial_cmp(&decomp.eigenvalues[b])
            .expect("eigenvalues are finite")
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&k| decomp.eigenvalues[k]).collect();
    let vectors = ComplexMatrix::from_fn(n, |i, j| decomp.eigenvectors[(i, order[j])]);
    Ok(HermEigDecomposition {
        eigenvalues,
        vectors,
    })
}

/// `|X| = (X* X)^{1/2}`, the positive square root of `X* X`.
///
/// Eigenvalues of the Gram matrix are clamped at zero before the square
/// root to absorb negative roundoff of order `-1e-15`.
pub fn abs_op(x: &ComplexMatrix) -> ComplexMatrix {
    let gram = &x.adjoint() * x;
    let decomp = herm_eig(&gram).expect("X*X is Hermitian by construction");
    decomp.map_eigenvalues(|l| l.max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_matrix_is_already_decomposed() {
        let h = ComplexMatrix::from_real_diagonal(&[3.0, 1.0]);
        let d = herm_eig(&h).unwrap();
        assert_eq!(d.eigenvalues(), &[1.0, 3.0]);
        // Eigenvectors form a permutation (up to phase).
        for j in 0..2 {
            let col: Vec<f64> = (0..2).map(|i| d.vectors()[(i, j)].norm()).collect();
            assert!((col.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-12);
            assert!(col.iter().any(|&x| (x - 1.0).abs() < 1e-12));
        }
    }

    #[test]
    fn identity_has_unit_spectrum() {
        let d = herm_eig(&ComplexMatrix::identity(2)).unwrap();
        assert_eq!(d.eigenvalues(), &[1.0, 1.0]);
        let unitarity = (&d.vectors().adjoint() * d.vectors()).inner().clone()
            - ComplexMatrix::identity(2).inner().clone();
        assert!(unitarity.norm() < 1e-12);
    }

    #[test]
    fn exchange_matrix_spectrum() {
        // Characteristic polynomial of [[0,1],[1,0]] is l^2 - 1.
        let h = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let d = herm_eig(&h).unwrap();
        assert!((d.eigenvalues()[0] + 1.0).abs() < 1e-14);
        assert!((d.eigenvalues()[1] - 1.0).abs() < 1e-14);
        let recon = &d.reconstruct() - &h;
        assert!(recon.frobenius_norm() < 1e-13);
    }

    #[test]
    fn rejects_non_hermitian_input() {
        let m = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(herm_eig(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn abs_of_diagonal_takes_moduli() {
        let x = ComplexMatrix::from_real_diagonal(&[-2.0, 3.0]);
        let a = abs_op(&x);
        assert!((a[(0, 0)].re - 2.0).abs() < 1e-12);
        assert!((a[(1, 1)].re - 3.0).abs() < 1e-12);
        assert!(a[(0, 1)].norm() < 1e-13);
    }

    #[test]
    fn abs_of_unitary_is_identity() {
        let u = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let a = abs_op(&u);
        let diff = &a - &ComplexMatrix::identity(2);
        assert!(diff.frobenius_norm() < 1e-13);
    }

    #[test]
    fn abs_of_nilpotent_shift() {
        // X = e_21; X*X = diag(1, 0), so |X| = diag(1, 0).
        let x = ComplexMatrix::from_real_rows(&[vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
        let a = abs_op(&x);
        let expected = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
        assert!((&a - &expected).frobenius_norm() < 1e-13);
    }
}
