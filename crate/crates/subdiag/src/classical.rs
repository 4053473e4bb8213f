//! Commutative validation on the unit circle.
//!
//! Equispaced sampling with the plain mean as quadrature (spectrally
//! accurate for smooth periodic integrands), analytic polynomials in
//! `z = e^{i theta}`, geometric means of positive weights, and the
//! finite-degree trigonometric least-squares ladder whose values descend
//! to the geometric mean. Normalized measure `d theta / 2 pi` is used
//! throughout, so the mean of samples is the integral.

use num_complex::Complex64;

use crate::chol;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::tol;

/// `N` equispaced points `theta_j = 2 pi j / N`, `N` a power of two, at
/// least 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircleGrid {
    n: usize,
}

impl CircleGrid {
    pub fn new(n: usize) -> Result<Self> {
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::InvalidGrid(n));
        }
        Ok(Self { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn theta(&self, j: usize) -> f64 {
        2.0 * std::f64::consts::PI * j as f64 / self.n as f64
    }

    /// Grid points as angles.
    pub fn angles(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |j| self.theta(j))
    }
}

/// Analytic polynomial `f(z) = a_0 + a_1 z + ... + a_m z^m` evaluated on
/// the circle `z = e^{i theta}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyOnCircle {
    coeffs: Vec<Complex64>,
}

impl PolyOnCircle {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        for (k, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::NonFiniteEntry { row: 0, col: k });
            }
        }
        Ok(Self { coeffs })
    }

    /// Monic-style constructor from disk roots: `c prod_i (1 - a_i z)`.
    pub fn from_roots(c: Complex64, roots: &[Complex64]) -> Result<Self> {
        let mut coeffs = vec![c];
        for &a in roots {
            let mut next = vec![Complex64::ZERO; coeffs.len() + 1];
            for (k, &ck) in coeffs.iter().enumerate() {
                next[k] += ck;
                next[k + 1] -= ck * a;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == Complex64::ZERO)
    }

    pub fn eval_at(&self, theta: f64) -> Complex64 {
        let z = Complex64::from_polar(1.0, theta);
        // Horner evaluation from the top coefficient.
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::ZERO, |acc, &c| acc * z + c)
    }

    /// Samples on a grid; the degree must stay below `N / 2` so the
    /// samples determine the polynomial without aliasing.
    pub fn sample_on(&self, grid: &CircleGrid) -> Result<Vec<Complex64>> {
        if self.degree() >= grid.len() / 2 {
            return Err(Error::DegreeExceedsGrid {
                degree: self.degree(),
                points: grid.len(),
            });
        }
        Ok(grid.angles().map(|t| self.eval_at(t)).collect())
    }

    /// Weight samples `|f|^2` on a grid.
    pub fn modulus_squared_on(&self, grid: &CircleGrid) -> Result<Vec<f64>> {
        Ok(self.sample_on(grid)?.iter().map(|z| z.norm_sqr()).collect())
    }
}

/// `exp(mean(log w))` over strictly positive samples.
pub fn geometric_mean(w: &[f64]) -> Result<f64> {
    if let Some((index, &value)) = w.iter().enumerate().find(|(_, &x)| x.is_nan() || x <= 0.0) {
        return Err(Error::NonpositiveSample { index, value });
    }
    let mean_log = w.iter().map(|x| x.ln()).sum::<f64>() / w.len() as f64;
    Ok(mean_log.exp())
}

/// The mean-versus-geometric-mean comparison for an analytic polynomial:
/// returns `(|a_0|, exp(mean log |f|))`; the first never exceeds the
/// second beyond quadrature error.
pub fn jensen_classical(f: &PolyOnCircle, grid: &CircleGrid) -> Result<(f64, f64)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lhs = f.coeffs()[0].norm();
    let samples: Vec<f64> = f.sample_on(grid)?.iter().map(|z| z.norm()).collect();
    let rhs = geometric_mean(&samples)?;
    Ok((lhs, rhs))
}

/// Minimum of `mean(|1 + sum_k a_k e^{ik theta}|^2 w)` over coefficients
/// `a_1..a_m`, for each requested degree `m`.
///
/// The normal equations are the Hermitian positive-definite Toeplitz
/// system `T a = -c` built from the Fourier coefficients
/// `c_r = mean(w e^{-ir theta})`, solved by Cholesky; the reported value
/// is the direct sample evaluation at the minimizer. Values are
/// nonincreasing in `m` and descend to the geometric mean of `w`.
/// Results follow the order of `degrees`; each degree is solved
/// independently.
pub fn szego_ladder(grid: &CircleGrid, w: &[f64], degrees: &[usize]) -> Result<Vec<(usize, f64)>> {
    let n_points = grid.len();
    if w.len() != n_points {
        return Err(Error::DimensionMismatch {
            expected: n_points,
            found: w.len(),
        });
    }
    if let Some((index, &value)) = w.iter().enumerate().find(|(_, &x)| x.is_nan() || x <= 0.0) {
        return Err(Error::NonpositiveSample { index, value });
    }
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    if max_degree >= n_points / 2 {
        return Err(Error::DegreeExceedsGrid {
            degree: max_degree,
            points: n_points,
        });
    }

    // Fourier coefficients c_r = mean(w e^{-ir theta}), r = 0..max_degree.
    let fourier: Vec<Complex64> = (0..=max_degree)
        .map(|r| {
            let mut acc = Complex64::ZERO;
            for (j, &wj) in w.iter().enumerate() {
                acc += wj * Complex64::from_polar(1.0, -(r as f64) * grid.theta(j));
            }
            acc / n_points as f64
        })
        .collect();
    let coeff = |r: isize| -> Complex64 {
        if r >= 0 {
            fourier[r as usize]
        } else {
            fourier[(-r) as usize].conj()
        }
    };

    let mut out = Vec::with_capacity(degrees.len());
    for &m in degrees {
        if m == 0 {
            // No free coefficients: the value is the plain mean of w.
            out.push((0, w.iter().sum::<f64>() / n_points as f64));
            continue;
        }
        let toeplitz = ComplexMatrix::from_fn(m, |p, q| coeff(p as isize - q as isize));
        let eig = crate::eig::herm_eig(&toeplitz)?;
        let cond = eig.max_eigenvalue() / eig.min_eigenvalue().max(f64::MIN_POSITIVE);
        if eig.min_eigenvalue() <= 0.0 || cond > tol::CONDITION_LIMIT {
            return Err(Error::IllConditionedNormalEquations { cond });
        }
        let factor = chol::cholesky_lower_unchecked(&toeplitz, 0.0)?;
        let rhs: Vec<Complex64> = (1..=m).map(|k| -fourier[k]).collect();
        let y = chol::solve_lower(&factor, &rhs);
        let a = chol::solve_lower_adjoint(&factor, &y);

        // Direct evaluation of the achieved prediction error.
        let mut value = 0.0;
        for (j, &wj) in w.iter().enumerate() {
            let theta = grid.theta(j);
            let mut s = Complex64::new(1.0, 0.0);
            for (k, &ak) in a.iter().enumerate() {
                s += ak * Complex64::from_polar(1.0, (k + 1) as f64 * theta);
            }
            value += wj * s.norm_sqr();
        }
        out.push((m, value / n_points as f64));
    }
    Ok(out)
}
