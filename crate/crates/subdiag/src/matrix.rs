//! Dense square complex matrices: the ambient operators every module acts on.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// A dense `n x n` complex matrix.
///
/// Values are immutable in spirit: operations return new matrices, and all
/// functions in this crate are pure, so sharing across threads is safe.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    data: DMatrix<Complex64>,
}

impl ComplexMatrix {
    /// The zero matrix of dimension `n`.
    pub fn zeros(n: usize) -> Self {
        Self {
            data: DMatrix::zeros(n, n),
        }
    }

    /// The identity matrix of dimension `n`.
    pub fn identity(n: usize) -> Self {
        Self {
            data: DMatrix::identity(n, n),
        }
    }

    /// Builds a matrix from a closure over `(row, col)`.
    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        Self {
            data: DMatrix::from_fn(n, n, f),
        }
    }

    /// Builds a matrix from row slices, validating squareness and finiteness.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            for (j, z) in row.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFiniteEntry { row: i, col: j });
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| rows[i][j]))
    }

    /// Builds a real matrix from row slices.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let complex: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&complex)
    }

    /// Diagonal matrix with the given complex diagonal.
    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, |i, j| if i == j { diag[i] } else { Complex64::ZERO })
    }

    /// Diagonal matrix with the given real diagonal.
    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                Complex64::ZERO
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            data: self.data.adjoint(),
        }
    }

    /// Entrywise scaling by a real scalar.
    pub fn scale(&self, t: f64) -> Self {
        Self {
            data: &self.data * Complex64::new(t, 0.0),
        }
    }

    /// Entrywise scaling by a complex scalar.
    pub fn scale_complex(&self, t: Complex64) -> Self {
        Self {
            data: &self.data * t,
        }
    }

    /// Unnormalized trace `sum_i X[i][i]`.
    pub fn raw_trace(&self) -> Complex64 {
        self.data.diagonal().iter().sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.norm()
    }

    /// Operator (spectral) norm: the largest singular value.
    pub fn spectral_norm(&self) -> f64 {
        self.singular_values().first().copied().unwrap_or(0.0)
    }

    /// Singular values in descending order.
    pub fn singular_values(&self) -> Vec<f64> {
        let mut sv: Vec<f64> =
            match self
                .data
                .clone()
                .try_svd_unordered(false, false, f64::EPSILON, 10_000)
            {
                Some(svd) => svd.singular_values.iter().copied().collect(),
                // Fallback: sigma_i are the nonnegative spectrum of sqrt(X* X).
                None => {
                    let gram = &self.adjoint() * self;
                    crate::eig::herm_eig(&gram)
                        .map(|d| d.eigenvalues().iter().map(|l| l.max(0.0).sqrt()).collect())
                        .unwrap_or_default()
                }
            };
        sv.sort_by(|a, b| b.partial_cmp(a).expect("singular values are finite"));
        sv
    }

    /// `|X - X*|_F`, the deviation from Hermitian symmetry.
    pub fn hermitian_residual(&self) -> f64 {
        (&self.data - self.data.adjoint()).norm()
    }

    /// Nearest Hermitian matrix `(X + X*) / 2`.
    pub fn hermitian_part(&self) -> Self {
        Self {
            data: (&self.data + self.data.adjoint()) * Complex64::new(0.5, 0.0),
        }
    }

    /// General inverse via LU; `None` when numerically singular.
    pub fn try_inverse(&self) -> Option<Self> {
        self.data.clone().try_inverse().map(|data| Self { data })
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest entry modulus.
    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Checks dimensional compatibility against an expected size.
    pub fn expect_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: self.dim(),
            });
        }
        Ok(())
    }

    /// Rows as vectors of entries.
    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self[(i, j)]).collect())
            .collect()
    }

    pub(crate) fn inner(&self) -> &DMatrix<Complex64> {
        &self.data
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[(i, j)]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[(i, j)]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim(), self.dim())?;
        for i in 0..self.dim() {
            let row: Vec<String> = (0..self.dim())
                .map(|j| format!("{:+.4}{:+.4}i", self[(i, j)].re, self[(i, j)].im))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&ComplexMatrix> for &ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                ComplexMatrix {
                    data: &self.data $op &rhs.data,
                }
            }
        }
    };
}

impl_binop!(Add, add, +);
impl_binop!(Sub, sub, -);
impl_binop!(Mul, mul, *);

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        ComplexMatrix { data: -&self.data }
    }
}
