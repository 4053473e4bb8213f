//! Seeded random instance generation.
//!
//! Every randomized suite in this crate derives its generators from a
//! single frozen algorithm: ChaCha8 keyed by the 64-bit suite seed, with
//! the trial index selecting the stream. Trials are therefore
//! deterministic, independent of evaluation order, and reproducible
//! across platforms and releases.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::algebra::SubdiagonalAlgebra;
use crate::matrix::ComplexMatrix;

/// The generator for trial `stream` of the suite keyed by `seed`.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Standard complex Gaussian: real and imaginary parts are independent
/// `N(0, 1/2)`, so `E|z|^2 = 1`.
pub fn standard_complex(rng: &mut impl Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Matrix with independent standard complex Gaussian entries.
pub fn gaussian_matrix(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let entries: Vec<Complex64> = (0..n * n).map(|_| standard_complex(rng)).collect();
    ComplexMatrix::from_fn(n, |i, j| entries[i * n + j])
}

/// Random Hermitian matrix `(G + G*) / 2`.
pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    gaussian_matrix(rng, n).hermitian_part()
}

/// Random positive semidefinite matrix `G G*`.
pub fn random_psd(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let g = gaussian_matrix(rng, n);
    (&g * &g.adjoint()).hermitian_part()
}

/// Random positive definite matrix: a Wishart sample shifted by a tenth of
/// its mean eigenvalue, which bounds the condition number well away from
/// the rejection threshold of the factorization routines.
pub fn random_spd(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let w = random_psd(rng, n);
    let shift = 0.1 * (w.raw_trace().re / n as f64).max(f64::MIN_POSITIVE);
    (&w + &ComplexMatrix::identity(n).scale(shift)).hermitian_part()
}

/// Random density: a positive definite matrix normalized to unit trace
/// under `tau = tr / n`.
pub fn random_density(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let w = random_spd(rng, n);
    let tau = w.raw_trace().re / n as f64;
    w.scale(1.0 / tau)
}

/// Haar-ish random unitary: the Q factor of a Gaussian matrix.
pub fn random_unitary(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let g = gaussian_matrix(rng, n);
    let q = g.inner().clone().qr().q();
    ComplexMatrix::from_fn(n, |i, j| q[(i, j)])
}

/// Random element of the subalgebra: standard complex Gaussian entries on
/// the allowed pattern, exact zeros above the block line.
pub fn random_in_algebra(rng: &mut impl Rng, alg: &SubdiagonalAlgebra) -> ComplexMatrix {
    let n = alg.dim();
    let s = alg.structure();
    let entries: Vec<Complex64> = (0..n * n)
        .map(|idx| {
            if s.in_pattern(idx / n, idx % n) {
                standard_complex(rng)
            } else {
                Complex64::ZERO
            }
        })
        .collect();
    ComplexMatrix::from_fn(n, |i, j| entries[i * n + j])
}

/// Random element of the diagonal subalgebra (block diagonal).
pub fn random_block_diagonal(rng: &mut impl Rng, alg: &SubdiagonalAlgebra) -> ComplexMatrix {
    let n = alg.dim();
    let s = alg.structure();
    let entries: Vec<Complex64> = (0..n * n)
        .map(|idx| {
            if s.on_block_diagonal(idx / n, idx % n) {
                standard_complex(rng)
            } else {
                Complex64::ZERO
            }
        })
        .collect();
    ComplexMatrix::from_fn(n, |i, j| entries[i * n + j])
}

/// Random strictly block lower matrix (in the algebra, zero expectation).
pub fn random_strictly_lower(rng: &mut impl Rng, alg: &SubdiagonalAlgebra) -> ComplexMatrix {
    let n = alg.dim();
    let s = alg.structure();
    let entries: Vec<Complex64> = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            if s.in_pattern(i, j) && !s.on_block_diagonal(i, j) {
                standard_complex(rng)
            } else {
                Complex64::ZERO
            }
        })
        .collect();
    ComplexMatrix::from_fn(n, |i, j| entries[i * n + j])
}
