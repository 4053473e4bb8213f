//! Block lower-triangular subdiagonal algebras.
//!
//! An ordered partition `(n_1, ..., n_k)` of `n` defines the subalgebra
//! of matrices vanishing above the block line, the block-diagonal
//! subalgebra it shares with its adjoint, the conditional expectation that
//! extracts diagonal blocks, and the normalized trace of the ambient `M_n`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::sample;

/// Ordered partition `(n_1, ..., n_k)` of `n` with the derived
/// index-to-block map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    partition: Vec<usize>,
    block_of: Vec<usize>,
    offsets: Vec<usize>,
}

impl BlockStructure {
    pub fn new(partition: &[usize]) -> Result<Self> {
        if partition.is_empty() {
            return Err(Error::InvalidPartition("partition is empty".into()));
        }
        if let Some(&bad) = partition.iter().find(|&&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "partition entries must be positive, found {bad}"
            )));
        }
        let n: usize = partition.iter().sum();
        let mut block_of = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(partition.len() + 1);
        offsets.push(0);
        for (p, &size) in partition.iter().enumerate() {
            block_of.extend(std::iter::repeat_n(p, size));
            offsets.push(offsets[p] + size);
        }
        Ok(Self {
            partition: partition.to_vec(),
            block_of,
            offsets,
        })
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.block_of.len()
    }

    /// Number of blocks `k`.
    pub fn num_blocks(&self) -> usize {
        self.partition.len()
    }

    pub fn partition(&self) -> &[usize] {
        &self.partition
    }

    /// Block index of a matrix row/column index.
    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    /// Index range covered by block `p`.
    pub fn block_range(&self, p: usize) -> std::ops::Range<usize> {
        self.offsets[p]..self.offsets[p + 1]
    }

    /// Whether position `(i, j)` lies on or below the block line, i.e. is
    /// allowed in the subalgebra.
    pub fn in_pattern(&self, i: usize, j: usize) -> bool {
        self.block_of[i] >= self.block_of[j]
    }

    /// Whether position `(i, j)` lies inside a diagonal block.
    pub fn on_block_diagonal(&self, i: usize, j: usize) -> bool {
        self.block_of[i] == self.block_of[j]
    }

    /// Complex dimension of the subalgebra: `sum_{p >= q} n_p n_q`.
    pub fn algebra_dim(&self) -> usize {
        let k = self.num_blocks();
        let mut dim = 0;
        for p in 0..k {
            for q in 0..=p {
                dim += self.partition[p] * self.partition[q];
            }
        }
        dim
    }

    /// Complex dimension of the diagonal subalgebra: `sum_p n_p^2`.
    pub fn diagonal_dim(&self) -> usize {
        self.partition.iter().map(|&p| p * p).sum()
    }
}

/// Residuals collected while exercising the defining axioms on random
/// input: density of the span, properties of the expectation, its
/// multiplicativity on the subalgebra, and trace preservation.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    /// Complex dimension of `span(A + A*)`; must equal `n^2`.
    pub sd1_span_dim: usize,
    /// Worst `|phi(phi(X)) - phi(X)|_F` over sampled `X`.
    pub sd2_idempotence: f64,
    /// Worst negative-part of `min eig phi(X)` relative to `|X|_2`, over
    /// sampled positive `X`.
    pub sd2_positivity: f64,
    /// Worst norm of a positive matrix with vanishing expectation (the only
    /// such matrix is zero: it is Hermitian with zero trace, so a
    /// nonnegative spectrum forces it to vanish).
    pub sd2_faithfulness: f64,
    /// Worst `|phi(AB) - phi(A) phi(B)|_F` over sampled pairs in the algebra.
    pub sd3_residual: f64,
    /// Worst `|tau(phi(X)) - tau(X)|` over sampled `X`.
    pub finiteness_residual: f64,
    /// Tolerance the residuals were judged against.
    pub tol: f64,
    pub pass: bool,
}

/// One strictly-upper matrix unit whose adjunction breaks multiplicativity
/// of the expectation: `phi(e_ij e_ji) != phi(e_ij) phi(e_ji)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaximalityWitness {
    pub row: usize,
    pub col: usize,
    /// Frobenius norm of `phi(e_ij e_ji) - phi(e_ij) phi(e_ji)`; exactly 1
    /// for matrix units.
    pub violation_norm: f64,
}

/// A finite-dimensional subdiagonal algebra: a block structure inside the
/// ambient `M_n` with the diagonal expectation and normalized trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdiagonalAlgebra {
    structure: BlockStructure,
}

impl SubdiagonalAlgebra {
    /// Builds the algebra for an ordered partition; the all-ones partition
    /// gives the scalar lower-triangular case, a single block gives all of
    /// `M_n` with the identity expectation.
    pub fn from_partition(partition: &[usize]) -> Result<Self> {
        Ok(Self {
            structure: BlockStructure::new(partition)?,
        })
    }

    pub fn structure(&self) -> &BlockStructure {
        &self.structure
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.structure.dim()
    }

    /// Conditional expectation: extracts the diagonal blocks of `x`.
    pub fn expectation(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        x.expect_dim(self.dim())?;
        Ok(ComplexMatrix::from_fn(self.dim(), |i, j| {
            if self.structure.on_block_diagonal(i, j) {
                x[(i, j)]
            } else {
                Complex64::ZERO
            }
        }))
    }

    /// Normalized trace `tau(X) = tr(X) / n`.
    pub fn trace(&self, x: &ComplexMatrix) -> Result<Complex64> {
        x.expect_dim(self.dim())?;
        Ok(x.raw_trace() / self.dim() as f64)
    }

    /// Whether `x` lies in the algebra: every entry above the block line
    /// has modulus at most `tol * max(1, |x|_F)`.
    pub fn membership(&self, x: &ComplexMatrix, tol: f64) -> Result<bool> {
        x.expect_dim(self.dim())?;
        Ok(self.off_pattern_mass(x) <= tol * x.frobenius_norm().max(1.0))
    }

    /// Largest modulus of an entry above the block line.
    pub fn off_pattern_mass(&self, x: &ComplexMatrix) -> f64 {
        let n = self.dim();
        let mut mass = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                if !self.structure.in_pattern(i, j) {
                    mass = mass.max(x[(i, j)].norm());
                }
            }
        }
        mass
    }

    /// Whether `x` is exactly block diagonal (pattern zeros, no tolerance).
    pub fn is_block_diagonal(&self, x: &ComplexMatrix) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| self.structure.on_block_diagonal(i, j) || x[(i, j)] == Complex64::ZERO)
        })
    }

    /// Whether `x` is exactly strictly block lower  (in the algebra with
    /// vanishing expectation; pattern zeros, no tolerance).
    pub fn is_strictly_lower(&self, x: &ComplexMatrix) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (self.structure.in_pattern(i, j) && !self.structure.on_block_diagonal(i, j))
                    || x[(i, j)] == Complex64::ZERO
            })
        })
    }

    /// Exercises the defining axioms on `trials` seeded random instances
    /// and reports the worst residuals. Failures are reported, not thrown.
    pub fn verify_axioms(&self, trials: usize, seed: u64, tol: f64) -> AxiomReport {
        let n = self.dim();
        let trials = trials.max(1);

        let sd1_span_dim = self.span_dimension();

        let mut idempotence = 0.0f64;
        let mut positivity = 0.0f64;
        let mut faithfulness = 0.0f64;
        let mut sd3 = 0.0f64;
        let mut finiteness = 0.0f64;

        for t in 0..trials {
            let mut rng = sample::trial_rng(seed, t as u64);

            // phi is idempotent and trace-preserving on arbitrary input.
            let x = sample::gaussian_matrix(&mut rng, n);
            let px = self.expectation(&x).expect("dimensions agree");
            let ppx = self.expectation(&px).expect("dimensions agree");
            idempotence = idempotence.max((&ppx - &px).frobenius_norm());
            let tx = self.trace(&x).expect("dimensions agree");
            let tpx = self.trace(&px).expect("dimensions agree");
            finiteness = finiteness.max((tpx - tx).norm());

            // phi carries positive operators to positive operators.
            let pos = sample::random_psd(&mut rng, n);
            let scale = pos.spectral_norm().max(1.0);
            let ppos = self.expectation(&pos).expect("dimensions agree");
            let min_eig = crate::eig::herm_eig(&ppos)
                .expect("expectation of Hermitian is Hermitian")
                .min_eigenvalue();
            positivity = positivity.max((-min_eig / scale).max(0.0));

            // Faithfulness: forcing phi(Y) = 0 on the off-diagonal part of a
            // positive matrix leaves a trace-zero Hermitian Y, which can only
            // stay positive by being zero.
            let y = &pos - &ppos;
            let y_scale = y.spectral_norm();
            if y_scale == 0.0 || {
                let y_min = crate::eig::herm_eig(&y)
                    .expect("difference of Hermitian matrices")
                    .min_eigenvalue();
                y_min >= -tol * y_scale
            } {
                faithfulness = faithfulness.max(y.frobenius_norm() / pos.frobenius_norm().max(1.0));
            }

            // Multiplicativity on the subalgebra.
            let a = sample::random_in_algebra(&mut rng, self);
            let b = sample::random_in_algebra(&mut rng, self);
            let lhs = self.expectation(&(&a * &b)).expect("dimensions agree");
            let rhs = &self.expectation(&a).expect("dimensions agree")
                * &self.expectation(&b).expect("dimensions agree");
            sd3 = sd3.max((&lhs - &rhs).frobenius_norm());
        }

        let pass = sd1_span_dim == n * n
            && idempotence <= tol
            && positivity <= tol
            && faithfulness <= tol
            && sd3 <= tol
            && finiteness <= tol;
        AxiomReport {
            sd1_span_dim,
            sd2_idempotence: idempotence,
            sd2_positivity: positivity,
            sd2_faithfulness: faithfulness,
            sd3_residual: sd3,
            finiteness_residual: finiteness,
            tol,
            pass,
        }
    }

    /// Complex dimension of `span(A + A*)`, computed by ranking the
    /// real-linear span of a basis of the algebra together with the
    /// adjoint basis. Density of `A + A*` in `M_n` at finite dimension
    /// means this rank equals `n^2`.
    fn span_dimension(&self) -> usize {
        let n = self.dim();
        let width = 2 * n * n;
        let mut rows: Vec<Vec<f64>> = Vec::new();
        let mut push_unit = |i: usize, j: usize| {
            // Matrix unit e_ij and its multiple by the imaginary unit, as
            // real vectors over (Re, Im) coordinates.
            let mut re_row = vec![0.0; width];
            re_row[i * n + j] = 1.0;
            rows.push(re_row);
            let mut im_row = vec![0.0; width];
            im_row[n * n + i * n + j] = 1.0;
            rows.push(im_row);
        };
        for i in 0..n {
            for j in 0..n {
                if self.structure.in_pattern(i, j) {
                    push_unit(i, j);
                    // Adjoint basis element e_ij* = e_ji.
                    push_unit(j, i);
                }
            }
        }
        let rank = real_rank(rows, width);
        debug_assert!(
            rank.is_multiple_of(2),
            "complex subspaces have even real rank"
        );
        rank / 2
    }

    /// For every strictly-upper matrix unit `e_ij`, exhibits the
    /// multiplicativity violation that rules out enlarging the algebra by
    /// it: `phi(e_ij e_ji) = e_ii` while `phi(e_ij) phi(e_ji) = 0`.
    /// Empty exactly when the partition has a single block.
    pub fn maximality_probe(&self) -> Vec<MaximalityWitness> {
        let n = self.dim();
        let mut witnesses = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.structure.in_pattern(i, j) {
                    continue;
                }
                let e_ij = ComplexMatrix::from_fn(n, |r, c| {
                    if (r, c) == (i, j) {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::ZERO
                    }
                });
                let e_ji = e_ij.adjoint();
                let lhs = self.expectation(&(&e_ij * &e_ji)).expect("same dims");
                let rhs = &self.expectation(&e_ij).expect("same dims")
                    * &self.expectation(&e_ji).expect("same dims");
                let violation_norm = (&lhs - &rhs).frobenius_norm();
                witnesses.push(MaximalityWitness {
                    row: i,
                    col: j,
                    violation_norm,
                });
            }
        }
        witnesses
    }
}

/// Rank of a set of real row vectors by Gaussian elimination. The inputs
/// here are 0/1 unit vectors, so any pivot threshold below 1 is exact.
fn real_rank(mut rows: Vec<Vec<f64>>, width: usize) -> usize {
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot_row) = (rank..rows.len()).max_by(|&a, &b| {
            rows[a][col]
                .abs()
                .partial_cmp(&rows[b][col].abs())
                .expect("finite")
        }) else {
            break;
        };
        if rows[pivot_row][col].abs() < 0.5 {
            continue;
        }
        rows.swap(rank, pivot_row);
        let (upper, lower) = rows.split_at_mut(rank + 1);
        let pivot_vec = &upper[rank];
        let pivot = pivot_vec[col];
        for row in lower.iter_mut() {
            let factor = row[col] / pivot;
            if factor != 0.0 {
                for (c, entry) in row.iter_mut().enumerate().skip(col) {
                    *entry -= factor * pivot_vec[c];
                }
            }
        }
        rank += 1;
    }
    rank
}

/// All ordered partitions (compositions) of `n`, in lexicographic order of
/// generation. There are `2^(n-1)` of them.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse(remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for first in 1..=remaining {
            current.push(first);
            recurse(remaining - first, current, out);
            current.pop();
        }
    }
    recurse(n, &mut current, &mut out);
    out
}
