//! Numerical laboratory for finite-dimensional subdiagonal operator algebras.
//!
//! The ambient von Neumann algebra is the full matrix algebra `M_n` with its
//! normalized trace `tau = tr / n`. An ordered block partition of `n` carves
//! out the block lower-triangular subalgebra, its diagonal, the conditional
//! expectation onto the diagonal, and everything built on top of them:
//!
//! - [`matrix`], [`eig`], [`chol`]: dense complex kernel (arithmetic,
//!   Hermitian spectra, triangular factorizations);
//! - [`algebra`]: block structures, the expectation, axiom verification and
//!   maximality probes;
//! - [`fkdet`]: the determinant `exp tau(log |X|)` for operators and for
//!   states given by a density;
//! - [`factor`]: positive factorization `X = A* A` with `A` and its inverse
//!   inside the algebra;
//! - [`jensen`]: determinant inequality and formula under the expectation;
//! - [`szego`]: the determinant-constrained quadratic minimization whose
//!   infimum is the state determinant, with closed-form, alternating, and
//!   brute-force routes;
//! - [`classical`]: the commutative picture on the unit circle
//!   (geometric means, trigonometric least squares, prediction ladders);
//! - [`sample`]: the seeded generators used by every randomized suite.

pub mod algebra;
pub mod chol;
pub mod classical;
pub mod eig;
pub mod error;
pub mod factor;
pub mod fkdet;
pub mod jensen;
pub mod matrix;
pub mod sample;
pub mod szego;
pub mod tol;

pub use algebra::{AxiomReport, BlockStructure, MaximalityWitness, SubdiagonalAlgebra};
pub use chol::{cholesky_lower, invert_lower_triangular, reverse_cholesky};
pub use eig::{abs_op, herm_eig, HermEigDecomposition};
pub use error::{Error, Result};
pub use factor::{factorize_positive, verify_factorization, FactorizationReport};
pub use fkdet::{fk_det, fk_det_state, State};
pub use jensen::{jensen_formula_check, jensen_gap, jensen_suite, JensenReport};
pub use matrix::ComplexMatrix;
pub use szego::{
    brute_force_infimum, objective, solve_alternating, solve_closed_form, SolveMethod,
    SolverConfig, SzegoPoint, SzegoReport, TraceEntry,
};
