//! Default tolerances, centralized so every check cites a named constant.
//!
//! Relative tolerances are scale-invariant: they multiply a norm of the
//! operand (`max(1, norm)` where the quantity may legitimately vanish).

/// Hermiticity test: `|X - X*|_F <= HERMITIAN_REL * max(1, |X|_F)`.
pub const HERMITIAN_REL: f64 = 1e-12;

/// Positive-definiteness floor: eigenvalues (and Cholesky pivots) must
/// exceed `PD_REL * |P|_2`. Also caps the admissible condition number
/// at `1 / PD_REL`.
pub const PD_REL: f64 = 1e-12;

/// Singular values at or below `SINGULAR_REL * sigma_max` are treated as
/// zero; the determinant of such an operator is 0 by convention.
pub const SINGULAR_REL: f64 = 1e-12;

/// Factorization and functional-calculus reconstruction accuracy,
/// e.g. `|L L* - P|_F <= RECON_REL * |P|_F`.
pub const RECON_REL: f64 = 1e-10;

/// Eigendecomposition reconstruction and unitarity accuracy.
pub const EIG_RECON_REL: f64 = 1e-12;

/// Default membership tolerance: entries above the block pattern must have
/// modulus `<= MEMBERSHIP_REL * max(1, |X|_F)`.
pub const MEMBERSHIP_REL: f64 = 1e-12;

/// Axiom residuals (idempotence, positivity, faithfulness, multiplicativity)
/// in `verify_axioms`.
pub const AXIOM_TOL: f64 = 1e-12;

/// Trace-preservation residual `|tau(phi(X)) - tau(X)|`.
pub const FINITENESS_TOL: f64 = 1e-14;

/// State validation: `|tau(W) - 1|` bound and relative psd slack.
pub const STATE_TOL: f64 = 1e-12;

/// Determinant-identity checks (multiplicativity, unitary invariance,
/// triangular identity, factorization consistency).
pub const DET_IDENTITY_REL: f64 = 1e-10;

/// Feasibility slack on the determinant constraint `det(D) >= 1 - FEAS_TOL`.
pub const FEAS_TOL: f64 = 1e-8;

/// One-sided variational certificate: feasible objectives must stay above
/// `target - CERT_TOL * max(1, target)`.
pub const CERT_TOL: f64 = 1e-8;

/// Closed-form solver agreement with the determinant target (relative).
pub const CLOSED_FORM_REL: f64 = 1e-10;

/// Alternating solver agreement with the determinant target (relative).
pub const ALTERNATING_REL: f64 = 1e-4;

/// Brute-force search agreement with the determinant target (relative).
pub const BRUTE_FORCE_REL: f64 = 1e-3;

/// Quadrature slack for circle-grid identities at N >= 4096.
pub const QUADRATURE_TOL: f64 = 1e-6;

/// Slack for the classical mean-vs-geometric-mean inequality on sampled
/// polynomials (spectrally accurate quadrature of smooth integrands).
pub const CLASSICAL_JENSEN_TOL: f64 = 1e-8;

/// Prediction-error ladder convergence to the geometric mean.
pub const LADDER_LIMIT_TOL: f64 = 1e-3;

/// Ladder monotonicity slack (nested feasible sets; float roundoff only).
pub const LADDER_MONOTONE_TOL: f64 = 1e-12;

/// Maximum admissible condition number for normal equations and inverses.
pub const CONDITION_LIMIT: f64 = 1e12;
