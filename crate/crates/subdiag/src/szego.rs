//! The determinant-constrained quadratic minimization
//! `inf rho(|D + A|^2)` over block-diagonal `D` with `det(D) >= 1` and
//! strictly block lower `A`, whose value is the state determinant.
//!
//! Three routes to the same number:
//! - a closed-form construction through the Cholesky factor of the density
//!   (derived by a change of variable, see [`solve_closed_form`]);
//! - alternating minimization with exact least-squares in `A` and
//!   projected gradient steps in `D` ([`solve_alternating`]);
//! - generic multi-start numerical-gradient descent over the raw real
//!   coordinates, as an independent oracle at tiny dimension
//!   ([`brute_force_infimum`]).

use num_complex::Complex64;

use crate::algebra::SubdiagonalAlgebra;
use crate::chol;
use crate::error::{Error, Result};
use crate::fkdet::{self, State};
use crate::matrix::ComplexMatrix;
use crate::sample;
use crate::tol;

/// Candidate minimizer: block-diagonal `D` and strictly block lower `A`.
/// Both patterns hold exactly (entry-level zeros, no tolerance).
#[derive(Debug, Clone, PartialEq)]
pub struct SzegoPoint {
    d: ComplexMatrix,
    a: ComplexMatrix,
}

impl SzegoPoint {
    /// Validates the exact block patterns of `d` (block diagonal) and `a`
    /// (strictly block lower, i.e. zero expectation inside the algebra).
    pub fn new(alg: &SubdiagonalAlgebra, d: ComplexMatrix, a: ComplexMatrix) -> Result<Self> {
        d.expect_dim(alg.dim())?;
        a.expect_dim(alg.dim())?;
        if !alg.is_block_diagonal(&d) {
            return Err(Error::InvalidPoint(
                "D has entries outside the diagonal blocks".into(),
            ));
        }
        if !alg.is_strictly_lower(&a) {
            return Err(Error::InvalidPoint(
                "A has entries on or above the diagonal blocks".into(),
            ));
        }
        Ok(Self { d, a })
    }

    pub fn d(&self) -> &ComplexMatrix {
        &self.d
    }

    pub fn a(&self) -> &ComplexMatrix {
        &self.a
    }

    /// `D + A`.
    pub fn combined(&self) -> ComplexMatrix {
        &self.d + &self.a
    }

    /// Determinant of the diagonal part.
    pub fn det_d(&self) -> f64 {
        fkdet::det(&self.d)
    }

    /// Feasibility: `det(D) >= 1 - tol_feas`.
    pub fn is_feasible(&self, tol_feas: f64) -> bool {
        self.det_d() >= 1.0 - tol_feas
    }
}

/// Which route produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    ClosedForm,
    Alternating,
}

/// One feasible objective evaluation along a solver run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceEntry {
    pub restart: usize,
    pub iteration: usize,
    pub objective: f64,
    pub det_d: f64,
}

/// Solver output: the value found, the determinant target, the candidate
/// minimizer, and the full trace of feasible iterates.
#[derive(Debug, Clone)]
pub struct SzegoReport {
    pub infimum_estimate: f64,
    /// The state determinant the infimum must equal.
    pub target: f64,
    /// Candidate minimizer; `None` when the density is singular and the
    /// infimum (zero) is approached but not attained.
    pub point: Option<SzegoPoint>,
    pub trace: Vec<TraceEntry>,
    /// Whether a minimizer is exhibited.
    pub attained: bool,
    /// Whether iteration terminated by tolerance rather than budget.
    pub converged: bool,
    pub method: SolveMethod,
}

/// Iterative solver configuration.
#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    pub max_iters: usize,
    /// Relative objective-change tolerance for termination.
    pub tol: f64,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            max_iters: 500,
            tol: 1e-8,
            restarts: 8,
            seed: 0,
        }
    }
}

/// `rho(|D + A|^2) = tau(W (D + A)* (D + A))`; always nonnegative.
pub fn objective(alg: &SubdiagonalAlgebra, rho: &State, p: &SzegoPoint) -> Result<f64> {
    check_dims(alg, rho)?;
    p.d().expect_dim(alg.dim())?;
    Ok(objective_of(rho.density(), &p.combined()))
}

fn check_dims(alg: &SubdiagonalAlgebra, rho: &State) -> Result<()> {
    if rho.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: rho.dim(),
        });
    }
    Ok(())
}

/// `tau(W B* B)` for `B = D + A`, as a real number.
fn objective_of(w: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    let gram = &b.adjoint() * b;
    let n = w.dim();
    let mut tr = 0.0;
    for i in 0..n {
        for k in 0..n {
            tr += (w[(i, k)] * gram[(k, i)]).re;
        }
    }
    tr / n as f64
}

/// Degenerate report for a singular density: the infimum is the (zero)
/// determinant and is not attained, so no minimizer search runs.
fn singular_report(method: SolveMethod) -> SzegoReport {
    SzegoReport {
        infimum_estimate: 0.0,
        target: 0.0,
        point: None,
        trace: Vec::new(),
        attained: false,
        converged: true,
        method,
    }
}

/// Returns the positive-definiteness floor of the density, or `None` when
/// the density is singular.
fn density_floor(w: &ComplexMatrix) -> Result<Option<f64>> {
    let eig = crate::eig::herm_eig(w)?;
    let tol_pd = tol::PD_REL * eig.spectral_norm();
    if eig.min_eigenvalue() <= tol_pd {
        return Ok(None);
    }
    Ok(Some(tol_pd))
}

/// Constructs the minimizer analytically.
///
/// With `W = L L*` and `delta = det(W)^{1/2}`, the change of variable
/// `C = (D + A) L` turns the objective into `|C|_F^2 / n` constrained by
/// `det(C) >= delta` over block lower-triangular `C`; the arithmetic-
/// geometric mean inequality on the singular values of `C` shows the
/// minimum is `n delta^2 / n = det(W)`, reached at `C = delta I`. Pulling
/// back, `B = delta L^{-1}`, `D = phi(B)`, `A = B - D`, with `det(D) = 1`
/// exactly on the constraint boundary.
pub fn solve_closed_form(alg: &SubdiagonalAlgebra, rho: &State) -> Result<SzegoReport> {
    check_dims(alg, rho)?;
    let w = rho.density();
    let Some(tol_pd) = density_floor(w)? else {
        return Ok(singular_report(SolveMethod::ClosedForm));
    };

    let l = chol::cholesky_lower_unchecked(w, tol_pd)?;
    let l_inv = chol::invert_lower_triangular(&l)?;
    let target = fkdet::fk_det_state(rho);
    let b = l_inv.scale(target.sqrt());
    let d = alg.expectation(&b)?;
    let a = &b - &d;
    let point = SzegoPoint::new(alg, d, a)?;
    let value = objective(alg, rho, &point)?;
    let det_d = point.det_d();
    Ok(SzegoReport {
        infimum_estimate: value,
        target,
        point: Some(point),
        trace: vec![TraceEntry {
            restart: 0,
            iteration: 0,
            objective: value,
            det_d,
        }],
        attained: true,
        converged: true,
        method: SolveMethod::ClosedForm,
    })
}

/// Per-row cache for the exact `A`-minimization: the strictly-lower column
/// support of the row and the Cholesky factor of the corresponding
/// principal submatrix of the density.
struct RowSystem {
    row: usize,
    support: Vec<usize>,
    chol: ComplexMatrix,
}

fn row_systems(alg: &SubdiagonalAlgebra, w: &ComplexMatrix, tol_pd: f64) -> Result<Vec<RowSystem>> {
    let n = alg.dim();
    let s = alg.structure();
    let mut out = Vec::new();
    for i in 0..n {
        let support: Vec<usize> = (0..n).filter(|&j| s.block_of(j) < s.block_of(i)).collect();
        if support.is_empty() {
            continue;
        }
        let m = support.len();
        let sub = ComplexMatrix::from_fn(m, |p, q| w[(support[p], support[q])]);
        // Principal submatrices of a positive definite matrix stay positive
        // definite, with eigenvalues at least the parent floor.
        let factor = chol::cholesky_lower_unchecked(&sub, tol_pd)?;
        out.push(RowSystem {
            row: i,
            support,
            chol: factor,
        });
    }
    Ok(out)
}

/// Exact minimization over `A` for fixed `D`: the objective
/// `tau(W B* B) = (1/n) sum_i b_i W b_i*` decouples over the rows of
/// `B = D + A`, and each row solves the positive-definite normal system
/// `W[S,S] conj(a_S) = -conj((d W)_S)` in its free strictly-lower
/// coordinates `S`.
fn minimize_a(
    alg: &SubdiagonalAlgebra,
    w: &ComplexMatrix,
    d: &ComplexMatrix,
    systems: &[RowSystem],
) -> ComplexMatrix {
    let n = alg.dim();
    let s = alg.structure();
    let mut a = ComplexMatrix::zeros(n);
    for sys in systems {
        let i = sys.row;
        let block = s.block_of(i);
        // g = (row i of D) * W, restricted to the support columns.
        let rhs: Vec<Complex64> = sys
            .support
            .iter()
            .map(|&j| {
                let mut g = Complex64::ZERO;
                for k in s.block_range(block) {
                    g += d[(i, k)] * w[(k, j)];
                }
                (-g).conj()
            })
            .collect();
        let y = chol::solve_lower(&sys.chol, &rhs);
        let y = chol::solve_lower_adjoint(&sys.chol, &y);
        for (idx, &j) in sys.support.iter().enumerate() {
            a[(i, j)] = y[idx].conj();
        }
    }
    a
}

/// Euclidean gradient of the objective with respect to the conjugate of
/// the block-diagonal coordinates: `(1/n) phi(B W)`.
fn diagonal_gradient(
    alg: &SubdiagonalAlgebra,
    w: &ComplexMatrix,
    b: &ComplexMatrix,
) -> ComplexMatrix {
    let g = (b * w).scale(1.0 / alg.dim() as f64);
    alg.expectation(&g).expect("dimensions agree")
}

/// Real inner product `Re tr(X* Y)`.
fn re_inner(x: &ComplexMatrix, y: &ComplexMatrix) -> f64 {
    let n = x.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            acc += (x[(i, j)].conj() * y[(i, j)]).re;
        }
    }
    acc
}

/// One projected-gradient step in `D` on the `det(D) = 1` manifold:
/// project the gradient onto the tangent space, backtrack on the step
/// size, renormalize `D / det(D)`, accept on objective decrease.
fn d_step(
    alg: &SubdiagonalAlgebra,
    w: &ComplexMatrix,
    d: &ComplexMatrix,
    a: &ComplexMatrix,
    f_current: f64,
    eta: f64,
) -> (ComplexMatrix, f64, f64) {
    let b = d + a;
    let grad = diagonal_gradient(alg, w, &b);

    // Tangent projection: remove the component along the constraint normal
    // phi(D^{-*}), when the inverse is available.
    let direction = match d.try_inverse() {
        Some(d_inv) => {
            let normal = alg.expectation(&d_inv.adjoint()).expect("dimensions agree");
            let nn = re_inner(&normal, &normal);
            if nn > 0.0 {
                let lambda = re_inner(&normal, &grad) / nn;
                &grad - &normal.scale(lambda)
            } else {
                grad
            }
        }
        None => grad,
    };

    let dir_norm = direction.frobenius_norm();
    if dir_norm == 0.0 {
        return (d.clone(), f_current, eta);
    }

    let mut step = eta.max(1e-16);
    for _ in 0..60 {
        let candidate = d - &direction.scale(step);
        let det = fkdet::det(&candidate);
        if det > 1e-300 {
            let renormalized = candidate.scale(1.0 / det);
            let f_new = objective_of(w, &(&renormalized + a));
            if f_new < f_current {
                // Grow the step for the next round.
                return (renormalized, f_new, step * 2.0);
            }
        }
        step *= 0.5;
    }
    (d.clone(), f_current, eta * 0.5)
}

/// Iterative route: alternate exact `A`-minimization with projected
/// gradient descent in `D`, renormalizing `D` to the constraint boundary
/// after every move. The objective never increases across `A`-steps; runs
/// from several seeded starts and reports the best, with the full trace of
/// feasible iterates from every restart.
pub fn solve_alternating(
    alg: &SubdiagonalAlgebra,
    rho: &State,
    cfg: &SolverConfig,
) -> Result<SzegoReport> {
    check_dims(alg, rho)?;
    let w = rho.density();
    let Some(tol_pd) = density_floor(w)? else {
        return Ok(singular_report(SolveMethod::Alternating));
    };

    let n = alg.dim();
    let target = fkdet::fk_det_state(rho);
    let systems = row_systems(alg, w, tol_pd)?;

    let mut trace = Vec::new();
    let mut best: Option<(f64, ComplexMatrix, ComplexMatrix, bool)> = None;

    for restart in 0..cfg.restarts.max(1) {
        let mut d = if restart == 0 {
            ComplexMatrix::identity(n)
        } else {
            // Shift a random block diagonal into invertibility, then move to
            // the constraint boundary.
            let mut rng = sample::trial_rng(cfg.seed, restart as u64);
            let r = sample::random_block_diagonal(&mut rng, alg);
            let shifted = &r + &ComplexMatrix::identity(n).scale(2.0 * r.spectral_norm().max(1.0));
            let det = fkdet::det(&shifted);
            shifted.scale(1.0 / det)
        };

        let mut eta = 0.1;
        let mut f_prev = f64::INFINITY;
        let mut converged = false;
        let mut a = ComplexMatrix::zeros(n);

        for iteration in 1..=cfg.max_iters.max(1) {
            a = minimize_a(alg, w, &d, &systems);
            let f = objective_of(w, &(&d + &a));
            trace.push(TraceEntry {
                restart,
                iteration,
                objective: f,
                det_d: fkdet::det(&d),
            });
            if f_prev.is_finite()
                && (f_prev - f).abs() <= cfg.tol * f_prev.abs().max(f64::MIN_POSITIVE)
            {
                f_prev = f;
                converged = true;
                break;
            }
            f_prev = f;
            let (d_new, f_new, eta_new) = d_step(alg, w, &d, &a, f, eta);
            d = d_new;
            eta = eta_new;
            // A stale A is still feasible: record the post-step value.
            if f_new < f {
                trace.push(TraceEntry {
                    restart,
                    iteration,
                    objective: f_new,
                    det_d: fkdet::det(&d),
                });
            }
        }

        let is_better = best.as_ref().is_none_or(|(bf, ..)| f_prev < *bf);
        if is_better {
            best = Some((f_prev, d, a, converged));
        }
    }

    let (value, d, a, converged) = best.expect("at least one restart ran");
    let point = SzegoPoint::new(alg, d, a)?;
    Ok(SzegoReport {
        infimum_estimate: value,
        target,
        point: Some(point),
        trace,
        attained: true,
        converged,
        method: SolveMethod::Alternating,
    })
}

/// Search-space cap for the brute-force oracle.
pub const BRUTE_FORCE_MAX_DIM: usize = 3;

/// Independent oracle at tiny dimension: multi-start descent with a
/// numerical gradient over the raw real coordinates of `(D, A)`, with
/// feasibility restored by renormalizing `D` whenever its determinant
/// falls under 1. Returns the best objective found.
pub fn brute_force_infimum(
    alg: &SubdiagonalAlgebra,
    rho: &State,
    cfg: &SolverConfig,
) -> Result<f64> {
    check_dims(alg, rho)?;
    let n = alg.dim();
    if n > BRUTE_FORCE_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            dim: n,
            max: BRUTE_FORCE_MAX_DIM,
        });
    }
    let w = rho.density();
    if density_floor(w)?.is_none() {
        // The infimum of a singular density is its zero determinant.
        return Ok(0.0);
    }

    let s = alg.structure();
    let mut d_coords = Vec::new();
    let mut a_coords = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if s.on_block_diagonal(i, j) {
                d_coords.push((i, j));
            } else if s.in_pattern(i, j) {
                a_coords.push((i, j));
            }
        }
    }
    let dim = 2 * (d_coords.len() + a_coords.len());

    let unpack = |x: &[f64]| -> (ComplexMatrix, ComplexMatrix) {
        let mut d = ComplexMatrix::zeros(n);
        let mut a = ComplexMatrix::zeros(n);
        let mut idx = 0;
        for &(i, j) in &d_coords {
            d[(i, j)] = Complex64::new(x[idx], x[idx + 1]);
            idx += 2;
        }
        for &(i, j) in &a_coords {
            a[(i, j)] = Complex64::new(x[idx], x[idx + 1]);
            idx += 2;
        }
        (d, a)
    };

    // Objective after projecting onto the feasible set: scale D up to the
    // determinant boundary when it falls inside.
    let eval = |x: &[f64]| -> f64 {
        let (d, a) = unpack(x);
        let det = fkdet::det(&d);
        if det <= 1e-300 {
            return f64::INFINITY;
        }
        let d_feas = if det < 1.0 { d.scale(1.0 / det) } else { d };
        objective_of(w, &(&d_feas + &a))
    };

    let pack_start = |d: &ComplexMatrix, a: &ComplexMatrix| -> Vec<f64> {
        let mut x = Vec::with_capacity(dim);
        for &(i, j) in &d_coords {
            x.push(d[(i, j)].re);
            x.push(d[(i, j)].im);
        }
        for &(i, j) in &a_coords {
            x.push(a[(i, j)].re);
            x.push(a[(i, j)].im);
        }
        x
    };

    let mut best = f64::INFINITY;
    for restart in 0..cfg.restarts.max(1) {
        let mut x = if restart == 0 {
            pack_start(&ComplexMatrix::identity(n), &ComplexMatrix::zeros(n))
        } else {
            let mut rng = sample::trial_rng(cfg.seed ^ 0x5a5a_5a5a, restart as u64);
            let r = sample::random_block_diagonal(&mut rng, alg);
            let shifted = &r + &ComplexMatrix::identity(n).scale(2.0 * r.spectral_norm().max(1.0));
            let det = fkdet::det(&shifted);
            let d0 = shifted.scale(1.0 / det);
            let a0 = sample::random_strictly_lower(&mut rng, alg).scale(0.3);
            pack_start(&d0, &a0)
        };

        let mut f = eval(&x);
        let mut step = 0.25;
        for _ in 0..cfg.max_iters.max(1) * 4 {
            // Central-difference gradient of the projected objective.
            let mut grad = vec![0.0; dim];
            let mut grad_norm2 = 0.0;
            for i in 0..dim {
                let h = 1e-6 * x[i].abs().max(1.0);
                let saved = x[i];
                x[i] = saved + h;
                let fp = eval(&x);
                x[i] = saved - h;
                let fm = eval(&x);
                x[i] = saved;
                grad[i] = (fp - fm) / (2.0 * h);
                grad_norm2 += grad[i] * grad[i];
            }
            if grad_norm2.sqrt() < 1e-12 {
                break;
            }

            let mut improved = false;
            let mut t = step;
            for _ in 0..40 {
                let candidate: Vec<f64> = x.iter().zip(&grad).map(|(xi, gi)| xi - t * gi).collect();
                let f_new = eval(&candidate);
                if f_new < f - 1e-12 * f.abs().max(1.0) {
                    x = candidate;
                    f = f_new;
                    step = t * 2.0;
                    improved = true;
                    break;
                }
                t *= 0.5;
            }
            if !improved {
                break;
            }
        }
        best = best.min(f);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_state(entries: &[f64]) -> State {
        State::new(ComplexMatrix::from_real_diagonal(entries)).unwrap()
    }

    #[test]
    fn objective_on_hand_points() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let rho = State::new(ComplexMatrix::identity(2)).unwrap();
        let p = SzegoPoint::new(&alg, ComplexMatrix::identity(2), ComplexMatrix::zeros(2)).unwrap();
        assert!((objective(&alg, &rho, &p).unwrap() - 1.0).abs() < 1e-15);

        // tau(diag(0.4, 1.6) diag(2, 1/2)) = (0.4*2 + 1.6*0.5) / 2 = 0.8.
        let rho = diag_state(&[0.4, 1.6]);
        let d = ComplexMatrix::from_real_diagonal(&[
            std::f64::consts::SQRT_2,
            1.0 / std::f64::consts::SQRT_2,
        ]);
        let p = SzegoPoint::new(&alg, d, ComplexMatrix::zeros(2)).unwrap();
        assert!((objective(&alg, &rho, &p).unwrap() - 0.8).abs() < 1e-14);

        // The zero point is infeasible but the objective is still defined.
        let zero = SzegoPoint::new(&alg, ComplexMatrix::zeros(2), ComplexMatrix::zeros(2)).unwrap();
        assert_eq!(objective(&alg, &rho, &zero).unwrap(), 0.0);
        assert!(!zero.is_feasible(tol::FEAS_TOL));
    }

    #[test]
    fn point_patterns_are_validated() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let full = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        assert!(SzegoPoint::new(&alg, full.clone(), ComplexMatrix::zeros(2)).is_err());
        assert!(SzegoPoint::new(&alg, ComplexMatrix::identity(2), full).is_err());
    }

    #[test]
    fn dimension_mismatches_are_rejected() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let rho3 = State::new(ComplexMatrix::identity(3)).unwrap();
        assert!(matches!(
            solve_closed_form(&alg, &rho3),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            solve_alternating(&alg, &rho3, &SolverConfig::default()),
            Err(Error::DimensionMismatch { .. })
        ));
        let rho2 = State::new(ComplexMatrix::identity(2)).unwrap();
        let p = SzegoPoint::new(&alg, ComplexMatrix::identity(2), ComplexMatrix::zeros(2)).unwrap();
        assert!(matches!(
            objective(
                &SubdiagonalAlgebra::from_partition(&[3]).unwrap(),
                &rho2,
                &p
            ),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn closed_form_identity_density() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let rho = State::new(ComplexMatrix::identity(2)).unwrap();
        let report = solve_closed_form(&alg, &rho).unwrap();
        assert!((report.infimum_estimate - 1.0).abs() < 1e-14);
        assert!((report.target - 1.0).abs() < 1e-14);
        let p = report.point.unwrap();
        assert!((&p.combined() - &ComplexMatrix::identity(2)).frobenius_norm() < 1e-14);
        assert!(report.attained);
    }

    #[test]
    fn closed_form_diagonal_density() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let rho = diag_state(&[0.4, 1.6]);
        let report = solve_closed_form(&alg, &rho).unwrap();
        assert!((report.infimum_estimate - 0.8).abs() < 1e-12);
        assert!((report.target - 0.8).abs() < 1e-14);
        let p = report.point.unwrap();
        assert!((p.det_d() - 1.0).abs() < 1e-12);
        assert!(p.is_feasible(tol::FEAS_TOL));
    }

    #[test]
    fn closed_form_random_density_matches_determinant() {
        let alg = SubdiagonalAlgebra::from_partition(&[2, 2, 1]).unwrap();
        let mut rng = sample::trial_rng(21, 0);
        let rho = State::new(sample::random_density(&mut rng, 5)).unwrap();
        let report = solve_closed_form(&alg, &rho).unwrap();
        let rel = (report.infimum_estimate - report.target).abs() / report.target;
        assert!(rel < tol::CLOSED_FORM_REL, "relative gap {rel:.3e}");
        assert!((report.point.unwrap().det_d() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn singular_density_reports_unattained_zero() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let rho = diag_state(&[0.0, 2.0]);
        for report in [
            solve_closed_form(&alg, &rho).unwrap(),
            solve_alternating(&alg, &rho, &SolverConfig::default()).unwrap(),
        ] {
            assert_eq!(report.infimum_estimate, 0.0);
            assert_eq!(report.target, 0.0);
            assert!(report.point.is_none());
            assert!(!report.attained);
        }
        assert_eq!(
            brute_force_infimum(&alg, &rho, &SolverConfig::default()).unwrap(),
            0.0
        );
    }

    #[test]
    fn alternating_identity_density_converges_immediately() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let rho = State::new(ComplexMatrix::identity(2)).unwrap();
        let cfg = SolverConfig {
            restarts: 1,
            ..SolverConfig::default()
        };
        let report = solve_alternating(&alg, &rho, &cfg).unwrap();
        assert!((report.infimum_estimate - 1.0).abs() < 1e-12);
        assert!(report.converged);
        // Canonical start is already optimal: one A-step certifies it.
        assert!(report.trace.len() <= 3);
    }

    #[test]
    fn alternating_matches_closed_form_on_diagonal_density() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let rho = diag_state(&[0.4, 1.6]);
        let report = solve_alternating(&alg, &rho, &SolverConfig::default()).unwrap();
        assert!(
            (report.infimum_estimate - 0.8).abs() / 0.8 < 1e-6,
            "value {:.9}",
            report.infimum_estimate
        );
        assert!(report.point.unwrap().is_feasible(tol::FEAS_TOL));
    }

    #[test]
    fn alternating_traces_stay_above_target() {
        let alg = SubdiagonalAlgebra::from_partition(&[2, 1]).unwrap();
        let mut rng = sample::trial_rng(22, 0);
        let rho = State::new(sample::random_density(&mut rng, 3)).unwrap();
        let report = solve_alternating(&alg, &rho, &SolverConfig::default()).unwrap();
        let floor = report.target - tol::CERT_TOL * report.target.max(1.0);
        for entry in &report.trace {
            assert!(
                entry.objective >= floor,
                "iterate {entry:?} undercuts the certificate"
            );
        }
    }

    #[test]
    fn brute_force_agrees_on_small_instances() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let cfg = SolverConfig {
            restarts: 3,
            ..SolverConfig::default()
        };

        let rho = State::new(ComplexMatrix::identity(2)).unwrap();
        let v = brute_force_infimum(&alg, &rho, &cfg).unwrap();
        assert!((v - 1.0).abs() < 1e-3, "value {v:.6}");

        let rho = diag_state(&[0.4, 1.6]);
        let v = brute_force_infimum(&alg, &rho, &cfg).unwrap();
        assert!((v - 0.8).abs() < 1e-3, "value {v:.6}");
    }

    #[test]
    fn brute_force_rejects_large_dimensions() {
        let alg = SubdiagonalAlgebra::from_partition(&[2, 2]).unwrap();
        let rho = State::new(ComplexMatrix::identity(4)).unwrap();
        assert!(matches!(
            brute_force_infimum(&alg, &rho, &SolverConfig::default()),
            Err(Error::DimensionTooLarge { .. })
        ));
    }
}
