//! Per-command check suites. Each returns the list of verified claims;
//! any error bubbles up as an invalid-input diagnostic.

use num_complex::Complex64;
use subdiag::classical::{
    geometric_mean, jensen_classical, szego_ladder, CircleGrid, PolyOnCircle,
};
use subdiag::{
    brute_force_infimum, factorize_positive, fk_det_state, invert_lower_triangular, jensen_suite,
    sample, solve_alternating, solve_closed_form, szego, tol, verify_factorization, ComplexMatrix,
    SolverConfig, State, SubdiagonalAlgebra, SzegoReport,
};

use crate::report::Check;

type SuiteResult = Result<Vec<Check>, String>;

const DENSITY_ANCHOR: &str = "inf rho(|D+A|^2) = det(rho) over det(D) >= 1, phi(A) = 0";
const JENSEN_INEQ_ANCHOR: &str = "det(phi(A)) <= det(A) on the algebra";
const JENSEN_EQ_ANCHOR: &str = "det(phi(A)) = det(A) for A invertible in the algebra";
const FACTOR_ANCHOR: &str = "invertible positive X = A*A with A, inv(A) in the algebra";
const SPAN_ANCHOR: &str = "A + A* spans the ambient matrix algebra";
const EXPECTATION_ANCHOR: &str = "phi is an idempotent positive faithful expectation";
const MULTIPLICATIVE_ANCHOR: &str = "phi(AB) = phi(A) phi(B) on the algebra";
const FINITE_ANCHOR: &str = "tau . phi = tau";
const MAXIMAL_ANCHOR: &str = "no matrix-unit enlargement keeps the expectation multiplicative";
const GM_ANCHOR: &str = "exp of the mean of log w";
const LADDER_ANCHOR: &str = "inf |1 + f|^2 w over trigonometric f descends to the geometric mean";
const CLASSICAL_JENSEN_ANCHOR: &str = "|mean f| <= exp mean log |f| on the circle";

pub fn verify_suite(
    partition: &[usize],
    trials: usize,
    seed: u64,
    tol_override: Option<f64>,
) -> SuiteResult {
    let alg = SubdiagonalAlgebra::from_partition(partition).map_err(|e| e.to_string())?;
    let n = alg.dim();
    let axiom_tol = tol_override.unwrap_or(tol::AXIOM_TOL);
    let finite_tol = tol_override.unwrap_or(tol::FINITENESS_TOL);
    let rep = alg.verify_axioms(trials, seed, axiom_tol);

    let mut checks = vec![
        Check::exact(
            "span-density",
            SPAN_ANCHOR,
            rep.sd1_span_dim as f64,
            (n * n) as f64,
        ),
        Check::residual(
            "expectation-idempotent",
            EXPECTATION_ANCHOR,
            rep.sd2_idempotence,
            axiom_tol,
        ),
        Check::residual(
            "expectation-positive",
            EXPECTATION_ANCHOR,
            rep.sd2_positivity,
            axiom_tol,
        ),
        Check::residual(
            "expectation-faithful",
            EXPECTATION_ANCHOR,
            rep.sd2_faithfulness,
            axiom_tol,
        ),
        Check::residual(
            "expectation-multiplicative",
            MULTIPLICATIVE_ANCHOR,
            rep.sd3_residual,
            axiom_tol,
        ),
        Check::residual(
            "trace-preservation",
            FINITE_ANCHOR,
            rep.finiteness_residual,
            finite_tol,
        ),
    ];

    let witnesses = alg.maximality_probe();
    let s = alg.structure();
    let expected: usize = (0..s.num_blocks())
        .flat_map(|p| ((p + 1)..s.num_blocks()).map(move |q| (p, q)))
        .map(|(p, q)| s.partition()[p] * s.partition()[q])
        .sum();
    checks.push(Check::exact(
        "maximality-witness-count",
        MAXIMAL_ANCHOR,
        witnesses.len() as f64,
        expected as f64,
    ));
    let min_norm = witnesses
        .iter()
        .map(|w| w.violation_norm)
        .fold(f64::INFINITY, f64::min);
    // Vacuous for a single block: nothing lies above the line.
    checks.push(Check::at_least(
        "maximality-witness-norm",
        MAXIMAL_ANCHOR,
        if witnesses.is_empty() { 1.0 } else { min_norm },
        1.0 - 1e-12,
    ));
    Ok(checks)
}

pub fn jensen_cmd_suite(
    partition: &[usize],
    trials: usize,
    seed: u64,
    tol_override: Option<f64>,
) -> SuiteResult {
    let alg = SubdiagonalAlgebra::from_partition(partition).map_err(|e| e.to_string())?;
    let suite_tol = tol_override.unwrap_or(tol::DET_IDENTITY_REL);
    let rep = jensen_suite(&alg, trials, seed);
    Ok(vec![
        Check::at_least(
            "inequality-gap",
            JENSEN_INEQ_ANCHOR,
            rep.worst_gap,
            -suite_tol,
        ),
        Check::residual(
            "triangular-equality",
            "det(phi(A)) = det(A) on block-triangular matrices",
            rep.worst_equality_residual,
            suite_tol,
        ),
        Check::residual(
            "formula-residual",
            JENSEN_EQ_ANCHOR,
            rep.worst_formula_residual,
            suite_tol,
        ),
        Check::exact(
            "implication-violations",
            "the inequality forces the formula on invertibles",
            rep.implication_violations as f64,
            0.0,
        ),
    ])
}

pub fn factor_suite(
    partition: &[usize],
    input: Option<&str>,
    trials: usize,
    seed: u64,
    tol_override: Option<f64>,
) -> SuiteResult {
    let alg = SubdiagonalAlgebra::from_partition(partition).map_err(|e| e.to_string())?;
    let n = alg.dim();
    let suite_tol = tol_override.unwrap_or(tol::DET_IDENTITY_REL);

    let instances: Vec<ComplexMatrix> = match input {
        Some(text) => {
            let x = crate::matio::parse_matrix_json(text).map_err(|e| e.to_string())?;
            if x.dim() != n {
                return Err(format!(
                    "input is {}x{} but the partition sums to {n}",
                    x.dim(),
                    x.dim()
                ));
            }
            vec![x]
        }
        None => (0..trials.max(1))
            .map(|t| sample::random_spd(&mut sample::trial_rng(seed, t as u64), n))
            .collect(),
    };

    let mut worst_recon = 0.0f64;
    let mut worst_det = 0.0f64;
    let mut worst_mass = 0.0f64;
    for x in &instances {
        let a = factorize_positive(&alg, x).map_err(|e| e.to_string())?;
        let rep = verify_factorization(&alg, x, &a).map_err(|e| e.to_string())?;
        worst_recon = worst_recon.max(rep.reconstruction_residual);
        worst_det = worst_det.max(rep.det_residual);
        worst_mass = worst_mass.max(alg.off_pattern_mass(&a));
        let inv = invert_lower_triangular(&a).map_err(|e| e.to_string())?;
        worst_mass = worst_mass.max(alg.off_pattern_mass(&inv));
    }
    Ok(vec![
        Check::residual("reconstruction", FACTOR_ANCHOR, worst_recon, suite_tol),
        Check::residual(
            "determinant-consistency",
            FACTOR_ANCHOR,
            worst_det,
            suite_tol,
        ),
        Check::exact("pattern-membership", FACTOR_ANCHOR, worst_mass, 0.0),
    ])
}

pub fn szego_suite(
    partition: &[usize],
    input: Option<&str>,
    seed: u64,
    tol_override: Option<f64>,
) -> SuiteResult {
    let alg = SubdiagonalAlgebra::from_partition(partition).map_err(|e| e.to_string())?;
    let n = alg.dim();
    let density = match input {
        Some(text) => crate::matio::parse_matrix_json(text).map_err(|e| e.to_string())?,
        None => sample::random_density(&mut sample::trial_rng(seed, 0), n),
    };
    if density.dim() != n {
        return Err(format!(
            "density is {}x{} but the partition sums to {n}",
            density.dim(),
            density.dim()
        ));
    }
    let rho = State::new(density).map_err(|e| e.to_string())?;
    let target = fk_det_state(&rho);

    let closed = solve_closed_form(&alg, &rho).map_err(|e| e.to_string())?;
    let cfg = SolverConfig {
        seed,
        ..SolverConfig::default()
    };
    let alternating = solve_alternating(&alg, &rho, &cfg).map_err(|e| e.to_string())?;

    let mut checks = Vec::new();
    let rel = |report: &SzegoReport| {
        (report.infimum_estimate - report.target).abs() / report.target.max(f64::MIN_POSITIVE)
    };
    // Raw numbers first, so reports read as "infimum vs target".
    checks.push(Check {
        name: "infimum-estimate".into(),
        anchor: DENSITY_ANCHOR.into(),
        measured: closed.infimum_estimate,
        threshold: target,
        pass: rel(&closed) <= tol_override.unwrap_or(tol::CLOSED_FORM_REL),
    });
    checks.push(Check::residual(
        "closed-form-identity",
        DENSITY_ANCHOR,
        rel(&closed),
        tol_override.unwrap_or(tol::CLOSED_FORM_REL),
    ));
    checks.push(Check::residual(
        "alternating-identity",
        DENSITY_ANCHOR,
        rel(&alternating),
        tol_override.unwrap_or(tol::ALTERNATING_REL),
    ));
    if n <= szego::BRUTE_FORCE_MAX_DIM {
        let brute = brute_force_infimum(&alg, &rho, &SolverConfig { restarts: 3, ..cfg })
            .map_err(|e| e.to_string())?;
        checks.push(Check::residual(
            "brute-force-identity",
            DENSITY_ANCHOR,
            (brute - target).abs() / target.max(f64::MIN_POSITIVE),
            tol_override.unwrap_or(tol::BRUTE_FORCE_REL),
        ));
    }

    // One-sided certificate over every feasible iterate both solvers saw.
    let floor = target - tol::CERT_TOL * target.max(1.0);
    let min_margin = closed
        .trace
        .iter()
        .chain(alternating.trace.iter())
        .map(|e| e.objective - floor)
        .fold(f64::INFINITY, f64::min);
    checks.push(Check::at_least(
        "lower-bound-certificate",
        DENSITY_ANCHOR,
        min_margin,
        0.0,
    ));

    for (name, report) in [("closed-form", &closed), ("alternating", &alternating)] {
        if let Some(point) = &report.point {
            checks.push(Check::at_least(
                &format!("{name}-feasibility"),
                "det(D) >= 1 at the reported point",
                point.det_d(),
                1.0 - tol::FEAS_TOL,
            ));
        }
    }
    Ok(checks)
}

pub fn classical_suite(
    grid_size: usize,
    max_degree: usize,
    input: Option<&str>,
    trials: usize,
    seed: u64,
    tol_override: Option<f64>,
) -> SuiteResult {
    let grid = CircleGrid::new(grid_size).map_err(|e| e.to_string())?;
    let (w, default_weight) = match input {
        Some(text) => (
            crate::matio::parse_weight_json(text).map_err(|e| e.to_string())?,
            false,
        ),
        None => {
            let f = PolyOnCircle::from_roots(Complex64::new(1.0, 0.0), &[Complex64::new(0.5, 0.0)])
                .map_err(|e| e.to_string())?;
            (
                f.modulus_squared_on(&grid).map_err(|e| e.to_string())?,
                true,
            )
        }
    };
    if w.len() != grid.len() {
        return Err(format!(
            "weight has {} samples but the grid has {} points",
            w.len(),
            grid.len()
        ));
    }

    let gm = geometric_mean(&w).map_err(|e| e.to_string())?;
    let degrees: Vec<usize> = (1..=max_degree.max(1)).collect();
    let ladder = szego_ladder(&grid, &w, &degrees).map_err(|e| e.to_string())?;

    let mut checks = Vec::new();
    if default_weight {
        // The canonical single-root weight has geometric mean exactly 1.
        checks.push(Check::residual(
            "geometric-mean-value",
            GM_ANCHOR,
            (gm - 1.0).abs(),
            tol_override.unwrap_or(tol::QUADRATURE_TOL),
        ));
    }
    let worst_increase = ladder
        .windows(2)
        .map(|p| p[1].1 - p[0].1)
        .fold(0.0f64, f64::max);
    checks.push(Check::residual(
        "ladder-monotone",
        LADDER_ANCHOR,
        worst_increase,
        tol::LADDER_MONOTONE_TOL,
    ));
    let min_undershoot = ladder
        .iter()
        .map(|&(_, v)| v - gm)
        .fold(f64::INFINITY, f64::min);
    checks.push(Check::at_least(
        "ladder-lower-bound",
        LADDER_ANCHOR,
        min_undershoot,
        -tol::QUADRATURE_TOL,
    ));
    let last = ladder.last().map(|&(_, v)| v).unwrap_or(gm);
    checks.push(Check::residual(
        "ladder-limit",
        LADDER_ANCHOR,
        (last - gm).abs() / gm.max(f64::MIN_POSITIVE),
        tol_override.unwrap_or(tol::LADDER_LIMIT_TOL),
    ));

    let mut worst_slack = f64::NEG_INFINITY;
    for t in 0..trials.max(1) as u64 {
        let mut rng = sample::trial_rng(seed, t);
        let degree = 1 + (t % 8) as usize;
        let coeffs: Vec<Complex64> = (0..=degree)
            .map(|_| sample::standard_complex(&mut rng))
            .collect();
        let f = PolyOnCircle::new(coeffs).map_err(|e| e.to_string())?;
        let (lhs, rhs) = jensen_classical(&f, &grid).map_err(|e| e.to_string())?;
        worst_slack = worst_slack.max(lhs - rhs);
    }
    checks.push(Check::residual(
        "mean-inequality",
        CLASSICAL_JENSEN_ANCHOR,
        worst_slack,
        tol_override.unwrap_or(tol::CLASSICAL_JENSEN_TOL),
    ));
    Ok(checks)
}
