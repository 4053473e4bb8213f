//! Acceptance suite: one test per exit criterion, each printing a
//! PASS/FAIL line with its measured worst case (run with
//! `cargo test --test acceptance -- --nocapture` to see them).

mod common;

use std::time::Instant;

use common::root_abs_det;
use num_complex::Complex64;
use rand::Rng;
use subdiag::classical::{
    geometric_mean, jensen_classical, szego_ladder, CircleGrid, PolyOnCircle,
};
use subdiag::{
    algebra, brute_force_infimum, factorize_positive, fk_det, fk_det_state,
    invert_lower_triangular, jensen_suite, sample, solve_alternating, solve_closed_form, tol,
    verify_factorization, SolverConfig, State, SubdiagonalAlgebra, TraceEntry,
};

fn report(criterion: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("[{status}] {criterion}: {detail}");
    assert!(pass, "{criterion}: {detail}");
}

/// Shared instance set for criteria 1 and 2: 100 seeded positive definite
/// densities, n in 2..=6, random partitions.
fn szego_instances() -> Vec<(SubdiagonalAlgebra, State, u64)> {
    (0..100u64)
        .map(|trial| {
            let mut rng = sample::trial_rng(2024, trial);
            let n = 2 + (rng.random_range(0..5u32) as usize);
            let comps = algebra::compositions(n);
            let partition = comps[rng.random_range(0..comps.len() as u32) as usize].clone();
            let alg = SubdiagonalAlgebra::from_partition(&partition).unwrap();
            let rho = State::new(sample::random_density(&mut rng, n)).unwrap();
            (alg, rho, trial)
        })
        .collect()
}

type TargetedTrace = (f64, Vec<TraceEntry>);

fn run_szego_suite() -> (f64, f64, f64, Vec<TargetedTrace>, f64) {
    let start = Instant::now();
    let mut worst_closed = 0.0f64;
    let mut worst_alt = 0.0f64;
    let mut worst_brute = 0.0f64;
    let mut traces = Vec::new();
    for (alg, rho, trial) in szego_instances() {
        let target = fk_det_state(&rho);

        let closed = solve_closed_form(&alg, &rho).unwrap();
        worst_closed = worst_closed.max((closed.infimum_estimate - target).abs() / target);
        traces.push((target, closed.trace));

        let cfg = SolverConfig {
            seed: trial,
            ..SolverConfig::default()
        };
        let alt = solve_alternating(&alg, &rho, &cfg).unwrap();
        worst_alt = worst_alt.max((alt.infimum_estimate - target).abs() / target);
        traces.push((target, alt.trace));

        if alg.dim() <= 3 {
            let brute_cfg = SolverConfig { restarts: 3, ..cfg };
            let value = brute_force_infimum(&alg, &rho, &brute_cfg).unwrap();
            worst_brute = worst_brute.max((value - target).abs() / target);
        }
    }
    (
        worst_closed,
        worst_alt,
        worst_brute,
        traces,
        start.elapsed().as_secs_f64(),
    )
}

#[test]
fn criterion_01_szego_identity() {
    let (worst_closed, worst_alt, worst_brute, _, elapsed) = run_szego_suite();
    let pass = worst_closed <= tol::CLOSED_FORM_REL
        && worst_alt <= tol::ALTERNATING_REL
        && worst_brute <= tol::BRUTE_FORCE_REL
        && elapsed < 30.0;
    report(
        "criterion 1 (variational identity, three routes)",
        pass,
        &format!(
            "closed {worst_closed:.3e} <= 1e-10, alternating {worst_alt:.3e} <= 1e-4, \
             brute {worst_brute:.3e} <= 1e-3, runtime {elapsed:.2}s < 30s"
        ),
    );
}

#[test]
fn criterion_02_lower_bound_certificate() {
    let (_, _, _, traces, _) = run_szego_suite();
    let mut worst_margin = f64::INFINITY;
    let mut entries = 0usize;
    for (target, trace) in &traces {
        let floor = target - tol::CERT_TOL * target.max(1.0);
        for entry in trace {
            entries += 1;
            worst_margin = worst_margin.min(entry.objective - floor);
        }
    }
    report(
        "criterion 2 (no feasible iterate undercuts the target)",
        worst_margin >= 0.0 && entries > 0,
        &format!("{entries} feasible iterates, smallest margin {worst_margin:.3e}"),
    );
}

#[test]
fn criterion_03_positive_factorization() {
    let start = Instant::now();
    let mut worst_recon = 0.0f64;
    let mut worst_det = 0.0f64;
    let mut exact_patterns = true;
    for trial in 0..1000u64 {
        let mut rng = sample::trial_rng(2025, trial);
        let n = 1 + (rng.random_range(0..16u32) as usize);
        let comps = algebra::compositions(n);
        let partition = comps[rng.random_range(0..comps.len() as u32) as usize].clone();
        let alg = SubdiagonalAlgebra::from_partition(&partition).unwrap();
        let x = sample::random_spd(&mut rng, n);
        let a = factorize_positive(&alg, &x).unwrap();
        let rep = verify_factorization(&alg, &x, &a).unwrap();
        worst_recon = worst_recon.max(rep.reconstruction_residual);
        worst_det = worst_det.max(rep.det_residual);
        exact_patterns &= alg.off_pattern_mass(&a) == 0.0;
        let inv = invert_lower_triangular(&a).unwrap();
        exact_patterns &= alg.off_pattern_mass(&inv) == 0.0;
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = worst_recon <= 1e-10 && worst_det <= 1e-10 && exact_patterns && elapsed < 10.0;
    report(
        "criterion 3 (positive factorization, 1000 instances, n <= 16)",
        pass,
        &format!(
            "reconstruction {worst_recon:.3e} <= 1e-10, determinant {worst_det:.3e} <= 1e-10, \
             exact patterns {exact_patterns}, runtime {elapsed:.2}s < 10s"
        ),
    );
}

#[test]
fn criterion_04_jensen_inequality_and_formula() {
    let families: Vec<Vec<usize>> = {
        let mut f: Vec<Vec<usize>> = Vec::new();
        for n in 2..=4 {
            f.extend(algebra::compositions(n));
        }
        f.extend([
            vec![2, 2, 2],
            vec![3, 3],
            vec![1, 1, 1, 1, 1, 1],
            vec![6],
            vec![3, 2, 1],
            vec![4, 4],
            vec![1; 8],
        ]);
        f
    };
    let mut worst_gap = f64::INFINITY;
    let mut worst_formula = 0.0f64;
    let mut violations = 0usize;
    for (idx, partition) in families.iter().enumerate() {
        let alg = SubdiagonalAlgebra::from_partition(partition).unwrap();
        let rep = jensen_suite(&alg, 1000, 3000 + idx as u64);
        worst_gap = worst_gap.min(rep.worst_gap);
        worst_formula = worst_formula.max(rep.worst_formula_residual);
        violations += rep.implication_violations;
        assert!(rep.invertible_trials == 1000, "partition {partition:?}");
    }
    let pass = worst_gap >= -1e-10 && worst_formula <= 1e-10 && violations == 0;
    report(
        "criterion 4 (determinant inequality and formula, 1000 per family)",
        pass,
        &format!(
            "{} families, worst gap {worst_gap:.3e} >= -1e-10, worst formula residual \
             {worst_formula:.3e} <= 1e-10, implication violations {violations}",
            families.len()
        ),
    );
}

#[test]
fn criterion_05_axioms_on_every_partition() {
    let mut worst_sd2 = 0.0f64;
    let mut worst_sd3 = 0.0f64;
    let mut worst_finiteness = 0.0f64;
    let mut span_ok = true;
    let mut partitions = 0usize;
    for n in 1..=8usize {
        for partition in algebra::compositions(n) {
            partitions += 1;
            let alg = SubdiagonalAlgebra::from_partition(&partition).unwrap();
            let rep = alg.verify_axioms(1000, 4000 + n as u64, tol::AXIOM_TOL);
            span_ok &= rep.sd1_span_dim == n * n;
            worst_sd2 = worst_sd2
                .max(rep.sd2_idempotence)
                .max(rep.sd2_positivity)
                .max(rep.sd2_faithfulness);
            worst_sd3 = worst_sd3.max(rep.sd3_residual);
            worst_finiteness = worst_finiteness.max(rep.finiteness_residual);
        }
    }
    let pass = span_ok
        && worst_sd2 <= 1e-12
        && worst_sd3 <= 1e-12
        && worst_finiteness <= tol::FINITENESS_TOL;
    report(
        "criterion 5 (axioms on all partitions of n <= 8)",
        pass,
        &format!(
            "{partitions} partitions, span dims exact {span_ok}, expectation residuals \
             {worst_sd2:.3e} <= 1e-12, multiplicativity {worst_sd3:.3e} <= 1e-12, \
             trace preservation {worst_finiteness:.3e} <= 1e-14"
        ),
    );
}

#[test]
fn criterion_06_maximality_witnesses() {
    let mut worst_norm = f64::INFINITY;
    let mut counts_ok = true;
    for n in 1..=8usize {
        for partition in algebra::compositions(n) {
            let alg = SubdiagonalAlgebra::from_partition(&partition).unwrap();
            let witnesses = alg.maximality_probe();
            let s = alg.structure();
            let expected: usize = {
                let k = s.num_blocks();
                let mut count = 0;
                for p in 0..k {
                    for q in (p + 1)..k {
                        count += s.partition()[p] * s.partition()[q];
                    }
                }
                count
            };
            counts_ok &= witnesses.len() == expected;
            counts_ok &= (s.num_blocks() == 1) == witnesses.is_empty();
            for w in &witnesses {
                worst_norm = worst_norm.min(w.violation_norm);
            }
        }
    }
    let pass = counts_ok && (worst_norm >= 1.0 - 1e-12);
    report(
        "criterion 6 (maximality witnesses for every strict-upper unit)",
        pass,
        &format!("counts exact {counts_ok}, smallest violation norm {worst_norm}"),
    );
}

#[test]
fn criterion_07_classical_prediction_ladder() {
    let grid = CircleGrid::new(4096).unwrap();
    let f =
        PolyOnCircle::from_roots(Complex64::new(1.0, 0.0), &[Complex64::new(0.5, 0.0)]).unwrap();
    let w = f.modulus_squared_on(&grid).unwrap();
    let gm = geometric_mean(&w).unwrap();
    let degrees: Vec<usize> = (1..=64).collect();
    let ladder = szego_ladder(&grid, &w, &degrees).unwrap();
    let monotone = ladder
        .windows(2)
        .all(|p| p[1].1 <= p[0].1 + tol::LADDER_MONOTONE_TOL);
    let at_40 = ladder
        .iter()
        .find(|(m, _)| *m == 40)
        .map(|&(_, v)| v)
        .unwrap();
    let at_64 = ladder.last().unwrap().1;
    let pass = (gm - 1.0).abs() <= tol::QUADRATURE_TOL
        && (at_40 - 1.0).abs() <= tol::LADDER_LIMIT_TOL
        && (at_64 - gm).abs() <= tol::LADDER_LIMIT_TOL
        && monotone;
    report(
        "criterion 7 (classical prediction ladder)",
        pass,
        &format!(
            "geometric mean {gm:.8} within 1e-6 of 1, ladder(40) {at_40:.6} within 1e-3 of 1, \
             ladder(64) within 1e-3 of the geometric mean, monotone over degrees 1..=64: {monotone}"
        ),
    );
}

#[test]
fn criterion_08_classical_mean_inequality() {
    let grid = CircleGrid::new(4096).unwrap();
    let mut worst_slack = f64::NEG_INFINITY;
    for trial in 0..1000u64 {
        let mut rng = sample::trial_rng(2026, trial);
        let degree = 1 + (trial % 8) as usize;
        let coeffs: Vec<Complex64> = (0..=degree)
            .map(|_| sample::standard_complex(&mut rng))
            .collect();
        let f = PolyOnCircle::new(coeffs).unwrap();
        let (lhs, rhs) = jensen_classical(&f, &grid).unwrap();
        worst_slack = worst_slack.max(lhs - rhs);
    }
    // Zero-free samples c prod(1 - a_i z), |a_i| < 1: equality holds.
    let mut worst_eq = 0.0f64;
    for trial in 0..1000u64 {
        let mut rng = sample::trial_rng(2027, trial);
        let degree = 1 + (trial % 8) as usize;
        let c = sample::standard_complex(&mut rng);
        if c.norm() < 1e-3 {
            continue;
        }
        let roots: Vec<Complex64> = (0..degree)
            .map(|_| {
                let dir = sample::standard_complex(&mut rng);
                let unit = dir / dir.norm().max(1e-9);
                unit.scale(0.8 * rng.random::<f64>())
            })
            .collect();
        let f = PolyOnCircle::from_roots(c, &roots).unwrap();
        let (lhs, rhs) = jensen_classical(&f, &grid).unwrap();
        worst_eq = worst_eq.max((lhs - rhs).abs() / lhs.max(1e-9));
    }
    let pass = worst_slack <= tol::CLASSICAL_JENSEN_TOL && worst_eq <= tol::QUADRATURE_TOL;
    report(
        "criterion 8 (mean versus geometric mean on the circle)",
        pass,
        &format!(
            "worst inequality slack {worst_slack:.3e} <= 1e-8, worst zero-free equality \
             deviation {worst_eq:.3e} <= 1e-6"
        ),
    );
}

#[test]
fn criterion_09_determinant_identities() {
    let mut worst_mult = 0.0f64;
    let mut worst_unitary = 0.0f64;
    let mut worst_homog = 0.0f64;
    let mut worst_triangular = 0.0f64;
    for trial in 0..1000u64 {
        let mut rng = sample::trial_rng(2028, trial);
        let n = 2 + (trial % 7) as usize;
        let full = SubdiagonalAlgebra::from_partition(&[n]).unwrap();
        let x = sample::gaussian_matrix(&mut rng, n);
        let y = sample::gaussian_matrix(&mut rng, n);

        let dx = fk_det(&full, &x).unwrap();
        let dy = fk_det(&full, &y).unwrap();
        let dxy = fk_det(&full, &(&x * &y)).unwrap();
        worst_mult = worst_mult.max((dxy - dx * dy).abs() / (dx * dy).max(1e-300));

        let u = sample::random_unitary(&mut rng, n);
        let v = sample::random_unitary(&mut rng, n);
        let duv = fk_det(&full, &(&(&u * &x) * &v)).unwrap();
        worst_unitary = worst_unitary.max((duv - dx).abs() / dx.max(1e-300));

        let t = -3.0 + 6.0 * rng.random::<f64>();
        let dt = fk_det(&full, &x.scale(t)).unwrap();
        worst_homog = worst_homog.max((dt - t.abs() * dx).abs() / (t.abs() * dx).max(1e-300));

        let comps = algebra::compositions(n);
        let partition = &comps[rng.random_range(0..comps.len() as u32) as usize];
        let alg = SubdiagonalAlgebra::from_partition(partition).unwrap();
        let a = sample::random_in_algebra(&mut rng, &alg);
        let da = fk_det(&alg, &a).unwrap();
        let dpa = fk_det(&alg, &alg.expectation(&a).unwrap()).unwrap();
        worst_triangular = worst_triangular.max((da - dpa).abs() / da.max(1.0));
    }
    let pass = worst_mult <= 1e-10
        && worst_unitary <= 1e-10
        && worst_homog <= 1e-12
        && worst_triangular <= 1e-10;
    report(
        "criterion 9 (determinant identities, 1000 instances each)",
        pass,
        &format!(
            "multiplicativity {worst_mult:.3e} <= 1e-10, unitary invariance \
             {worst_unitary:.3e} <= 1e-10, homogeneity {worst_homog:.3e} <= 1e-12, \
             triangular identity {worst_triangular:.3e} <= 1e-10"
        ),
    );
}

/// The implementation route (singular values) agrees with the independent
/// LU route on the shared instance set; keeps the two-sided pairing of
/// criterion 1 honest.
#[test]
fn determinant_oracle_cross_check() {
    let mut worst = 0.0f64;
    for (_, rho, _) in szego_instances() {
        let d = fk_det_state(&rho);
        let oracle = root_abs_det(rho.density());
        worst = worst.max((d - oracle).abs() / oracle.max(1e-300));
    }
    assert!(worst <= 1e-10, "worst relative disagreement {worst:.3e}");
}
