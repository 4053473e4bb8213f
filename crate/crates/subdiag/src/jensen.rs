//! Determinant inequality and formula under the conditional expectation.
//!
//! For `A` in the algebra, `det(phi(A)) <= det(A)`; for `A` invertible with
//! inverse in the algebra the two agree. In the block-triangular class the
//! inequality is in fact an equality for every `A` (the determinant of a
//! block-triangular matrix is the product of its diagonal-block
//! determinants); the suite asserts the one-sided claim and the class
//! sharpening separately so the former survives a future non-triangular
//! realization.

use crate::algebra::SubdiagonalAlgebra;
use crate::error::{Error, Result};
use crate::fkdet;
use crate::matrix::ComplexMatrix;
use crate::sample;
use crate::tol;

/// `det(A) - det(phi(A))`; nonnegative is the inequality, zero is the
/// block-triangular sharpening.
pub fn jensen_gap(alg: &SubdiagonalAlgebra, a: &ComplexMatrix) -> Result<f64> {
    a.expect_dim(alg.dim())?;
    ensure_membership(alg, a)?;
    let da = fkdet::det(a);
    let dpa = fkdet::det(&alg.expectation(a)?);
    Ok(da - dpa)
}

/// `|det(phi(A)) - det(A)| / det(A)` for `A` invertible with inverse in
/// the algebra.
pub fn jensen_formula_check(alg: &SubdiagonalAlgebra, a: &ComplexMatrix) -> Result<f64> {
    a.expect_dim(alg.dim())?;
    ensure_membership(alg, a)?;

    let sv = a.singular_values();
    let sigma_max = sv.first().copied().unwrap_or(0.0);
    let sigma_min = sv.last().copied().unwrap_or(0.0);
    if sigma_min <= sigma_max / tol::CONDITION_LIMIT {
        return Err(Error::NotInvertibleInAlgebra {
            reason: format!(
                "condition number {:.3e} exceeds {:.3e}",
                sigma_max / sigma_min.max(f64::MIN_POSITIVE),
                tol::CONDITION_LIMIT
            ),
        });
    }
    let inv = a
        .try_inverse()
        .ok_or_else(|| Error::NotInvertibleInAlgebra {
            reason: "LU inversion failed".into(),
        })?;
    if !alg.membership(&inv, tol::MEMBERSHIP_REL)? {
        return Err(Error::NotInvertibleInAlgebra {
            reason: format!(
                "inverse leaves the algebra: off-pattern mass {:.3e}",
                alg.off_pattern_mass(&inv)
            ),
        });
    }

    let da = fkdet::det(a);
    let dpa = fkdet::det(&alg.expectation(a)?);
    Ok((dpa - da).abs() / da)
}

fn ensure_membership(alg: &SubdiagonalAlgebra, a: &ComplexMatrix) -> Result<()> {
    if !alg.membership(a, tol::MEMBERSHIP_REL)? {
        return Err(Error::NotInAlgebra {
            mass: alg.off_pattern_mass(a),
            tol: tol::MEMBERSHIP_REL * a.frobenius_norm().max(1.0),
        });
    }
    Ok(())
}

/// Aggregate of a randomized inequality/formula suite.
#[derive(Debug, Clone)]
pub struct JensenReport {
    pub trials: usize,
    /// Most negative `det(A) - det(phi(A))` seen, normalized by
    /// `max(1, det(A))`. The inequality requires this to stay above `-tol`.
    pub worst_gap: f64,
    /// Largest `|det(A) - det(phi(A))| / max(1, det(A))` seen: the
    /// block-triangular equality sharpening.
    pub worst_equality_residual: f64,
    /// Largest formula residual over the invertible samples.
    pub worst_formula_residual: f64,
    /// Invertible-in-algebra samples exercised by the formula check.
    pub invertible_trials: usize,
    /// Samples satisfying the inequality but violating the formula on the
    /// invertible subdomain; the implication says there are none.
    pub implication_violations: usize,
    pub tol: f64,
    pub pass: bool,
}

/// Runs `trials` seeded random checks of the inequality, the formula on
/// invertible samples, and the implication between them.
pub fn jensen_suite(alg: &SubdiagonalAlgebra, trials: usize, seed: u64) -> JensenReport {
    let trials = trials.max(1);
    let suite_tol = tol::DET_IDENTITY_REL;

    let mut worst_gap = f64::INFINITY;
    let mut worst_equality = 0.0f64;
    let mut worst_formula = 0.0f64;
    let mut invertible_trials = 0usize;
    let mut violations = 0usize;

    for t in 0..trials {
        let mut rng = sample::trial_rng(seed, t as u64);
        let a = sample::random_in_algebra(&mut rng, alg);

        let gap = jensen_gap(alg, &a).expect("sample lies in the algebra");
        let scale = fkdet::det(&a).max(1.0);
        worst_gap = worst_gap.min(gap / scale);
        worst_equality = worst_equality.max(gap.abs() / scale);

        // Invertible representative: shift by twice the operator norm, an
        // upper estimate of the spectral radius, so the spectrum clears the
        // origin and the inverse stays well conditioned.
        let shift = 2.0 * a.spectral_norm();
        let inv_sample = &a + &ComplexMatrix::identity(alg.dim()).scale(shift);
        match jensen_formula_check(alg, &inv_sample) {
            Ok(residual) => {
                invertible_trials += 1;
                worst_formula = worst_formula.max(residual);
                let gap_inv = jensen_gap(alg, &inv_sample).expect("still in the algebra");
                let scale_inv = fkdet::det(&inv_sample).max(1.0);
                let inequality_holds = gap_inv / scale_inv >= -suite_tol;
                if inequality_holds && residual > suite_tol {
                    violations += 1;
                }
            }
            Err(Error::NotInvertibleInAlgebra { .. }) => {}
            Err(e) => panic!("unexpected suite error: {e}"),
        }
    }

    let pass = worst_gap >= -suite_tol
        && worst_equality <= suite_tol
        && worst_formula <= suite_tol
        && violations == 0;
    JensenReport {
        trials,
        worst_gap,
        worst_equality_residual: worst_equality,
        worst_formula_residual: worst_formula,
        invertible_trials,
        implication_violations: violations,
        tol: suite_tol,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_lower_triangular_has_zero_gap() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let a = ComplexMatrix::from_real_rows(&[vec![1.0, 0.0], vec![1.0, 1.0]]).unwrap();
        let gap = jensen_gap(&alg, &a).unwrap();
        assert!(gap.abs() < 1e-14);
        // Both sides are |det|^(1/2) = 1.
        assert!((fkdet::det(&a) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn singular_sample_has_zero_on_both_sides() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let e21 = ComplexMatrix::from_real_rows(&[vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(jensen_gap(&alg, &e21).unwrap(), 0.0);
    }

    #[test]
    fn diagonal_entries_drive_both_determinants() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let a = ComplexMatrix::from_real_rows(&[vec![2.0, 0.0], vec![5.0, 3.0]]).unwrap();
        let d = fkdet::det(&a);
        assert!((d - 6.0f64.sqrt()).abs() < 1e-12);
        assert!(jensen_gap(&alg, &a).unwrap().abs() < 1e-12);
    }

    #[test]
    fn membership_is_enforced() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let upper = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(
            jensen_gap(&alg, &upper),
            Err(Error::NotInAlgebra { .. })
        ));
        assert!(matches!(
            jensen_formula_check(&alg, &upper),
            Err(Error::NotInAlgebra { .. })
        ));
    }

    #[test]
    fn formula_holds_on_hand_samples() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        assert_eq!(
            jensen_formula_check(&alg, &ComplexMatrix::identity(2)).unwrap(),
            0.0
        );
        let a = ComplexMatrix::from_real_rows(&[vec![1.0, 0.0], vec![1.0, 1.0]]).unwrap();
        assert!(jensen_formula_check(&alg, &a).unwrap() < 1e-12);
    }

    #[test]
    fn formula_holds_on_random_unit_lower_triangular() {
        let n = 6;
        let alg = SubdiagonalAlgebra::from_partition(&vec![1; n]).unwrap();
        let mut rng = sample::trial_rng(11, 0);
        let mut a = sample::random_in_algebra(&mut rng, &alg);
        for i in 0..n {
            a[(i, i)] = num_complex::Complex64::new(1.0, 0.0);
        }
        let residual = jensen_formula_check(&alg, &a).unwrap();
        assert!(residual <= 1e-10, "residual {residual:.3e}");
    }

    #[test]
    fn formula_rejects_singular_input() {
        let alg = SubdiagonalAlgebra::from_partition(&[1, 1]).unwrap();
        let e21 = ComplexMatrix::from_real_rows(&[vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
        assert!(matches!(
            jensen_formula_check(&alg, &e21),
            Err(Error::NotInvertibleInAlgebra { .. })
        ));
    }

    #[test]
    fn suite_passes_on_small_partitions() {
        for partition in [vec![1, 1], vec![3], vec![2, 2]] {
            let alg = SubdiagonalAlgebra::from_partition(&partition).unwrap();
            let report = jensen_suite(&alg, 300, 13);
            assert!(report.pass, "partition {partition:?}: {report:?}");
            assert!(report.invertible_trials > 0);
        }
    }
}
