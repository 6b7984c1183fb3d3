//! Non-immersibility test into ℝ⁴ for η-Einstein geometries.
//!
//! A hypersurface of ℝ⁴ whose induced metric has `Ric = λ + η ξ⊗ξ` and whose
//! shape operator is Codazzi must have, in a frame `{e_1, e_2, ξ}`,
//! `A = diag(a_1, a_2, a_3)` with
//!
//! ```text
//! a_1 a_2 = (λ+η)/2,   a_1 a_3 = a_2 a_3 = (λ-η)/2.
//! ```

use crate::compatibility::codazzi_tensor;
use crate::error::{Error, Result};
use crate::frame::{eta_einstein_split, FrameGeometry, RicciSplit};
use crate::linalg::Mat3;
use crate::scalar::{half, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeCase {
    /// `λ = -η`: the system has no solution.
    NoRealSolutionLambdaEqualsMinusEta,
    /// `λ + η < 0`: `a_1² = (λ+η)/2` has no real root.
    NoRealSolutionNegativeSquare,
    /// Two candidates `±diag(a, a, a_3)`.
    Candidates,
    /// `λ = η`: `a_3 = 0` and `a_1 a_2 = λ` leaves a one-parameter family.
    Underdetermined,
}

impl ShapeCase {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::NoRealSolutionLambdaEqualsMinusEta => "NoRealSolution_LambdaEqualsMinusEta",
            Self::NoRealSolutionNegativeSquare => "NoRealSolution_NegativeSquare",
            Self::Candidates => "Candidates",
            Self::Underdetermined => "Underdetermined",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NonImmersible,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::NonImmersible => "NonImmersible",
            Self::Inconclusive => "Inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShapeSolution<S> {
    pub case: ShapeCase,
    /// Eigenvalues `(a_1, a_2, a_3)`, `a_3` belonging to ξ.
    pub candidates: Vec<[S; 3]>,
}

/// Solves the eigenvalue system for `(λ, η)`, with `tol` deciding the
/// degenerate equalities `λ = ±η`.
pub fn solve_shape_candidates<S: Real>(lambda: S, eta: S, tol: S) -> Result<ShapeSolution<S>> {
    if eta.abs() <= tol {
        return Err(Error::EtaZero);
    }
    let sum = lambda + eta;
    let none = |case| Ok(ShapeSolution { case, candidates: Vec::new() });
    if sum.abs() <= tol {
        return none(ShapeCase::NoRealSolutionLambdaEqualsMinusEta);
    }
    if sum < S::zero() {
        return none(ShapeCase::NoRealSolutionNegativeSquare);
    }
    if (lambda - eta).abs() <= tol {
        return none(ShapeCase::Underdetermined);
    }
    let a = (sum * half::<S>()).sqrt();
    let a3 = (lambda - eta) / (S::lit(2.0) * sum).sqrt();
    Ok(ShapeSolution {
        case: ShapeCase::Candidates,
        candidates: vec![[a, a, a3], [-a, -a, -a3]],
    })
}

/// Largest deviation of `(a_1, a_2, a_3)` from the eigenvalue system.
pub fn system_residual<S: Real>(lambda: S, eta: S, a: &[S; 3]) -> S {
    let h = half::<S>();
    let r1 = (a[0] * a[1] - (lambda + eta) * h).abs();
    let r2 = (a[1] * a[2] - (lambda - eta) * h).abs();
    let r3 = (a[0] * a[2] - (lambda - eta) * h).abs();
    r1.max(r2).max(r3)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObstructionResult<S> {
    pub ricci: Mat3<S>,
    pub split: RicciSplit<S>,
    pub case: ShapeCase,
    /// Diagonal in the frame, with `a_3` at the ξ slot.
    pub candidates: Vec<Mat3<S>>,
    /// `max_{i<j} |d^∇A(e_i,e_j)|` for each candidate.
    pub codazzi_residuals: Vec<S>,
    pub verdict: Verdict,
    pub tolerance: S,
}

fn embed<S: Real>(a: &[S; 3], xi: usize) -> Mat3<S> {
    let mut d = [S::zero(); 3];
    let others: Vec<usize> = (0..3).filter(|&k| k != xi).collect();
    d[others[0]] = a[0];
    d[others[1]] = a[1];
    d[xi] = a[2];
    Mat3::diag(d[0], d[1], d[2])
}

/// Runs split, candidate solve and Codazzi test for `g` about `e_{xi_index}`.
pub fn obstruct<S: Real>(g: &FrameGeometry<S>, xi_index: usize, tol: S) -> Result<ObstructionResult<S>> {
    let ricci = g.ricci_matrix();
    let split = eta_einstein_split(&ricci, xi_index, tol)?;
    let sol = solve_shape_candidates(split.lambda, split.eta_einstein, tol)?;
    let candidates: Vec<Mat3<S>> = sol.candidates.iter().map(|a| embed(a, xi_index)).collect();
    let mut codazzi_residuals = Vec::with_capacity(candidates.len());
    for a in &candidates {
        let mut worst = S::zero();
        for i in 0..3 {
            for j in (i + 1)..3 {
                worst = worst.max(codazzi_tensor(g, a, i, j)?.norm());
            }
        }
        codazzi_residuals.push(worst);
    }
    let verdict = match sol.case {
        ShapeCase::NoRealSolutionLambdaEqualsMinusEta | ShapeCase::NoRealSolutionNegativeSquare => {
            Verdict::NonImmersible
        }
        ShapeCase::Underdetermined => Verdict::Inconclusive,
        ShapeCase::Candidates => {
            if codazzi_residuals.iter().all(|r| *r > tol) {
                Verdict::NonImmersible
            } else {
                Verdict::Inconclusive
            }
        }
    };
    Ok(ObstructionResult {
        ricci,
        split,
        case: sol.case,
        candidates,
        codazzi_residuals,
        verdict,
        tolerance: tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    #[test]
    fn printed_cases() {
        let s = solve_shape_candidates(0.0f64, -2.0, 1e-12).unwrap();
        assert_eq!(s.case, ShapeCase::NoRealSolutionNegativeSquare);
        let s = solve_shape_candidates(1.0f64, -1.0, 1e-12).unwrap();
        assert_eq!(s.case, ShapeCase::NoRealSolutionLambdaEqualsMinusEta);
        assert!(s.candidates.is_empty());
        assert_eq!(solve_shape_candidates(1.0f64, 0.0, 1e-12), Err(Error::EtaZero));
        let s = solve_shape_candidates(2.0f64, 2.0, 1e-12).unwrap();
        assert_eq!(s.case, ShapeCase::Underdetermined);
    }

    #[test]
    fn berger_candidates() {
        let s = solve_shape_candidates(-1.0f64, 3.0, 1e-12).unwrap();
        assert_eq!(s.case, ShapeCase::Candidates);
        assert_eq!(s.candidates, vec![[1.0, 1.0, -2.0], [-1.0, -1.0, 2.0]]);
        // a1 a2 = 1 = (λ+η)/2, a1 a3 = -2 = (λ-η)/2
        for c in &s.candidates {
            assert_eq!(c[0] * c[1], 1.0);
            assert_eq!(c[0] * c[2], -2.0);
        }
    }

    #[test]
    fn obstruct_named_geometries() {
        let sol = obstruct(&catalog::sol3::<f64>().geometry, 2, 1e-10).unwrap();
        assert_eq!(sol.case, ShapeCase::NoRealSolutionNegativeSquare);
        assert_eq!(sol.verdict, Verdict::NonImmersible);

        let berger = obstruct(&catalog::e_kappa_tau(1.0f64, 1.0).unwrap().geometry, 2, 1e-10).unwrap();
        assert_eq!(berger.case, ShapeCase::Candidates);
        assert_eq!(berger.candidates[0], Mat3::diag(1.0, 1.0, -2.0));
        assert!(berger.codazzi_residuals.iter().all(|r| *r > 1.0));
        assert_eq!(berger.verdict, Verdict::NonImmersible);

        let alpha = (3.0f64 + 5f64.sqrt()) / 2.0;
        let tb = obstruct(&catalog::torus_bundle(alpha).unwrap().geometry, 2, 1e-10).unwrap();
        assert_eq!(tb.case, ShapeCase::NoRealSolutionNegativeSquare);
        assert!((tb.split.eta_einstein + 2.0 * alpha.ln().powi(2)).abs() < 1e-14);
    }

    #[test]
    fn every_fibration_family_is_obstructed() {
        for tau in [0.5f64, 1.0, 2.0] {
            for kappa in [-1.0, 0.0, 1.0] {
                if kappa == 4.0 * tau * tau {
                    continue;
                }
                let entry = catalog::e_kappa_tau(kappa, tau).unwrap();
                assert!(!entry.space_form);
                let r = obstruct(&entry.geometry, 2, 1e-10).unwrap();
                assert_eq!(r.verdict, Verdict::NonImmersible, "E({kappa},{tau})");
                // λ = κ - 2τ², η = 4τ² - κ
                assert!((r.split.lambda - (kappa - 2.0 * tau * tau)).abs() < 1e-12);
                assert!((r.split.eta_einstein - (4.0 * tau * tau - kappa)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn round_sphere_is_never_obstructed() {
        let g = catalog::e_kappa_tau(4.0f64, 1.0).unwrap().geometry;
        assert_eq!(obstruct(&g, 2, 1e-10), Err(Error::EtaZero));
        let g = catalog::e_kappa_tau(1.0f64, 0.5).unwrap().geometry;
        assert!(obstruct(&g, 2, 1e-10).is_err());
    }

    #[test]
    fn xi_slot_follows_the_index() {
        assert_eq!(embed(&[1.0, 2.0, 3.0], 0), Mat3::diag(3.0, 1.0, 2.0));
        assert_eq!(embed(&[1.0, 2.0, 3.0], 1), Mat3::diag(1.0, 3.0, 2.0));
        assert_eq!(embed(&[1.0, 2.0, 3.0], 2), Mat3::diag(1.0, 2.0, 3.0));
    }

    #[test]
    fn non_eta_einstein_is_rejected() {
        let g = catalog::sol3::<f64>().geometry;
        assert!(matches!(obstruct(&g, 0, 1e-10), Err(Error::NotEtaEinstein { .. })));
    }

    proptest! {
        #[test]
        fn candidates_solve_the_system(lambda in -10.0f64..10.0, eta in -10.0f64..10.0) {
            prop_assume!(eta.abs() > 1e-6 && lambda + eta > 1e-6 && (lambda - eta).abs() > 1e-6);
            let s = solve_shape_candidates(lambda, eta, 1e-12).unwrap();
            prop_assert_eq!(s.case, ShapeCase::Candidates);
            prop_assert_eq!(s.candidates.len(), 2);
            for c in &s.candidates {
                prop_assert!(system_residual(lambda, eta, c) <= 1e-12);
            }
        }
    }
}
