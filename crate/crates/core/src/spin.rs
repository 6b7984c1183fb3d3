//! Spin connection, Dirac operator and spinorial curvature on a framed geometry.
//!
//! In direction `e_i` the spin connection acts as
//!
//! ```text
//! ∇_i φ = e_i(φ) + Ω_i φ,    Ω_i = ½ Σ_{j<k} Γ[i][j][k] γ_j γ_k
//! ```
//!
//! where `e_i(φ)` differentiates the component functions in the moving frame.
//! With `γ_j = -iσ_j` this sign makes every constant spinor of E(κ,τ) satisfy
//! `∇_1 φ = ½τ e_1·φ`, `∇_2 φ = ½τ e_2·φ`, `∇_ξ φ = ½(κ/2τ - τ) ξ·φ`.

use crate::clifford::{real_dot, CliffordRep, Spinor};
use crate::error::{check_index, Error, Result};
use crate::frame::FrameGeometry;
use crate::linalg::{Mat2, Mat3, Vec3};
use crate::scalar::{cr, half, Real};

/// Spinor value at a point together with its frame-directional derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FramedSpinorField<S> {
    pub value: Spinor<S>,
    /// `d_i = e_i(φ)`, componentwise.
    pub frame_derivs: [Spinor<S>; 3],
}

impl<S: Real> FramedSpinorField<S> {
    pub fn new(value: Spinor<S>, frame_derivs: [Spinor<S>; 3]) -> Self {
        Self {
            value,
            frame_derivs,
        }
    }

    /// Field whose components are constant in the moving frame.
    pub fn constant(value: Spinor<S>) -> Self {
        Self::new(value, [Spinor::zero(); 3])
    }

    /// Field whose covariant derivatives at the point equal `targets`.
    pub fn with_covariant_derivatives(
        g: &FrameGeometry<S>,
        value: Spinor<S>,
        targets: [Spinor<S>; 3],
    ) -> Self {
        let derivs = core::array::from_fn(|i| targets[i] - spin_connection_matrix(g, i) * value);
        Self::new(value, derivs)
    }

    pub fn constant_components(&self) -> bool {
        self.frame_derivs.iter().all(|d| *d == Spinor::zero())
    }

    /// `e_i(|φ|²) = 2 Re⟨e_i(φ), φ⟩`.
    pub fn norm_sqr_derivative(&self, i: usize) -> S {
        S::lit(2.0) * real_dot(&self.frame_derivs[i], &self.value)
    }
}

/// `Ω_i`, the connection term in direction `e_i`.
pub fn spin_connection_matrix<S: Real>(g: &FrameGeometry<S>, i: usize) -> Mat2<S> {
    let gamma = CliffordRep::<S>::standard().gamma;
    let christoffel = g.christoffel();
    let mut out = Mat2::zero();
    for j in 0..3 {
        for k in (j + 1)..3 {
            out = out + (gamma[j] * gamma[k]).scale_real(half::<S>() * christoffel[i][j][k]);
        }
    }
    out
}

pub fn covariant_spinor_derivative<S: Real>(
    g: &FrameGeometry<S>,
    field: &FramedSpinorField<S>,
    i: usize,
) -> Spinor<S> {
    field.frame_derivs[i] + spin_connection_matrix(g, i) * field.value
}

/// `Dφ = Σ_i e_i·∇_i φ`.
pub fn dirac<S: Real>(g: &FrameGeometry<S>, field: &FramedSpinorField<S>) -> Spinor<S> {
    let rep = CliffordRep::<S>::standard();
    (0..3).fold(Spinor::zero(), |acc, i| {
        acc + rep.gamma[i] * covariant_spinor_derivative(g, field, i)
    })
}

/// `𝓡(e_i, e_j)φ` for a field with constant components.
pub fn spinorial_curvature<S: Real>(
    g: &FrameGeometry<S>,
    i: usize,
    j: usize,
    phi: &Spinor<S>,
) -> Spinor<S> {
    let omega: [Mat2<S>; 3] = core::array::from_fn(|m| spin_connection_matrix(g, m));
    let bracket = g.lie_bracket(i, j);
    let op = (0..3).fold(omega[i].commutator(&omega[j]), |acc, m| {
        acc - omega[m].scale_real(bracket[m])
    });
    op * *phi
}

/// Curvature side of the Ricci identity,
/// `±½[R_ijik e_j - R_ijij e_k - R_ijjk e_i]·φ` with `k` the third index.
///
/// The sign is `+` when `(i, j, k)` is a cyclic permutation of `(0, 1, 2)`
/// and `-` otherwise, since `e_i·e_j = ±e_k` accordingly.
pub fn ricci_identity_rhs<S: Real>(
    g: &FrameGeometry<S>,
    i: usize,
    j: usize,
    phi: &Spinor<S>,
) -> Result<Spinor<S>> {
    check_index(i)?;
    check_index(j)?;
    if i == j {
        return Err(Error::PreconditionFailed(
            "Ricci identity needs two distinct frame directions".into(),
        ));
    }
    let k = 3 - i - j;
    let orientation = if (j + 3 - i) % 3 == 1 { S::one() } else { -S::one() };
    let mut v = Vec3::zero();
    v[j] = g.riemann(i, j, i, k);
    v[k] = -g.riemann(i, j, i, j);
    v[i] = -g.riemann(i, j, j, k);
    let rep = CliffordRep::standard();
    Ok(rep.mul_vec(&v, phi).scale(cr(orientation * half::<S>())))
}

/// Finds a unit spinor with constant frame components solving
/// `∇_i φ = W(e_i)·φ` for all `i`, where `W(e_i)` is column `i` of `law`.
///
/// The stacked system `(Ω_i - γ(W e_i)) φ = 0` is solved in the least-squares
/// sense through the smallest eigenvector of the 2×2 Gram matrix; the result is
/// rejected if its residual exceeds `tol`.
pub fn find_special_spinor<S: Real>(
    g: &FrameGeometry<S>,
    law: &Mat3<S>,
    tol: S,
) -> Result<Spinor<S>> {
    let rep = CliffordRep::standard();
    let ops: [Mat2<S>; 3] =
        core::array::from_fn(|i| spin_connection_matrix(g, i) - rep.vector_matrix(&law.column(i)));
    let gram = ops
        .iter()
        .fold(Mat2::zero(), |acc, m| acc + m.adjoint() * *m);
    let phi = smallest_eigenvector(&gram);
    let residual = ops
        .iter()
        .map(|m| (*m * phi).max_abs())
        .fold(S::zero(), S::max);
    if !(residual <= tol) {
        return Err(Error::SpecialSpinorNotFound {
            residual: residual.to_f64_lossy(),
        });
    }
    Ok(phi)
}

fn smallest_eigenvector<S: Real>(h: &Mat2<S>) -> Spinor<S> {
    let a = h.0[0][0].re;
    let d = h.0[1][1].re;
    let b = h.0[0][1];
    let mid = (a + d) * half::<S>();
    let rad = (((a - d) * half::<S>()).powi(2) + b.norm_sqr()).sqrt();
    let lo = mid - rad;
    let scale = a.abs().max(d.abs()).max(S::one());
    if rad <= S::epsilon() * scale {
        // scalar matrix: every direction is an eigenvector
        return Spinor::new(cr(S::one()), cr(S::zero()));
    }
    let u = Spinor::new(b, cr(lo - a));
    let w = Spinor::new(cr(lo - d), b.conj());
    let v = if u.norm_sqr() >= w.norm_sqr() { u } else { w };
    v.normalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::clifford::{hermitian, mul_vec};
    use crate::scalar::c;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_spinor(rng: &mut impl Rng) -> Spinor<f64> {
        Spinor::from_parts(core::array::from_fn(|_| rng.gen_range(-1.0..1.0)))
    }

    #[test]
    fn flat_frame_has_trivial_connection() {
        let g = FrameGeometry::<f64>::flat();
        let phi = Spinor::from_parts([1.0, 0.5, -0.2, 0.3]);
        let field = FramedSpinorField::constant(phi);
        for i in 0..3 {
            assert_eq!(spin_connection_matrix(&g, i).max_abs(), 0.0);
            assert_eq!(covariant_spinor_derivative(&g, &field, i), Spinor::zero());
            assert_eq!(spinorial_curvature(&g, i, (i + 1) % 3, &phi), Spinor::zero());
        }
        assert_eq!(dirac(&g, &field), Spinor::zero());
    }

    #[test]
    fn connection_matrices_are_anti_hermitian() {
        for entry in catalog::list::<f64>() {
            for i in 0..3 {
                let m = spin_connection_matrix(&entry.geometry, i);
                assert!((m + m.adjoint()).max_abs() < 1e-14, "{}", entry.name);
            }
        }
    }

    #[test]
    fn e_kappa_tau_connection_matches_special_spinor_law() {
        let (kappa, tau) = (1.0f64, 0.7);
        let g = catalog::e_kappa_tau(kappa, tau).unwrap().geometry;
        let rep = CliffordRep::<f64>::standard();
        let o1 = spin_connection_matrix(&g, 0) - rep.gamma[0].scale_real(0.5 * tau);
        let o3 = spin_connection_matrix(&g, 2)
            - rep.gamma[2].scale_real(0.5 * (kappa / (2.0 * tau) - tau));
        assert!(o1.max_abs() < 1e-15);
        assert!(o3.max_abs() < 1e-15);
    }

    #[test]
    fn sol3_and_torus_special_derivatives() {
        let e = Vec3::<f64>::basis;
        let sol = catalog::sol3::<f64>();
        let field = sol.special_spinor.unwrap();
        let d1 = covariant_spinor_derivative(&sol.geometry, &field, 0);
        assert!((d1 - mul_vec(&e(1), &field.value).scale_real(0.5)).max_abs() < 1e-15);
        let tb = catalog::torus_bundle(2.0f64).unwrap();
        let field = tb.special_spinor.unwrap();
        assert!(covariant_spinor_derivative(&tb.geometry, &field, 2).max_abs() < 1e-15);
    }

    #[test]
    fn dirac_of_e_kappa_tau_spinor() {
        for (kappa, tau) in [(4.0f64, 1.0), (1.0, 1.0), (-1.0, 0.5), (0.0, 2.0)] {
            let entry = catalog::e_kappa_tau(kappa, tau).unwrap();
            let field = entry.special_spinor.unwrap();
            let expected = field.value.scale_real(-tau / 2.0 - kappa / (4.0 * tau));
            assert!((dirac(&entry.geometry, &field) - expected).max_abs() < 1e-12);
        }
        let round = catalog::e_kappa_tau(4.0f64, 1.0).unwrap();
        let field = round.special_spinor.unwrap();
        let d = dirac(&round.geometry, &field);
        assert!((d + field.value.scale_real(1.5)).max_abs() < 1e-14);
    }

    #[test]
    fn ricci_identity_on_catalog() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for entry in catalog::list::<f64>() {
            for _ in 0..20 {
                let phi = random_spinor(&mut rng);
                for i in 0..3 {
                    for j in 0..3 {
                        if i == j {
                            continue;
                        }
                        let lhs = spinorial_curvature(&entry.geometry, i, j, &phi);
                        let rhs = ricci_identity_rhs(&entry.geometry, i, j, &phi).unwrap();
                        assert!((lhs - rhs).max_abs() < 1e-10, "{} ({i},{j})", entry.name);
                    }
                }
            }
        }
    }

    #[test]
    fn ricci_identity_needs_distinct_directions() {
        let g = FrameGeometry::<f64>::flat();
        assert!(ricci_identity_rhs(&g, 1, 1, &Spinor::zero()).is_err());
    }

    #[test]
    fn norm_derivative_matches_covariant_derivative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = catalog::e_kappa_tau(-1.0f64, 1.3).unwrap().geometry;
        for _ in 0..50 {
            let field = FramedSpinorField::new(
                random_spinor(&mut rng),
                core::array::from_fn(|_| random_spinor(&mut rng)),
            );
            for i in 0..3 {
                let nabla = covariant_spinor_derivative(&g, &field, i);
                let lhs = field.norm_sqr_derivative(i);
                assert!((lhs - 2.0 * real_dot(&nabla, &field.value)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn with_covariant_derivatives_hits_targets() {
        let g = catalog::sol3::<f64>().geometry;
        let phi = Spinor::from_parts([0.2, 0.1, -0.7, 0.4]);
        let targets = [
            Spinor::from_parts([1.0, 0.0, 0.0, 0.0]),
            Spinor::from_parts([0.0, 1.0, 0.0, 0.0]),
            Spinor::from_parts([0.0, 0.0, 1.0, 2.0]),
        ];
        let field = FramedSpinorField::with_covariant_derivatives(&g, phi, targets);
        for i in 0..3 {
            assert!((covariant_spinor_derivative(&g, &field, i) - targets[i]).max_abs() < 1e-15);
        }
        assert!(!field.constant_components());
    }

    #[test]
    fn special_spinor_search_reports_failure() {
        // ∇_1 φ = e_1·φ on a flat frame forces φ = 0
        let law = Mat3::diag(1.0f64, 0.0, 0.0);
        let err = find_special_spinor(&FrameGeometry::flat(), &law, 1e-12).unwrap_err();
        assert!(matches!(err, Error::SpecialSpinorNotFound { .. }));
    }

    #[test]
    fn smallest_eigenvector_of_hermitian_matrix() {
        // eigenvalues 1 and 3
        let h = Mat2([[c(2.0f64, 0.0), c(0.0, 1.0)], [c(0.0, -1.0), c(2.0, 0.0)]]);
        let v = smallest_eigenvector(&h);
        let hv = h * v;
        let lambda = hermitian(&hv, &v).re;
        assert!((lambda - 1.0).abs() < 1e-14);
        assert!((hv - v.scale_real(lambda)).max_abs() < 1e-14);
    }
}
