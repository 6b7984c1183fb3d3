//! Homogeneous orthonormal frames with constant connection coefficients.
//!
//! `christoffel[i][j][k] = ⟨∇_{e_i} e_j, e_k⟩`. Metric compatibility makes the
//! array skew in its last two slots.
//!
//! Curvature follows the sign under which
//!
//! ```text
//! R(X,Y)Z = ∇_{[X,Y]}Z - ∇_X∇_Y Z + ∇_Y∇_X Z
//! R_ijkl  = ⟨R(e_i,e_j)e_k, e_l⟩,   R_ijij = sectional curvature of (e_i, e_j)
//! Ric_jk  = Σ_i R_ijik
//! ```
//!
//! This is the sign that reproduces the Ricci matrices of E(κ,τ), Sol₃ and
//! T_B³ and the Gauss equation in the form `R(X,Y)Z = ⟨AX,Z⟩AY - ⟨AY,Z⟩AX + ...`.

use crate::error::{check_index, Error, Result};
use crate::linalg::{Mat3, Vec3};
use crate::scalar::Real;

pub type Christoffel<S> = [[[S; 3]; 3]; 3];
pub type Riemann<S> = [[[[S; 3]; 3]; 3]; 3];

/// Default absolute tolerance for matrix comparisons and validation.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct FrameGeometry<S> {
    pub name: String,
    christoffel: Christoffel<S>,
    /// Index of the distinguished unit field ξ, if the geometry has one.
    pub xi_index: Option<usize>,
}

impl<S: Real> FrameGeometry<S> {
    /// Validates metric compatibility at [`DEFAULT_TOLERANCE`].
    pub fn new(name: impl Into<String>, christoffel: Christoffel<S>) -> Result<Self> {
        Self::with_tolerance(name, christoffel, S::lit(DEFAULT_TOLERANCE))
    }

    pub fn with_tolerance(
        name: impl Into<String>,
        christoffel: Christoffel<S>,
        tol: S,
    ) -> Result<Self> {
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let dev = (christoffel[i][j][k] + christoffel[i][k][j]).abs();
                    if !(dev <= tol) {
                        return Err(Error::MetricIncompatible {
                            i,
                            j,
                            k,
                            deviation: dev.to_f64_lossy(),
                        });
                    }
                }
            }
        }
        Ok(Self {
            name: name.into(),
            christoffel,
            xi_index: None,
        })
    }

    pub fn with_xi(mut self, xi_index: usize) -> Result<Self> {
        check_index(xi_index)?;
        self.xi_index = Some(xi_index);
        Ok(self)
    }

    /// Frame with all connection coefficients zero.
    pub fn flat() -> Self {
        Self {
            name: "flat".into(),
            christoffel: [[[S::zero(); 3]; 3]; 3],
            xi_index: None,
        }
    }

    pub fn christoffel(&self) -> &Christoffel<S> {
        &self.christoffel
    }

    /// `∇_{e_i} e_j` in frame components.
    pub fn nabla_basis(&self, i: usize, j: usize) -> Vec3<S> {
        Vec3(self.christoffel[i][j])
    }

    /// `∇_{e_i} V` for a field with constant frame components.
    pub fn nabla_const(&self, i: usize, v: &Vec3<S>) -> Vec3<S> {
        (0..3).fold(Vec3::zero(), |acc, m| acc + self.nabla_basis(i, m).scale(v[m]))
    }

    /// `[e_i, e_j] = ∇_{e_i} e_j - ∇_{e_j} e_i`.
    pub fn lie_bracket(&self, i: usize, j: usize) -> Vec3<S> {
        self.nabla_basis(i, j) - self.nabla_basis(j, i)
    }

    /// `R(e_i, e_j) e_k` as a vector.
    pub fn curvature_vector(&self, i: usize, j: usize, k: usize) -> Vec3<S> {
        let g = &self.christoffel;
        let mut out = Vec3::zero();
        // ∇_i ∇_j e_k - ∇_j ∇_i e_k
        for m in 0..3 {
            out += self.nabla_basis(i, m).scale(g[j][k][m]);
            out = out - self.nabla_basis(j, m).scale(g[i][k][m]);
        }
        let bracket = self.lie_bracket(i, j);
        for m in 0..3 {
            out = out - self.nabla_basis(m, k).scale(bracket[m]);
        }
        -out
    }

    pub fn riemann(&self, i: usize, j: usize, k: usize, l: usize) -> S {
        self.curvature_vector(i, j, k)[l]
    }

    pub fn riemann_tensor(&self) -> Riemann<S> {
        let mut r = [[[[S::zero(); 3]; 3]; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    r[i][j][k] = self.curvature_vector(i, j, k).0;
                }
            }
        }
        r
    }

    /// Largest component of `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    ///
    /// Constant coefficients describe a left-invariant frame only when this
    /// vanishes; otherwise the first Bianchi identity fails.
    pub fn jacobi_residual(&self) -> S {
        let nested = |i: usize, j: usize, k: usize| {
            let b = self.lie_bracket(i, j);
            (0..3).fold(Vec3::zero(), |acc, m| acc + self.lie_bracket(m, k).scale(b[m]))
        };
        let mut worst = S::zero();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let r = nested(i, j, k) + nested(j, k, i) + nested(k, i, j);
                    worst = worst.max(r.max_abs());
                }
            }
        }
        worst
    }

    pub fn ricci_matrix(&self) -> Mat3<S> {
        let r = self.riemann_tensor();
        Mat3::from_fn(|j, k| (0..3).fold(S::zero(), |acc, i| acc + r[i][j][i][k]))
    }
}

/// `Ric = λ·Id + η·ξ⊗ξ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RicciSplit<S> {
    pub lambda: S,
    pub eta_einstein: S,
    pub xi_index: usize,
}

impl<S: Real> RicciSplit<S> {
    pub fn reconstruct(&self) -> Mat3<S> {
        let mut m = Mat3::identity().scale(self.lambda);
        m.0[self.xi_index][self.xi_index] = m.0[self.xi_index][self.xi_index] + self.eta_einstein;
        m
    }
}

/// Splits a symmetric Ricci matrix about the frame direction `xi_index`.
pub fn eta_einstein_split<S: Real>(ric: &Mat3<S>, xi_index: usize, tol: S) -> Result<RicciSplit<S>> {
    check_index(xi_index)?;
    let (a, b) = match xi_index {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let lambda = (ric.0[a][a] + ric.0[b][b]) * S::lit(0.5);
    let split = RicciSplit {
        lambda,
        eta_einstein: ric.0[xi_index][xi_index] - lambda,
        xi_index,
    };
    let residual = ric.max_abs_diff(&split.reconstruct());
    if !(residual <= tol) {
        return Err(Error::NotEtaEinstein {
            xi_index,
            residual: residual.to_f64_lossy(),
        });
    }
    Ok(split)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    #[test]
    fn flat_frame_is_flat() {
        let g = FrameGeometry::<f64>::flat();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g.lie_bracket(i, j), Vec3::zero());
                for k in 0..3 {
                    assert_eq!(g.curvature_vector(i, j, k), Vec3::zero());
                }
            }
        }
    }

    #[test]
    fn rejects_non_skew_christoffels() {
        let mut gamma = [[[0.0f64; 3]; 3]; 3];
        gamma[0][1][2] = 1.0;
        let err = FrameGeometry::new("bad", gamma).unwrap_err();
        assert!(matches!(err, Error::MetricIncompatible { i: 0, j: 1, k: 2, .. }));
    }

    #[test]
    fn sol3_brackets() {
        let g = catalog::sol3::<f64>().geometry;
        assert_eq!(g.lie_bracket(0, 2), Vec3::basis(0));
        assert_eq!(g.lie_bracket(1, 2), -Vec3::basis(1));
        assert_eq!(g.lie_bracket(0, 1), Vec3::zero());
        assert_eq!(g.lie_bracket(2, 0), -Vec3::basis(0));
    }

    #[test]
    fn torus_bundle_brackets() {
        let alpha = 2.0f64;
        let g = catalog::torus_bundle(alpha).unwrap().geometry;
        let l = alpha.ln();
        assert!((g.lie_bracket(0, 2) - Vec3::basis(0).scale(l)).max_abs() < 1e-15);
        assert!((g.lie_bracket(1, 2) + Vec3::basis(1).scale(l)).max_abs() < 1e-15);
        assert_eq!(g.lie_bracket(0, 1), Vec3::zero());
    }

    #[test]
    fn round_sphere_has_unit_sectional_curvature() {
        let g = catalog::e_kappa_tau(4.0f64, 1.0).unwrap().geometry;
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!((g.riemann(i, j, i, j) - 1.0).abs() < 1e-14);
                }
            }
        }
        assert!(g.ricci_matrix().max_abs_diff(&Mat3::identity().scale(2.0)) < 1e-14);
    }

    #[test]
    fn ricci_matrices_of_named_geometries() {
        let berger = catalog::e_kappa_tau(1.0f64, 1.0).unwrap().geometry;
        assert!(berger.ricci_matrix().max_abs_diff(&Mat3::diag(-1.0, -1.0, 2.0)) < 1e-14);
        let nil = catalog::e_kappa_tau(0.0f64, 0.5).unwrap().geometry;
        assert!(nil.ricci_matrix().max_abs_diff(&Mat3::diag(-0.5, -0.5, 0.5)) < 1e-14);
        let sol = catalog::sol3::<f64>().geometry;
        assert!(sol.ricci_matrix().max_abs_diff(&Mat3::diag(0.0, 0.0, -2.0)) < 1e-14);
        let a = (3.0f64 + 5f64.sqrt()) / 2.0;
        let tb = catalog::torus_bundle(a).unwrap().geometry;
        let l2 = a.ln().powi(2);
        assert!(tb.ricci_matrix().max_abs_diff(&Mat3::diag(0.0, 0.0, -2.0 * l2)) < 1e-14);
    }

    #[test]
    fn splits() {
        let s = eta_einstein_split(&Mat3::diag(0.0, 0.0, -2.0), 2, 1e-10).unwrap();
        assert_eq!((s.lambda, s.eta_einstein), (0.0, -2.0));
        let s = eta_einstein_split(&Mat3::identity().scale(3.5), 0, 1e-10).unwrap();
        assert_eq!((s.lambda, s.eta_einstein), (3.5, 0.0));
        // λ = -1, η = Ric(ξ,ξ) - λ = 3
        let s = eta_einstein_split(&Mat3::diag(-1.0, -1.0, 2.0), 2, 1e-10).unwrap();
        assert_eq!((s.lambda, s.eta_einstein), (-1.0, 3.0));
    }

    #[test]
    fn split_rejects_anisotropy() {
        let err = eta_einstein_split(&Mat3::diag(1.0, 2.0, 3.0), 2, 1e-10).unwrap_err();
        assert!(matches!(err, Error::NotEtaEinstein { xi_index: 2, .. }));
        let mut m = Mat3::diag(1.0, 1.0, 3.0);
        m.0[0][2] = 0.1;
        m.0[2][0] = 0.1;
        assert!(eta_einstein_split(&m, 2, 1e-10).is_err());
        assert!(eta_einstein_split(&Mat3::diag(1.0, 1.0, 3.0), 0, 1e-10).is_err());
        assert!(matches!(
            eta_einstein_split(&Mat3::<f64>::identity(), 3, 1e-10),
            Err(Error::IndexOutOfRange(3))
        ));
    }

    /// Rotation from three angles.
    fn rotation(a: f64, b: f64, c: f64) -> Mat3<f64> {
        let rz = |t: f64| Mat3([[t.cos(), -t.sin(), 0.0], [t.sin(), t.cos(), 0.0], [0.0, 0.0, 1.0]]);
        let rx = |t: f64| Mat3([[1.0, 0.0, 0.0], [0.0, t.cos(), -t.sin()], [0.0, t.sin(), t.cos()]]);
        rz(a).matmul(&rx(b)).matmul(&rz(c))
    }

    fn random_geometry() -> impl Strategy<Value = FrameGeometry<f64>> {
        (
            prop::array::uniform3(-2.0f64..2.0),
            prop::array::uniform3(-2.0f64..2.0),
            prop::array::uniform3(0.0f64..core::f64::consts::TAU),
            -2.0f64..2.0,
            any::<bool>(),
        )
            .prop_map(|(d, off, ang, s, unimodular)| {
                let r = rotation(ang[0], ang[1], ang[2]);
                let (n, a) = if unimodular {
                    let n = Mat3([[d[0], off[0], off[1]], [off[0], d[1], off[2]], [off[1], off[2], d[2]]]);
                    (n, Vec3::zero())
                } else {
                    let n = r.matmul(&Mat3::diag(d[0], d[1], 0.0)).matmul(&r.transpose());
                    (n, r.column(2).scale(s))
                };
                catalog::lie_algebra_frame(&n, &a).unwrap()
            })
    }

    #[test]
    fn arbitrary_coefficients_can_break_jacobi() {
        let mut gamma = [[[0.0f64; 3]; 3]; 3];
        gamma[0][0][1] = 1.0;
        gamma[0][1][0] = -1.0;
        gamma[1][1][2] = 1.0;
        gamma[1][2][1] = -1.0;
        let g = FrameGeometry::new("skewed", gamma).unwrap();
        assert!((g.jacobi_residual() - 1.0).abs() < 1e-15);
        assert_eq!(catalog::sol3::<f64>().geometry.jacobi_residual(), 0.0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn split_round_trips(lambda in -5.0f64..5.0, eta in -5.0f64..5.0, xi in 0usize..3) {
            let m = RicciSplit { lambda, eta_einstein: eta, xi_index: xi }.reconstruct();
            let s = eta_einstein_split(&m, xi, 1e-12).unwrap();
            prop_assert!(s.reconstruct().max_abs_diff(&m) <= 1e-12);
        }

        #[test]
        fn lie_algebra_frames_satisfy_jacobi(g in random_geometry()) {
            prop_assert!(g.jacobi_residual() < 1e-12);
        }

        #[test]
        fn riemann_symmetries(g in random_geometry()) {
            let r = g.riemann_tensor();
            for i in 0..3 { for j in 0..3 { for k in 0..3 { for l in 0..3 {
                let x = r[i][j][k][l];
                prop_assert!((x + r[j][i][k][l]).abs() < 1e-10);
                prop_assert!((x + r[i][j][l][k]).abs() < 1e-10);
                prop_assert!((x - r[k][l][i][j]).abs() < 1e-10);
                prop_assert!((x + r[j][k][i][l] + r[k][i][j][l]).abs() < 1e-10);
            }}}}
            prop_assert!(g.ricci_matrix().asymmetry() < 1e-10);
        }
    }
}
