//! Gauss, Codazzi and structural compatibility residuals for frame-constant
//! immersion data.

use crate::error::{check_index, Result};
use crate::frame::FrameGeometry;
use crate::killing::{Ambient, ImmersionData};
use crate::linalg::{Mat3, Vec3};
use crate::scalar::Real;

/// `d^∇A(e_i, e_j) = ∇_i(A e_j) - ∇_j(A e_i) - A[e_i, e_j]` for frame-constant `A`.
pub fn codazzi_tensor<S: Real>(g: &FrameGeometry<S>, a: &Mat3<S>, i: usize, j: usize) -> Result<Vec3<S>> {
    check_index(i)?;
    check_index(j)?;
    Ok(g.nabla_const(i, &a.column(j)) - g.nabla_const(j, &a.column(i)) - a.apply(&g.lie_bracket(i, j)))
}

/// `κf(⟨e_j,T⟩e_i - ⟨e_i,T⟩e_j)`.
pub fn codazzi_rhs<S: Real>(d: &ImmersionData<S>, i: usize, j: usize) -> Vec3<S> {
    let h = &d.hyp;
    let kf = d.kappa() * h.f;
    (Vec3::basis(i).scale(h.t[j]) - Vec3::basis(j).scale(h.t[i])).scale(kf)
}

/// Right side of the Gauss equation on `(e_i, e_j, e_k)`.
pub fn gauss_rhs<S: Real>(d: &ImmersionData<S>, i: usize, j: usize, k: usize) -> Vec3<S> {
    let a = &d.a;
    let t = d.hyp.t;
    let (x, y, z) = (Vec3::basis(i), Vec3::basis(j), Vec3::basis(k));
    let (ax, ay) = (a.column(i), a.column(j));
    let (xz, yz) = (x.dot(&z), y.dot(&z));
    let (xt, yt, zt) = (t[i], t[j], t[k]);
    let ambient = y.scale(xz) - x.scale(yz) - t.scale(yt * xz) - y.scale(xt * zt)
        + t.scale(xt * yz)
        + x.scale(yt * zt);
    ay.scale(ax.dot(&z)) - ax.scale(ay.dot(&z)) + ambient.scale(d.kappa())
}

/// `R(e_i,e_j)e_k` minus the Gauss right side.
pub fn gauss_residual<S: Real>(
    g: &FrameGeometry<S>,
    d: &ImmersionData<S>,
    i: usize,
    j: usize,
    k: usize,
) -> Result<Vec3<S>> {
    check_index(i)?;
    check_index(j)?;
    check_index(k)?;
    d.validate()?;
    Ok(g.curvature_vector(i, j, k) - gauss_rhs(d, i, j, k))
}

/// Residuals of `∇T = fA`, `df = -⟨A·,T⟩` and `|T|² + f² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructuralResiduals<S> {
    pub nabla_t: S,
    pub df: S,
    pub unit_norm: S,
    pub nabla_t_worst: usize,
    pub df_worst: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompatibilityReport<S> {
    pub gauss: S,
    pub gauss_worst: (usize, usize, usize),
    pub codazzi: S,
    pub codazzi_worst: (usize, usize),
    /// Only evaluated for product ambients.
    pub structural: Option<StructuralResiduals<S>>,
    pub tolerance: S,
}

impl<S: Real> CompatibilityReport<S> {
    pub fn gauss_pass(&self) -> bool {
        self.gauss <= self.tolerance
    }

    pub fn codazzi_pass(&self) -> bool {
        self.codazzi <= self.tolerance
    }

    pub fn structural_pass(&self) -> bool {
        self.structural.map_or(true, |s| {
            s.nabla_t <= self.tolerance && s.df <= self.tolerance && s.unit_norm <= self.tolerance
        })
    }

    pub fn pass(&self) -> bool {
        self.gauss_pass() && self.codazzi_pass() && self.structural_pass()
    }
}

pub fn check_compatibility<S: Real>(
    g: &FrameGeometry<S>,
    d: &ImmersionData<S>,
    tol: S,
) -> Result<CompatibilityReport<S>> {
    d.validate()?;
    let mut gauss = S::zero();
    let mut gauss_worst = (0, 0, 0);
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let r = gauss_residual(g, d, i, j, k)?.norm();
                if r > gauss {
                    gauss = r;
                    gauss_worst = (i, j, k);
                }
            }
        }
    }
    let mut codazzi = S::zero();
    let mut codazzi_worst = (0, 1);
    for i in 0..3 {
        for j in (i + 1)..3 {
            let r = (codazzi_tensor(g, &d.a, i, j)? - codazzi_rhs(d, i, j)).norm();
            if r > codazzi {
                codazzi = r;
                codazzi_worst = (i, j);
            }
        }
    }
    let structural = match d.hyp.ambient {
        Ambient::SpaceForm => None,
        Ambient::Product => {
            let t = d.hyp.t;
            let mut s = StructuralResiduals {
                nabla_t: S::zero(),
                df: S::zero(),
                unit_norm: (t.norm_sqr() + d.hyp.f * d.hyp.f - S::one()).abs(),
                nabla_t_worst: 0,
                df_worst: 0,
            };
            for i in 0..3 {
                let n = (g.nabla_const(i, &t) - d.a.column(i).scale(d.hyp.f)).norm();
                if n > s.nabla_t {
                    s.nabla_t = n;
                    s.nabla_t_worst = i;
                }
                let df = d.a.column(i).dot(&t).abs();
                if df > s.df {
                    s.df = df;
                    s.df_worst = i;
                }
            }
            Some(s)
        }
    };
    Ok(CompatibilityReport {
        gauss,
        gauss_worst,
        codazzi,
        codazzi_worst,
        structural,
        tolerance: tol,
    })
}
