//! Residuals of the generalized Killing and Dirac equations, the
//! energy-momentum tensor, and recovery of the shape operator from a Dirac
//! solution.
//!
//! A single branch sign `ε` covers the four ambient/spinor combinations:
//!
//! ```text
//! ∇_X φ = -ε ½ A(X)·φ + η X·T·φ + ε η f X·φ + η ⟨X,T⟩ φ
//! D φ   =  ε (3/2) H φ - 2η T·φ - ε 3η f φ          (H = tr A / 3)
//! ```
//!
//! | ambient                 | spinor | ε  |
//! |-------------------------|--------|----|
//! | M⁴(κ), `(T, f) = (0,1)` | φ₁     | -1 |
//! | M⁴(κ), `(T, f) = (0,1)` | φ₂     | +1 |
//! | M³(κ)×ℝ                 | φ₁     | +1 |
//! | M³(κ)×ℝ                 | φ₂     | -1 |

use crate::clifford::{hermitian, real_basis_coords, real_dot, CliffordRep, Spinor, ZERO_SPINOR_TOL};
use crate::error::{check_index, Error, Result};
use crate::frame::FrameGeometry;
use crate::linalg::{Mat3, Vec3};
use crate::scalar::{c, cr, eta_kind, half, Cplx, EtaKind, Real};
use crate::spin::{covariant_spinor_derivative, dirac, FramedSpinorField};

/// Default pass threshold for spinor residuals.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

/// Tolerance used when validating immersion data.
pub const DATA_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    /// 4-dimensional space form M⁴(κ).
    SpaceForm,
    /// Product M³(κ)×ℝ.
    Product,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn from_sign(s: i64) -> Option<Self> {
        match s {
            1 => Some(Self::Plus),
            -1 => Some(Self::Minus),
            _ => None,
        }
    }

    pub fn sign<S: Real>(self) -> S {
        match self {
            Self::Plus => S::one(),
            Self::Minus => -S::one(),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Self::Plus => Self::Minus,
            Self::Minus => Self::Plus,
        }
    }
}

/// Everything in the immersion hypothesis except the shape operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeHypothesis<S> {
    pub t: Vec3<S>,
    pub f: S,
    pub eta: Cplx<S>,
    pub ambient: Ambient,
    pub branch: Branch,
    /// Mean curvature normalized as `tr(A)/3`; this is the value the Dirac
    /// residual uses.
    pub mean_curvature: S,
}

impl<S: Real> ShapeHypothesis<S> {
    /// Ambient curvature `κ = 4η²`.
    pub fn kappa(&self) -> S {
        S::lit(4.0) * (self.eta * self.eta).re
    }

    pub fn eta_kind(&self) -> EtaKind {
        eta_kind(self.eta, S::lit(DATA_TOLERANCE)).unwrap_or(EtaKind::Real)
    }

    pub fn validate(&self) -> Result<()> {
        let tol = S::lit(DATA_TOLERANCE);
        if eta_kind(self.eta, tol).is_none() {
            return Err(Error::InvalidData(format!(
                "eta = {} must be real or purely imaginary",
                self.eta
            )));
        }
        match self.ambient {
            Ambient::SpaceForm => {
                if self.t.max_abs() > tol || (self.f - S::one()).abs() > tol {
                    return Err(Error::InvalidData(
                        "space-form data requires T = 0 and f = 1".into(),
                    ));
                }
            }
            Ambient::Product => {
                let unit = self.t.norm_sqr() + self.f * self.f - S::one();
                if !(unit.abs() <= tol) {
                    return Err(Error::InvalidData(format!(
                        "product data requires |T|^2 + f^2 = 1 (off by {unit:e})"
                    )));
                }
            }
        }
        if !self.mean_curvature.is_finite() {
            return Err(Error::InvalidData("mean curvature is not finite".into()));
        }
        Ok(())
    }

    pub fn with_shape(self, a: Mat3<S>) -> ImmersionData<S> {
        ImmersionData { a, hyp: self }
    }
}

/// Candidate shape operator plus the rest of the immersion hypothesis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImmersionData<S> {
    pub a: Mat3<S>,
    pub hyp: ShapeHypothesis<S>,
}

impl<S: Real> ImmersionData<S> {
    /// Mean curvature defaults to `tr(A)/3`.
    pub fn new(
        a: Mat3<S>,
        t: Vec3<S>,
        f: S,
        eta: Cplx<S>,
        ambient: Ambient,
        branch: Branch,
    ) -> Result<Self> {
        let d = Self {
            a,
            hyp: ShapeHypothesis {
                t,
                f,
                eta,
                ambient,
                branch,
                mean_curvature: a.trace() / S::lit(3.0),
            },
        };
        d.validate()?;
        Ok(d)
    }

    /// Hypersurface data for M⁴(κ): `T = 0`, `f = 1`.
    pub fn space_form(a: Mat3<S>, eta: Cplx<S>, branch: Branch) -> Result<Self> {
        Self::new(a, Vec3::zero(), S::one(), eta, Ambient::SpaceForm, branch)
    }

    pub fn with_mean_curvature(mut self, h: S) -> Self {
        self.hyp.mean_curvature = h;
        self
    }

    pub fn with_branch(mut self, branch: Branch) -> Self {
        self.hyp.branch = branch;
        self
    }

    pub fn kappa(&self) -> S {
        self.hyp.kappa()
    }

    /// `tr(A)/2`, the normalization written next to the space-form Killing pair.
    pub fn half_trace(&self) -> S {
        self.a.trace() * half::<S>()
    }

    pub fn validate(&self) -> Result<()> {
        let asym = self.a.asymmetry();
        if !(asym <= S::lit(DATA_TOLERANCE)) {
            return Err(Error::InvalidData(format!(
                "shape operator is not symmetric (deviation {asym:e})"
            )));
        }
        self.hyp.validate()
    }
}

/// Right side of the generalized Killing equation in direction `e_i`, minus the `A` term.
fn killing_tail<S: Real>(hyp: &ShapeHypothesis<S>, phi: &Spinor<S>, i: usize) -> Spinor<S> {
    let rep = CliffordRep::standard();
    let eps: S = hyp.branch.sign();
    let x = Vec3::basis(i);
    rep.mul_bivec(&x, &hyp.t, phi).scale(hyp.eta)
        + rep.mul_vec(&x, phi).scale(hyp.eta * cr(eps * hyp.f))
        + phi.scale(hyp.eta * cr(hyp.t[i]))
}

/// Right side of the generalized Killing equation in direction `e_i`.
pub fn killing_rhs<S: Real>(d: &ImmersionData<S>, phi: &Spinor<S>, i: usize) -> Spinor<S> {
    let eps: S = d.hyp.branch.sign();
    let rep = CliffordRep::standard();
    rep.mul_vec(&d.a.column(i), phi).scale_real(-eps * half::<S>()) + killing_tail(&d.hyp, phi, i)
}

/// `∇_{e_i}φ - RHS(e_i)`.
pub fn killing_residual<S: Real>(
    g: &FrameGeometry<S>,
    field: &FramedSpinorField<S>,
    d: &ImmersionData<S>,
    i: usize,
) -> Result<Spinor<S>> {
    check_index(i)?;
    d.validate()?;
    Ok(covariant_spinor_derivative(g, field, i) - killing_rhs(d, &field.value, i))
}

/// Largest component modulus of the Killing residual over the three directions.
pub fn killing_residual_max<S: Real>(
    g: &FrameGeometry<S>,
    field: &FramedSpinorField<S>,
    d: &ImmersionData<S>,
) -> Result<S> {
    (0..3).try_fold(S::zero(), |m, i| {
        Ok(m.max(killing_residual(g, field, d, i)?.max_abs()))
    })
}

fn dirac_expected<S: Real>(hyp: &ShapeHypothesis<S>, phi: &Spinor<S>) -> Spinor<S> {
    let eps: S = hyp.branch.sign();
    let rep = CliffordRep::standard();
    phi.scale_real(eps * S::lit(1.5) * hyp.mean_curvature)
        - rep.mul_vec(&hyp.t, phi).scale(hyp.eta * cr(S::lit(2.0)))
        - phi.scale(hyp.eta * cr(eps * S::lit(3.0) * hyp.f))
}

fn dirac_residual_hyp<S: Real>(
    g: &FrameGeometry<S>,
    field: &FramedSpinorField<S>,
    hyp: &ShapeHypothesis<S>,
) -> Spinor<S> {
    dirac(g, field) - dirac_expected(hyp, &field.value)
}

/// `Dφ - [ε(3/2)Hφ - 2ηT·φ - ε3ηfφ]`.
pub fn dirac_residual<S: Real>(
    g: &FrameGeometry<S>,
    field: &FramedSpinorField<S>,
    d: &ImmersionData<S>,
) -> Result<Spinor<S>> {
    d.validate()?;
    Ok(dirac_residual_hyp(g, field, &d.hyp))
}

fn norm_condition_hyp<S: Real>(
    field: &FramedSpinorField<S>,
    hyp: &ShapeHypothesis<S>,
    i: usize,
) -> S {
    let lhs = field.norm_sqr_derivative(i);
    match hyp.eta_kind() {
        EtaKind::Real => lhs,
        EtaKind::Imaginary => {
            let rep = CliffordRep::standard();
            let eps: S = hyp.branch.sign();
            let x = Vec3::basis(i);
            let phi = &field.value;
            let drive = rep.mul_bivec(&x, &hyp.t, phi).scale(hyp.eta)
                + rep.mul_vec(&x, phi).scale(hyp.eta * cr(eps * hyp.f));
            lhs - S::lit(2.0) * real_dot(&drive, phi)
        }
    }
}

/// Norm condition accompanying the Dirac equation, in direction `e_i`.
///
/// Real η: `e_i(|φ|²)`. Imaginary η: `e_i(|φ|²) - 2Re⟨η e_i·T·φ + εηf e_i·φ, φ⟩`,
/// which is what the Killing equation itself implies for branch `ε`.
pub fn norm_condition_residual<S: Real>(
    g: &FrameGeometry<S>,
    field: &FramedSpinorField<S>,
    d: &ImmersionData<S>,
    i: usize,
) -> Result<S> {
    let _ = g;
    check_index(i)?;
    d.validate()?;
    Ok(norm_condition_hyp(field, &d.hyp, i))
}

/// Alternative imaginary-η norm condition without the η factor:
/// `e_i(|φ|²) - Re⟨i e_i·T·φ + i f e_i·φ, φ⟩`. Equal to
/// [`norm_condition_residual`] for real η.
pub fn norm_condition_residual_unscaled<S: Real>(
    field: &FramedSpinorField<S>,
    d: &ImmersionData<S>,
    i: usize,
) -> Result<S> {
    check_index(i)?;
    d.validate()?;
    let lhs = field.norm_sqr_derivative(i);
    Ok(match d.hyp.eta_kind() {
        EtaKind::Real => lhs,
        EtaKind::Imaginary => {
            let rep = CliffordRep::standard();
            let x = Vec3::basis(i);
            let phi = &field.value;
            let unit_i = c(S::zero(), S::one());
            let drive = rep.mul_bivec(&x, &d.hyp.t, phi).scale(unit_i)
                + rep.mul_vec(&x, phi).scale(unit_i * cr(d.hyp.f));
            lhs - real_dot(&drive, phi)
        }
    })
}

/// Energy-momentum tensor `Q_φ(e_i,e_j) = ½ Re⟨e_i·∇_jφ + e_j·∇_iφ, φ⟩/|φ|²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyMomentum<S> {
    pub q: Mat3<S>,
}

fn nonzero_value<S: Real>(field: &FramedSpinorField<S>) -> Result<S> {
    let n2 = field.value.norm_sqr();
    if n2.sqrt() < S::lit(ZERO_SPINOR_TOL) {
        return Err(Error::ZeroSpinor {
            norm: n2.sqrt().to_f64_lossy(),
        });
    }
    Ok(n2)
}

pub fn energy_momentum<S: Real>(
    g: &FrameGeometry<S>,
    field: &FramedSpinorField<S>,
) -> Result<EnergyMomentum<S>> {
    let n2 = nonzero_value(field)?;
    let rep = CliffordRep::standard();
    let nabla: [Spinor<S>; 3] = core::array::from_fn(|i| covariant_spinor_derivative(g, field, i));
    let q = Mat3::from_fn(|i, j| {
        let s = rep.gamma[i] * nabla[j] + rep.gamma[j] * nabla[i];
        half::<S>() * real_dot(&s, &field.value) / n2
    });
    Ok(EnergyMomentum { q })
}

/// Pointwise decomposition `∇_Xφ = B(X)·φ + ω(X)φ`, `B = S + U`, and the
/// recovered shape operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReconstructionResult<S> {
    pub a_rec: Mat3<S>,
    /// `ω(e_i) = e_i(|φ|²) / (2|φ|²)`.
    pub omega: Vec3<S>,
    /// Skew part of `B`.
    pub u: Mat3<S>,
    /// Symmetric part of `B`; equals `-Q_φ`.
    pub s: Mat3<S>,
    /// Imaginary-η correction; zero for real η.
    pub v: Mat3<S>,
    pub q: Mat3<S>,
    pub dirac_residual: S,
    pub norm_residual: S,
    /// Killing residual of the recovered data at the evaluated point.
    pub killing_residual: S,
}

/// Recovers the shape operator from a solution of the Dirac equation that also
/// satisfies the norm condition.
///
/// With `B(e_i) = v_i` and `ω(e_i) = r_i` from [`real_basis_coords`], the
/// shape operator is
///
/// ```text
/// A = ε(2Q_φ + V) + 2f Re(η) Id
/// V_ij = [2δ_ij Re(η⟨T·φ,φ⟩) - Re(η⟨(T_j e_i + T_i e_j)·φ, φ⟩)] / |φ|²
/// ```
///
/// which for `ε = +1` reads `2Q_φ + 2ηf Id` (η real) or `2Q_φ + V` (η imaginary).
pub fn reconstruct_shape<S: Real>(
    g: &FrameGeometry<S>,
    field: &FramedSpinorField<S>,
    hyp: &ShapeHypothesis<S>,
    tol: S,
) -> Result<ReconstructionResult<S>> {
    let n2 = nonzero_value(field)?;
    hyp.validate()?;
    let phi = field.value;

    let dirac_res = dirac_residual_hyp(g, field, hyp).max_abs();
    let norm_res = (0..3)
        .map(|i| norm_condition_hyp(field, hyp, i).abs())
        .fold(S::zero(), S::max);
    if !(dirac_res <= tol) {
        return Err(Error::PreconditionFailed(format!(
            "Dirac residual {dirac_res:e} exceeds tolerance {tol:e}"
        )));
    }
    if !(norm_res <= tol) {
        return Err(Error::PreconditionFailed(format!(
            "norm-condition residual {norm_res:e} exceeds tolerance {tol:e}"
        )));
    }

    let mut b = Mat3::zero();
    let mut omega = Vec3::zero();
    for i in 0..3 {
        let (r, v) = real_basis_coords(&phi, &covariant_spinor_derivative(g, field, i))?;
        omega[i] = r;
        for j in 0..3 {
            b.0[j][i] = v[j];
        }
    }

    let q = energy_momentum(g, field)?.q;
    let rep = CliffordRep::standard();
    let eta_t = hyp.eta * hermitian(&rep.mul_vec(&hyp.t, &phi), &phi);
    let v = Mat3::from_fn(|i, j| {
        let mut w = Vec3::zero();
        w[i] = w[i] + hyp.t[j];
        w[j] = w[j] + hyp.t[i];
        let cross = (hyp.eta * hermitian(&rep.mul_vec(&w, &phi), &phi)).re;
        let diag = if i == j { S::lit(2.0) * eta_t.re } else { S::zero() };
        (diag - cross) / n2
    });
    let eps: S = hyp.branch.sign();
    let a_rec = (q.scale(S::lit(2.0)) + v).scale(eps)
        + Mat3::identity().scale(S::lit(2.0) * hyp.f * hyp.eta.re);

    let data = hyp.with_shape(a_rec.symmetric_part());
    let killing = (0..3).fold(S::zero(), |m, i| {
        let r = covariant_spinor_derivative(g, field, i) - killing_rhs(&data, &phi, i);
        m.max(r.max_abs())
    });

    Ok(ReconstructionResult {
        a_rec,
        omega,
        u: b.skew_part(),
        s: b.symmetric_part(),
        v,
        q,
        dirac_residual: dirac_res,
        norm_residual: norm_res,
        killing_residual: killing,
    })
}

/// Every residual of the Killing/Dirac system for one field and one data set.
#[derive(Debug, Clone, PartialEq)]
pub struct KillingReport<S> {
    /// Largest component of the Killing residual per direction.
    pub killing: [S; 3],
    pub dirac: S,
    pub norm_condition: [S; 3],
    pub norm_condition_unscaled: [S; 3],
    pub energy_momentum: Mat3<S>,
    pub mean_curvature: S,
    pub half_trace: S,
    /// Recovered shape data, or the reason recovery was refused.
    pub reconstruction: core::result::Result<ReconstructionResult<S>, Error>,
    pub tolerance: S,
}

impl<S: Real> KillingReport<S> {
    pub fn killing_max(&self) -> S {
        self.killing.iter().fold(S::zero(), |m, x| m.max(*x))
    }

    pub fn norm_condition_max(&self) -> S {
        self.norm_condition.iter().fold(S::zero(), |m, x| m.max(x.abs()))
    }

    pub fn pass(&self) -> bool {
        self.killing_max() <= self.tolerance
            && self.dirac <= self.tolerance
            && self.norm_condition_max() <= self.tolerance
    }
}

pub fn killing_report<S: Real>(
    g: &FrameGeometry<S>,
    field: &FramedSpinorField<S>,
    d: &ImmersionData<S>,
    tol: S,
) -> Result<KillingReport<S>> {
    d.validate()?;
    let mut killing = [S::zero(); 3];
    let mut norm_condition = [S::zero(); 3];
    let mut norm_condition_unscaled = [S::zero(); 3];
    for i in 0..3 {
        killing[i] = killing_residual(g, field, d, i)?.max_abs();
        norm_condition[i] = norm_condition_residual(g, field, d, i)?;
        norm_condition_unscaled[i] = norm_condition_residual_unscaled(field, d, i)?;
    }
    Ok(KillingReport {
        killing,
        dirac: dirac_residual(g, field, d)?.max_abs(),
        norm_condition,
        norm_condition_unscaled,
        energy_momentum: energy_momentum(g, field)?.q,
        mean_curvature: d.hyp.mean_curvature,
        half_trace: d.half_trace(),
        reconstruction: reconstruct_shape(g, field, &d.hyp, tol),
        tolerance: tol,
    })
}

/// Field at a point whose covariant derivatives satisfy the Killing equation
/// of `d` exactly.
pub fn synthesize_killing_field<S: Real>(
    g: &FrameGeometry<S>,
    value: Spinor<S>,
    d: &ImmersionData<S>,
) -> FramedSpinorField<S> {
    let targets = core::array::from_fn(|i| killing_rhs(d, &value, i));
    FramedSpinorField::with_covariant_derivatives(g, value, targets)
}
