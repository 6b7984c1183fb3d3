//! Named homogeneous geometries, their special spinors, and immersion fixtures.

use crate::error::{Error, Result};
use crate::frame::{Christoffel, FrameGeometry};
use crate::killing::{Ambient, Branch, ImmersionData};
use crate::linalg::{Mat3, Vec3};
use crate::scalar::{cr, half, Real};
use crate::spin::{find_special_spinor, FramedSpinorField};

/// Immersion data together with the outcome it is expected to produce.
#[derive(Debug, Clone, PartialEq)]
pub struct Fixture<S> {
    pub data: ImmersionData<S>,
    /// `true` when every residual is expected to pass.
    pub expect_pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry<S> {
    pub name: String,
    pub geometry: FrameGeometry<S>,
    pub special_spinor: Option<FramedSpinorField<S>>,
    /// Column `i` is `W(e_i)` in the defining law `∇_i φ = W(e_i)·φ`.
    pub spinor_law: Option<Mat3<S>>,
    pub fixtures: Vec<Fixture<S>>,
    pub parameters: Vec<(&'static str, S)>,
    /// Constant curvature; excluded from obstruction runs.
    pub space_form: bool,
}

impl<S: Real> CatalogEntry<S> {
    pub fn parameter(&self, key: &str) -> Option<S> {
        self.parameters.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureName {
    FlatPlane,
    Hypersphere,
    ProductSlice,
}

impl FixtureName {
    pub const ALL: [FixtureName; 3] = [Self::FlatPlane, Self::Hypersphere, Self::ProductSlice];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::FlatPlane => "flat_plane",
            Self::Hypersphere => "hypersphere",
            Self::ProductSlice => "product_slice",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.as_str() == s)
    }
}

fn search_tolerance<S: Real>() -> S {
    S::epsilon().sqrt()
}

fn with_special_spinor<S: Real>(
    name: String,
    geometry: FrameGeometry<S>,
    law: Mat3<S>,
    parameters: Vec<(&'static str, S)>,
) -> Result<CatalogEntry<S>> {
    let phi = find_special_spinor(&geometry, &law, search_tolerance())?;
    Ok(CatalogEntry {
        name,
        geometry,
        special_spinor: Some(FramedSpinorField::constant(phi)),
        spinor_law: Some(law),
        fixtures: Vec::new(),
        parameters,
        space_form: false,
    })
}

fn sol_type_christoffel<S: Real>(l: S) -> Christoffel<S> {
    let mut g = [[[S::zero(); 3]; 3]; 3];
    g[0][0][2] = -l;
    g[0][2][0] = l;
    g[1][2][1] = -l;
    g[1][1][2] = l;
    g
}

fn sol_type_law<S: Real>(l: S) -> Mat3<S> {
    let h = half::<S>() * l;
    Mat3([[S::zero(), h, S::zero()], [h, S::zero(), S::zero()], [S::zero(); 3]])
}

/// Classification label of E(κ,τ) for `τ ≠ 0`.
pub fn e_kappa_tau_label<S: Real>(kappa: S, tau: S) -> &'static str {
    if is_round(kappa, tau) {
        "round-sphere"
    } else if kappa == S::zero() {
        "nil3"
    } else if kappa > S::zero() {
        "berger"
    } else {
        "psl2"
    }
}

fn is_round<S: Real>(kappa: S, tau: S) -> bool {
    let round = S::lit(4.0) * tau * tau;
    (kappa - round).abs() <= S::lit(1e3) * S::epsilon() * round.max(S::one())
}

/// Fibration E(κ,τ) in the frame `{e_1, e_2, e_3 = ξ}`.
pub fn e_kappa_tau<S: Real>(kappa: S, tau: S) -> Result<CatalogEntry<S>> {
    if tau == S::zero() || !tau.is_finite() {
        return Err(Error::TauZero);
    }
    if !kappa.is_finite() {
        return Err(Error::InvalidData("kappa must be finite".into()));
    }
    let mut g = [[[S::zero(); 3]; 3]; 3];
    let fiber = tau - kappa / (S::lit(2.0) * tau);
    g[0][1][2] = tau;
    g[0][2][1] = -tau;
    g[1][2][0] = tau;
    g[1][0][2] = -tau;
    g[2][1][0] = fiber;
    g[2][0][1] = -fiber;
    let label = e_kappa_tau_label(kappa, tau);
    let geometry = FrameGeometry::new(format!("E({kappa},{tau})"), g)?.with_xi(2)?;
    let h = half::<S>();
    let law = Mat3::diag(h * tau, h * tau, -h * fiber);
    let mut entry = with_special_spinor(
        label.to_string(),
        geometry,
        law,
        vec![("kappa", kappa), ("tau", tau)],
    )?;
    entry.space_form = is_round(kappa, tau);
    Ok(entry)
}

pub fn sol3<S: Real>() -> CatalogEntry<S> {
    let geometry = FrameGeometry::new("Sol3", sol_type_christoffel(S::one()))
        .and_then(|g| g.with_xi(2))
        .expect("Sol3 frame is metric compatible");
    with_special_spinor("sol3".into(), geometry, sol_type_law(S::one()), Vec::new())
        .expect("Sol3 admits its special spinor")
}

/// Mapping torus of a hyperbolic toral automorphism with eigenvalue `alpha > 1`.
pub fn torus_bundle<S: Real>(alpha: S) -> Result<CatalogEntry<S>> {
    if !(alpha > S::one()) || !alpha.is_finite() {
        return Err(Error::AlphaOutOfRange(alpha.to_f64_lossy()));
    }
    let l = alpha.ln();
    let geometry = FrameGeometry::new(format!("T_B({alpha})"), sol_type_christoffel(l))?.with_xi(2)?;
    with_special_spinor(
        "torus-bundle".into(),
        geometry,
        sol_type_law(l),
        vec![("alpha", alpha), ("ln_alpha", l)],
    )
}

/// Mapping torus of `b ∈ SL₂(ℤ)` with trace above 2. Records the slope of the
/// eigenvector for `1/α`, which does not enter the frame constants.
pub fn torus_bundle_from_matrix<S: Real>(b: [[i64; 2]; 2]) -> Result<CatalogEntry<S>> {
    let det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
    if det != 1 {
        return Err(Error::InvalidData(format!("matrix has determinant {det}, expected 1")));
    }
    let tr = S::lit((b[0][0] + b[1][1]) as f64);
    let disc = (tr * tr - S::lit(4.0)).max(S::zero()).sqrt();
    let alpha = (tr + disc) * half::<S>();
    let mut entry = torus_bundle(alpha)?;
    let mu = alpha.recip();
    // (b00 - μ) x + b01 y = 0, or the second row when b01 = 0
    let slope = if b[0][1] != 0 {
        (mu - S::lit(b[0][0] as f64)) / S::lit(b[0][1] as f64)
    } else {
        S::lit(b[1][0] as f64) / (mu - S::lit(b[1][1] as f64))
    };
    entry.parameters.push(("b", slope));
    Ok(entry)
}

/// Orthonormal frame of the 3-dimensional Lie algebra with structure constants
/// `c_ij^k = ε_ijl N^{lk} + δ_j^k a_i - δ_i^k a_j`.
///
/// `N` must be symmetric with `N a = 0`; every 3-dimensional metric Lie
/// algebra arises this way up to rotation. Connection coefficients follow from
/// the Koszul formula for left-invariant fields.
pub fn lie_algebra_frame<S: Real>(n: &Mat3<S>, a: &Vec3<S>) -> Result<FrameGeometry<S>> {
    let scale = n.max_abs().max(a.max_abs()).max(S::one());
    let tol = S::lit(1e3) * S::epsilon() * scale * scale;
    if n.asymmetry() > tol {
        return Err(Error::InvalidData("structure matrix N must be symmetric".into()));
    }
    if n.apply(a).max_abs() > tol {
        return Err(Error::InvalidData("structure data must satisfy N a = 0".into()));
    }
    let eps = |i: usize, j: usize, l: usize| -> S {
        match (i, j, l) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => S::one(),
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -S::one(),
            _ => S::zero(),
        }
    };
    let mut c = [[[S::zero(); 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let mut v = (0..3).fold(S::zero(), |acc, l| acc + eps(i, j, l) * n.0[l][k]);
                if j == k {
                    v = v + a[i];
                }
                if i == k {
                    v = v - a[j];
                }
                c[i][j][k] = v;
            }
        }
    }
    let h = half::<S>();
    let mut gamma = [[[S::zero(); 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                gamma[i][j][k] = h * (c[i][j][k] - c[j][k][i] + c[k][i][j]);
            }
        }
    }
    FrameGeometry::with_tolerance("lie-algebra", gamma, S::lit(1e3) * S::epsilon() * scale)
}

/// Named immersion fixtures with the geometry they live on.
pub fn build_fixture<S: Real>(name: FixtureName) -> CatalogEntry<S> {
    let round = || e_kappa_tau(S::lit(4.0), S::one()).expect("round sphere entry");
    let (mut entry, data) = match name {
        FixtureName::FlatPlane => {
            let geometry = FrameGeometry::flat();
            let entry = with_special_spinor("flat".into(), geometry, Mat3::zero(), Vec::new())
                .expect("flat frame admits parallel spinors");
            let data = ImmersionData::space_form(Mat3::zero(), cr(S::zero()), Branch::Plus);
            (entry, data)
        }
        FixtureName::Hypersphere => {
            let data = ImmersionData::space_form(Mat3::identity(), cr(S::zero()), Branch::Minus);
            (round(), data)
        }
        FixtureName::ProductSlice => {
            let data = ImmersionData::new(
                Mat3::zero(),
                Vec3::zero(),
                S::one(),
                cr(half::<S>()),
                Ambient::Product,
                Branch::Plus,
            );
            (round(), data)
        }
    };
    entry.name = name.as_str().to_string();
    entry.fixtures = vec![Fixture {
        data: data.expect("fixture data is valid"),
        expect_pass: true,
    }];
    entry
}

/// Named geometries in a fixed order.
pub fn list<S: Real>() -> Vec<CatalogEntry<S>> {
    let e = |k: f64, t: f64| e_kappa_tau(S::lit(k), S::lit(t)).expect("catalog parameters are valid");
    vec![
        e(0.0, 0.5),
        e(1.0, 1.0),
        e(-1.0, 1.0),
        e(4.0, 1.0),
        sol3(),
        torus_bundle_from_matrix([[2, 1], [1, 1]]).expect("golden torus bundle"),
    ]
}
