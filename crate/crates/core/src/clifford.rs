//! The complex Clifford algebra of a 3-dimensional Euclidean frame acting on
//! 2-component spinors.
//!
//! Frame vectors act through `γ_j = -i σ_j` (σ the Pauli matrices). With this
//! choice
//!
//! ```text
//! γ_i γ_j + γ_j γ_i = -2 δ_ij         (v·v·φ = -|v|² φ)
//! γ_1 γ_2 = γ_3 and cyclically        (e_i·e_j·φ = e_k·φ)
//! -γ_1 γ_2 γ_3 = Id                   (complex volume element acts trivially)
//! ```
//!
//! and every `γ_j` is anti-Hermitian, so `Re⟨v·ψ, ψ⟩ = 0` for real `v`.

use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::{Mat2, Vec3};
use crate::scalar::{c, cr, Cplx, Real};

/// Element of Σ₃ ≅ ℂ².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor<S>(pub [Cplx<S>; 2]);

impl<S: Real> Spinor<S> {
    pub fn new(a: Cplx<S>, b: Cplx<S>) -> Self {
        Self([a, b])
    }

    pub fn zero() -> Self {
        Self([cr(S::zero()); 2])
    }

    /// From `[re₁, im₁, re₂, im₂]`.
    pub fn from_parts(p: [S; 4]) -> Self {
        Self([c(p[0], p[1]), c(p[2], p[3])])
    }

    pub fn to_parts(&self) -> [S; 4] {
        [self.0[0].re, self.0[0].im, self.0[1].re, self.0[1].im]
    }

    pub fn norm_sqr(&self) -> S {
        self.0[0].norm_sqr() + self.0[1].norm_sqr()
    }

    pub fn norm(&self) -> S {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: Cplx<S>) -> Self {
        Self([self.0[0] * s, self.0[1] * s])
    }

    pub fn scale_real(&self, s: S) -> Self {
        self.scale(cr(s))
    }

    pub fn normalized(&self) -> Self {
        self.scale_real(S::one() / self.norm())
    }

    /// Largest modulus over the two components.
    pub fn max_abs(&self) -> S {
        self.0[0].norm().max(self.0[1].norm())
    }
}

impl<S: Real> Add for Spinor<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self([self.0[0] + o.0[0], self.0[1] + o.0[1]])
    }
}

impl<S: Real> Sub for Spinor<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self([self.0[0] - o.0[0], self.0[1] - o.0[1]])
    }
}

impl<S: Real> Neg for Spinor<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self([-self.0[0], -self.0[1]])
    }
}

impl<S: Real> Mul<Spinor<S>> for Mat2<S> {
    type Output = Spinor<S>;
    fn mul(self, v: Spinor<S>) -> Spinor<S> {
        Spinor([
            self.0[0][0] * v.0[0] + self.0[0][1] * v.0[1],
            self.0[1][0] * v.0[0] + self.0[1][1] * v.0[1],
        ])
    }
}

/// The three matrices through which `e₁, e₂, e₃` act on spinors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CliffordRep<S> {
    pub gamma: [Mat2<S>; 3],
}

/// Residuals of the defining relations of a [`CliffordRep`]; all zero for a valid one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepResiduals<S> {
    pub anticommutation: S,
    pub anti_hermitian: S,
    pub volume: S,
    pub cyclic: S,
}

impl<S: Real> RepResiduals<S> {
    pub fn max(&self) -> S {
        self.anticommutation
            .max(self.anti_hermitian)
            .max(self.volume)
            .max(self.cyclic)
    }
}

impl<S: Real> CliffordRep<S> {
    /// `γ_j = -i σ_j`.
    pub fn standard() -> Self {
        let (o, l) = (S::zero(), S::one());
        let z = c(o, o);
        let g1 = Mat2([[z, c(o, -l)], [c(o, -l), z]]);
        let g2 = Mat2([[z, c(-l, o)], [c(l, o), z]]);
        let g3 = Mat2([[c(o, -l), z], [z, c(o, l)]]);
        Self {
            gamma: [g1, g2, g3],
        }
    }

    /// Matrix of Clifford multiplication by `v = Σ v_i e_i`.
    pub fn vector_matrix(&self, v: &Vec3<S>) -> Mat2<S> {
        (0..3).fold(Mat2::zero(), |acc, i| acc + self.gamma[i].scale_real(v[i]))
    }

    pub fn mul_vec(&self, v: &Vec3<S>, phi: &Spinor<S>) -> Spinor<S> {
        self.vector_matrix(v) * *phi
    }

    pub fn mul_bivec(&self, v: &Vec3<S>, w: &Vec3<S>, phi: &Spinor<S>) -> Spinor<S> {
        self.mul_vec(v, &self.mul_vec(w, phi))
    }

    pub fn residuals(&self) -> RepResiduals<S> {
        let id = Mat2::identity();
        let g = &self.gamma;
        let mut anticommutation = S::zero();
        let mut anti_hermitian = S::zero();
        for i in 0..3 {
            anti_hermitian = anti_hermitian.max((g[i].adjoint() + g[i]).max_abs());
            for j in 0..3 {
                let delta = if i == j { S::lit(2.0) } else { S::zero() };
                let r = g[i] * g[j] + g[j] * g[i] + id.scale_real(delta);
                anticommutation = anticommutation.max(r.max_abs());
            }
        }
        let volume = (id + g[0] * g[1] * g[2]).max_abs();
        let cyclic = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
            .iter()
            .map(|&(i, j, k)| (g[i] * g[j] - g[k]).max_abs())
            .fold(S::zero(), S::max);
        RepResiduals {
            anticommutation,
            anti_hermitian,
            volume,
            cyclic,
        }
    }
}

impl<S: Real> Default for CliffordRep<S> {
    fn default() -> Self {
        Self::standard()
    }
}

/// `v·φ` in the standard representation.
pub fn mul_vec<S: Real>(v: &Vec3<S>, phi: &Spinor<S>) -> Spinor<S> {
    CliffordRep::standard().mul_vec(v, phi)
}

/// `v·w·φ` in the standard representation.
pub fn mul_bivec<S: Real>(v: &Vec3<S>, w: &Vec3<S>, phi: &Spinor<S>) -> Spinor<S> {
    CliffordRep::standard().mul_bivec(v, w, phi)
}

/// Hermitian product, complex-linear in the first slot.
pub fn hermitian<S: Real>(psi: &Spinor<S>, phi: &Spinor<S>) -> Cplx<S> {
    psi.0[0] * phi.0[0].conj() + psi.0[1] * phi.0[1].conj()
}

/// Real scalar product `Re⟨ψ, φ⟩`.
pub fn real_dot<S: Real>(psi: &Spinor<S>, phi: &Spinor<S>) -> S {
    hermitian(psi, phi).re
}

/// Norm below which a spinor is treated as zero.
pub const ZERO_SPINOR_TOL: f64 = 1e-12;

/// Coordinates `(r, v)` with `ψ = v·φ + r φ`.
///
/// `{φ, e₁·φ, e₂·φ, e₃·φ} / |φ|` is an orthonormal basis of Σ₃ for `Re⟨·,·⟩`,
/// so the coordinates are plain projections.
pub fn real_basis_coords<S: Real>(phi: &Spinor<S>, psi: &Spinor<S>) -> Result<(S, Vec3<S>)> {
    let n2 = phi.norm_sqr();
    if n2.sqrt() < S::lit(ZERO_SPINOR_TOL) {
        return Err(Error::ZeroBaseSpinor {
            norm: n2.sqrt().to_f64_lossy(),
        });
    }
    let rep = CliffordRep::standard();
    let r = real_dot(psi, phi) / n2;
    let mut v = Vec3::zero();
    for i in 0..3 {
        v[i] = real_dot(psi, &(rep.gamma[i] * *phi)) / n2;
    }
    Ok((r, v))
}
