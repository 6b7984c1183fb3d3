//! Scalar abstraction shared by every module.

use core::fmt::{Debug, Display, LowerExp};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Real floating point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Default + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex scalar over a [`Real`].
pub type Cplx<S> = Complex<S>;

pub(crate) fn c<S: Real>(re: S, im: S) -> Cplx<S> {
    Complex::new(re, im)
}

pub(crate) fn cr<S: Real>(re: S) -> Cplx<S> {
    Complex::new(re, S::zero())
}

pub(crate) fn half<S: Real>() -> S {
    S::lit(0.5)
}

/// Which of the two admissible classes a Killing constant belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaKind {
    Real,
    Imaginary,
}

/// Classifies `eta` as real or purely imaginary, `None` if neither (within `tol`).
/// Zero counts as real.
pub fn eta_kind<S: Real>(eta: Cplx<S>, tol: S) -> Option<EtaKind> {
    if eta.im.abs() <= tol {
        Some(EtaKind::Real)
    } else if eta.re.abs() <= tol {
        Some(EtaKind::Imaginary)
    } else {
        None
    }
}
