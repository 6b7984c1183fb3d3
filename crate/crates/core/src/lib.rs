//! Spin geometry on framed 3-manifolds: Clifford algebra, spinor calculus,
//! generalized Killing spinors and hypersurface compatibility checks.
//!
//! The math is generic over [`Real`] (`f32` or `f64`); the aliases below fix
//! double precision, which the JSON layer in [`io`] uses.

pub mod catalog;
pub mod clifford;
pub mod compatibility;
pub mod conventions;
pub mod error;
pub mod frame;
pub mod io;
pub mod killing;
pub mod linalg;
pub mod obstruction;
pub mod scalar;
pub mod spin;

pub use error::{Error, Result};
pub use scalar::{Cplx, EtaKind, Real};

pub type Spinor64 = clifford::Spinor<f64>;
pub type Vec3f64 = linalg::Vec3<f64>;
pub type Mat3f64 = linalg::Mat3<f64>;
pub type FrameGeometry64 = frame::FrameGeometry<f64>;
pub type FramedSpinorField64 = spin::FramedSpinorField<f64>;
pub type ImmersionData64 = killing::ImmersionData<f64>;
pub type CatalogEntry64 = catalog::CatalogEntry<f64>;

pub type Spinor32 = clifford::Spinor<f32>;
pub type FrameGeometry32 = frame::FrameGeometry<f32>;
pub type ImmersionData32 = killing::ImmersionData<f32>;
