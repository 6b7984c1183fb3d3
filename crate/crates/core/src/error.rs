use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("base spinor has norm {norm:e}, below tolerance")]
    ZeroBaseSpinor { norm: f64 },

    #[error("spinor value vanishes (norm {norm:e})")]
    ZeroSpinor { norm: f64 },

    #[error("christoffel array is not metric compatible at ({i},{j},{k}): deviation {deviation:e}")]
    MetricIncompatible {
        i: usize,
        j: usize,
        k: usize,
        deviation: f64,
    },

    #[error("frame index {0} out of range (expected 0, 1 or 2)")]
    IndexOutOfRange(usize),

    #[error("Ricci matrix is not eta-Einstein about e{}: residual {residual:e}", .xi_index + 1)]
    NotEtaEinstein { xi_index: usize, residual: f64 },

    #[error("eta-Einstein coefficient vanishes; the shape system needs genuine anisotropy")]
    EtaZero,

    #[error("bundle curvature tau must be nonzero")]
    TauZero,

    #[error("torus-bundle eigenvalue alpha must exceed 1 (got {0})")]
    AlphaOutOfRange(f64),

    #[error("invalid immersion data: {0}")]
    InvalidData(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("no spinor satisfies the prescribed derivative equations (best residual {residual:e})")]
    SpecialSpinorNotFound { residual: f64 },

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn check_index(i: usize) -> Result<()> {
    if i < 3 {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(i))
    }
}
