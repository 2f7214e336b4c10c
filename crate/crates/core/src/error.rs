use thiserror::Error;

use crate::euler_hodge::EulerHodgeError;
use crate::fibration::FibrationError;
use crate::resolve::ResolveError;
use crate::twist::TwistError;
use crate::wps::WpsError;

/// Union of the per-module errors, for callers that do not care which subsystem failed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Wps(#[from] WpsError),
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error(transparent)]
    Fibration(#[from] FibrationError),
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    EulerHodge(#[from] EulerHodgeError),
    #[error("malformed input: {0}")]
    Input(String),
}

impl Error {
    /// `true` when the error reports a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::EulerHodge(EulerHodgeError::NonIntegralResult { .. }))
    }
}
