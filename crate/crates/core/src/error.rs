use thiserror::Error;

use crate::oracle::QuadratureResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid interval [{lo}, {hi}]: endpoints must be finite with lo < hi")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("non-finite value {value} at x = {x}")]
    NonFinite { x: f64, value: f64 },

    #[error("quadrature did not converge after {subdivisions} subdivisions")]
    NonConvergence {
        subdivisions: usize,
        partial: QuadratureResult,
    },

    #[error("missing derivative data: {0}")]
    MissingData(&'static str),

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("unknown function id `{0}`")]
    UnknownFunction(String),

    #[error("cannot parse `{0}` as a number")]
    Parse(String),

    #[error("serialization failed: {0}")]
    Serialization(String),
}
