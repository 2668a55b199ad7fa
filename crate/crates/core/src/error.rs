use thiserror::Error;

/// Errors raised by the series engine and the verifiers built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {left:?} vs {right:?}")]
    ModulusMismatch {
        left: Option<u64>,
        right: Option<u64>,
    },

    #[error("non-invertible series: constant term {0} is not a unit")]
    NonInvertible(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("cannot parse product spec at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
