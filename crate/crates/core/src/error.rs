use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension: expected {expected}, got {actual}")]
    InvalidDimension { expected: usize, actual: usize },

    #[error("matrix is not Hermitian (max asymmetry {max_asymmetry:e})")]
    HermiticityViolation { max_asymmetry: f64 },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no sign change on bracket [{lo}, {hi}] (f(lo) = {f_lo:e}, f(hi) = {f_hi:e})")]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("configuration error in `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("i/o error on {}: {source}", path.display())]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config { field: field.into(), message: message.into() }
    }

    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }

    pub(crate) fn invalid_state(message: impl Into<String>) -> Self {
        Error::InvalidState(message.into())
    }

    /// True for errors caused by bad user configuration rather than numerics.
    pub fn is_config(&self) -> bool {
        matches!(self, Error::Config { .. })
    }

    /// True for numerical-domain failures (bad angles, invalid states, brackets).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::InvalidDimension { .. }
                | Error::HermiticityViolation { .. }
                | Error::InvalidState(_)
                | Error::Domain(_)
                | Error::Bracket { .. }
        )
    }
}
