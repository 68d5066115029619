use thiserror::Error;

/// Crate-wide error type.
///
/// Variants map onto the CLI exit-code policy: `Parameter` and `Format` are
/// user/config errors, `Saturation`/`Structural` are numerical or model
/// errors, `NonConvergence` signals partial results.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("fiber placement saturated: placed {placed} of {requested} fibers")]
    Saturation { placed: usize, requested: usize },

    #[error("structural error: {0}")]
    Structural(String),

    #[error("non-convergence: {0}")]
    NonConvergence(String),

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
}
