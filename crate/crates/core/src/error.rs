use thiserror::Error;

/// Errors raised by the library.
///
/// `Input` covers malformed data (shape mismatches, bad scalars, wrong
/// field). `Domain` covers well-formed data that violates a mathematical
/// precondition. `Galois` is a canonical map that fails to be bijective and
/// `Inconsistency` flags an identity that should hold by construction but
/// did not, which points at a bug or at hand-edited witness data.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("galois error: {0}")]
    Galois(String),
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by malformed input rather than by a property
    /// of the mathematical objects.
    pub fn is_input(&self) -> bool {
        matches!(self, Error::Input(_))
    }
}
