use thiserror::Error;

/// Errors shared by the whole crate.
///
/// `Unsupported` is the catalog boundary: the input is meaningful but outside
/// what the implementation can compute (it is reported, never guessed).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("degenerate presentation: {0}")]
    Degenerate(String),
    #[error("selector is not a spin structure: {0}")]
    NotSpin(String),
    #[error("knot not known to be quasi-alternating: {0}")]
    NotQuasiAlternating(String),
}

pub type Result<T> = std::result::Result<T, Error>;
