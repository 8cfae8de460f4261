use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Indices carried in messages are 1-based, matching the file formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for ambient dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("basis is not in canonical reduced row echelon form")]
    NonCanonicalBasis,

    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid center: {0}")]
    InvalidCenter(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable name used in structured error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NonCanonicalBasis => "NonCanonicalBasis",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::InvalidCenter(_) => "InvalidCenter",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
