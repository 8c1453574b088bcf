use thiserror::Error;

/// Errors raised by the algebra and its applications.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("modulus must be finite and non-negative")]
    InvalidModulus,

    #[error("non-finite component")]
    NonFinite,

    #[error("division by zero")]
    DivisionByZero,

    /// A leading partial modulus vanished and the longitudes it hides were not supplied.
    #[error("missing degenerate longitude: {needed} longitude(s) required, {supplied} supplied")]
    MissingDegenerateLongitude { needed: usize, supplied: usize },

    #[error("root order must be at least 1")]
    InvalidRootOrder,

    #[error("{variant} conjugate is only defined for dimension 3, got {dim}")]
    ConjugateDimension { variant: &'static str, dim: usize },

    #[error("replicate index {k} out of range for dimension {dim} (expected 3..={dim})")]
    ReplicateIndex { k: usize, dim: usize },

    #[error("operation requires dimension {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },

    #[error("boost velocity must satisfy |beta| < 1")]
    InvalidBeta,

    #[error("invalid fractal configuration: {0}")]
    InvalidConfig(String),

    #[error("grid of {0} cells exceeds the supported maximum")]
    ResolutionOverflow(u128),

    #[error("pgm export requires a slice in the configuration")]
    SliceRequired,

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
