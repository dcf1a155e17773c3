use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by every algebra in the crate.
///
/// Entry and coordinate indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar modes differ")]
    ModeMismatch,
    #[error("Cayley-Dickson levels differ: {left} vs {right}")]
    LevelMismatch { left: u32, right: u32 },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("expected exactly {expected} factors, got {found}")]
    WrongFactorCount { expected: usize, found: usize },
    #[error("entry z_{index} is not invertible")]
    NonInvertibleEntry { index: usize },
    #[error("coefficient algebras differ: {left} vs {right}")]
    AlgebraMismatch { left: String, right: String },
    #[error("coefficient algebra {0} is not associative")]
    NonAssociative(String),
    #[error("coefficient algebra {0} carries no norm")]
    UnnormedAlgebra(String),
    #[error("coordinate x_{index} is zero")]
    ZeroCoordinate { index: usize },
    #[error("element is zero")]
    ZeroElement,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("nonzero cell ({row}, {col}) lies off the cyclic shift pattern")]
    PatternViolation { row: usize, col: usize },
    #[error("matrix sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid arity {0}")]
    InvalidArity(usize),
    #[error("invalid dimension {0}")]
    InvalidDimension(usize),
    #[error("arity chain broken between stages {stage} and {next}", next = stage + 1)]
    ChainBroken { stage: usize },
    #[error("level {0} lies outside the division range 0..=3")]
    NotDivisionAlgebra(u32),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Stable machine-readable name, used in CLI error payloads.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::ModeMismatch => "ModeMismatch",
            Error::LevelMismatch { .. } => "LevelMismatch",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::WrongFactorCount { .. } => "WrongFactorCount",
            Error::NonInvertibleEntry { .. } => "NonInvertibleEntry",
            Error::AlgebraMismatch { .. } => "AlgebraMismatch",
            Error::NonAssociative(_) => "NonAssociative",
            Error::UnnormedAlgebra(_) => "UnnormedAlgebra",
            Error::ZeroCoordinate { .. } => "ZeroCoordinate",
            Error::ZeroElement => "ZeroElement",
            Error::DimMismatch { .. } => "DimMismatch",
            Error::PatternViolation { .. } => "PatternViolation",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::InvalidArity(_) => "InvalidArity",
            Error::InvalidDimension(_) => "InvalidDimension",
            Error::ChainBroken { .. } => "ChainBroken",
            Error::NotDivisionAlgebra(_) => "NotDivisionAlgebra",
            Error::Malformed(_) => "MalformedInput",
        }
    }

    pub fn is_malformed(&self) -> bool {
        matches!(self, Error::Malformed(_))
    }
}
