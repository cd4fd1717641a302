use thiserror::Error;

/// Errors raised by the exact computations.
///
/// Domain errors (`NotNormal`, `SingularMinor`, ...) are legitimate outcomes
/// for degenerate data; `Consistency` signals that an identity the theory
/// guarantees failed to hold, which is always a bug or a violated
/// precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("window too small: need {needed} rows, have {available}")]
    WindowTooSmall { needed: usize, available: usize },

    #[error("insufficient coefficients: need {needed}, have {available}")]
    InsufficientCoefficients { needed: usize, available: usize },

    #[error("insufficient moments: need {needed}, have {available}")]
    InsufficientMoments { needed: usize, available: usize },

    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("leading principal minor {index} is not invertible")]
    SingularMinor { index: usize },

    #[error("not normal at index {index}")]
    NotNormal {
        index: usize,
        multi_index: Option<Vec<usize>>,
    },

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("matrix is not tridiagonal: entry ({row}, {col}) is nonzero")]
    NotTridiagonal { row: usize, col: usize },

    #[error("band violation at ({row}, {col})")]
    BandViolation { row: usize, col: usize },

    #[error("not upper-triangular: entry ({row}, {col}) is nonzero")]
    NotUpperTriangular { row: usize, col: usize },

    #[error("not unit-lower-triangular: {0}")]
    NotUnitLower(String),

    #[error("polynomial degree {degree} exceeds window limit {limit}")]
    DegreeOverflow { degree: usize, limit: usize },

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// Machine-readable variant name used in structured error output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::WindowTooSmall { .. } => "WindowTooSmall",
            Error::InsufficientCoefficients { .. } => "InsufficientCoefficients",
            Error::InsufficientMoments { .. } => "InsufficientMoments",
            Error::OrderMismatch { .. } => "OrderMismatch",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::SingularMinor { .. } => "SingularMinor",
            Error::NotNormal { .. } => "NotNormal",
            Error::NotInvertible(_) => "NotInvertible",
            Error::NotTridiagonal { .. } => "NotTridiagonal",
            Error::BandViolation { .. } => "BandViolation",
            Error::NotUpperTriangular { .. } => "NotUpperTriangular",
            Error::NotUnitLower(_) => "NotUnitLower",
            Error::DegreeOverflow { .. } => "DegreeOverflow",
            Error::OutOfRange(_) => "OutOfRange",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Parse(_) => "Parse",
            Error::Consistency(_) => "Consistency",
        }
    }

    /// The failing index, for errors that carry one.
    pub fn index(&self) -> Option<usize> {
        match self {
            Error::SingularMinor { index } | Error::NotNormal { index, .. } => Some(*index),
            _ => None,
        }
    }

    /// Input-shape problems, as opposed to failures caused by the data's values.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::InvalidInput(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
