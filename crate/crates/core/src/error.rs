use thiserror::Error;

use crate::cfk::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("entry ({row}, {col}) lies outside a {rows}x{cols} matrix")]
    EntryOutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("entry ({row}, {col}) listed more than once")]
    DuplicateEntry { row: usize, col: usize },

    #[error("boundary does not square to zero{0}")]
    NotSquareZero(String),

    #[error("map does not commute with the boundaries")]
    NotChainMap,

    #[error("vector is not a cycle")]
    NotACycle,

    #[error("invalid complex:\n{0}")]
    InvalidComplex(ValidationReport),

    #[error("complex `{0}` has no flip involution")]
    FlipRequired(String),

    #[error("unknown region `{0}`")]
    UnknownRegion(String),

    #[error("region undefined: {0}")]
    UndefinedRegion(String),

    #[error("unknown built-in knot `{0}`")]
    UnknownKnot(String),

    #[error("invalid slope `{0}`: expected coprime positive p/q")]
    InvalidSlope(String),

    #[error("truncation level {level} is below the required bound {bound}")]
    TruncationTooSmall { level: i64, bound: i64 },

    #[error("rank formula not applicable: image containments fail for `{0}`")]
    FormulaNotApplicable(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("cancellation did not terminate inside the truncated cone: {0}")]
    CancellationFailed(String),

    #[error("invalid staircase: {0}")]
    InvalidStaircase(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}
