use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported field order {0}; only 2 and 3 are supported")]
    UnsupportedField(u8),

    #[error("unsupported parameters q={q}, k={k}")]
    UnsupportedDimension { q: u8, k: usize },

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("field order mismatch between operands")]
    FieldMismatch,

    #[error("invalid entry {value} for GF({q})")]
    InvalidEntry { value: u8, q: u8 },

    #[error("matrix is not square")]
    NotSquare,

    #[error("generator matrix has rank below its row count")]
    RankDeficient,

    #[error("code is not linear complementary dual")]
    NotLcd,

    #[error("generator has a zero column (dual distance 1)")]
    ZeroColumn,

    #[error("unsupported dual distance threshold {0}; supported thresholds are 1, 2, 3")]
    UnsupportedDualWeight(u32),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("empty search space")]
    EmptySearchSpace,

    #[error("oracle limit exceeded: {0}")]
    OracleLimit(String),

    #[error("arithmetic assumption violated: {0}")]
    AssumptionViolated(String),

    #[error("data unavailable: {0}")]
    DataUnavailable(String),

    #[error("malformed data: {0}")]
    MalformedData(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
