use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("matrix of order {order} needs {expected} elements, got {found}")]
    ElementCount {
        order: usize,
        expected: usize,
        found: usize,
    },

    #[error("order must be positive")]
    EmptyMatrix,

    #[error("order {0} is not a power of 3")]
    NotPowerOfThree(usize),

    #[error("parameter {name} must be nonnegative, got {value}")]
    NegativeParameter { name: String, value: String },

    #[error("matrix is not magic")]
    NotMagic,

    #[error("magnitude comparison is only defined for real radicals")]
    ImaginaryComparison,

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("singular parameters: {0}")]
    Singular(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("level {level} exceeds the materialization ceiling {ceiling}")]
    CeilingExceeded { level: usize, ceiling: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
