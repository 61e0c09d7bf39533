use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("index {} out of range for order {order}", index + 1)]
    IndexOutOfRange { index: usize, order: usize },
    #[error("index {} listed twice", .0 + 1)]
    DuplicateIndex(usize),
    #[error("index set is empty")]
    EmptyIndexSet,
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("principal block {0} is singular")]
    SingularBlock(String),
    #[error("not a permutation")]
    InvalidPermutation,
    #[error("expected a matrix of order {expected}, found order {found}")]
    WrongOrder { expected: String, found: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("row {row}, column {col}: invalid entry {token:?}")]
    BadEntry { row: usize, col: usize, token: String },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
