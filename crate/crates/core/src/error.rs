use thiserror::Error;

/// Domain errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("cell ({0},{1}) is not a removable corner")]
    NotRemovable(usize, usize),
    #[error("content is not a partition: {0}")]
    NonPartitionContent(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at `{0}`")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
