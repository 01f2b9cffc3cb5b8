use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("unsupported code length {0}")]
    UnsupportedLength(usize),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operation undefined on the zero code")]
    ZeroCode,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("entry {0} is not in Z4")]
    BadEntry(u8),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("linear system infeasible: {0}")]
    Infeasible(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = CodeError> = std::result::Result<T, E>;

impl From<std::io::Error> for CodeError {
    fn from(e: std::io::Error) -> Self {
        CodeError::Io(e.to_string())
    }
}
