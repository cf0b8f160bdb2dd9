use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inadmissible type: {0}")]
    Inadmissible(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("node {node} out of range 1..={max}")]
    NodeOutOfRange { node: usize, max: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("ambiguous denominator: {0}")]
    Ambiguous(String),
    #[error("enumeration budget of {0} exceeded")]
    Budget(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
