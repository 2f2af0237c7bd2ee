use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("unknown group descriptor `{0}`")]
    UnknownDescriptor(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("budget exceeded: {what} needs {needed}, cap is {cap}")]
    Budget { what: String, needed: String, cap: String },
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn budget(what: impl Into<String>, needed: impl ToString, cap: impl ToString) -> Self {
        Error::Budget { what: what.into(), needed: needed.to_string(), cap: cap.to_string() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
