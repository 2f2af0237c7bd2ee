use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Budget(branchcone::Error),
    #[error("verification failed: {0}")]
    Verify(String),
    #[error("{0}")]
    Core(branchcone::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<branchcone::Error> for CliError {
    fn from(e: branchcone::Error) -> Self {
        use branchcone::Error as E;
        match e {
            E::Budget { .. } => CliError::Budget(e),
            E::InvalidCartan(_) | E::UnknownDescriptor(_) | E::InvalidEmbedding(_) | E::InvalidArgument(_) => {
                CliError::Parse(e.to_string())
            }
            E::OracleMismatch(_) | E::Internal(_) => CliError::Core(e),
        }
    }
}

impl CliError {
    /// Process exit status: 2 for bad input, 3 for exhausted budgets, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Verify(_) | CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}
