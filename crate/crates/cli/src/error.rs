use thiserror::Error;

/// Failures of the command-line front end, each tied to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(edgering::Error),
}

impl From<edgering::Error> for CliError {
    fn from(e: edgering::Error) -> Self {
        match e {
            edgering::Error::NotBipartite => CliError::NotBipartite,
            edgering::Error::Capacity { .. } | edgering::Error::MemoryBudget { .. } => {
                CliError::Capacity(e.to_string())
            }
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    /// 0 success, 1 verification failure, 2 parse or usage error, 3
    /// non-bipartite input, 4 capacity exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) | CliError::Generation(_) => 1,
            CliError::Core(edgering::Error::Contract(_) | edgering::Error::Computation(_)) => 1,
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Usage(_) => 2,
            CliError::Core(edgering::Error::Input(_)) => 2,
            CliError::NotBipartite | CliError::Core(edgering::Error::NotBipartite) => 3,
            CliError::Capacity(_)
            | CliError::Core(edgering::Error::Capacity { .. } | edgering::Error::MemoryBudget { .. }) => 4,
        }
    }
}
