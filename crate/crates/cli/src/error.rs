use thiserror::Error;

/// Domain and usage errors exit with status 2, internal errors with 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] hecke_core::Error),

    #[error("{0}")]
    Usage(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::Usage(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}
