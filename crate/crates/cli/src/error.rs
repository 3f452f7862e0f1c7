use std::path::Path;
use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] qgraph::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }

    /// 1 for invalid certificates, 3 for an exhausted budget, 2 otherwise.
    pub fn code(&self) -> u8 {
        match self {
            CliError::Core(qgraph::Error::InvalidCertificate(_)) => 1,
            CliError::Core(qgraph::Error::BudgetExhausted { .. }) => 3,
            _ => 2,
        }
    }

    pub fn report(&self) -> ExitCode {
        eprintln!("error: {self}");
        ExitCode::from(self.code())
    }
}
