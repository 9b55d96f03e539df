use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad invocation: missing file, unknown name, invalid parameters.
    #[error("usage: {0}")]
    Usage(String),
    /// A computation ran but a check did not hold.
    #[error("check failed: {0}")]
    Check(String),
    #[error(transparent)]
    Core(#[from] salemforge::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
