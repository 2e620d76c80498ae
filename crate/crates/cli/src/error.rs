use thiserror::Error;

/// Exit code contract: 0 pass, 1 check failure, 2 usage, 3 I/O.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<hqm::Error> for CliError {
    fn from(e: hqm::Error) -> Self {
        match e {
            hqm::Error::Io(msg) => CliError::Io(msg),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
