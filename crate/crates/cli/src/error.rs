use thiserror::Error;

/// Exit status for analysis or verification failures.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for usage and parse errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] grayiso::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(grayiso::Error::Capacity { .. }) => EXIT_FAILURE,
            CliError::Io { .. } => EXIT_FAILURE,
            _ => EXIT_USAGE,
        }
    }
}
