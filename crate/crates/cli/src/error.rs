use std::fmt;

use gvblocks_core::ErrorKind;

/// Exit code for validation errors (bad config, bad flags, bad data).
pub const EXIT_VALIDATION: u8 = 2;
/// Exit code for capacity limits and unsupported requests.
pub const EXIT_UNSUPPORTED: u8 = 3;

/// An error with a machine-readable code, a message and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub exit_code: u8,
}

impl CliError {
    pub fn validation(code: &str, message: impl Into<String>) -> Self {
        CliError {
            code: code.to_string(),
            message: message.into(),
            exit_code: EXIT_VALIDATION,
        }
    }

    pub fn unsupported(code: &str, message: impl Into<String>) -> Self {
        CliError {
            code: code.to_string(),
            message: message.into(),
            exit_code: EXIT_UNSUPPORTED,
        }
    }

    /// Prefixes the message with the config field it concerns.
    pub fn at(mut self, path: &str) -> Self {
        self.message = format!("{path}: {}", self.message);
        self
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)
    }
}

impl std::error::Error for CliError {}

impl From<gvblocks_core::Error> for CliError {
    fn from(e: gvblocks_core::Error) -> Self {
        let exit_code = match e.kind() {
            ErrorKind::Validation => EXIT_VALIDATION,
            ErrorKind::Capacity | ErrorKind::Unsupported => EXIT_UNSUPPORTED,
        };
        CliError {
            code: e.code().to_string(),
            message: e.to_string(),
            exit_code,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
