use std::io;
use std::path::PathBuf;

use densem_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("word '{0}' is defined more than once")]
    DuplicateWord(String),

    #[error("unknown word '{0}'")]
    UnknownWord(String),

    #[error("sentence '{sentence}' does not reduce to {target}")]
    Ungrammatical { sentence: String, target: String },

    #[error("{0}")]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn schema(path: impl Into<String>, message: impl ToString) -> Self {
        CliError::Schema {
            path: path.into(),
            message: message.to_string(),
        }
    }

    /// 0 success, 1 usage or input error, 2 ungrammatical, 3 numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_)
            | CliError::Io { .. }
            | CliError::Schema { .. }
            | CliError::DuplicateWord(_)
            | CliError::UnknownWord(_) => 1,
            CliError::Ungrammatical { .. } => 2,
            CliError::Core(e) => match e {
                CoreError::OutsideDisc { .. }
                | CoreError::BadResolution(_)
                | CoreError::NotQubit(_)
                | CoreError::Syntax { .. }
                | CoreError::UnknownBase(_) => 1,
                CoreError::PatternMismatch(_) => 2,
                _ => 3,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
