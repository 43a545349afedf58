use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes. Stable; documented in the README.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FALSE: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const ZERO_INCLUSION: i32 = 3;
    pub const DENOMINATOR_UNSTABLE: i32 = 4;
    pub const VIOLATION: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: PathBuf, line: usize, column: usize, message: String },
    #[error("{path}: field `{field}`: {message}")]
    Invalid { path: PathBuf, field: String, message: String },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error(transparent)]
    Analysis(#[from] kharibound::Error),
    #[error("writing CSV: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use kharibound::Error as E;
        match self {
            CliError::Analysis(E::ZeroInclusion { .. }) => exit::ZERO_INCLUSION,
            CliError::Analysis(E::DenominatorNotHurwitz { .. } | E::PoleOnAxis { .. }) => exit::DENOMINATOR_UNSTABLE,
            _ => exit::INPUT,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
