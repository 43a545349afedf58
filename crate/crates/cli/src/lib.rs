//! Library side of the `kharibound` binary: spec-file handling and the
//! subcommands, kept separate from argument parsing so they can be tested.

pub mod commands;
pub mod error;
pub mod spec;

pub use commands::{Context, Outcome};
pub use error::{exit, CliError, Result};
pub use spec::{FamilySpecFile, ToleranceOverrides};
