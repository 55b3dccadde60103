//! Command implementations behind the `grayiso` binary.
//!
//! Each command returns an [`Outcome`]: a JSON [`Report`], its text rendering and
//! the process exit status. Exit codes are 0 on success, 1 when analysis or
//! verification fails, and 2 for usage and parse errors.

pub mod commands;
mod error;
pub mod matrix_file;
pub mod report;
pub mod tables;

pub use error::{CliError, EXIT_FAILURE, EXIT_USAGE};
pub use report::{Outcome, Report};
