//! File loading, command dispatch and reporting for the `switchlogic` binary.

pub mod commands;
pub mod description;
pub mod error;
pub mod report;

pub use commands::{run, Command};
pub use description::{load, parse, save, SystemDescription};
pub use error::{CliError, Result};
pub use report::{Findings, Outcome, Report};
