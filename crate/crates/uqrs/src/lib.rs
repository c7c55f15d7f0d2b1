//! Command-line front end and JSON artifacts for `uqrs-core`.

pub mod cli;
pub mod json;

pub use cli::{run, Cli, CliError, Outcome};
