//! Command-line front end: input parsing, command dispatch and canonical JSON reports.

pub mod app;
pub mod error;
pub mod input;
pub mod report;

pub use error::CliError;
