//! Command-line front end for `hecke-core`.
//!
//! Every command produces an [`OutputRecord`] which is rendered as text,
//! CSV, LaTeX or JSON. Payloads go to standard output; diagnostics go to
//! standard error.

pub mod args;
pub mod commands;
pub mod error;
pub mod record;
pub mod render;

pub use args::{Cli, Command, Format};
pub use commands::{run, Outcome};
pub use error::CliError;
pub use record::{OutputRecord, Payload, Query};
