//! Command-line front end for `hijac-core`: argument handling, the `.rg`
//! graph format and JSON output.

mod args;
mod commands;
pub mod rg;

pub use commands::{run, Outcome, EXIT_ABORT, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
