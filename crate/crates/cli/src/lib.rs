//! Command implementations and report serialization for the `degentropy`
//! binary.
//!
//! Every command produces an [`Output`] carrying the same results in three
//! renderings (text, JSON and CSV); the binary prints the one requested.

pub mod commands;
pub mod edgelist;
pub mod output;

pub use commands::CliError;
pub use output::{Envelope, Format, Outcome, Output};
