//! Command-line front end: the graph file format, result documents and the
//! `hadwiger` subcommands.

pub mod checks;
pub mod commands;
pub mod document;
pub mod format;
pub mod generate;
pub mod payload;

pub use commands::{run, usage_document, Cli, Command, Exit};
pub use document::{digest, Names, OutcomeKind, ResultDocument, Verification};
pub use format::{parse_graph, write_graph, FormatError};
