//! Command-line front end: text formats for words, cells and complexes, the
//! run configuration, and the subcommands.

pub mod commands;
pub mod config;
pub mod syntax;
