//! Document format, command-line interface, report rendering, shipped
//! fixtures and the exhaustive search engine for `avgbi-core`.

pub mod checks;
pub mod cli;
pub mod construct;
pub mod diff;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod render;
pub mod search;

pub use cli::{load, run_with};
pub use document::Document;
pub use error::{CliError, CliResult, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};
