//! Command line front-end for `envact-core`.
//!
//! Reads partial actions from JSON documents (see [`document`]), runs the
//! validation, globalization, diagnostics and embedding pipelines, and
//! renders reports as text or JSON plus Graphviz class graphs.

pub mod commands;
pub mod document;
pub mod dot;
pub mod error;
pub mod report;

pub use commands::{run, Command, Options, Output};
pub use document::Document;
pub use error::CliError;
pub use report::Report;
