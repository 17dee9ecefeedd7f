use std::fmt::Display;
use std::process::ExitCode;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("io error: {0}")]
    Io(String),
}

impl CliError {
    pub(crate) fn from_json(e: serde_json::Error) -> Self {
        use serde_json::error::Category;
        match e.classify() {
            Category::Syntax | Category::Eof => CliError::Parse {
                line: e.line(),
                column: e.column(),
                message: strip_location(&e),
            },
            Category::Data => CliError::Schema(e.to_string()),
            Category::Io => CliError::Io(e.to_string()),
        }
    }

    pub(crate) fn domain(e: impl Display) -> Self {
        CliError::Domain(e.to_string())
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Io(_) => 1,
            CliError::Parse { .. } => 3,
            CliError::Schema(_) => 4,
            CliError::Domain(_) => 5,
        })
    }
}

fn strip_location(e: &serde_json::Error) -> String {
    let text = e.to_string();
    match text.rfind(" at line ") {
        Some(i) => text[..i].to_string(),
        None => text,
    }
}
