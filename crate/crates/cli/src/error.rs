use resolvent_core::Error as CoreError;
use serde::Serialize;
use thiserror::Error;

use crate::parse::ParseError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_CERTIFICATION: i32 = 4;
pub const EXIT_NON_CONVERGENCE: i32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("malformed input: {0}")]
    Input(String),
    #[error("malformed document: {0}")]
    Document(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    NonConvergence(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Input(_) | CliError::Document(_) | CliError::Io { .. } => EXIT_PARSE,
            CliError::Precondition(_) => EXIT_PRECONDITION,
            CliError::NonConvergence(_) => EXIT_NON_CONVERGENCE,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(ParseError::MixedVariables { .. }) => "mixed-variables",
            CliError::Parse(_) => "parse",
            CliError::Input(_) => "input",
            CliError::Document(_) => "document",
            CliError::Precondition(_) => "precondition",
            CliError::NonConvergence(_) => "non-convergence",
            CliError::Io { .. } => "io",
        }
    }

    pub fn report(&self) -> ErrorDocument {
        let position = match self {
            CliError::Parse(ParseError::Syntax { position, .. })
            | CliError::Parse(ParseError::MixedVariables { position, .. }) => Some(*position),
            _ => None,
        };
        ErrorDocument {
            kind: "error".into(),
            error: self.kind().into(),
            message: self.to_string(),
            position,
            exit_code: self.exit_code(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NonConvergence { .. } => CliError::NonConvergence(e.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorDocument {
    pub kind: String,
    pub error: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    pub exit_code: i32,
}
