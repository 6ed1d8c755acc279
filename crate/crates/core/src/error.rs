use thiserror::Error;

use crate::report::Report;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {context}: expected {expected}, found {found}")]
    ShapeMismatch {
        context: String,
        expected: String,
        found: String,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("missing structure: {0}")]
    MissingStructure(String),

    /// A structure that an operation depends on failed its own axiom check.
    #[error("precondition failed: {what}")]
    Precondition { what: String, report: Box<Report> },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn shape(context: impl Into<String>, expected: impl ToString, found: impl ToString) -> Error {
        Error::ShapeMismatch {
            context: context.into(),
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn precondition(what: impl Into<String>, report: Report) -> Error {
        Error::Precondition {
            what: what.into(),
            report: Box::new(report),
        }
    }

    /// The inner report for precondition failures.
    pub fn report(&self) -> Option<&Report> {
        match self {
            Error::Precondition { report, .. } => Some(report),
            _ => None,
        }
    }
}
