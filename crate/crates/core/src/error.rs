use thiserror::Error;

use crate::report::Report;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Dangling identifiers, duplicate ids, missing identities: the data does
    /// not describe a category-shaped object at all.
    #[error("structural error: {0}")]
    Structural(String),

    /// Two cells whose endpoints should agree do not.
    #[error("boundary mismatch: {0}")]
    Boundary(String),

    /// A composite required by a construction is missing from the table.
    #[error("undefined composite: {0}")]
    Undefined(String),

    #[error("isomorphism search aborted: {objects} objects exceeds the cap of {cap}")]
    SearchAborted { objects: usize, cap: usize },

    /// Input rejected before a construction ran.
    #[error("precondition failed:\n{0}")]
    Precondition(Report),

    /// A construction produced output that fails its own audit. Never expected
    /// for valid input.
    #[error("internal construction error:\n{0}")]
    Internal(Report),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unresolved reference to {kind} `{name}`")]
    Unresolved { kind: &'static str, name: String },

    #[error("duplicate {kind} name `{name}`")]
    Duplicate { kind: &'static str, name: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub(crate) fn boundary(msg: impl Into<String>) -> Self {
        Error::Boundary(msg.into())
    }
}
