//! Crate-wide error type.
//!
//! Errors fall into three families: structural (layout/shape disagreements
//! between values that are combined), usage (a call that is meaningless as
//! made, e.g. an empty reduction), and configuration (an invalid run
//! description, reported with the offending field path).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two values with incompatible tensor layouts were combined.
    #[error("layout mismatch: {0}")]
    LayoutMismatch(String),

    /// Matrix or tensor dimensions do not agree for the requested operation.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A tensor was used as a matrix but is not 2-d.
    #[error("tensor `{name}` is not a matrix (shape {shape:?})")]
    NotMatrix { name: String, shape: Vec<usize> },

    /// A call that is invalid regardless of configuration.
    #[error("usage error: {0}")]
    Usage(String),

    /// An invalid configuration value, with the field path that caused it.
    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }

    /// True for errors that indicate a bad run description rather than a
    /// runtime failure. The CLI maps these to a distinct exit code.
    pub fn is_config(&self) -> bool {
        matches!(self, Error::Config { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
