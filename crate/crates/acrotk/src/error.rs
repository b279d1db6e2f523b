use std::io;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    /// A line of an input file could not be parsed.
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    /// Inputs are individually well-formed but mutually inconsistent
    /// (unknown article ids, cluster/gold coverage mismatches, ...).
    #[error("{0}")]
    Data(String),
}

impl Error {
    pub fn format(line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: message.into(),
        }
    }

    pub fn data(message: impl Into<String>) -> Self {
        Error::Data(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
