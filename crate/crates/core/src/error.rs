use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The shape or filling of a diagram is malformed.
    #[error("malformed diagram: {0}")]
    Structure(String),
    /// A required precondition of an operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An argument is out of range or has the wrong size.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A numeric value lies outside its admissible domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The input is of a kind this library does not handle.
    #[error("unsupported input: {0}")]
    Unsupported(String),
    /// A set system without any transversal.
    #[error("set system has no transversal")]
    NoTransversal,
    /// Reading or writing a file failed.
    #[error("i/o error: {0}")]
    Io(String),
    /// A time budget ran out before every requested cell was computed.
    #[error("budget exhausted after {completed} of {total} cells")]
    Budget { completed: usize, total: usize },
    /// Text input could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
