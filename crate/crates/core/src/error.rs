use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge {edge:?} for n={n}, k={k}")]
    InvalidEdge { edge: Vec<usize>, n: usize, k: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("incompatible colorings: (k={k1}, l={l1}) vs (k={k2}, l={l2})")]
    IncompatibleColorings {
        k1: usize,
        l1: usize,
        k2: usize,
        l2: usize,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("size mismatch: {family} with r={r} needs n={expected}, got n={actual}")]
    SizeMismatch {
        family: String,
        r: usize,
        expected: usize,
        actual: usize,
    },
    #[error("pattern violation: {0}")]
    PatternViolation(String),
    #[error("mixed sizes in census")]
    MixedSizes,
    #[error("I/O error: {0}")]
    Io(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}
