use std::path::PathBuf;
use std::sync::Arc;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Clone, Debug, Error)]
pub enum Error {
    #[error("index {index} exceeds the configured maximum |n| <= {max}")]
    IndexOutOfBounds { index: i64, max: u64 },

    #[error("negative index {0} is not supported by this operation")]
    NegativeIndex(i64),

    #[error("grid cell ({m}, {n}) exceeds the grid bound {bound}")]
    GridBound { m: u64, n: u64, bound: u64 },

    #[error("size {size} outside the accepted range {min}..={max}")]
    SizeBound { size: i64, min: i64, max: i64 },

    #[error("domain violation: {0}")]
    Domain(String),

    /// An exact division that the identities guarantee did not come out even.
    #[error("internal divisibility failure: {what} is not divisible by {divisor}")]
    NotDivisible { what: &'static str, divisor: u32 },

    #[error("computation cancelled")]
    Cancelled,

    #[error("b-file line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("b-file line {line}: expected index {expected}, found {found}")]
    NonConsecutive {
        line: usize,
        expected: i64,
        found: i64,
    },

    #[error("b-file contains no terms")]
    EmptyPayload,

    #[error("invalid A-number {0:?} (expected 'A' followed by 6 digits)")]
    InvalidANumber(String),

    #[error("no bundled fixture for {0}")]
    FixtureMissing(String),

    #[error("HTTP request for {url} failed: {message}")]
    Network { url: String, message: String },

    #[error("HTTP status {status} for {url}")]
    HttpStatus { url: String, status: u16 },

    #[error("response for {url} exceeds the size cap of {cap} bytes")]
    TooLarge { url: String, cap: u64 },

    #[error("only {found} overlapping terms between computed sums and {anumber}, need {needed}")]
    InsufficientOverlap {
        anumber: String,
        found: usize,
        needed: usize,
    },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: Arc<std::io::Error>,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source: Arc::new(source),
        }
    }

    /// True for failures caused by missing or unreachable sequence data.
    pub fn is_external_data(&self) -> bool {
        matches!(
            self,
            Error::Malformed { .. }
                | Error::NonConsecutive { .. }
                | Error::EmptyPayload
                | Error::FixtureMissing(_)
                | Error::Network { .. }
                | Error::HttpStatus { .. }
                | Error::TooLarge { .. }
                | Error::InsufficientOverlap { .. }
                | Error::Io { .. }
        )
    }
}
