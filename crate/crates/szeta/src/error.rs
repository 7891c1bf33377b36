use thiserror::Error;

/// Every failure the library can report.
///
/// Numerical failures carry whatever was computed before giving up, so a
/// caller can still inspect a best estimate.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource limit exceeded: {what} ({requested} > {limit})")]
    Resource {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("accuracy target missed: {msg} (best estimate {best:e}, error estimate {err:e})")]
    Accuracy { msg: String, best: f64, err: f64 },

    #[error("too close to the pole at s = 1: |s - 1| = {0:e}")]
    Pole(f64),

    #[error("ill-conditioned: {0}")]
    Conditioning(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("zero table is empty")]
    EmptyTable,

    #[error("line {line}: ordinates not strictly ascending ({prev} then {next})")]
    Ordering { line: usize, prev: f64, next: f64 },

    #[error("region violated: {0}")]
    Region(String),

    #[error("i/o error on {path}: {msg}")]
    Io { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
