use thiserror::Error;

/// Errors raised by graph construction and the carving algorithms.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no sources")]
    NoSources,

    #[error("node {0} is not alive")]
    DeadNode(usize),

    #[error("node {0} out of range")]
    NodeOutOfRange(usize),

    #[error("alive subgraph is disconnected")]
    Disconnected,

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if eps.is_finite() && eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("epsilon must lie in (0, 1), got {eps}")))
    }
}
