use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlagError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid graph: {0}")]
    Invariant(String),

    /// The request exceeds a hard bound of an exhaustive algorithm.
    #[error("size limit exceeded: {what} is {got}, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("inconsistent system: {0}")]
    Inconsistent(String),

    #[error("non-exact division: {0}")]
    NonExactDivision(String),
}

pub type Result<T> = std::result::Result<T, FlagError>;

pub(crate) fn check_limit(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(FlagError::SizeLimit { what, limit, got })
    } else {
        Ok(())
    }
}
