use thiserror::Error;

/// Errors raised by the library. Every variant maps to exit code 2 in the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input: unknown labels, universe mismatches,
    /// label collisions, non-subgraphs.
    #[error("input error: {0}")]
    Input(String),
    /// The operation is defined only for a restricted class of arguments.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An exhaustive search would exceed its configured cap.
    #[error("resource limit: {what} is {actual}, cap is {cap} (raise it with --cap-{flag})")]
    Resource {
        what: &'static str,
        flag: &'static str,
        cap: usize,
        actual: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
