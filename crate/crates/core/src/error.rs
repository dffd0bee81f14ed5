use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A brute-force enumeration was asked to go past its configured bound.
    #[error("resource limit `{name}` exceeded: requested {requested}, bound is {bound}")]
    ResourceLimit {
        name: &'static str,
        requested: usize,
        bound: usize,
    },

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
