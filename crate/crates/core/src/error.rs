use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {index} out of range for graph of order {order}")]
    Index { index: usize, order: usize },
    /// A precondition on the input was violated (home mismatch, isolated vertex, bad parameter).
    #[error("{0}")]
    Domain(String),
    /// The request exceeds a size cap or solver budget.
    #[error("{0}")]
    Resource(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
