use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// `position` is the 0-based byte offset into the descriptor.
    #[error("cannot parse graph descriptor {input:?} at position {position}: {message}")]
    Descriptor {
        input: String,
        position: usize,
        message: String,
    },

    #[error("invalid vertex set: {0}")]
    InvalidSet(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    /// A member of a collection is not an independent set; `index` is the
    /// 1-based color index of the offending set.
    #[error("set {index} of the collection is not independent in {graph}")]
    NotIndependent { index: usize, graph: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{graph} has no independent {n}-set")]
    EmptyIndependentFamily { graph: String, n: usize },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    /// A guaranteed step failed. Reaching this is a bug.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
