use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {vertex} is not in the allowed set")]
    VertexNotAllowed { vertex: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} refused on {n} vertices (limit {limit}{hint})")]
    CapExceeded { what: &'static str, n: usize, limit: usize, hint: &'static str },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("no qualifying graph: {0}")]
    NoQualifyingGraph(String),
}

pub type Result<T> = std::result::Result<T, Error>;
