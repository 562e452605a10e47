use thiserror::Error;

/// Errors raised by graph construction, parsing and the higher-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("arc ({0},{1}) would create a directed 2-cycle")]
    TwoCycle(usize, usize),
    #[error("duplicate arc ({0},{1})")]
    DuplicateArc(usize, usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid steps: {0}")]
    InvalidSteps(String),
    #[error("not an orientation of the complete multipartite graph: {0}")]
    NotMultipartiteOrientation(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("graph has {edges} edges, above the enumeration cap of {cap} (raise it with --cap)")]
    EdgeCapExceeded { edges: usize, cap: usize },
    #[error("internal error: constructed orientation failed self-verification ({0})")]
    SelfVerification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
