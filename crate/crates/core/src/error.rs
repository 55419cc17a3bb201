use thiserror::Error;

/// Errors raised while constructing or editing graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("arc ({0}, {1}) is not present")]
    MissingArc(usize, usize),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),
}

/// Errors raised while parsing or writing graph files.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed digraph6: {0}")]
    Digraph6(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed arc list: {0}")]
    ArcList(String),
    #[error("order {0} is too large for this format")]
    OrderTooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
