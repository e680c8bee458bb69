use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..=64")]
    InvalidOrder(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} is not present")]
    EdgeAbsent(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("spanning tree count {count} exceeds limit {limit}")]
    TreeLimitExceeded { count: String, limit: u64 },
    #[error("canonical form supports at most {cap} vertices, got {n}")]
    CanonicalCap { n: usize, cap: usize },
    #[error("{what}: order {order} exceeds 64 vertices")]
    TooLarge { what: &'static str, order: usize },
    #[error("invalid family `{0}`")]
    InvalidFamily(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus spec out of range: {0}")]
    Cap(String),
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
