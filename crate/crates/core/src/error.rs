use thiserror::Error;

/// Errors raised by graph construction, metric queries and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("the complement of a complementary prism is not defined here")]
    PrismComplement,
    #[error("operation requires a plain graph, got a complementary prism")]
    NotPlain,
    #[error("graph is disconnected: vertices {0} and {1} lie in different components")]
    Disconnected(usize, usize),
    #[error("graph is connected; operation needs at least two components")]
    Connected,
    #[error("graph has {n} vertices, the limit here is {max}")]
    TooLarge { n: usize, max: usize },
    #[error("graph has {n} vertices, at least {min} are required")]
    TooSmall { n: usize, min: usize },
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("invalid Prüfer code: {0}")]
    InvalidPrufer(String),
    #[error("invalid tree family parameters: {0}")]
    InvalidFamily(String),
    #[error("vertex {0} is pendant")]
    PendantVertex(usize),
    #[error("tree diameter {0} exceeds 4")]
    DiameterTooLarge(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
