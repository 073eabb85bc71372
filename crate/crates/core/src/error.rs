use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph of order {0} is too small (order at least 2 required)")]
    TooSmall(usize),

    #[error("{what}: size {size} exceeds limit {limit}")]
    LimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("vertex {0} appears in more than one pair")]
    OverlappingPairs(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("solver found a second-player advantage on a monotone game (Breaker wins the M-game but Maker wins the B-game)")]
    SecondPlayerAdvantage,
}

impl Error {
    pub(crate) fn limit(what: &'static str, size: usize, limit: usize) -> Self {
        Error::LimitExceeded { what, size, limit }
    }
}
