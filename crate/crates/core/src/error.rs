use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not cop-win")]
    NotCopWin,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),
    #[error("expected {expected} cops, got {got}")]
    WrongCopCount { expected: usize, got: usize },
    #[error("illegal cop step: cops at {from:?} cannot move to {to:?}")]
    IllegalCopStep { from: Vec<usize>, to: Vec<usize> },
    #[error("move breaks monotonicity: unseen territory gains vertices {gained:?}")]
    MonotonicityViolation { gained: Vec<usize> },
    #[error("transition called on wrong phase: {0}")]
    WrongPhase(&'static str),
    #[error("illegal robber move from {from} to {to}")]
    IllegalRobberMove { from: usize, to: usize },
    #[error("invalid script: {0}")]
    InvalidScript(String),
    #[error("strategy precondition violated: {0}")]
    Precondition(String),
    #[error("graph too large for the solver ({n} vertices, limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("state budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
