use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has {n} vertices, limit is {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("{format} parse error at {position}: {message}")]
    Parse {
        format: &'static str,
        position: usize,
        message: String,
    },
    #[error("{what} would have {size} elements, cap is {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },
    #[error("hypothesis of `{bound}` not met: {reason}")]
    Hypothesis { bound: String, reason: String },
    #[error("unknown bound id `{0}`")]
    UnknownBound(String),
    #[error("unknown conjecture id `{0}`")]
    UnknownConjecture(String),
    #[error("vertex set is not independent: edge {0}-{1} inside")]
    NotIndependent(usize, usize),
    #[error("operation needs a graph with at least one vertex")]
    EmptyGraph,
    #[error("infeasible family: {0}")]
    InfeasibleFamily(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(format: &'static str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            format,
            position,
            message: message.into(),
        }
    }

    pub(crate) fn hypothesis(bound: &str, reason: impl Into<String>) -> Self {
        Error::Hypothesis {
            bound: bound.to_string(),
            reason: reason.into(),
        }
    }
}
