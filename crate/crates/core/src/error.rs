use thiserror::Error;

/// Everything that can go wrong across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("symbol `{0}` is not part of the instance alphabet")]
    UnknownSymbol(String),

    #[error("an instance needs at least one string")]
    EmptyInstance,

    #[error("budget exceeded: {what} needs {needed}, cap is {cap}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("capacity exceeded: more than {cap} unshiftable tuples (tuple cap)")]
    CapacityExceeded { cap: usize },

    #[error("invalid formula: {0}")]
    InvalidFormula(String),

    #[error("not a witness: {0}")]
    NotAWitness(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("vertex {0} belongs to every hyperedge")]
    UniversalVertex(usize),

    #[error("the reduction needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("known string #{index} (`{text}`) is not a maximal common subsequence")]
    NotAnMcsInZ { index: usize, text: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
