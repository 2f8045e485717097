use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("loop edge on vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("duplicate edge label {0}")]
    DuplicateLabel(usize),
    #[error("edge {{{0},{1}}} lies inside one vertex class")]
    EdgeInsideClass(Vertex, Vertex),
    #[error("vertex classes must partition the vertex set: {0}")]
    BadClasses(String),
    #[error("source and target coincide (vertex {0})")]
    SameTerminals(Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{what} of size {size} exceeds the oracle limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("formula is unsatisfiable, but the reduction requires a satisfiable formula")]
    Unsatisfiable,
    #[error("invalid formula: {0}")]
    BadFormula(String),
    #[error("invalid set family: {0}")]
    BadFamily(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("gadget context mismatch: {0}")]
    ContextMismatch(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid input: {0}")]
    Input(String),
}
