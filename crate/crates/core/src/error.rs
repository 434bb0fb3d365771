use thiserror::Error;

use crate::graph::Edge;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("edge {0} already present")]
    ParallelEdge(Edge),

    #[error("edge {0} is not an edge of the graph")]
    NotAnEdge(Edge),

    #[error("not a cycle: {0}")]
    NotACycle(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A power would contain a loop. The closed walk is the witness.
    #[error("girth precondition violated: closed walk {walk:?} has length {} <= {bound}", walk.len().saturating_sub(1))]
    GirthPrecondition { walk: Vec<usize>, bound: usize },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("signed graph is inconsistent")]
    Inconsistent,

    #[error("infeasible subdivision lengths: {0}")]
    InfeasibleLengths(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("thread {0} is not eligible")]
    IneligibleThread(usize),

    #[error("face bookkeeping: {0}")]
    Faces(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
