use crate::graph::VertexId;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An operation would exceed the hard resource limits of the toolkit.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    /// A structural precondition on an input graph or vertex set failed.
    #[error("structure error: {0}")]
    Structure(String),

    /// A tripartite witness violates one of its three structural conditions.
    #[error("witness error: condition ({condition}) fails at vertex {vertex}")]
    Witness { condition: u8, vertex: VertexId },

    /// A supplied coloring is not proper on the square graph.
    #[error("coloring error: vertices {0} and {1} are within distance 2 but share a color")]
    Coloring(VertexId, VertexId),

    /// The exact search ran out of nodes before reaching a verdict.
    /// Distinct from infeasible: the question is left unanswered.
    #[error("search budget exhausted before a verdict was reached")]
    BudgetExhausted,

    /// An internal construction produced something the verifier rejects.
    /// Must never occur; indicates a bug, not bad input.
    #[error("construction bug: {0}")]
    ConstructionBug(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
