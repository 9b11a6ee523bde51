use thiserror::Error;

use crate::dynkin::Node;
use crate::fgraph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node {node} is not a node of A_{rank}")]
    InvalidNode { node: Node, rank: u32 },

    #[error("rank must be at least 1")]
    InvalidRank,

    #[error("node set is empty or not a connected interval")]
    InvalidInterval,

    #[error("interval [{lo},{hi}] does not contain [{i},{j}]")]
    IntervalDoesNotContain { lo: Node, hi: Node, i: Node, j: Node },

    #[error("factor length must be positive")]
    NonPositiveLength,

    #[error("rank mismatch: A_{left} vs A_{right}")]
    RankMismatch { left: u32, right: u32 },

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("graph contains an oriented cycle")]
    CyclicGraph,

    #[error("{count} vertices exceeds the cut enumeration cap of {cap}")]
    TooManyVertices { count: usize, cap: usize },

    #[error("no vertex with id {0}")]
    InvalidVertex(VertexId),

    #[error("cut does not partition the vertex set")]
    InvalidCut,

    #[error("not a q-factorization graph: {0}")]
    NotQFactGraph(String),

    #[error("chain condition violated between entries {0} and {1}")]
    ChainConditionViolated(usize, usize),

    #[error("non-integral p value for pair ({0}, {1})")]
    NonIntegralP(usize, usize),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("rank A_{rank} too small, need at least A_{needed}")]
    RankTooSmall { rank: u32, needed: u32 },

    #[error("invalid skew shape: {0}")]
    ShapeInvalid(String),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}
