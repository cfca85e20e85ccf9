use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("edge {0}-{1} joins coordinates at max-norm distance other than 1")]
    NotGridEdge(VertexId, VertexId),

    #[error("vertices {0} and {1} share coordinates")]
    DuplicateCoords(VertexId, VertexId),

    #[error("empty box")]
    EmptyBox,

    #[error("graph carries no coordinates")]
    MissingCoords,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("input map is not 1-Lipschitz: vertices {0} and {1}")]
    NotLipschitz(VertexId, VertexId),

    #[error("not a valid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("search budget exceeded at dimension {0}")]
    BudgetExceeded(usize),

    #[error("no embedding in dimension {0}")]
    NoEmbedding(usize),

    #[error("cover does not contain vertex {0}")]
    CoverIncomplete(VertexId),

    #[error("graph mismatch: maps cover {left} and {right} vertices")]
    GraphMismatch { left: usize, right: usize },

    #[error("disconnected graph needs component tags")]
    MissingTags,

    #[error("size cap exceeded: {found} vertices, at most {cap} allowed")]
    SizeCap { found: usize, cap: usize },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
