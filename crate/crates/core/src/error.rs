use thiserror::Error;

use crate::tree::VertexAddr;

/// Errors raised by tree, polynomial and presimplicial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("delay 0 at byte {offset}; delays must be positive")]
    ZeroDelay { offset: usize },

    #[error("invalid delays: {0}")]
    InvalidDelays(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not exactly divisible")]
    NotDivisible,

    #[error("the zero polynomial has no cyclotomic factorization")]
    ZeroInput,

    #[error("vertex {0} is not a leaf")]
    NotALeaf(VertexAddr),

    #[error("address {0} does not name a vertex")]
    InvalidAddress(VertexAddr),

    #[error("the root has no parent edge")]
    RootHasNoEdge,

    #[error("wedge of an empty sequence of trees")]
    EmptyInput,

    #[error("size {requested} exceeds the configured bound {limit}")]
    BoundExceeded { requested: usize, limit: usize },

    #[error("inadmissible block delays: {0}")]
    InadmissibleDelays(String),

    #[error("index {index} out of range for a tree with {leaves} leaves")]
    IndexOutOfRange { index: usize, leaves: usize },

    #[error("the one-point tree has no faces")]
    NoFacesOnPoint,
}

pub type Result<T> = std::result::Result<T, Error>;
