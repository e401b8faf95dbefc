use crate::attr::AttrType;
use crate::ids::{EdgeId, NodeId};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("node {0} already exists")]
    DuplicateNode(NodeId),
    #[error("node {0} does not exist")]
    MissingNode(NodeId),
    #[error("edge ({0}, {1}) does not exist")]
    MissingEdge(NodeId, NodeId),
    #[error("edge id {0} does not exist")]
    MissingEdgeId(EdgeId),
    #[error("edge id {0} already exists")]
    DuplicateEdgeId(EdgeId),
    #[error("edge endpoint {0} does not exist")]
    MissingEndpoint(NodeId),
    #[error("attribute {0:?} is already declared")]
    DuplicateAttr(String),
    #[error("attribute {0:?} is not declared")]
    UndeclaredAttr(String),
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),
    #[error("attribute {name:?} expects {expected:?}, got {actual:?}")]
    AttrTypeMismatch {
        name: String,
        expected: AttrType,
        actual: AttrType,
    },
}

pub type Result<T> = std::result::Result<T, GraphError>;
