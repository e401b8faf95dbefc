//! In-memory graph analysis library: containers with a uniform access
//! interface, random graph generators, structure operators, classical
//! analytics and centrality algorithms, and bit-exact binary persistence.
//!
//! Containers store a hash table of node records with sorted adjacency
//! vectors. Node operations are expected O(1), edge insertion/deletion is
//! O(deg_max) and edge existence tests are O(log deg_max).

pub mod analytics;
pub mod any;
pub mod attr;
pub mod centrality;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod manipulate;
pub mod scalar;
pub mod traverse;

mod ids;

pub use any::{AnyGraph, ContainerKind};
pub use attr::{AttrKind, AttrNetwork, AttrType, AttrValue};
pub use error::{GraphError, Result};
pub use graph::{
    AddEdgeOutcome, DirectedGraph, DirectedMultigraph, EdgeIter, EdgeRef, GraphMut, GraphView,
    NeighborIter, NodeCursor, UndirectedGraph,
};
pub use ids::{EdgeId, NodeId};
pub use scalar::Scalar;

/// Default scalar for score-valued algorithms.
pub type Score = f64;

/// Per-node score map produced by the centrality algorithms (f64 default).
pub type ScoreVector = std::collections::HashMap<NodeId, Score>;

/// Name of the seeded PRNG used by every randomized routine, fixed per
/// release so golden outputs stay stable.
pub const PRNG_NAME: &str = "chacha8";
