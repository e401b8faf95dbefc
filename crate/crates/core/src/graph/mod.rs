//! Graph containers and the uniform access interface.
//!
//! All containers expose the same operation set (add/delete/test/count/
//! iterate), so every algorithm in this crate is written once against the
//! [`GraphView`] / [`GraphMut`] traits. Adjacency is stored as sorted vectors
//! hanging off a hash table of node records: edge existence tests are a
//! binary search, O(log deg_max), and node operations are expected O(1).
//!
//! Containers are single-writer: mutation requires exclusive access (`&mut`),
//! any number of readers may run concurrently between mutations, and
//! iterators are invalidated by mutation. The borrow checker enforces all of
//! this at compile time.

mod directed;
mod multi;
mod undirected;

pub use directed::DirectedGraph;
pub use multi::DirectedMultigraph;
pub use undirected::UndirectedGraph;

use crate::error::{GraphError, Result};
use crate::ids::{EdgeId, NodeId};
use std::collections::HashMap;
use std::fmt::Write as _;

/// Source and destination of a multigraph edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Endpoints {
    pub src: NodeId,
    pub dst: NodeId,
}

/// Outcome of `add_edge` on the uniform interface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AddEdgeOutcome {
    /// New edge inserted into a simple container.
    Added,
    /// Simple container already held the edge; no-op.
    Existed,
    /// New parallel-capable edge inserted into a multigraph.
    AddedMulti(EdgeId),
}

impl AddEdgeOutcome {
    pub fn is_new(&self) -> bool {
        !matches!(self, AddEdgeOutcome::Existed)
    }
}

/// One edge yielded by [`GraphView::edges`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeRef {
    pub src: NodeId,
    pub dst: NodeId,
    /// Set for multigraph containers only.
    pub id: Option<EdgeId>,
}

enum NeighborInner<'a> {
    Empty,
    Nodes(std::slice::Iter<'a, NodeId>),
    Edges {
        ids: std::slice::Iter<'a, EdgeId>,
        table: &'a HashMap<EdgeId, Endpoints>,
        dst_side: bool,
    },
}

/// Iterator over the neighbor node ids of one node.
///
/// Simple containers yield in ascending node id; multigraphs yield in
/// ascending edge id (one entry per parallel edge).
pub struct NeighborIter<'a>(NeighborInner<'a>);

impl<'a> NeighborIter<'a> {
    pub(crate) fn empty() -> Self {
        NeighborIter(NeighborInner::Empty)
    }

    pub(crate) fn nodes(slice: &'a [NodeId]) -> Self {
        NeighborIter(NeighborInner::Nodes(slice.iter()))
    }

    pub(crate) fn edges(
        slice: &'a [EdgeId],
        table: &'a HashMap<EdgeId, Endpoints>,
        dst_side: bool,
    ) -> Self {
        NeighborIter(NeighborInner::Edges {
            ids: slice.iter(),
            table,
            dst_side,
        })
    }
}

impl Iterator for NeighborIter<'_> {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        match &mut self.0 {
            NeighborInner::Empty => None,
            NeighborInner::Nodes(it) => it.next().copied(),
            NeighborInner::Edges { ids, table, dst_side } => ids.next().map(|eid| {
                let ep = &table[eid];
                if *dst_side {
                    ep.dst
                } else {
                    ep.src
                }
            }),
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        match &self.0 {
            NeighborInner::Empty => (0, Some(0)),
            NeighborInner::Nodes(it) => it.size_hint(),
            NeighborInner::Edges { ids, .. } => ids.size_hint(),
        }
    }
}

impl ExactSizeIterator for NeighborIter<'_> {}

/// Iterator over all edges of a container, each edge exactly once.
///
/// Undirected: `(u, v)` with `u <= v`, lexicographic. Directed:
/// lexicographic `(src, dst)`. Multigraph: ascending edge id.
pub struct EdgeIter<'a>(Box<dyn Iterator<Item = EdgeRef> + 'a>);

impl<'a> EdgeIter<'a> {
    pub(crate) fn new(inner: impl Iterator<Item = EdgeRef> + 'a) -> Self {
        EdgeIter(Box::new(inner))
    }
}

impl Iterator for EdgeIter<'_> {
    type Item = EdgeRef;

    fn next(&mut self) -> Option<EdgeRef> {
        self.0.next()
    }
}

/// Read-only side of the uniform interface.
pub trait GraphView {
    fn is_directed(&self) -> bool;
    fn is_multigraph(&self) -> bool {
        false
    }
    fn node_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    fn is_node(&self, id: NodeId) -> bool;
    /// Direction is respected on directed containers. Absent endpoints
    /// answer `false`.
    fn is_edge(&self, src: NodeId, dst: NodeId) -> bool;
    /// All node ids in ascending order.
    fn node_ids(&self) -> Vec<NodeId>;
    fn out_degree(&self, id: NodeId) -> Option<usize>;
    fn in_degree(&self, id: NodeId) -> Option<usize>;
    /// Undirected: neighbor vector length (a self-loop counts once).
    /// Directed: out-degree + in-degree.
    fn degree(&self, id: NodeId) -> Option<usize>;
    fn out_neighbors(&self, id: NodeId) -> NeighborIter<'_>;
    fn in_neighbors(&self, id: NodeId) -> NeighborIter<'_>;
    /// k-th out-neighbor in the container's storage order, O(1).
    fn out_neighbor_at(&self, id: NodeId, k: usize) -> Option<NodeId>;
    fn in_neighbor_at(&self, id: NodeId, k: usize) -> Option<NodeId>;
    fn edges(&self) -> EdgeIter<'_>;

    fn is_empty(&self) -> bool {
        self.node_count() == 0
    }

    /// Deterministic node cursor in ascending id order.
    fn nodes(&self) -> NodeCursor<'_, Self>
    where
        Self: Sized,
    {
        NodeCursor::new(self)
    }

    /// Cursor positioned at `id`.
    fn get_node(&self, id: NodeId) -> Result<NodeCursor<'_, Self>>
    where
        Self: Sized,
    {
        if !self.is_node(id) {
            return Err(GraphError::MissingNode(id));
        }
        Ok(NodeCursor::at(self, id))
    }

    /// Text dump: every node with its neighbor lists, ascending id order.
    fn dump(&self) -> String {
        let mut out = String::new();
        let kind = match (self.is_directed(), self.is_multigraph()) {
            (false, _) => "undirected",
            (true, false) => "directed",
            (true, true) => "multigraph",
        };
        let _ = writeln!(
            out,
            "{kind} graph: {} nodes, {} edges",
            self.node_count(),
            self.edge_count()
        );
        for id in self.node_ids() {
            if self.is_directed() {
                let outs: Vec<String> =
                    self.out_neighbors(id).map(|v| v.to_string()).collect();
                let ins: Vec<String> =
                    self.in_neighbors(id).map(|v| v.to_string()).collect();
                let _ = writeln!(
                    out,
                    "  {id} out[{}] in[{}]",
                    outs.join(" "),
                    ins.join(" ")
                );
            } else {
                let ns: Vec<String> =
                    self.out_neighbors(id).map(|v| v.to_string()).collect();
                let _ = writeln!(out, "  {id} [{}]", ns.join(" "));
            }
        }
        out
    }
}

/// Mutating side of the uniform interface.
pub trait GraphMut: GraphView {
    /// Adds a node with an explicit id. Duplicate ids are rejected.
    fn add_node(&mut self, id: NodeId) -> Result<NodeId>;
    /// Adds a node with id max-existing-id + 1 (0 for an empty container).
    fn add_node_auto(&mut self) -> NodeId;
    /// Removes the node and all incident edges.
    fn del_node(&mut self, id: NodeId) -> Result<()>;
    /// Both endpoints must already exist; there is no implicit node creation.
    fn add_edge(&mut self, src: NodeId, dst: NodeId) -> Result<AddEdgeOutcome>;
    /// Simple containers remove the edge; multigraphs remove the
    /// lowest-id edge matching `(src, dst)`.
    fn del_edge(&mut self, src: NodeId, dst: NodeId) -> Result<()>;
    fn clear(&mut self);
}

/// Deterministic traversal cursor over the nodes of a container.
///
/// Exposes the current node's id, degrees and indexed neighbor access;
/// advancing past the end is detectable via `current() == None`.
pub struct NodeCursor<'g, G: GraphView> {
    graph: &'g G,
    ids: Vec<NodeId>,
    pos: usize,
}

impl<'g, G: GraphView> NodeCursor<'g, G> {
    fn new(graph: &'g G) -> Self {
        NodeCursor {
            graph,
            ids: graph.node_ids(),
            pos: 0,
        }
    }

    fn at(graph: &'g G, id: NodeId) -> Self {
        let ids = graph.node_ids();
        let pos = ids.binary_search(&id).unwrap_or(ids.len());
        NodeCursor { graph, ids, pos }
    }

    pub fn current(&self) -> Option<NodeId> {
        self.ids.get(self.pos).copied()
    }

    pub fn is_end(&self) -> bool {
        self.pos >= self.ids.len()
    }

    /// Moves to the next node; returns false once past the end.
    pub fn advance(&mut self) -> bool {
        if self.pos < self.ids.len() {
            self.pos += 1;
        }
        self.pos < self.ids.len()
    }

    pub fn out_degree(&self) -> usize {
        self.current()
            .and_then(|id| self.graph.out_degree(id))
            .unwrap_or(0)
    }

    pub fn in_degree(&self) -> usize {
        self.current()
            .and_then(|id| self.graph.in_degree(id))
            .unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.current()
            .and_then(|id| self.graph.degree(id))
            .unwrap_or(0)
    }

    pub fn out_neighbor(&self, k: usize) -> Option<NodeId> {
        self.current()
            .and_then(|id| self.graph.out_neighbor_at(id, k))
    }

    pub fn in_neighbor(&self, k: usize) -> Option<NodeId> {
        self.current()
            .and_then(|id| self.graph.in_neighbor_at(id, k))
    }
}

impl<G: GraphView> Iterator for NodeCursor<'_, G> {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        let cur = self.current();
        if cur.is_some() {
            self.pos += 1;
        }
        cur
    }
}

/// Inserts into a sorted vector via binary search, rejecting duplicates.
/// Returns true if inserted.
pub(crate) fn sorted_insert<T: Ord>(vec: &mut Vec<T>, value: T) -> bool {
    match vec.binary_search(&value) {
        Ok(_) => false,
        Err(pos) => {
            vec.insert(pos, value);
            true
        }
    }
}

/// Removes from a sorted vector via binary search. Returns true if removed.
pub(crate) fn sorted_remove<T: Ord>(vec: &mut Vec<T>, value: T) -> bool {
    match vec.binary_search(&value) {
        Ok(pos) => {
            vec.remove(pos);
            true
        }
        Err(_) => false,
    }
}

pub(crate) fn next_auto_id(max_existing: Option<NodeId>) -> NodeId {
    match max_existing {
        None => NodeId::new(0),
        Some(max) => NodeId::new(max.value() + 1),
    }
}
