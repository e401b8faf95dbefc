//! Type-erased container for file loading and CLI dispatch.

use crate::attr::AttrNetwork;
use crate::graph::{
    DirectedGraph, DirectedMultigraph, EdgeIter, GraphView, NeighborIter, UndirectedGraph,
};
use crate::ids::NodeId;

/// On-disk container tag (byte 9 of the binary header).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContainerKind {
    Undirected = 1,
    Directed = 2,
    Multigraph = 3,
    AttrNetwork = 4,
}

impl ContainerKind {
    pub fn from_tag(tag: u8) -> Option<Self> {
        match tag {
            1 => Some(ContainerKind::Undirected),
            2 => Some(ContainerKind::Directed),
            3 => Some(ContainerKind::Multigraph),
            4 => Some(ContainerKind::AttrNetwork),
            _ => None,
        }
    }
}

/// One of the four concrete containers, with `GraphView` dispatched through.
#[derive(Clone, Debug)]
pub enum AnyGraph {
    Undirected(UndirectedGraph),
    Directed(DirectedGraph),
    Multi(DirectedMultigraph),
    Attr(AttrNetwork),
}

impl AnyGraph {
    pub fn kind(&self) -> ContainerKind {
        match self {
            AnyGraph::Undirected(_) => ContainerKind::Undirected,
            AnyGraph::Directed(_) => ContainerKind::Directed,
            AnyGraph::Multi(_) => ContainerKind::Multigraph,
            AnyGraph::Attr(_) => ContainerKind::AttrNetwork,
        }
    }

    pub fn as_view(&self) -> &dyn GraphView {
        match self {
            AnyGraph::Undirected(g) => g,
            AnyGraph::Directed(g) => g,
            AnyGraph::Multi(g) => g,
            AnyGraph::Attr(g) => g,
        }
    }

    pub fn as_undirected(&self) -> Option<&UndirectedGraph> {
        match self {
            AnyGraph::Undirected(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_directed(&self) -> Option<&DirectedGraph> {
        match self {
            AnyGraph::Directed(g) => Some(g),
            _ => None,
        }
    }
}

impl From<UndirectedGraph> for AnyGraph {
    fn from(g: UndirectedGraph) -> Self {
        AnyGraph::Undirected(g)
    }
}

impl From<DirectedGraph> for AnyGraph {
    fn from(g: DirectedGraph) -> Self {
        AnyGraph::Directed(g)
    }
}

impl From<DirectedMultigraph> for AnyGraph {
    fn from(g: DirectedMultigraph) -> Self {
        AnyGraph::Multi(g)
    }
}

impl From<AttrNetwork> for AnyGraph {
    fn from(g: AttrNetwork) -> Self {
        AnyGraph::Attr(g)
    }
}

impl GraphView for AnyGraph {
    fn is_directed(&self) -> bool {
        self.as_view().is_directed()
    }

    fn is_multigraph(&self) -> bool {
        self.as_view().is_multigraph()
    }

    fn node_count(&self) -> usize {
        self.as_view().node_count()
    }

    fn edge_count(&self) -> usize {
        self.as_view().edge_count()
    }

    fn is_node(&self, id: NodeId) -> bool {
        self.as_view().is_node(id)
    }

    fn is_edge(&self, src: NodeId, dst: NodeId) -> bool {
        self.as_view().is_edge(src, dst)
    }

    fn node_ids(&self) -> Vec<NodeId> {
        self.as_view().node_ids()
    }

    fn out_degree(&self, id: NodeId) -> Option<usize> {
        self.as_view().out_degree(id)
    }

    fn in_degree(&self, id: NodeId) -> Option<usize> {
        self.as_view().in_degree(id)
    }

    fn degree(&self, id: NodeId) -> Option<usize> {
        self.as_view().degree(id)
    }

    fn out_neighbors(&self, id: NodeId) -> NeighborIter<'_> {
        self.as_view().out_neighbors(id)
    }

    fn in_neighbors(&self, id: NodeId) -> NeighborIter<'_> {
        self.as_view().in_neighbors(id)
    }

    fn out_neighbor_at(&self, id: NodeId, k: usize) -> Option<NodeId> {
        self.as_view().out_neighbor_at(id, k)
    }

    fn in_neighbor_at(&self, id: NodeId, k: usize) -> Option<NodeId> {
        self.as_view().in_neighbor_at(id, k)
    }

    fn edges(&self) -> EdgeIter<'_> {
        self.as_view().edges()
    }
}
