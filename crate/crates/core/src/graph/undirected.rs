use super::{
    next_auto_id, sorted_insert, sorted_remove, AddEdgeOutcome, EdgeIter, EdgeRef, GraphMut,
    GraphView, NeighborIter,
};
use crate::error::{GraphError, Result};
use crate::ids::NodeId;
use std::collections::HashMap;

/// Simple undirected graph: a hash table of node records, each holding one
/// sorted vector of neighbor ids. An edge (u, v) appears in both endpoint
/// vectors; a self-loop appears once.
#[derive(Clone, Debug, Default)]
pub struct UndirectedGraph {
    nodes: HashMap<NodeId, Vec<NodeId>>,
    edge_count: usize,
    max_id: Option<NodeId>,
    max_dirty: bool,
}

impl UndirectedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(nodes: usize) -> Self {
        UndirectedGraph {
            nodes: HashMap::with_capacity(nodes),
            ..Self::default()
        }
    }

    /// Sorted neighbor slice, or None for an absent node.
    pub fn neighbors(&self, id: NodeId) -> Option<&[NodeId]> {
        self.nodes.get(&id).map(|v| v.as_slice())
    }

    /// Drops excess vector capacity. Representation-only; observable state
    /// is unchanged.
    pub fn shrink_to_fit(&mut self) {
        self.nodes.shrink_to_fit();
        for vec in self.nodes.values_mut() {
            vec.shrink_to_fit();
        }
    }

    /// Installs a node record verbatim; the binary loader's fast path.
    /// Callers are responsible for vector sortedness and the edge count.
    pub(crate) fn insert_record(&mut self, id: NodeId, neighbors: Vec<NodeId>) {
        self.nodes.insert(id, neighbors);
        self.max_dirty = true;
    }

    pub(crate) fn set_edge_count(&mut self, m: usize) {
        self.edge_count = m;
    }

    fn current_max(&mut self) -> Option<NodeId> {
        if self.max_dirty {
            self.max_id = self.nodes.keys().max().copied();
            self.max_dirty = false;
        }
        self.max_id
    }
}

impl GraphView for UndirectedGraph {
    fn is_directed(&self) -> bool {
        false
    }

    fn node_count(&self) -> usize {
        self.nodes.len()
    }

    fn edge_count(&self) -> usize {
        self.edge_count
    }

    fn is_node(&self, id: NodeId) -> bool {
        self.nodes.contains_key(&id)
    }

    fn is_edge(&self, src: NodeId, dst: NodeId) -> bool {
        let (Some(a), Some(b)) = (self.nodes.get(&src), self.nodes.get(&dst)) else {
            return false;
        };
        // binary search over the smaller endpoint's vector
        if a.len() <= b.len() {
            a.binary_search(&dst).is_ok()
        } else {
            b.binary_search(&src).is_ok()
        }
    }

    fn node_ids(&self) -> Vec<NodeId> {
        let mut ids: Vec<NodeId> = self.nodes.keys().copied().collect();
        ids.sort_unstable();
        ids
    }

    fn out_degree(&self, id: NodeId) -> Option<usize> {
        self.nodes.get(&id).map(|v| v.len())
    }

    fn in_degree(&self, id: NodeId) -> Option<usize> {
        self.out_degree(id)
    }

    fn degree(&self, id: NodeId) -> Option<usize> {
        self.out_degree(id)
    }

    fn out_neighbors(&self, id: NodeId) -> NeighborIter<'_> {
        match self.nodes.get(&id) {
            Some(v) => NeighborIter::nodes(v),
            None => NeighborIter::empty(),
        }
    }

    fn in_neighbors(&self, id: NodeId) -> NeighborIter<'_> {
        self.out_neighbors(id)
    }

    fn out_neighbor_at(&self, id: NodeId, k: usize) -> Option<NodeId> {
        self.nodes.get(&id).and_then(|v| v.get(k)).copied()
    }

    fn in_neighbor_at(&self, id: NodeId, k: usize) -> Option<NodeId> {
        self.out_neighbor_at(id, k)
    }

    fn edges(&self) -> EdgeIter<'_> {
        let ids = self.node_ids();
        EdgeIter::new(ids.into_iter().flat_map(move |u| {
            let nbrs = self.neighbors(u).unwrap_or(&[]);
            let start = nbrs.partition_point(|&v| v < u);
            nbrs[start..].iter().map(move |&v| EdgeRef {
                src: u,
                dst: v,
                id: None,
            })
        }))
    }
}

impl GraphMut for UndirectedGraph {
    fn add_node(&mut self, id: NodeId) -> Result<NodeId> {
        if self.nodes.contains_key(&id) {
            return Err(GraphError::DuplicateNode(id));
        }
        self.nodes.insert(id, Vec::new());
        if !self.max_dirty && self.max_id.map_or(true, |m| id > m) {
            self.max_id = Some(id);
        }
        Ok(id)
    }

    fn add_node_auto(&mut self) -> NodeId {
        let id = next_auto_id(self.current_max());
        self.add_node(id).expect("auto id cannot collide");
        id
    }

    fn del_node(&mut self, id: NodeId) -> Result<()> {
        let nbrs = self
            .nodes
            .remove(&id)
            .ok_or(GraphError::MissingNode(id))?;
        self.edge_count -= nbrs.len();
        for v in nbrs {
            if v != id {
                let vec = self.nodes.get_mut(&v).expect("symmetric entry");
                sorted_remove(vec, id);
            }
        }
        if self.max_id == Some(id) {
            self.max_dirty = true;
        }
        Ok(())
    }

    fn add_edge(&mut self, src: NodeId, dst: NodeId) -> Result<AddEdgeOutcome> {
        if !self.nodes.contains_key(&src) {
            return Err(GraphError::MissingEndpoint(src));
        }
        if !self.nodes.contains_key(&dst) {
            return Err(GraphError::MissingEndpoint(dst));
        }
        let inserted = sorted_insert(self.nodes.get_mut(&src).unwrap(), dst);
        if !inserted {
            return Ok(AddEdgeOutcome::Existed);
        }
        if src != dst {
            sorted_insert(self.nodes.get_mut(&dst).unwrap(), src);
        }
        self.edge_count += 1;
        Ok(AddEdgeOutcome::Added)
    }

    fn del_edge(&mut self, src: NodeId, dst: NodeId) -> Result<()> {
        if !self.is_edge(src, dst) {
            return Err(GraphError::MissingEdge(src, dst));
        }
        sorted_remove(self.nodes.get_mut(&src).unwrap(), dst);
        if src != dst {
            sorted_remove(self.nodes.get_mut(&dst).unwrap(), src);
        }
        self.edge_count -= 1;
        Ok(())
    }

    fn clear(&mut self) {
        self.nodes.clear();
        self.edge_count = 0;
        self.max_id = None;
        self.max_dirty = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u32) -> NodeId {
        NodeId::new(v)
    }

    fn triangle() -> UndirectedGraph {
        let mut g = UndirectedGraph::new();
        for i in 0..3 {
            g.add_node(n(i)).unwrap();
        }
        g.add_edge(n(0), n(1)).unwrap();
        g.add_edge(n(0), n(2)).unwrap();
        g.add_edge(n(1), n(2)).unwrap();
        g
    }

    #[test]
    fn add_node_explicit_and_auto() {
        let mut g = UndirectedGraph::new();
        assert_eq!(g.add_node(n(7)).unwrap(), n(7));
        assert!(g.is_node(n(7)));

        let mut empty = UndirectedGraph::new();
        assert_eq!(empty.add_node_auto(), n(0));
    }

    #[test]
    fn auto_id_is_max_plus_one() {
        let mut g = UndirectedGraph::new();
        g.add_node(n(0)).unwrap();
        g.add_node(n(5)).unwrap();
        assert_eq!(g.add_node_auto(), n(6));
        // after deleting the max, the rule follows the surviving max
        g.del_node(n(6)).unwrap();
        g.del_node(n(5)).unwrap();
        assert_eq!(g.add_node_auto(), n(1));
    }

    #[test]
    fn duplicate_node_rejected() {
        let mut g = UndirectedGraph::new();
        g.add_node(n(3)).unwrap();
        assert_eq!(g.add_node(n(3)), Err(GraphError::DuplicateNode(n(3))));
    }

    #[test]
    fn del_node_removes_incident_edges() {
        let mut g = triangle();
        g.del_node(n(0)).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_edge(n(1), n(2)));
    }

    #[test]
    fn del_star_center() {
        let mut g = UndirectedGraph::new();
        for i in 0..5 {
            g.add_node(n(i)).unwrap();
        }
        for i in 1..5 {
            g.add_edge(n(0), n(i)).unwrap();
        }
        g.del_node(n(0)).unwrap();
        assert_eq!(g.node_count(), 4);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn add_edge_idempotent() {
        let mut g = triangle();
        assert_eq!(g.add_edge(n(1), n(2)).unwrap(), AddEdgeOutcome::Existed);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn add_edge_symmetric() {
        let mut g = UndirectedGraph::new();
        g.add_node(n(1)).unwrap();
        g.add_node(n(2)).unwrap();
        g.add_edge(n(2), n(1)).unwrap();
        assert!(g.is_edge(n(1), n(2)));
        assert!(g.is_edge(n(2), n(1)));
    }

    #[test]
    fn add_edge_missing_endpoint() {
        let mut g = UndirectedGraph::new();
        g.add_node(n(1)).unwrap();
        assert_eq!(
            g.add_edge(n(1), n(9)),
            Err(GraphError::MissingEndpoint(n(9)))
        );
    }

    #[test]
    fn self_loop_stored_once() {
        let mut g = UndirectedGraph::new();
        g.add_node(n(4)).unwrap();
        g.add_edge(n(4), n(4)).unwrap();
        assert_eq!(g.neighbors(n(4)).unwrap(), &[n(4)]);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.add_edge(n(4), n(4)).unwrap(), AddEdgeOutcome::Existed);
        g.del_edge(n(4), n(4)).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn del_edge() {
        let mut g = triangle();
        g.del_edge(n(0), n(1)).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(
            g.del_edge(n(0), n(1)),
            Err(GraphError::MissingEdge(n(0), n(1)))
        );
    }

    #[test]
    fn clear_empties() {
        let mut g = triangle();
        g.clear();
        assert!(g.is_empty());
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn node_iter_ascending() {
        let mut g = UndirectedGraph::new();
        for v in [3, 1, 2] {
            g.add_node(n(v)).unwrap();
        }
        let order: Vec<NodeId> = g.nodes().collect();
        assert_eq!(order, vec![n(1), n(2), n(3)]);
    }

    #[test]
    fn edge_iter_lexicographic() {
        let g = triangle();
        let edges: Vec<(NodeId, NodeId)> = g.edges().map(|e| (e.src, e.dst)).collect();
        assert_eq!(edges, vec![(n(0), n(1)), (n(0), n(2)), (n(1), n(2))]);
    }

    #[test]
    fn cursor_exposes_degree_and_neighbors() {
        let g = triangle();
        let cur = g.get_node(n(1)).unwrap();
        assert_eq!(cur.current(), Some(n(1)));
        assert_eq!(cur.degree(), 2);
        assert_eq!(cur.out_neighbor(0), Some(n(0)));
        assert_eq!(cur.out_neighbor(1), Some(n(2)));
        assert_eq!(cur.out_neighbor(2), None);
        assert!(g.get_node(n(9)).is_err());
    }

    #[test]
    fn id_preservation_across_unrelated_mutations() {
        let mut g = triangle();
        g.add_node(n(10)).unwrap();
        g.del_node(n(10)).unwrap();
        g.add_node(n(11)).unwrap();
        assert_eq!(g.node_ids(), vec![n(0), n(1), n(2), n(11)]);
    }
}
