use super::{
    next_auto_id, sorted_insert, sorted_remove, AddEdgeOutcome, EdgeIter, EdgeRef, Endpoints,
    GraphMut, GraphView, NeighborIter,
};
use crate::error::{GraphError, Result};
use crate::ids::{EdgeId, NodeId};
use std::collections::HashMap;

#[derive(Clone, Debug, Default)]
struct NodeRecord {
    out: Vec<EdgeId>,
    inn: Vec<EdgeId>,
}

/// Directed multigraph. Node records hold sorted vectors of edge ids; an
/// additional hash table maps each edge id to its (src, dst) endpoints.
/// Parallel edges between the same node pair are permitted and are
/// distinguishable by edge id.
#[derive(Clone, Debug, Default)]
pub struct DirectedMultigraph {
    nodes: HashMap<NodeId, NodeRecord>,
    edges: HashMap<EdgeId, Endpoints>,
    next_edge_id: u32,
    max_id: Option<NodeId>,
    max_dirty: bool,
}

impl DirectedMultigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(nodes: usize, edges: usize) -> Self {
        DirectedMultigraph {
            nodes: HashMap::with_capacity(nodes),
            edges: HashMap::with_capacity(edges),
            ..Self::default()
        }
    }

    /// Adds a parallel-capable edge and returns its fresh edge id.
    pub fn add_edge_multi(&mut self, src: NodeId, dst: NodeId) -> Result<EdgeId> {
        let eid = EdgeId::new(self.next_edge_id);
        self.add_edge_with_id(src, dst, eid)
    }

    /// Inserts an edge under a caller-chosen id (used when restoring a
    /// persisted graph or an id-preserving subgraph). The internal counter
    /// is advanced past `eid` so later ids stay unique.
    pub fn add_edge_with_id(&mut self, src: NodeId, dst: NodeId, eid: EdgeId) -> Result<EdgeId> {
        if !self.nodes.contains_key(&src) {
            return Err(GraphError::MissingEndpoint(src));
        }
        if !self.nodes.contains_key(&dst) {
            return Err(GraphError::MissingEndpoint(dst));
        }
        if self.edges.contains_key(&eid) {
            return Err(GraphError::DuplicateEdgeId(eid));
        }
        self.edges.insert(eid, Endpoints { src, dst });
        sorted_insert(&mut self.nodes.get_mut(&src).unwrap().out, eid);
        sorted_insert(&mut self.nodes.get_mut(&dst).unwrap().inn, eid);
        self.next_edge_id = self.next_edge_id.max(eid.value() + 1);
        Ok(eid)
    }

    pub fn del_edge_by_id(&mut self, eid: EdgeId) -> Result<()> {
        let ep = self
            .edges
            .remove(&eid)
            .ok_or(GraphError::MissingEdgeId(eid))?;
        sorted_remove(&mut self.nodes.get_mut(&ep.src).unwrap().out, eid);
        sorted_remove(&mut self.nodes.get_mut(&ep.dst).unwrap().inn, eid);
        Ok(())
    }

    pub fn edge_endpoints(&self, eid: EdgeId) -> Option<Endpoints> {
        self.edges.get(&eid).copied()
    }

    /// All edge ids in ascending order.
    pub fn edge_ids(&self) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = self.edges.keys().copied().collect();
        ids.sort_unstable();
        ids
    }

    pub fn out_edge_slice(&self, id: NodeId) -> Option<&[EdgeId]> {
        self.nodes.get(&id).map(|r| r.out.as_slice())
    }

    pub fn in_edge_slice(&self, id: NodeId) -> Option<&[EdgeId]> {
        self.nodes.get(&id).map(|r| r.inn.as_slice())
    }

    pub fn shrink_to_fit(&mut self) {
        self.nodes.shrink_to_fit();
        self.edges.shrink_to_fit();
        for rec in self.nodes.values_mut() {
            rec.out.shrink_to_fit();
            rec.inn.shrink_to_fit();
        }
    }

    fn current_max(&mut self) -> Option<NodeId> {
        if self.max_dirty {
            self.max_id = self.nodes.keys().max().copied();
            self.max_dirty = false;
        }
        self.max_id
    }
}

impl GraphView for DirectedMultigraph {
    fn is_directed(&self) -> bool {
        true
    }

    fn is_multigraph(&self) -> bool {
        true
    }

    fn node_count(&self) -> usize {
        self.nodes.len()
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn is_node(&self, id: NodeId) -> bool {
        self.nodes.contains_key(&id)
    }

    fn is_edge(&self, src: NodeId, dst: NodeId) -> bool {
        let (Some(s), Some(d)) = (self.nodes.get(&src), self.nodes.get(&dst)) else {
            return false;
        };
        if s.out.len() <= d.inn.len() {
            s.out.iter().any(|eid| self.edges[eid].dst == dst)
        } else {
            d.inn.iter().any(|eid| self.edges[eid].src == src)
        }
    }

    fn node_ids(&self) -> Vec<NodeId> {
        let mut ids: Vec<NodeId> = self.nodes.keys().copied().collect();
        ids.sort_unstable();
        ids
    }

    fn out_degree(&self, id: NodeId) -> Option<usize> {
        self.nodes.get(&id).map(|r| r.out.len())
    }

    fn in_degree(&self, id: NodeId) -> Option<usize> {
        self.nodes.get(&id).map(|r| r.inn.len())
    }

    fn degree(&self, id: NodeId) -> Option<usize> {
        self.nodes.get(&id).map(|r| r.out.len() + r.inn.len())
    }

    fn out_neighbors(&self, id: NodeId) -> NeighborIter<'_> {
        match self.nodes.get(&id) {
            Some(r) => NeighborIter::edges(&r.out, &self.edges, true),
            None => NeighborIter::empty(),
        }
    }

    fn in_neighbors(&self, id: NodeId) -> NeighborIter<'_> {
        match self.nodes.get(&id) {
            Some(r) => NeighborIter::edges(&r.inn, &self.edges, false),
            None => NeighborIter::empty(),
        }
    }

    fn out_neighbor_at(&self, id: NodeId, k: usize) -> Option<NodeId> {
        self.nodes
            .get(&id)
            .and_then(|r| r.out.get(k))
            .map(|eid| self.edges[eid].dst)
    }

    fn in_neighbor_at(&self, id: NodeId, k: usize) -> Option<NodeId> {
        self.nodes
            .get(&id)
            .and_then(|r| r.inn.get(k))
            .map(|eid| self.edges[eid].src)
    }

    fn edges(&self) -> EdgeIter<'_> {
        let ids = self.edge_ids();
        EdgeIter::new(ids.into_iter().map(move |eid| {
            let ep = self.edges[&eid];
            EdgeRef {
                src: ep.src,
                dst: ep.dst,
                id: Some(eid),
            }
        }))
    }
}

impl GraphMut for DirectedMultigraph {
    fn add_node(&mut self, id: NodeId) -> Result<NodeId> {
        if self.nodes.contains_key(&id) {
            return Err(GraphError::DuplicateNode(id));
        }
        self.nodes.insert(id, NodeRecord::default());
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
        let rec = self
            .nodes
            .remove(&id)
            .ok_or(GraphError::MissingNode(id))?;
        for eid in rec.out {
            let ep = self.edges.remove(&eid).expect("edge table entry");
            if ep.dst != id {
                sorted_remove(&mut self.nodes.get_mut(&ep.dst).unwrap().inn, eid);
            }
        }
        for eid in rec.inn {
            // self-loop edge ids were already removed via the out vector
            if let Some(ep) = self.edges.remove(&eid) {
                sorted_remove(&mut self.nodes.get_mut(&ep.src).unwrap().out, eid);
            }
        }
        if self.max_id == Some(id) {
            self.max_dirty = true;
        }
        Ok(())
    }

    fn add_edge(&mut self, src: NodeId, dst: NodeId) -> Result<AddEdgeOutcome> {
        self.add_edge_multi(src, dst).map(AddEdgeOutcome::AddedMulti)
    }

    fn del_edge(&mut self, src: NodeId, dst: NodeId) -> Result<()> {
        let rec = self
            .nodes
            .get(&src)
            .ok_or(GraphError::MissingEdge(src, dst))?;
        let eid = rec
            .out
            .iter()
            .copied()
            .find(|eid| self.edges[eid].dst == dst)
            .ok_or(GraphError::MissingEdge(src, dst))?;
        self.del_edge_by_id(eid)
    }

    fn clear(&mut self) {
        self.nodes.clear();
        self.edges.clear();
        self.next_edge_id = 0;
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

    fn pair() -> DirectedMultigraph {
        let mut g = DirectedMultigraph::new();
        g.add_node(n(1)).unwrap();
        g.add_node(n(2)).unwrap();
        g
    }

    #[test]
    fn parallel_edges_get_distinct_ids() {
        let mut g = pair();
        let e1 = g.add_edge_multi(n(1), n(2)).unwrap();
        let e2 = g.add_edge_multi(n(1), n(2)).unwrap();
        assert_ne!(e1, e2);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn del_by_id_keeps_parallel_sibling() {
        let mut g = pair();
        let e1 = g.add_edge_multi(n(1), n(2)).unwrap();
        let e2 = g.add_edge_multi(n(1), n(2)).unwrap();
        g.del_edge_by_id(e1).unwrap();
        assert!(g.is_edge(n(1), n(2)));
        assert_eq!(g.edge_count(), 1);
        assert!(g.edge_endpoints(e2).is_some());
        assert_eq!(g.del_edge_by_id(e1), Err(GraphError::MissingEdgeId(e1)));
    }

    #[test]
    fn edge_ids_never_reused() {
        let mut g = pair();
        let e1 = g.add_edge_multi(n(1), n(2)).unwrap();
        g.del_edge_by_id(e1).unwrap();
        let e2 = g.add_edge_multi(n(2), n(1)).unwrap();
        assert!(e2 > e1);
    }

    #[test]
    fn multigraph_self_loop() {
        let mut g = pair();
        let e = g.add_edge_multi(n(1), n(1)).unwrap();
        assert_eq!(g.out_degree(n(1)), Some(1));
        assert_eq!(g.in_degree(n(1)), Some(1));
        g.del_node(n(1)).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(g.edge_endpoints(e).is_none());
    }

    #[test]
    fn edge_iter_ascending_edge_id() {
        let mut g = pair();
        g.add_edge_multi(n(2), n(1)).unwrap();
        g.add_edge_multi(n(1), n(2)).unwrap();
        let order: Vec<u32> = g.edges().map(|e| e.id.unwrap().value()).collect();
        assert_eq!(order, vec![0, 1]);
    }

    #[test]
    fn del_node_cleans_incident_edges() {
        let mut g = pair();
        g.add_node(n(3)).unwrap();
        g.add_edge_multi(n(1), n(2)).unwrap();
        g.add_edge_multi(n(2), n(3)).unwrap();
        g.add_edge_multi(n(3), n(1)).unwrap();
        g.del_node(n(2)).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_edge(n(3), n(1)));
    }

    #[test]
    fn neighbor_resolution_through_edge_table() {
        let mut g = pair();
        g.add_edge_multi(n(1), n(2)).unwrap();
        g.add_edge_multi(n(1), n(2)).unwrap();
        let outs: Vec<NodeId> = g.out_neighbors(n(1)).collect();
        assert_eq!(outs, vec![n(2), n(2)]);
        assert_eq!(g.out_neighbor_at(n(1), 1), Some(n(2)));
        let ins: Vec<NodeId> = g.in_neighbors(n(2)).collect();
        assert_eq!(ins, vec![n(1), n(1)]);
    }
}
