use super::{
    next_auto_id, sorted_insert, sorted_remove, AddEdgeOutcome, EdgeIter, EdgeRef, GraphMut,
    GraphView, NeighborIter,
};
use crate::error::{GraphError, Result};
use crate::ids::NodeId;
use std::collections::HashMap;

#[derive(Clone, Debug, Default)]
struct NodeRecord {
    out: Vec<NodeId>,
    inn: Vec<NodeId>,
}

/// Simple directed graph. Each node record holds sorted out- and in-neighbor
/// vectors; (u -> v) is present in u.out iff it is present in v.in.
#[derive(Clone, Debug, Default)]
pub struct DirectedGraph {
    nodes: HashMap<NodeId, NodeRecord>,
    edge_count: usize,
    max_id: Option<NodeId>,
    max_dirty: bool,
}

impl DirectedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(nodes: usize) -> Self {
        DirectedGraph {
            nodes: HashMap::with_capacity(nodes),
            ..Self::default()
        }
    }

    pub fn out_slice(&self, id: NodeId) -> Option<&[NodeId]> {
        self.nodes.get(&id).map(|r| r.out.as_slice())
    }

    pub fn in_slice(&self, id: NodeId) -> Option<&[NodeId]> {
        self.nodes.get(&id).map(|r| r.inn.as_slice())
    }

    pub fn shrink_to_fit(&mut self) {
        self.nodes.shrink_to_fit();
        for rec in self.nodes.values_mut() {
            rec.out.shrink_to_fit();
            rec.inn.shrink_to_fit();
        }
    }

    /// Installs a node record verbatim; the binary loader's fast path.
    pub(crate) fn insert_record(&mut self, id: NodeId, out: Vec<NodeId>, inn: Vec<NodeId>) {
        self.nodes.insert(id, NodeRecord { out, inn });
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

impl GraphView for DirectedGraph {
    fn is_directed(&self) -> bool {
        true
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
        let (Some(s), Some(d)) = (self.nodes.get(&src), self.nodes.get(&dst)) else {
            return false;
        };
        if s.out.len() <= d.inn.len() {
            s.out.binary_search(&dst).is_ok()
        } else {
            d.inn.binary_search(&src).is_ok()
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
            Some(r) => NeighborIter::nodes(&r.out),
            None => NeighborIter::empty(),
        }
    }

    fn in_neighbors(&self, id: NodeId) -> NeighborIter<'_> {
        match self.nodes.get(&id) {
            Some(r) => NeighborIter::nodes(&r.inn),
            None => NeighborIter::empty(),
        }
    }

    fn out_neighbor_at(&self, id: NodeId, k: usize) -> Option<NodeId> {
        self.nodes.get(&id).and_then(|r| r.out.get(k)).copied()
    }

    fn in_neighbor_at(&self, id: NodeId, k: usize) -> Option<NodeId> {
        self.nodes.get(&id).and_then(|r| r.inn.get(k)).copied()
    }

    fn edges(&self) -> EdgeIter<'_> {
        let ids = self.node_ids();
        EdgeIter::new(ids.into_iter().flat_map(move |u| {
            self.out_slice(u).unwrap_or(&[]).iter().map(move |&v| EdgeRef {
                src: u,
                dst: v,
                id: None,
            })
        }))
    }
}

impl GraphMut for DirectedGraph {
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
        let self_loop = rec.out.binary_search(&id).is_ok();
        self.edge_count -= rec.out.len() + rec.inn.len() - usize::from(self_loop);
        for v in rec.out {
            if v != id {
                sorted_remove(&mut self.nodes.get_mut(&v).unwrap().inn, id);
            }
        }
        for u in rec.inn {
            if u != id {
                sorted_remove(&mut self.nodes.get_mut(&u).unwrap().out, id);
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
        let inserted = sorted_insert(&mut self.nodes.get_mut(&src).unwrap().out, dst);
        if !inserted {
            return Ok(AddEdgeOutcome::Existed);
        }
        sorted_insert(&mut self.nodes.get_mut(&dst).unwrap().inn, src);
        self.edge_count += 1;
        Ok(AddEdgeOutcome::Added)
    }

    fn del_edge(&mut self, src: NodeId, dst: NodeId) -> Result<()> {
        if !self.is_edge(src, dst) {
            return Err(GraphError::MissingEdge(src, dst));
        }
        sorted_remove(&mut self.nodes.get_mut(&src).unwrap().out, dst);
        sorted_remove(&mut self.nodes.get_mut(&dst).unwrap().inn, src);
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
