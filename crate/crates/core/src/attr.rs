//! Directed multigraph with run-time typed node and edge attributes.
//!
//! Attributes are declared dynamically with a name, a type tag and a default
//! value, then stored columnar: one dense value store per attribute, indexed
//! by an internal node/edge slot, with a per-slot explicit-value flag. Slots
//! are never reused, so a deleted element's row stays tombstoned until
//! `clear`.

use crate::error::{GraphError, Result};
use crate::graph::{
    AddEdgeOutcome, DirectedMultigraph, EdgeIter, Endpoints, GraphMut, GraphView, NeighborIter,
};
use crate::ids::{EdgeId, NodeId};
use std::collections::{BTreeMap, HashMap};

/// Type tag of an attribute column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AttrType {
    Int,
    Float,
    Str,
}

/// Tagged attribute value: 64-bit integer, 64-bit float or string.
#[derive(Clone, Debug, PartialEq)]
pub enum AttrValue {
    Int(i64),
    Float(f64),
    Str(String),
}

impl AttrValue {
    pub fn attr_type(&self) -> AttrType {
        match self {
            AttrValue::Int(_) => AttrType::Int,
            AttrValue::Float(_) => AttrType::Float,
            AttrValue::Str(_) => AttrType::Str,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            AttrValue::Int(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_float(&self) -> Option<f64> {
        match self {
            AttrValue::Float(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            AttrValue::Str(v) => Some(v),
            _ => None,
        }
    }
}

/// Whether an attribute applies to nodes or to edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AttrKind {
    Node,
    Edge,
}

#[derive(Clone, Debug)]
pub(crate) struct Column {
    pub(crate) ty: AttrType,
    pub(crate) default: AttrValue,
    /// Indexed by slot; absent tail slots read as the default.
    pub(crate) values: Vec<AttrValue>,
    pub(crate) explicit: Vec<bool>,
}

impl Column {
    fn read(&self, slot: usize) -> &AttrValue {
        if slot < self.values.len() && self.explicit[slot] {
            &self.values[slot]
        } else {
            &self.default
        }
    }

    fn write(&mut self, slot: usize, value: AttrValue) {
        if slot >= self.values.len() {
            self.values.resize(slot + 1, self.default.clone());
            self.explicit.resize(slot + 1, false);
        }
        self.values[slot] = value;
        self.explicit[slot] = true;
    }

    pub(crate) fn is_explicit(&self, slot: usize) -> bool {
        slot < self.explicit.len() && self.explicit[slot]
    }
}

/// Directed multigraph whose nodes and edges carry run-time declared typed
/// attributes. Satisfies the full uniform container interface.
#[derive(Clone, Debug, Default)]
pub struct AttrNetwork {
    graph: DirectedMultigraph,
    node_slots: HashMap<NodeId, usize>,
    next_node_slot: usize,
    // BTreeMap keeps the column order deterministic for dump/persistence.
    node_columns: BTreeMap<String, Column>,
    edge_columns: BTreeMap<String, Column>,
}

impl AttrNetwork {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn graph(&self) -> &DirectedMultigraph {
        &self.graph
    }

    pub fn add_edge_multi(&mut self, src: NodeId, dst: NodeId) -> Result<EdgeId> {
        self.graph.add_edge_multi(src, dst)
    }

    pub fn add_edge_with_id(&mut self, src: NodeId, dst: NodeId, eid: EdgeId) -> Result<EdgeId> {
        self.graph.add_edge_with_id(src, dst, eid)
    }

    pub fn del_edge_by_id(&mut self, eid: EdgeId) -> Result<()> {
        self.graph.del_edge_by_id(eid)
    }

    pub fn edge_endpoints(&self, eid: EdgeId) -> Option<Endpoints> {
        self.graph.edge_endpoints(eid)
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.graph.edge_ids()
    }

    /// Declares an attribute with a default value readable on every existing
    /// and future node/edge of the given kind.
    pub fn declare_attr(
        &mut self,
        kind: AttrKind,
        name: &str,
        ty: AttrType,
        default: AttrValue,
    ) -> Result<()> {
        if default.attr_type() != ty {
            return Err(GraphError::AttrTypeMismatch {
                name: name.to_string(),
                expected: ty,
                actual: default.attr_type(),
            });
        }
        let columns = self.columns_mut(kind);
        if columns.contains_key(name) {
            return Err(GraphError::DuplicateAttr(name.to_string()));
        }
        columns.insert(
            name.to_string(),
            Column {
                ty,
                default,
                values: Vec::new(),
                explicit: Vec::new(),
            },
        );
        Ok(())
    }

    /// Removes the attribute column for all targets of `kind`.
    pub fn del_attr(&mut self, kind: AttrKind, name: &str) -> Result<()> {
        self.columns_mut(kind)
            .remove(name)
            .map(|_| ())
            .ok_or_else(|| GraphError::UndeclaredAttr(name.to_string()))
    }

    pub fn set_node_attr(&mut self, id: NodeId, name: &str, value: AttrValue) -> Result<()> {
        let slot = *self
            .node_slots
            .get(&id)
            .ok_or(GraphError::MissingNode(id))?;
        Self::set_in_column(&mut self.node_columns, name, slot, value)
    }

    pub fn get_node_attr(&self, id: NodeId, name: &str) -> Result<AttrValue> {
        let slot = *self
            .node_slots
            .get(&id)
            .ok_or(GraphError::MissingNode(id))?;
        Self::get_from_column(&self.node_columns, name, slot)
    }

    pub fn set_edge_attr(&mut self, eid: EdgeId, name: &str, value: AttrValue) -> Result<()> {
        if self.graph.edge_endpoints(eid).is_none() {
            return Err(GraphError::MissingEdgeId(eid));
        }
        Self::set_in_column(&mut self.edge_columns, name, eid.index(), value)
    }

    pub fn get_edge_attr(&self, eid: EdgeId, name: &str) -> Result<AttrValue> {
        if self.graph.edge_endpoints(eid).is_none() {
            return Err(GraphError::MissingEdgeId(eid));
        }
        Self::get_from_column(&self.edge_columns, name, eid.index())
    }

    /// Declared attribute names and type tags, sorted by name.
    pub fn attr_schemas(&self, kind: AttrKind) -> Vec<(String, AttrType)> {
        self.columns(kind)
            .iter()
            .map(|(name, col)| (name.clone(), col.ty))
            .collect()
    }

    pub(crate) fn node_slot(&self, id: NodeId) -> Option<usize> {
        self.node_slots.get(&id).copied()
    }

    pub(crate) fn columns(&self, kind: AttrKind) -> &BTreeMap<String, Column> {
        match kind {
            AttrKind::Node => &self.node_columns,
            AttrKind::Edge => &self.edge_columns,
        }
    }

    fn columns_mut(&mut self, kind: AttrKind) -> &mut BTreeMap<String, Column> {
        match kind {
            AttrKind::Node => &mut self.node_columns,
            AttrKind::Edge => &mut self.edge_columns,
        }
    }

    pub(crate) fn register_node_slot(&mut self, id: NodeId) {
        self.node_slots.insert(id, self.next_node_slot);
        self.next_node_slot += 1;
    }

    fn set_in_column(
        columns: &mut BTreeMap<String, Column>,
        name: &str,
        slot: usize,
        value: AttrValue,
    ) -> Result<()> {
        let col = columns
            .get_mut(name)
            .ok_or_else(|| GraphError::UndeclaredAttr(name.to_string()))?;
        if value.attr_type() != col.ty {
            return Err(GraphError::AttrTypeMismatch {
                name: name.to_string(),
                expected: col.ty,
                actual: value.attr_type(),
            });
        }
        col.write(slot, value);
        Ok(())
    }

    fn get_from_column(
        columns: &BTreeMap<String, Column>,
        name: &str,
        slot: usize,
    ) -> Result<AttrValue> {
        columns
            .get(name)
            .map(|col| col.read(slot).clone())
            .ok_or_else(|| GraphError::UndeclaredAttr(name.to_string()))
    }
}

impl GraphView for AttrNetwork {
    fn is_directed(&self) -> bool {
        true
    }

    fn is_multigraph(&self) -> bool {
        true
    }

    fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    fn is_node(&self, id: NodeId) -> bool {
        self.graph.is_node(id)
    }

    fn is_edge(&self, src: NodeId, dst: NodeId) -> bool {
        self.graph.is_edge(src, dst)
    }

    fn node_ids(&self) -> Vec<NodeId> {
        self.graph.node_ids()
    }

    fn out_degree(&self, id: NodeId) -> Option<usize> {
        self.graph.out_degree(id)
    }

    fn in_degree(&self, id: NodeId) -> Option<usize> {
        self.graph.in_degree(id)
    }

    fn degree(&self, id: NodeId) -> Option<usize> {
        self.graph.degree(id)
    }

    fn out_neighbors(&self, id: NodeId) -> NeighborIter<'_> {
        self.graph.out_neighbors(id)
    }

    fn in_neighbors(&self, id: NodeId) -> NeighborIter<'_> {
        self.graph.in_neighbors(id)
    }

    fn out_neighbor_at(&self, id: NodeId, k: usize) -> Option<NodeId> {
        self.graph.out_neighbor_at(id, k)
    }

    fn in_neighbor_at(&self, id: NodeId, k: usize) -> Option<NodeId> {
        self.graph.in_neighbor_at(id, k)
    }

    fn edges(&self) -> EdgeIter<'_> {
        self.graph.edges()
    }
}

impl GraphMut for AttrNetwork {
    fn add_node(&mut self, id: NodeId) -> Result<NodeId> {
        self.graph.add_node(id)?;
        self.register_node_slot(id);
        Ok(id)
    }

    fn add_node_auto(&mut self) -> NodeId {
        let id = self.graph.add_node_auto();
        self.register_node_slot(id);
        id
    }

    fn del_node(&mut self, id: NodeId) -> Result<()> {
        self.graph.del_node(id)?;
        // slot stays tombstoned; the row is unreachable once the id is gone
        self.node_slots.remove(&id);
        Ok(())
    }

    fn add_edge(&mut self, src: NodeId, dst: NodeId) -> Result<AddEdgeOutcome> {
        self.graph.add_edge(src, dst)
    }

    fn del_edge(&mut self, src: NodeId, dst: NodeId) -> Result<()> {
        self.graph.del_edge(src, dst)
    }

    fn clear(&mut self) {
        self.graph.clear();
        self.node_slots.clear();
        self.next_node_slot = 0;
        for col in self.node_columns.values_mut().chain(self.edge_columns.values_mut()) {
            col.values.clear();
            col.explicit.clear();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u32) -> NodeId {
        NodeId::new(v)
    }

    fn net() -> AttrNetwork {
        let mut net = AttrNetwork::new();
        for i in 0..3 {
            net.add_node(n(i)).unwrap();
        }
        net
    }

    #[test]
    fn declared_default_readable_everywhere() {
        let mut net = net();
        net.declare_attr(AttrKind::Node, "age", AttrType::Int, AttrValue::Int(0))
            .unwrap();
        assert_eq!(net.get_node_attr(n(1), "age").unwrap(), AttrValue::Int(0));
        let id = net.add_node_auto();
        assert_eq!(net.get_node_attr(id, "age").unwrap(), AttrValue::Int(0));
    }

    #[test]
    fn edge_attr_default_on_fresh_edge() {
        let mut net = net();
        net.declare_attr(AttrKind::Edge, "w", AttrType::Float, AttrValue::Float(1.0))
            .unwrap();
        let e = net.add_edge_multi(n(0), n(1)).unwrap();
        assert_eq!(net.get_edge_attr(e, "w").unwrap(), AttrValue::Float(1.0));
    }

    #[test]
    fn redeclare_is_an_error() {
        let mut net = net();
        net.declare_attr(AttrKind::Node, "age", AttrType::Int, AttrValue::Int(0))
            .unwrap();
        assert_eq!(
            net.declare_attr(AttrKind::Node, "age", AttrType::Int, AttrValue::Int(1)),
            Err(GraphError::DuplicateAttr("age".into()))
        );
    }

    #[test]
    fn read_after_write() {
        let mut net = net();
        net.add_node(n(5)).unwrap();
        net.declare_attr(AttrKind::Node, "age", AttrType::Int, AttrValue::Int(0))
            .unwrap();
        net.set_node_attr(n(5), "age", AttrValue::Int(42)).unwrap();
        assert_eq!(net.get_node_attr(n(5), "age").unwrap(), AttrValue::Int(42));
    }

    #[test]
    fn deleted_target_is_an_error() {
        let mut net = net();
        net.declare_attr(AttrKind::Node, "age", AttrType::Int, AttrValue::Int(0))
            .unwrap();
        net.del_node(n(2)).unwrap();
        assert_eq!(
            net.set_node_attr(n(2), "age", AttrValue::Int(1)),
            Err(GraphError::MissingNode(n(2)))
        );
        assert_eq!(
            net.get_node_attr(n(2), "age"),
            Err(GraphError::MissingNode(n(2)))
        );
    }

    #[test]
    fn type_mismatch_rejected() {
        let mut net = net();
        net.declare_attr(AttrKind::Node, "age", AttrType::Int, AttrValue::Int(0))
            .unwrap();
        assert!(matches!(
            net.set_node_attr(n(0), "age", AttrValue::Str("x".into())),
            Err(GraphError::AttrTypeMismatch { .. })
        ));
        assert!(matches!(
            net.declare_attr(AttrKind::Node, "w", AttrType::Float, AttrValue::Int(1)),
            Err(GraphError::AttrTypeMismatch { .. })
        ));
    }

    #[test]
    fn undeclared_read_is_an_error() {
        let net = net();
        assert_eq!(
            net.get_node_attr(n(0), "ghost"),
            Err(GraphError::UndeclaredAttr("ghost".into()))
        );
    }

    #[test]
    fn del_attr_removes_column() {
        let mut net = net();
        net.declare_attr(AttrKind::Node, "age", AttrType::Int, AttrValue::Int(0))
            .unwrap();
        net.del_attr(AttrKind::Node, "age").unwrap();
        assert_eq!(
            net.get_node_attr(n(0), "age"),
            Err(GraphError::UndeclaredAttr("age".into()))
        );
        // the name is free again
        net.declare_attr(AttrKind::Node, "age", AttrType::Float, AttrValue::Float(0.5))
            .unwrap();
        assert_eq!(
            net.get_node_attr(n(0), "age").unwrap(),
            AttrValue::Float(0.5)
        );
    }

    #[test]
    fn readded_node_gets_a_fresh_row() {
        let mut net = net();
        net.declare_attr(AttrKind::Node, "age", AttrType::Int, AttrValue::Int(0))
            .unwrap();
        net.set_node_attr(n(1), "age", AttrValue::Int(9)).unwrap();
        net.del_node(n(1)).unwrap();
        net.add_node(n(1)).unwrap();
        assert_eq!(net.get_node_attr(n(1), "age").unwrap(), AttrValue::Int(0));
    }

    #[test]
    fn shadow_map_oracle_random_ops() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let mut net = net();
        for i in 3..20 {
            net.add_node(n(i)).unwrap();
        }
        net.declare_attr(AttrKind::Node, "x", AttrType::Int, AttrValue::Int(-1))
            .unwrap();
        let mut shadow: std::collections::HashMap<u32, i64> = Default::default();
        for _ in 0..10_000 {
            let id = rng.gen_range(0..20u32);
            if rng.gen_bool(0.5) {
                let v = rng.gen_range(-1000..1000i64);
                net.set_node_attr(n(id), "x", AttrValue::Int(v)).unwrap();
                shadow.insert(id, v);
            } else {
                let expect = shadow.get(&id).copied().unwrap_or(-1);
                assert_eq!(
                    net.get_node_attr(n(id), "x").unwrap(),
                    AttrValue::Int(expect)
                );
            }
        }
    }
}
