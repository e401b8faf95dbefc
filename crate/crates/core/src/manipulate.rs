//! Structure-transforming operators: induced subgraphs, container
//! conversions and connected-component decomposition.

use crate::attr::{AttrKind, AttrNetwork};
use crate::graph::{
    DirectedGraph, DirectedMultigraph, GraphMut, GraphView, UndirectedGraph,
};
use crate::ids::NodeId;
use std::collections::{HashMap, HashSet};

/// Id-preserving induced subgraph extraction.
pub trait InducedSubgraph: Sized {
    /// Induced subgraph on `keep` (absent ids are ignored). Node ids,
    /// multigraph edge ids and attributes are preserved.
    fn induced(&self, keep: &HashSet<NodeId>) -> Self;
}

impl InducedSubgraph for UndirectedGraph {
    fn induced(&self, keep: &HashSet<NodeId>) -> Self {
        let mut out = UndirectedGraph::new();
        let mut total = 0usize;
        let mut self_loops = 0usize;
        for id in self.node_ids() {
            if !keep.contains(&id) {
                continue;
            }
            let nbrs: Vec<NodeId> = self
                .neighbors(id)
                .unwrap()
                .iter()
                .copied()
                .filter(|v| keep.contains(v))
                .collect();
            total += nbrs.len();
            if nbrs.binary_search(&id).is_ok() {
                self_loops += 1;
            }
            out.insert_record(id, nbrs);
        }
        out.set_edge_count((total + self_loops) / 2);
        out
    }
}

impl InducedSubgraph for DirectedGraph {
    fn induced(&self, keep: &HashSet<NodeId>) -> Self {
        let mut out = DirectedGraph::new();
        let mut total = 0usize;
        for id in self.node_ids() {
            if !keep.contains(&id) {
                continue;
            }
            let outs: Vec<NodeId> = self
                .out_slice(id)
                .unwrap()
                .iter()
                .copied()
                .filter(|v| keep.contains(v))
                .collect();
            let ins: Vec<NodeId> = self
                .in_slice(id)
                .unwrap()
                .iter()
                .copied()
                .filter(|v| keep.contains(v))
                .collect();
            total += outs.len();
            out.insert_record(id, outs, ins);
        }
        out.set_edge_count(total);
        out
    }
}

impl InducedSubgraph for DirectedMultigraph {
    fn induced(&self, keep: &HashSet<NodeId>) -> Self {
        let mut out = DirectedMultigraph::new();
        for id in self.node_ids() {
            if keep.contains(&id) {
                out.add_node(id).unwrap();
            }
        }
        for eid in self.edge_ids() {
            let ep = self.edge_endpoints(eid).unwrap();
            if keep.contains(&ep.src) && keep.contains(&ep.dst) {
                out.add_edge_with_id(ep.src, ep.dst, eid).unwrap();
            }
        }
        out
    }
}

impl InducedSubgraph for AttrNetwork {
    fn induced(&self, keep: &HashSet<NodeId>) -> Self {
        let mut out = AttrNetwork::new();
        for id in self.node_ids() {
            if keep.contains(&id) {
                out.add_node(id).unwrap();
            }
        }
        for eid in self.edge_ids() {
            let ep = self.edge_endpoints(eid).unwrap();
            if keep.contains(&ep.src) && keep.contains(&ep.dst) {
                out.add_edge_with_id(ep.src, ep.dst, eid).unwrap();
            }
        }
        for kind in [AttrKind::Node, AttrKind::Edge] {
            for (name, col) in self.columns(kind) {
                out.declare_attr(kind, name, col.ty, col.default.clone())
                    .unwrap();
            }
        }
        for (name, col) in self.columns(AttrKind::Node) {
            for id in out.node_ids() {
                let slot = self.node_slot(id).unwrap();
                if col.is_explicit(slot) {
                    out.set_node_attr(id, name, col.values[slot].clone())
                        .unwrap();
                }
            }
        }
        for (name, col) in self.columns(AttrKind::Edge) {
            for eid in out.edge_ids() {
                if col.is_explicit(eid.index()) {
                    out.set_edge_attr(eid, name, col.values[eid.index()].clone())
                        .unwrap();
                }
            }
        }
        out
    }
}

/// Induced subgraph on `ids`; absent ids are ignored.
pub fn subgraph<G: InducedSubgraph>(g: &G, ids: &HashSet<NodeId>) -> G {
    g.induced(ids)
}

/// Collapses (u -> v) and (v -> u) into a single undirected edge.
pub fn to_undirected<G: GraphView>(g: &G) -> UndirectedGraph {
    let mut out = UndirectedGraph::new();
    for id in g.node_ids() {
        out.add_node(id).unwrap();
    }
    for e in g.edges() {
        let _ = out.add_edge(e.src, e.dst).unwrap();
    }
    out
}

/// Emits both directions for every undirected edge.
pub fn to_directed(g: &UndirectedGraph) -> DirectedGraph {
    let mut out = DirectedGraph::new();
    for id in g.node_ids() {
        out.add_node(id).unwrap();
    }
    for e in g.edges() {
        out.add_edge(e.src, e.dst).unwrap();
        if e.src != e.dst {
            out.add_edge(e.dst, e.src).unwrap();
        }
    }
    out
}

/// Collapses parallel edges into a simple directed graph.
pub fn multi_to_directed<G: GraphView>(g: &G) -> DirectedGraph {
    let mut out = DirectedGraph::new();
    for id in g.node_ids() {
        out.add_node(id).unwrap();
    }
    for e in g.edges() {
        let _ = out.add_edge(e.src, e.dst).unwrap();
    }
    out
}

fn sort_components(mut comps: Vec<Vec<NodeId>>) -> Vec<Vec<NodeId>> {
    for c in &mut comps {
        c.sort_unstable();
    }
    comps.sort_by_key(|c| c[0]);
    comps
}

/// Weakly connected components: BFS over direction-ignored edges. Classes
/// are disjoint, cover all nodes, and are returned in ascending min-id
/// order with ascending members.
pub fn weakly_connected_components<G: GraphView>(g: &G) -> Vec<Vec<NodeId>> {
    let mut seen: HashSet<NodeId> = HashSet::new();
    let mut comps = Vec::new();
    for root in g.node_ids() {
        if seen.contains(&root) {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        seen.insert(root);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for v in g.out_neighbors(u).chain(g.in_neighbors(u)) {
                if seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        comps.push(comp);
    }
    sort_components(comps)
}

/// Strongly connected components via iterative (explicit-stack) Tarjan.
pub fn strongly_connected_components<G: GraphView>(g: &G) -> Vec<Vec<NodeId>> {
    let ids = g.node_ids();
    let index_of: HashMap<NodeId, usize> =
        ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let n = ids.len();

    const UNSET: usize = usize::MAX;
    let mut disc = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_disc = 0usize;
    let mut comps = Vec::new();

    // call frames: (node index, next out-neighbor position)
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for start in 0..n {
        if disc[start] != UNSET {
            continue;
        }
        frames.push((start, 0));
        disc[start] = next_disc;
        low[start] = next_disc;
        next_disc += 1;
        stack.push(start);
        on_stack[start] = true;

        loop {
            let Some(&(v, pos)) = frames.last() else {
                break;
            };
            if let Some(w_id) = g.out_neighbor_at(ids[v], pos) {
                frames.last_mut().unwrap().1 += 1;
                let w = index_of[&w_id];
                if disc[w] == UNSET {
                    disc[w] = next_disc;
                    low[w] = next_disc;
                    next_disc += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == disc[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(ids[w]);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }
    sort_components(comps)
}

fn largest_class(comps: &[Vec<NodeId>]) -> HashSet<NodeId> {
    // size-descending, ties broken by smallest contained id (classes are
    // already in ascending min-id order)
    comps
        .iter()
        .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
        .map(|c| c.iter().copied().collect())
        .unwrap_or_default()
}

/// Induced subgraph of the largest weakly connected component.
pub fn largest_wcc<G: GraphView + InducedSubgraph>(g: &G) -> G {
    g.induced(&largest_class(&weakly_connected_components(g)))
}

/// Induced subgraph of the largest strongly connected component.
pub fn largest_scc<G: GraphView + InducedSubgraph>(g: &G) -> G {
    g.induced(&largest_class(&strongly_connected_components(g)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u32) -> NodeId {
        NodeId::new(v)
    }

    fn k4() -> UndirectedGraph {
        let mut g = UndirectedGraph::new();
        for i in 0..4 {
            g.add_node(n(i)).unwrap();
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                g.add_edge(n(i), n(j)).unwrap();
            }
        }
        g
    }

    #[test]
    fn subgraph_of_k4_is_triangle() {
        let g = k4();
        let keep: HashSet<NodeId> = [n(0), n(1), n(2)].into();
        let sub = subgraph(&g, &keep);
        assert_eq!(sub.node_ids(), vec![n(0), n(1), n(2)]);
        assert_eq!(sub.edge_count(), 3);
    }

    #[test]
    fn subgraph_identity() {
        let g = k4();
        let keep: HashSet<NodeId> = g.node_ids().into_iter().collect();
        assert_eq!(subgraph(&g, &keep).dump(), g.dump());
        // absent ids ignored
        let mut more = keep.clone();
        more.insert(n(99));
        assert_eq!(subgraph(&g, &more).dump(), g.dump());
    }

    #[test]
    fn multigraph_subgraph_preserves_edge_ids() {
        let mut g = DirectedMultigraph::new();
        for i in 0..3 {
            g.add_node(n(i)).unwrap();
        }
        g.add_edge_multi(n(0), n(1)).unwrap();
        let keeper = g.add_edge_multi(n(1), n(2)).unwrap();
        g.add_edge_multi(n(1), n(2)).unwrap();
        let keep: HashSet<NodeId> = [n(1), n(2)].into();
        let sub = g.induced(&keep);
        assert_eq!(sub.edge_count(), 2);
        assert!(sub.edge_endpoints(keeper).is_some());
    }

    #[test]
    fn convert_directed_two_cycle() {
        let mut g = DirectedGraph::new();
        g.add_node(n(0)).unwrap();
        g.add_node(n(1)).unwrap();
        g.add_edge(n(0), n(1)).unwrap();
        g.add_edge(n(1), n(0)).unwrap();
        let u = to_undirected(&g);
        assert_eq!(u.edge_count(), 1);
    }

    #[test]
    fn convert_undirected_to_directed_and_back() {
        let g = k4();
        let d = to_directed(&g);
        assert_eq!(d.edge_count(), 12);
        assert_eq!(to_undirected(&d).dump(), g.dump());
    }

    #[test]
    fn collapse_parallel_edges() {
        let mut g = DirectedMultigraph::new();
        g.add_node(n(0)).unwrap();
        g.add_node(n(1)).unwrap();
        for _ in 0..3 {
            g.add_edge_multi(n(0), n(1)).unwrap();
        }
        let d = multi_to_directed(&g);
        assert_eq!(d.edge_count(), 1);
    }

    #[test]
    fn two_triangles_two_wccs() {
        let mut g = UndirectedGraph::new();
        for i in 0..6 {
            g.add_node(n(i)).unwrap();
        }
        for (a, b) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
            g.add_edge(n(a), n(b)).unwrap();
        }
        let comps = weakly_connected_components(&g);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        let big = largest_wcc(&g);
        assert_eq!(big.node_ids(), vec![n(0), n(1), n(2)]);
    }

    #[test]
    fn scc_cycle_with_dangling_edge() {
        let mut g = DirectedGraph::new();
        for i in 0..4 {
            g.add_node(n(i)).unwrap();
        }
        g.add_edge(n(0), n(1)).unwrap();
        g.add_edge(n(1), n(2)).unwrap();
        g.add_edge(n(2), n(0)).unwrap();
        g.add_edge(n(2), n(3)).unwrap();
        let comps = strongly_connected_components(&g);
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3]);
        let big = largest_scc(&g);
        assert_eq!(big.node_ids(), vec![n(0), n(1), n(2)]);
        assert_eq!(big.edge_count(), 3);
    }

    #[test]
    fn scc_survives_deep_path() {
        // path-shaped graph; recursion would overflow here if traversal
        // were not iterative
        let mut g = DirectedGraph::new();
        let len = 200_000u32;
        for i in 0..len {
            g.add_node(n(i)).unwrap();
        }
        for i in 1..len {
            g.add_edge(n(i - 1), n(i)).unwrap();
        }
        let comps = strongly_connected_components(&g);
        assert_eq!(comps.len(), len as usize);
    }
}
