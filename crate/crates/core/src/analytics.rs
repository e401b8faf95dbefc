//! Structural statistics: degree summaries, triangle counting and clustering,
//! k-core decomposition, directed triad census and the leading adjacency
//! eigenpair.

use crate::error::{GraphError, Result};
use crate::graph::{GraphView, UndirectedGraph};
use crate::ids::NodeId;
use crate::manipulate::subgraph;
use crate::scalar::Scalar;
use crate::DirectedGraph;
use std::collections::{BTreeMap, HashMap, HashSet};

/// Which degree a summary or histogram is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeKind {
    Out,
    In,
    /// Undirected degree, or out + in on directed containers.
    Total,
}

/// Exact degree histogram with simple aggregates.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeSummary {
    /// degree → node count; keys ascending, Σ counts = n.
    pub histogram: BTreeMap<usize, u64>,
    pub min: usize,
    pub max: usize,
    pub mean: f64,
}

pub fn degree_summary<G: GraphView>(g: &G, kind: DegreeKind) -> DegreeSummary {
    let mut histogram = BTreeMap::new();
    let mut sum = 0u64;
    let n = g.node_count();
    for id in g.node_ids() {
        let d = match kind {
            DegreeKind::Out => g.out_degree(id),
            DegreeKind::In => g.in_degree(id),
            DegreeKind::Total => g.degree(id),
        }
        .unwrap_or(0);
        *histogram.entry(d).or_insert(0) += 1;
        sum += d as u64;
    }
    let min = histogram.keys().next().copied().unwrap_or(0);
    let max = histogram.keys().next_back().copied().unwrap_or(0);
    let mean = if n == 0 { 0.0 } else { sum as f64 / n as f64 };
    DegreeSummary {
        histogram,
        min,
        max,
        mean,
    }
}

/// Result of [`count_triangles`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleCounts {
    /// Number of distinct triangles in the graph.
    pub total: u64,
    /// Per node: closed neighbor pairs, i.e. triangles through the node.
    pub closed: HashMap<NodeId, u64>,
    /// Per node: all neighbor pairs d(d−1)/2 (self-loop neighbors excluded).
    pub pairs: HashMap<NodeId, u64>,
}

impl TriangleCounts {
    /// Connected-but-open neighbor pairs at `id`.
    pub fn open(&self, id: NodeId) -> u64 {
        self.pairs.get(&id).copied().unwrap_or(0) - self.closed.get(&id).copied().unwrap_or(0)
    }
}

/// Neighbor list with the node itself (self-loop) removed.
fn simple_neighbors(g: &UndirectedGraph, id: NodeId) -> Vec<NodeId> {
    g.neighbors(id)
        .unwrap_or(&[])
        .iter()
        .copied()
        .filter(|&v| v != id)
        .collect()
}

/// Sorted-vector intersection size, also invoking `hit` per common element.
fn intersect_sorted(a: &[NodeId], b: &[NodeId], mut hit: impl FnMut(NodeId)) -> u64 {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                hit(a[i]);
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Degree-ordered rank and, per node, the sorted list of strictly
/// higher-ranked neighbors. Shared by the serial and parallel counters.
fn higher_neighbor_lists(
    g: &UndirectedGraph,
) -> (Vec<NodeId>, HashMap<NodeId, Vec<NodeId>>) {
    let mut ids = g.node_ids();
    ids.sort_by_key(|&v| (g.degree(v).unwrap_or(0), v));
    let rank: HashMap<NodeId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut higher = HashMap::with_capacity(ids.len());
    for &v in &ids {
        let mut h: Vec<NodeId> = simple_neighbors(g, v)
            .into_iter()
            .filter(|u| rank[u] > rank[&v])
            .collect();
        h.sort_unstable();
        higher.insert(v, h);
    }
    (ids, higher)
}

/// Triangle counting by sorted intersection of higher-degree-ordered
/// adjacency vectors. O(m^{3/2}); self-loops are ignored.
pub fn count_triangles(g: &UndirectedGraph) -> TriangleCounts {
    count_triangles_par(g, 1)
}

/// [`count_triangles`] with the node sweep partitioned over `threads`
/// OS threads. The result is identical for every thread count.
pub fn count_triangles_par(g: &UndirectedGraph, threads: usize) -> TriangleCounts {
    let (ids, higher) = higher_neighbor_lists(g);
    let threads = threads.max(1).min(ids.len().max(1));
    let chunk = ids.len().div_ceil(threads);

    let mut total = 0u64;
    let mut closed: HashMap<NodeId, u64> = HashMap::with_capacity(ids.len());
    let mut pairs: HashMap<NodeId, u64> = HashMap::with_capacity(ids.len());
    for &v in &ids {
        let d = simple_neighbors(g, v).len() as u64;
        closed.insert(v, 0);
        pairs.insert(v, d * d.saturating_sub(1) / 2);
    }

    let partials: Vec<(u64, HashMap<NodeId, u64>)> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for slice in ids.chunks(chunk.max(1)) {
            let higher = &higher;
            handles.push(scope.spawn(move || {
                let mut local_total = 0u64;
                let mut local_closed: HashMap<NodeId, u64> = HashMap::new();
                for &v in slice {
                    let hv = &higher[&v];
                    for &u in hv {
                        let found = intersect_sorted(hv, &higher[&u], |w| {
                            *local_closed.entry(w).or_insert(0) += 1;
                        });
                        if found > 0 {
                            local_total += found;
                            *local_closed.entry(v).or_insert(0) += found;
                            *local_closed.entry(u).or_insert(0) += found;
                        }
                    }
                }
                (local_total, local_closed)
            }));
        }
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    for (t, c) in partials {
        total += t;
        for (v, k) in c {
            *closed.get_mut(&v).unwrap() += k;
        }
    }
    TriangleCounts {
        total,
        closed,
        pairs,
    }
}

/// Per-node and average local clustering coefficient. Nodes of degree < 2
/// contribute 0, and the average runs over all nodes.
pub fn clustering_coefficient<F: Scalar>(g: &UndirectedGraph) -> (F, HashMap<NodeId, F>) {
    let tri = count_triangles(g);
    let mut per_node = HashMap::with_capacity(g.node_count());
    let mut sum = F::zero();
    for id in g.node_ids() {
        let pairs = tri.pairs[&id];
        let c = if pairs == 0 {
            F::zero()
        } else {
            F::from_f64_(tri.closed[&id] as f64 / pairs as f64)
        };
        sum += c;
        per_node.insert(id, c);
    }
    let n = g.node_count();
    let avg = if n == 0 {
        F::zero()
    } else {
        sum / F::from_usize_(n)
    };
    (avg, per_node)
}

/// Core number of every node via minimum-degree bucket peeling, O(n + m).
pub fn core_decomposition(g: &UndirectedGraph) -> HashMap<NodeId, usize> {
    let ids = g.node_ids();
    let n = ids.len();
    let mut deg: HashMap<NodeId, usize> = ids
        .iter()
        .map(|&v| (v, simple_neighbors(g, v).len()))
        .collect();
    // Bucket sort nodes by degree, then peel in ascending degree order,
    // demoting neighbors as their effective degree drops.
    let max_deg = deg.values().copied().max().unwrap_or(0);
    let mut bins: Vec<usize> = vec![0; max_deg + 2];
    for &d in deg.values() {
        bins[d + 1] += 1;
    }
    for i in 1..bins.len() {
        bins[i] += bins[i - 1];
    }
    let mut order: Vec<NodeId> = vec![NodeId::new(0); n];
    let mut pos: HashMap<NodeId, usize> = HashMap::with_capacity(n);
    {
        let mut fill = bins.clone();
        for &v in &ids {
            let p = fill[deg[&v]];
            order[p] = v;
            pos.insert(v, p);
            fill[deg[&v]] += 1;
        }
    }
    let mut bin_start = bins; // bin_start[d] = first index of degree-d block
    let mut core = HashMap::with_capacity(n);
    for i in 0..n {
        let v = order[i];
        let dv = deg[&v];
        core.insert(v, dv);
        for u in simple_neighbors(g, v) {
            if deg[&u] > dv {
                // swap u with the first node of its degree block, then
                // shrink the block so u lands in the (deg-1) block
                let du = deg[&u];
                let pu = pos[&u];
                let pw = bin_start[du];
                let w = order[pw];
                if u != w {
                    order.swap(pu, pw);
                    pos.insert(u, pw);
                    pos.insert(w, pu);
                }
                bin_start[du] += 1;
                deg.insert(u, du - 1);
            }
        }
    }
    core
}

/// Maximal induced subgraph of minimum degree ≥ k (possibly empty),
/// node ids preserved.
pub fn k_core(g: &UndirectedGraph, k: usize) -> UndirectedGraph {
    let core = core_decomposition(g);
    let keep: HashSet<NodeId> = core
        .into_iter()
        .filter(|&(_, c)| c >= k)
        .map(|(v, _)| v)
        .collect();
    subgraph(g, &keep)
}

/// The 16 directed-triad isomorphism classes in standard census order.
pub const TRIAD_NAMES: [&str; 16] = [
    "003", "012", "102", "021D", "021U", "021C", "111D", "111U", "030T", "030C", "201", "120D",
    "120U", "120C", "210", "300",
];

/// Counts of node triples by directed-triad class, indexed like
/// [`TRIAD_NAMES`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriadCensus {
    pub counts: [u64; 16],
}

impl TriadCensus {
    pub fn get(&self, name: &str) -> u64 {
        let idx = TRIAD_NAMES.iter().position(|&n| n == name).unwrap();
        self.counts[idx]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Triad class (1..=16) for each 6-bit edge code; see [`triad_code`] for the
/// bit layout.
const TRICODES: [u8; 64] = [
    1, 2, 2, 3, 2, 4, 6, 8, 2, 6, 5, 7, 3, 8, 7, 11, 2, 6, 4, 8, 5, 9, 9, 13, 6, 10, 9, 14, 7,
    14, 12, 15, 2, 5, 6, 7, 6, 9, 10, 14, 4, 9, 9, 12, 8, 13, 14, 15, 3, 7, 8, 11, 7, 12, 14, 15,
    8, 14, 13, 15, 11, 15, 15, 16,
];

/// Bit i set iff the i-th ordered pair of (v,u,w) is an edge:
/// (v,u) (u,v) (v,w) (w,v) (u,w) (w,u).
fn triad_code(g: &DirectedGraph, v: NodeId, u: NodeId, w: NodeId) -> usize {
    let pairs = [(v, u), (u, v), (v, w), (w, v), (u, w), (w, u)];
    let mut code = 0;
    for (i, &(a, b)) in pairs.iter().enumerate() {
        if g.is_edge(a, b) {
            code |= 1 << i;
        }
    }
    code
}

/// Census of all C(n,3) node triples by the 16 directed-triad classes,
/// using node-ordered edge enumeration — O(Σ_v deg(v)²) rather than O(n³).
/// Self-loops are ignored.
pub fn triad_census(g: &DirectedGraph) -> TriadCensus {
    let n = g.node_count() as u64;
    let mut counts = [0u64; 16];
    // undirected neighbor sets, self excluded
    let ids = g.node_ids();
    let nbrs: HashMap<NodeId, HashSet<NodeId>> = ids
        .iter()
        .map(|&v| {
            let mut s: HashSet<NodeId> = g.out_neighbors(v).chain(g.in_neighbors(v)).collect();
            s.remove(&v);
            (v, s)
        })
        .collect();
    for &v in &ids {
        let vn = &nbrs[&v];
        for &u in vn {
            if u <= v {
                continue;
            }
            let un = &nbrs[&u];
            let mut third: HashSet<NodeId> = vn.union(un).copied().collect();
            third.remove(&u);
            third.remove(&v);
            for &w in &third {
                if u < w || (v < w && w < u && !nbrs[&w].contains(&v)) {
                    let class = TRICODES[triad_code(g, v, u, w)] as usize;
                    counts[class - 1] += 1;
                }
            }
            // triples where the third node touches neither v nor u
            let dyad = if g.is_edge(v, u) && g.is_edge(u, v) {
                2 // "102"
            } else {
                1 // "012"
            };
            counts[dyad] += n - third.len() as u64 - 2;
        }
    }
    let connected: u64 = counts.iter().sum();
    counts[0] = n * n.saturating_sub(1) * n.saturating_sub(2) / 6 - connected;
    TriadCensus { counts }
}

/// Result of [`leading_eigenvalue`].
#[derive(Clone, Debug)]
pub struct EigenEstimate<F> {
    pub value: F,
    /// Unit 2-norm, first nonzero entry (ascending id) positive.
    pub vector: HashMap<NodeId, F>,
    pub converged: bool,
    pub iterations: usize,
}

/// Leading adjacency eigenpair by power iteration over neighbor-sum sweeps.
/// Iterates on A + I (same eigenvectors, spectrum shifted by one) so
/// bipartite ±λ pairs cannot stall convergence, then shifts back.
/// Connected input is recommended; disconnection is not rejected.
pub fn leading_eigenvalue<F: Scalar>(g: &UndirectedGraph) -> Result<EigenEstimate<F>> {
    if g.is_empty() {
        return Err(GraphError::EmptyGraph);
    }
    let ids = g.node_ids();
    let n = ids.len();
    let index: HashMap<NodeId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut x = vec![F::from_f64_(1.0 / (n as f64).sqrt()); n];
    let mut y = vec![F::zero(); n];
    let tol = F::from_f64_(1e-9);
    let mut lambda = F::zero();
    let mut converged = false;
    let mut iterations = 0;
    for it in 1..=1000 {
        iterations = it;
        for (i, &v) in ids.iter().enumerate() {
            let mut acc = x[i]; // the +I shift
            for u in g.neighbors(v).unwrap_or(&[]) {
                acc += x[index[u]];
            }
            y[i] = acc;
        }
        // Rayleigh quotient of the shifted operator (x has unit norm)
        let shifted: F = ids.iter().enumerate().map(|(i, _)| x[i] * y[i]).sum();
        let norm = y.iter().map(|&v| v * v).sum::<F>().sqrt();
        if norm == F::zero() {
            break; // edgeless graph stays at the shift eigenvalue
        }
        for v in &mut y {
            *v /= norm;
        }
        // y now holds the normalized next iterate; x still the previous one.
        // The eigenvalue settles quadratically but the vector only linearly,
        // so convergence requires both to stop moving.
        let drift = x
            .iter()
            .zip(&y)
            .map(|(&a, &b)| (a - b).abs())
            .fold(F::zero(), F::max);
        std::mem::swap(&mut x, &mut y);
        let next = shifted - F::one();
        let scale = F::one().max(next.abs());
        if it > 1 && (next - lambda).abs() <= tol * scale && drift <= tol {
            lambda = next;
            converged = true;
            break;
        }
        lambda = next;
    }
    // canonical sign: first nonzero entry in ascending id order positive
    if let Some(first) = x.iter().find(|&&v| v != F::zero()) {
        if *first < F::zero() {
            for v in &mut x {
                *v = -*v;
            }
        }
    }
    let vector = ids.iter().zip(&x).map(|(&v, &s)| (v, s)).collect();
    Ok(EigenEstimate {
        value: lambda,
        vector,
        converged,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphMut;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn n(v: u32) -> NodeId {
        NodeId::new(v)
    }

    fn complete(k: u32) -> UndirectedGraph {
        let mut g = UndirectedGraph::new();
        for i in 0..k {
            g.add_node(n(i)).unwrap();
        }
        for i in 0..k {
            for j in (i + 1)..k {
                g.add_edge(n(i), n(j)).unwrap();
            }
        }
        g
    }

    fn star(leaves: u32) -> UndirectedGraph {
        let mut g = UndirectedGraph::new();
        for i in 0..=leaves {
            g.add_node(n(i)).unwrap();
        }
        for i in 1..=leaves {
            g.add_edge(n(0), n(i)).unwrap();
        }
        g
    }

    fn random_undirected(nodes: u32, p: f64, rng: &mut ChaCha8Rng) -> UndirectedGraph {
        let mut g = UndirectedGraph::new();
        for i in 0..nodes {
            g.add_node(n(i)).unwrap();
        }
        for i in 0..nodes {
            for j in (i + 1)..nodes {
                if rng.gen_bool(p) {
                    g.add_edge(n(i), n(j)).unwrap();
                }
            }
        }
        g
    }

    fn brute_triangles(g: &UndirectedGraph) -> u64 {
        let ids = g.node_ids();
        let mut t = 0;
        for (i, &a) in ids.iter().enumerate() {
            for (j, &b) in ids.iter().enumerate().skip(i + 1) {
                for &c in ids.iter().skip(j + 1) {
                    if g.is_edge(a, b) && g.is_edge(b, c) && g.is_edge(a, c) {
                        t += 1;
                    }
                }
            }
        }
        t
    }

    #[test]
    fn degree_summary_basics() {
        let s = degree_summary(&complete(4), DegreeKind::Total);
        assert_eq!(s.histogram.len(), 1);
        assert_eq!(s.histogram[&3], 4);
        assert_eq!(s.mean, 3.0);
        let s = degree_summary(&star(4), DegreeKind::Total);
        assert_eq!(s.histogram[&4], 1);
        assert_eq!(s.histogram[&1], 4);
        assert_eq!(s.min, 1);
        assert_eq!(s.max, 4);
    }

    #[test]
    fn degree_summary_handshake_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let g = random_undirected(30, 0.15, &mut rng);
            let s = degree_summary(&g, DegreeKind::Total);
            let weighted: u64 = s.histogram.iter().map(|(&d, &c)| d as u64 * c).sum();
            assert_eq!(weighted, 2 * g.edge_count() as u64);
        }
    }

    #[test]
    fn triangles_k4_and_star() {
        let t = count_triangles(&complete(4));
        assert_eq!(t.total, 4);
        for i in 0..4 {
            assert_eq!(t.closed[&n(i)], 3);
            assert_eq!(t.pairs[&n(i)], 3);
        }
        assert_eq!(count_triangles(&star(5)).total, 0);
    }

    #[test]
    fn triangles_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let g = random_undirected(24, 0.2, &mut rng);
            let t = count_triangles(&g);
            assert_eq!(t.total, brute_triangles(&g));
            let closed_sum: u64 = t.closed.values().sum();
            assert_eq!(closed_sum, 3 * t.total);
        }
    }

    #[test]
    fn parallel_triangles_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = random_undirected(60, 0.1, &mut rng);
        let serial = count_triangles(&g);
        for threads in [2, 3, 8] {
            assert_eq!(count_triangles_par(&g, threads), serial);
        }
    }

    #[test]
    fn clustering_triangle_and_star() {
        let (avg, per) = clustering_coefficient::<f64>(&complete(3));
        assert_eq!(avg, 1.0);
        assert!(per.values().all(|&c| c == 1.0));
        let (avg, _) = clustering_coefficient::<f64>(&star(5));
        assert_eq!(avg, 0.0);
    }

    #[test]
    fn clustering_ring_lattice_closed_form() {
        // ring lattice, k_half = 2: per-node clustering 3(k_half−1)/(2(2k_half−1)) = 0.5
        let nodes = 20u32;
        let mut g = UndirectedGraph::new();
        for i in 0..nodes {
            g.add_node(n(i)).unwrap();
        }
        for i in 0..nodes {
            for d in 1..=2 {
                g.add_edge(n(i), n((i + d) % nodes)).unwrap();
            }
        }
        let (avg, per) = clustering_coefficient::<f64>(&g);
        assert!((avg - 0.5).abs() < 1e-12);
        assert!(per.values().all(|&c| (c - 0.5).abs() < 1e-12));
    }

    #[test]
    fn core_numbers_k4_and_tree() {
        let core = core_decomposition(&complete(4));
        assert!(core.values().all(|&c| c == 3));
        // star is a tree: 1-core is everything, 2-core empty
        let g = star(5);
        let core = core_decomposition(&g);
        assert!(core.values().all(|&c| c == 1));
        assert_eq!(k_core(&g, 1).node_count(), 6);
        assert_eq!(k_core(&g, 2).node_count(), 0);
    }

    fn peel_oracle(g: &UndirectedGraph, k: usize) -> HashSet<NodeId> {
        let mut keep: HashSet<NodeId> = g.node_ids().into_iter().collect();
        loop {
            let doomed: Vec<NodeId> = keep
                .iter()
                .filter(|&&v| {
                    g.neighbors(v)
                        .unwrap_or(&[])
                        .iter()
                        .filter(|&&u| u != v && keep.contains(&u))
                        .count()
                        < k
                })
                .copied()
                .collect();
            if doomed.is_empty() {
                return keep;
            }
            for v in doomed {
                keep.remove(&v);
            }
        }
    }

    #[test]
    fn k_core_matches_repeated_deletion() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..40 {
            let g = random_undirected(28, 0.18, &mut rng);
            let core = core_decomposition(&g);
            let max_core = core.values().copied().max().unwrap_or(0);
            for k in 0..=(max_core + 1) {
                let expect = peel_oracle(&g, k);
                let got: HashSet<NodeId> = k_core(&g, k).node_ids().into_iter().collect();
                assert_eq!(got, expect, "k={k}");
            }
        }
    }

    #[test]
    fn triangle_results_survive_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = random_undirected(20, 0.25, &mut rng);
        // shift every id by 100: totals must match, per-node counts follow ids
        let mut h = UndirectedGraph::new();
        for v in g.node_ids() {
            h.add_node(n(v.value() + 100)).unwrap();
        }
        for e in g.edges() {
            h.add_edge(n(e.src.value() + 100), n(e.dst.value() + 100))
                .unwrap();
        }
        let tg = count_triangles(&g);
        let th = count_triangles(&h);
        assert_eq!(tg.total, th.total);
        for v in g.node_ids() {
            assert_eq!(tg.closed[&v], th.closed[&n(v.value() + 100)]);
        }
    }

    // --- triad census ---

    fn digraph(nodes: u32, edges: &[(u32, u32)]) -> DirectedGraph {
        let mut g = DirectedGraph::new();
        for i in 0..nodes {
            g.add_node(n(i)).unwrap();
        }
        for &(a, b) in edges {
            g.add_edge(n(a), n(b)).unwrap();
        }
        g
    }

    /// Canonical representatives for the 16 classes on nodes {0,1,2}.
    fn triad_representatives() -> Vec<(&'static str, Vec<(u32, u32)>)> {
        vec![
            ("003", vec![]),
            ("012", vec![(0, 1)]),
            ("102", vec![(0, 1), (1, 0)]),
            ("021D", vec![(1, 0), (1, 2)]),
            ("021U", vec![(0, 1), (2, 1)]),
            ("021C", vec![(0, 1), (1, 2)]),
            ("111D", vec![(0, 2), (1, 2), (2, 0)]),
            ("111U", vec![(0, 2), (2, 0), (2, 1)]),
            ("030T", vec![(0, 1), (0, 2), (2, 1)]),
            ("030C", vec![(0, 2), (1, 0), (2, 1)]),
            ("201", vec![(0, 1), (1, 0), (0, 2), (2, 0)]),
            ("120D", vec![(0, 2), (1, 0), (1, 2), (2, 0)]),
            ("120U", vec![(0, 1), (0, 2), (2, 0), (2, 1)]),
            ("120C", vec![(0, 1), (0, 2), (1, 2), (2, 0)]),
            ("210", vec![(0, 1), (0, 2), (1, 2), (2, 0), (2, 1)]),
            (
                "300",
                vec![(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)],
            ),
        ]
    }

    /// Isomorphism-canonical form of the induced triad on (a,b,c): the
    /// minimum 6-bit edge code over all 6 orderings of the triple.
    fn canon_code(g: &DirectedGraph, a: NodeId, b: NodeId, c: NodeId) -> usize {
        let perms = [
            (a, b, c),
            (a, c, b),
            (b, a, c),
            (b, c, a),
            (c, a, b),
            (c, b, a),
        ];
        perms
            .iter()
            .map(|&(x, y, z)| triad_code(g, x, y, z))
            .min()
            .unwrap()
    }

    /// Independent census: classify every triple by canonical code matched
    /// against hand-built representative graphs.
    fn census_oracle(g: &DirectedGraph) -> HashMap<&'static str, u64> {
        let mut by_code: HashMap<usize, &'static str> = HashMap::new();
        for (name, edges) in triad_representatives() {
            let rep = digraph(3, &edges);
            by_code.insert(canon_code(&rep, n(0), n(1), n(2)), name);
        }
        assert_eq!(by_code.len(), 16);
        let ids = g.node_ids();
        let mut counts: HashMap<&'static str, u64> = HashMap::new();
        for (i, &a) in ids.iter().enumerate() {
            for (j, &b) in ids.iter().enumerate().skip(i + 1) {
                for &c in ids.iter().skip(j + 1) {
                    let name = by_code[&canon_code(g, a, b, c)];
                    *counts.entry(name).or_insert(0) += 1;
                }
            }
        }
        counts
    }

    #[test]
    fn triad_census_trivial_cases() {
        let census = triad_census(&digraph(3, &[]));
        assert_eq!(census.get("003"), 1);
        assert_eq!(census.total(), 1);
        let census = triad_census(&digraph(3, &[(0, 1), (1, 2), (2, 0)]));
        assert_eq!(census.get("030C"), 1);
        assert_eq!(census.total(), 1);
    }

    #[test]
    fn triad_census_matches_isomorphism_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for trial in 0..80 {
            let nodes = rng.gen_range(3..=12);
            let p = rng.gen_range(0.05..0.5);
            let mut g = DirectedGraph::new();
            for i in 0..nodes {
                g.add_node(n(i)).unwrap();
            }
            for i in 0..nodes {
                for j in 0..nodes {
                    if i != j && rng.gen_bool(p) {
                        g.add_edge(n(i), n(j)).unwrap();
                    }
                }
            }
            let fast = triad_census(&g);
            let slow = census_oracle(&g);
            for (idx, &name) in TRIAD_NAMES.iter().enumerate() {
                assert_eq!(
                    fast.counts[idx],
                    slow.get(name).copied().unwrap_or(0),
                    "trial {trial} class {name}"
                );
            }
            let nn = nodes as u64;
            assert_eq!(fast.total(), nn * (nn - 1) * (nn - 2) / 6);
        }
    }

    // --- eigenpair ---

    fn residual_inf(g: &UndirectedGraph, est: &EigenEstimate<f64>) -> f64 {
        let mut worst: f64 = 0.0;
        for v in g.node_ids() {
            let ax: f64 = g
                .neighbors(v)
                .unwrap_or(&[])
                .iter()
                .map(|u| est.vector[u])
                .sum();
            worst = worst.max((ax - est.value * est.vector[&v]).abs());
        }
        worst
    }

    #[test]
    fn eigen_complete_graph() {
        let g = complete(6);
        let est = leading_eigenvalue::<f64>(&g).unwrap();
        assert!(est.converged);
        assert!((est.value - 5.0).abs() < 1e-7);
        let first = est.vector[&n(0)];
        assert!(first > 0.0);
        for v in est.vector.values() {
            assert!((v - first).abs() < 1e-7);
        }
        assert!(residual_inf(&g, &est) < 1e-6);
    }

    #[test]
    fn eigen_star_sqrt_leaves() {
        let g = star(9);
        let est = leading_eigenvalue::<f64>(&g).unwrap();
        assert!(est.converged);
        assert!((est.value - 3.0).abs() < 1e-7);
        assert!(residual_inf(&g, &est) < 1e-6);
    }

    #[test]
    fn eigen_cycle_is_two() {
        let mut g = UndirectedGraph::new();
        for i in 0..12 {
            g.add_node(n(i)).unwrap();
        }
        for i in 0..12 {
            g.add_edge(n(i), n((i + 1) % 12)).unwrap();
        }
        let est = leading_eigenvalue::<f64>(&g).unwrap();
        assert!((est.value - 2.0).abs() < 1e-6);
        assert!(residual_inf(&g, &est) < 1e-6);
        assert!(leading_eigenvalue::<f64>(&UndirectedGraph::new()).is_err());
    }
}
