//! Deterministic (regular) and seeded-random graph generators. Every
//! randomized generator is a pure function of its parameters and the 64-bit
//! seed: same inputs, identical output graph (node ids and edges).

use crate::graph::{GraphMut, GraphView, UndirectedGraph};
use crate::DirectedGraph;
use crate::ids::NodeId;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("bad generator parameter: {0}")]
    BadParameter(String),
    #[error("requested {requested} edges but at most {max} fit")]
    TooManyEdges { requested: usize, max: usize },
    #[error("degree sequence is not graphical")]
    NotGraphical,
    #[error("generator gave up: {0}")]
    Exhausted(String),
}

pub type GenResult<T> = std::result::Result<T, GenError>;

fn n(v: u32) -> NodeId {
    NodeId::new(v)
}

fn with_nodes(count: u32) -> UndirectedGraph {
    let mut g = UndirectedGraph::with_capacity(count as usize);
    for i in 0..count {
        g.add_node(n(i)).unwrap();
    }
    g
}

fn digraph_with_nodes(count: u32) -> DirectedGraph {
    let mut g = DirectedGraph::with_capacity(count as usize);
    for i in 0..count {
        g.add_node(n(i)).unwrap();
    }
    g
}

fn require(cond: bool, msg: &str) -> GenResult<()> {
    if cond {
        Ok(())
    } else {
        Err(GenError::BadParameter(msg.to_string()))
    }
}

/// Complete graph K_n on ids 0..n−1, n(n−1)/2 edges.
pub fn gen_complete(nodes: u32) -> GenResult<UndirectedGraph> {
    require(nodes >= 1, "complete graph needs >= 1 node")?;
    let mut g = with_nodes(nodes);
    for i in 0..nodes {
        for j in (i + 1)..nodes {
            g.add_edge(n(i), n(j)).unwrap();
        }
    }
    Ok(g)
}

/// Cycle C_n on ids 0..n−1, exactly n edges.
pub fn gen_circle(nodes: u32) -> GenResult<UndirectedGraph> {
    require(nodes >= 3, "circle needs >= 3 nodes")?;
    let mut g = with_nodes(nodes);
    for i in 0..nodes {
        g.add_edge(n(i), n((i + 1) % nodes)).unwrap();
    }
    Ok(g)
}

/// rows×cols grid: r·c nodes in row-major id order, 2rc−r−c edges.
pub fn gen_grid(rows: u32, cols: u32) -> GenResult<UndirectedGraph> {
    require(rows >= 1 && cols >= 1, "grid needs positive dimensions")?;
    let mut g = with_nodes(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let id = r * cols + c;
            if c + 1 < cols {
                g.add_edge(n(id), n(id + 1)).unwrap();
            }
            if r + 1 < rows {
                g.add_edge(n(id), n(id + cols)).unwrap();
            }
        }
    }
    Ok(g)
}

/// Star: center id 0, n−1 leaves.
pub fn gen_star(nodes: u32) -> GenResult<UndirectedGraph> {
    require(nodes >= 1, "star needs >= 1 node")?;
    let mut g = with_nodes(nodes);
    for i in 1..nodes {
        g.add_edge(n(0), n(i)).unwrap();
    }
    Ok(g)
}

/// Complete f-ary tree of the given depth: (f^(d+1)−1)/(f−1) nodes
/// (d+1 for f = 1), breadth-first id order with the root at 0.
pub fn gen_tree(fanout: u32, depth: u32) -> GenResult<UndirectedGraph> {
    require(fanout >= 1, "tree fan-out must be >= 1")?;
    let nodes: u64 = if fanout == 1 {
        u64::from(depth) + 1
    } else {
        (u64::from(fanout).pow(depth + 1) - 1) / (u64::from(fanout) - 1)
    };
    require(nodes <= u64::from(u32::MAX), "tree too large")?;
    let nodes = nodes as u32;
    let mut g = with_nodes(nodes);
    for child in 1..nodes {
        let parent = (child - 1) / fanout;
        g.add_edge(n(parent), n(child)).unwrap();
    }
    Ok(g)
}

/// Erdős–Rényi G(n,m): exactly n nodes and m distinct edges, uniformly
/// sampled by rejection (self-loops and duplicates redrawn). Works for any
/// simple container via the default-constructed `G`.
pub fn gen_gnm<G: GraphMut + Default>(nodes: u32, edges: usize, seed: u64) -> GenResult<G> {
    require(nodes >= 1, "gnm needs >= 1 node")?;
    let mut g = G::default();
    for i in 0..nodes {
        g.add_node(n(i)).unwrap();
    }
    let nn = nodes as usize;
    let max = if g.is_directed() {
        nn * (nn - 1)
    } else {
        nn * (nn - 1) / 2
    };
    if edges > max {
        return Err(GenError::TooManyEdges {
            requested: edges,
            max,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut placed = 0;
    while placed < edges {
        let a = rng.gen_range(0..nodes);
        let b = rng.gen_range(0..nodes);
        if a == b || g.is_edge(n(a), n(b)) {
            continue;
        }
        g.add_edge(n(a), n(b)).unwrap();
        placed += 1;
    }
    Ok(g)
}

/// Random bipartite graph: parts 0..n1−1 and n1..n1+n2−1, all m edges cross.
pub fn gen_bipartite_random(n1: u32, n2: u32, edges: usize, seed: u64) -> GenResult<UndirectedGraph> {
    require(n1 >= 1 && n2 >= 1, "bipartite parts must be non-empty")?;
    let max = n1 as usize * n2 as usize;
    if edges > max {
        return Err(GenError::TooManyEdges {
            requested: edges,
            max,
        });
    }
    let mut g = with_nodes(n1 + n2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut placed = 0;
    while placed < edges {
        let a = rng.gen_range(0..n1);
        let b = n1 + rng.gen_range(0..n2);
        if g.is_edge(n(a), n(b)) {
            continue;
        }
        g.add_edge(n(a), n(b)).unwrap();
        placed += 1;
    }
    Ok(g)
}

/// k-regular graph on n nodes (n·k even, k < n) via the configuration model
/// with collision repair.
pub fn gen_constant_degree(nodes: u32, k: usize, seed: u64) -> GenResult<UndirectedGraph> {
    require(k < nodes as usize, "degree must be below node count")?;
    require((nodes as usize * k) % 2 == 0, "n·k must be even")?;
    gen_degree_sequence(&vec![k; nodes as usize], seed)
}

/// Erdős–Gallai graphicality test on an arbitrary-order degree sequence.
fn erdos_gallai(seq: &[usize]) -> bool {
    let mut d: Vec<usize> = seq.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let n = d.len();
    if d.iter().sum::<usize>() % 2 != 0 {
        return false;
    }
    if d.first().map_or(false, |&top| top >= n) {
        return false;
    }
    let mut lhs = 0usize;
    for k in 1..=n {
        lhs += d[k - 1];
        let rhs = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

type Pair = (u32, u32);

fn norm(a: u32, b: u32) -> Pair {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Simple graph with node i having degree seq[i] exactly: stub matching
/// followed by double-edge-swap repair of self-loops and duplicates.
pub fn gen_degree_sequence(seq: &[usize], seed: u64) -> GenResult<UndirectedGraph> {
    require(!seq.is_empty(), "degree sequence must be non-empty")?;
    if !erdos_gallai(seq) {
        return Err(GenError::NotGraphical);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<u32> = Vec::new();
    for (i, &d) in seq.iter().enumerate() {
        stubs.extend(std::iter::repeat(i as u32).take(d));
    }
    'restart: for _ in 0..50 {
        stubs.shuffle(&mut rng);
        let mut edges: Vec<Pair> = stubs.chunks(2).map(|c| norm(c[0], c[1])).collect();
        let mut counts: HashMap<Pair, usize> = HashMap::new();
        for &e in &edges {
            *counts.entry(e).or_insert(0) += 1;
        }
        let is_bad =
            |e: Pair, counts: &HashMap<Pair, usize>| e.0 == e.1 || counts[&e] > 1;
        let budget = 200 * edges.len().max(1);
        for _ in 0..budget {
            let bad: Vec<usize> = (0..edges.len())
                .filter(|&i| is_bad(edges[i], &counts))
                .collect();
            if bad.is_empty() {
                let mut g = with_nodes(seq.len() as u32);
                for (a, b) in edges {
                    g.add_edge(n(a), n(b)).unwrap();
                }
                return Ok(g);
            }
            let i = *bad.choose(&mut rng).unwrap();
            let j = rng.gen_range(0..edges.len());
            if i == j {
                continue;
            }
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            // swap (a,b),(c,d) → (a,d),(c,b)
            let p1 = norm(a, d);
            let p2 = norm(c, b);
            if p1.0 == p1.1 || p2.0 == p2.1 || p1 == p2 {
                continue;
            }
            let c1 = counts.get(&p1).copied().unwrap_or(0);
            let c2 = counts.get(&p2).copied().unwrap_or(0);
            if c1 > 0 || c2 > 0 {
                continue;
            }
            for e in [edges[i], edges[j]] {
                let slot = counts.get_mut(&e).unwrap();
                *slot -= 1;
                if *slot == 0 {
                    counts.remove(&e);
                }
            }
            edges[i] = p1;
            edges[j] = p2;
            *counts.entry(p1).or_insert(0) += 1;
            *counts.entry(p2).or_insert(0) += 1;
        }
        continue 'restart;
    }
    Err(GenError::Exhausted(
        "degree-sequence repair did not converge".to_string(),
    ))
}

/// Barabási–Albert preferential attachment: a k_out-node seed clique, then
/// each new node draws k_out distinct degree-proportional targets
/// (repeated endpoints redrawn).
pub fn gen_barabasi_albert(nodes: u32, k_out: usize, seed: u64) -> GenResult<UndirectedGraph> {
    require(k_out >= 1, "k_out must be >= 1")?;
    require(nodes as usize > k_out, "need more nodes than k_out")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let clique = k_out as u32;
    let mut g = with_nodes(nodes);
    // endpoints holds each node id once per incident edge
    let mut endpoints: Vec<u32> = Vec::new();
    for i in 0..clique {
        for j in (i + 1)..clique {
            g.add_edge(n(i), n(j)).unwrap();
            endpoints.push(i);
            endpoints.push(j);
        }
    }
    if clique == 1 {
        // a 1-node clique has no edges; seed the endpoint pool with node 0
        endpoints.push(0);
    }
    for t in clique..nodes {
        let mut picked: HashSet<u32> = HashSet::with_capacity(k_out);
        while picked.len() < k_out {
            let target = endpoints[rng.gen_range(0..endpoints.len())];
            picked.insert(target);
        }
        let mut picked: Vec<u32> = picked.into_iter().collect();
        picked.sort_unstable();
        for target in picked {
            g.add_edge(n(t), n(target)).unwrap();
            endpoints.push(t);
            endpoints.push(target);
        }
    }
    Ok(g)
}

/// Watts–Strogatz small world: ring lattice with k_half neighbors per side,
/// each edge's far endpoint rewired with probability beta to a uniform
/// non-duplicate target. Edge count is exactly n·k_half.
pub fn gen_watts_strogatz(
    nodes: u32,
    k_half: u32,
    beta: f64,
    seed: u64,
) -> GenResult<UndirectedGraph> {
    require(k_half >= 1, "k_half must be >= 1")?;
    require(nodes > 2 * k_half, "need n > 2·k_half")?;
    require((0.0..=1.0).contains(&beta), "beta must be in [0, 1]")?;
    let mut g = with_nodes(nodes);
    for i in 0..nodes {
        for d in 1..=k_half {
            g.add_edge(n(i), n((i + d) % nodes)).unwrap();
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..nodes {
        for d in 1..=k_half {
            if !rng.gen_bool(beta) {
                continue;
            }
            let old = (i + d) % nodes;
            if !g.is_edge(n(i), n(old)) {
                continue; // already rewired away by an earlier step
            }
            if g.degree(n(i)).unwrap() as u32 >= nodes - 1 {
                continue; // saturated node: no legal new target
            }
            let target = loop {
                let w = rng.gen_range(0..nodes);
                if w != i && !g.is_edge(n(i), n(w)) {
                    break w;
                }
            };
            g.del_edge(n(i), n(old)).unwrap();
            g.add_edge(n(i), n(target)).unwrap();
        }
    }
    Ok(g)
}

/// R-MAT: n = 2^scale nodes, m directed edges placed by recursive quadrant
/// descent with probabilities (a, b, c, 1−a−b−c); duplicates and self-loops
/// are redrawn.
pub fn gen_rmat(
    scale: u32,
    edges: usize,
    a: f64,
    b: f64,
    c: f64,
    seed: u64,
) -> GenResult<DirectedGraph> {
    require(scale >= 1 && scale <= 30, "scale must be in 1..=30")?;
    require(
        a >= 0.0 && b >= 0.0 && c >= 0.0 && a + b + c <= 1.0,
        "quadrant probabilities must be non-negative and sum to <= 1",
    )?;
    let nodes: u64 = 1 << scale;
    let max = (nodes * (nodes - 1)) as usize;
    if edges > max {
        return Err(GenError::TooManyEdges {
            requested: edges,
            max,
        });
    }
    let mut g = digraph_with_nodes(nodes as u32);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut placed = 0;
    while placed < edges {
        let (mut u, mut v) = (0u32, 0u32);
        for _ in 0..scale {
            u <<= 1;
            v <<= 1;
            let x: f64 = rng.gen();
            if x < a {
                // top-left: no bits
            } else if x < a + b {
                v |= 1;
            } else if x < a + b + c {
                u |= 1;
            } else {
                u |= 1;
                v |= 1;
            }
        }
        if u == v || g.is_edge(n(u), n(v)) {
            continue;
        }
        g.add_edge(n(u), n(v)).unwrap();
        placed += 1;
    }
    Ok(g)
}

/// Stochastic Kronecker graph: edge (u,v) appears with probability
/// Π_t initiator[digit_t(u)][digit_t(v)] over the base-k digits of u and v.
/// Small graphs (≤ 2^13 nodes) flip a coin per node pair; larger ones draw
/// an (approximately Poisson) edge count and place edges by probability-
/// proportional quadrant descent, deduplicating.
pub fn gen_kronecker(
    initiator: &[Vec<f64>],
    iterations: u32,
    seed: u64,
) -> GenResult<DirectedGraph> {
    let k = initiator.len();
    require(k >= 2, "initiator must be at least 2×2")?;
    require(
        initiator.iter().all(|row| row.len() == k),
        "initiator must be square",
    )?;
    require(
        initiator
            .iter()
            .all(|row| row.iter().all(|&p| (0.0..=1.0).contains(&p))),
        "initiator entries must be probabilities",
    )?;
    require(iterations >= 1, "need >= 1 iteration")?;
    let nodes_u64 = (k as u64).checked_pow(iterations).unwrap_or(u64::MAX);
    require(nodes_u64 <= 1 << 30, "k^iterations exceeds 2^30 nodes")?;
    let nodes = nodes_u64 as u32;
    let mut g = digraph_with_nodes(nodes);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prob = |u: u32, v: u32| -> f64 {
        let (mut u, mut v) = (u as usize, v as usize);
        let mut p = 1.0;
        for _ in 0..iterations {
            p *= initiator[u % k][v % k];
            u /= k;
            v /= k;
        }
        p
    };
    if nodes <= 1 << 13 {
        for u in 0..nodes {
            for v in 0..nodes {
                let p = prob(u, v);
                if p > 0.0 && rng.gen_bool(p) {
                    g.add_edge(n(u), n(v)).unwrap();
                }
            }
        }
        return Ok(g);
    }
    // large variant: expected edge count (Σ entries)^iterations, sampled
    // with a normal approximation to the Poisson, then quadrant descent
    let cell_sum: f64 = initiator.iter().flatten().sum();
    let expected = cell_sum.powi(iterations as i32);
    let stddev = expected.sqrt();
    let z: f64 = {
        // Box–Muller standard normal
        let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
        let u2: f64 = rng.gen();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    };
    let target = (expected + stddev * z).round().max(0.0) as u64;
    let mut cells: Vec<(usize, usize, f64)> = Vec::new();
    for (i, row) in initiator.iter().enumerate() {
        for (j, &p) in row.iter().enumerate() {
            if p > 0.0 {
                cells.push((i, j, p / cell_sum));
            }
        }
    }
    let mut placed = 0u64;
    let mut attempts = 0u64;
    let limit = target.saturating_mul(200).max(1000);
    while placed < target && attempts < limit {
        attempts += 1;
        let (mut u, mut v) = (0u64, 0u64);
        for _ in 0..iterations {
            let mut x: f64 = rng.gen();
            let mut pick = cells[cells.len() - 1];
            for &cell in &cells {
                if x < cell.2 {
                    pick = cell;
                    break;
                }
                x -= cell.2;
            }
            u = u * k as u64 + pick.0 as u64;
            v = v * k as u64 + pick.1 as u64;
        }
        let (u, v) = (n(u as u32), n(v as u32));
        if g.is_edge(u, v) {
            continue;
        }
        g.add_edge(u, v).unwrap();
        placed += 1;
    }
    Ok(g)
}

/// Geometric burn size: number of successes before the first failure with
/// continuation probability p.
fn geometric_burn(rng: &mut ChaCha8Rng, p: f64) -> usize {
    if p <= 0.0 {
        return 0;
    }
    let u: f64 = rng.gen_range(f64::EPSILON..1.0);
    (u.ln() / p.ln()).floor() as usize
}

/// Forest Fire: nodes arrive one at a time, pick a uniform ambassador and
/// burn outward — at each burned node a geometric number of out- and
/// in-links spread the fire to unburned neighbors — then the newcomer links
/// to every burned node.
pub fn gen_forest_fire(nodes: u32, p_fwd: f64, p_bwd: f64, seed: u64) -> GenResult<DirectedGraph> {
    require(
        (0.0..1.0).contains(&p_fwd) && (0.0..1.0).contains(&p_bwd),
        "burn probabilities must be in [0, 1)",
    )?;
    require(nodes >= 1, "need >= 1 node")?;
    let mut g = digraph_with_nodes(nodes);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 1..nodes {
        let ambassador = rng.gen_range(0..t);
        let mut burned: HashSet<u32> = HashSet::new();
        let mut order: Vec<u32> = Vec::new();
        burned.insert(ambassador);
        order.push(ambassador);
        let mut next = 0;
        while next < order.len() {
            let v = order[next];
            next += 1;
            let x = geometric_burn(&mut rng, p_fwd);
            let y = geometric_burn(&mut rng, p_bwd);
            let mut spread = |candidates: Vec<u32>, want: usize, rng: &mut ChaCha8Rng| {
                let mut fresh: Vec<u32> = candidates
                    .into_iter()
                    .filter(|c| !burned.contains(c))
                    .collect();
                fresh.sort_unstable();
                fresh.dedup();
                let take = want.min(fresh.len());
                let (chosen, _) = fresh.partial_shuffle(rng, take);
                for &c in chosen.iter() {
                    burned.insert(c);
                    order.push(c);
                }
            };
            let outs: Vec<u32> = g.out_neighbors(n(v)).map(|w| w.value()).collect();
            spread(outs, x, &mut rng);
            let ins: Vec<u32> = g.in_neighbors(n(v)).map(|w| w.value()).collect();
            spread(ins, y, &mut rng);
        }
        order.sort_unstable();
        for v in order {
            g.add_edge(n(t), n(v)).unwrap();
        }
    }
    Ok(g)
}

/// Copying model, single-slot variant: each new node links to a uniform
/// prototype's out-neighbor with probability 1−alpha, else to a uniform
/// existing node. Every non-seed node has out-degree 1.
pub fn gen_copying(nodes: u32, alpha: f64, seed: u64) -> GenResult<DirectedGraph> {
    require((0.0..=1.0).contains(&alpha), "alpha must be in [0, 1]")?;
    require(nodes >= 1, "need >= 1 node")?;
    let mut g = digraph_with_nodes(nodes);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 1..nodes {
        let target = if rng.gen_bool(alpha) {
            rng.gen_range(0..t)
        } else {
            let proto = rng.gen_range(0..t);
            match g.out_degree(n(proto)).unwrap() {
                0 => proto,
                d => g.out_neighbor_at(n(proto), rng.gen_range(0..d)).unwrap().value(),
            }
        };
        g.add_edge(n(t), n(target)).unwrap();
    }
    Ok(g)
}

/// Power-law graph: degrees sampled from P(d) ∝ d^(−gamma) on
/// [1, n^(1/(gamma−1))], parity repaired by incrementing one node, then
/// realized through [`gen_degree_sequence`].
pub fn gen_power_law(nodes: u32, gamma: f64, seed: u64) -> GenResult<UndirectedGraph> {
    require(gamma > 1.0, "gamma must be > 1")?;
    require(nodes >= 2, "need >= 2 nodes")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d_max = ((nodes as f64).powf(1.0 / (gamma - 1.0)).floor() as usize)
        .clamp(1, nodes as usize - 1);
    let weights: Vec<f64> = (1..=d_max).map(|d| (d as f64).powf(-gamma)).collect();
    let total: f64 = weights.iter().sum();
    for _ in 0..100 {
        let mut seq: Vec<usize> = (0..nodes)
            .map(|_| {
                let mut x: f64 = rng.gen_range(0.0..total);
                for (i, &w) in weights.iter().enumerate() {
                    if x < w {
                        return i + 1;
                    }
                    x -= w;
                }
                d_max
            })
            .collect();
        if seq.iter().sum::<usize>() % 2 != 0 {
            // bump one node that has headroom to fix parity
            if let Some(slot) = seq.iter_mut().find(|d| **d < d_max.max(2)) {
                *slot += 1;
            }
        }
        if !erdos_gallai(&seq) {
            continue;
        }
        match gen_degree_sequence(&seq, rng.gen()) {
            Ok(g) => return Ok(g),
            Err(GenError::Exhausted(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(GenError::Exhausted(
        "no graphical power-law sequence after bounded retries".to_string(),
    ))
}

/// Degree-preserving randomization: performs `round(q·m)` successful
/// double-edge swaps ((a,b),(c,d) → (a,d),(c,b)), rejecting swaps that would
/// create self-loops or duplicates. Graphs with no valid swap are returned
/// unchanged.
pub fn rewire<G: GraphMut + Clone>(g: &G, q: f64, seed: u64) -> GenResult<G> {
    require((0.0..=1.0).contains(&q), "q must be in [0, 1]")?;
    let mut out = g.clone();
    let mut edges: Vec<(NodeId, NodeId)> = g.edges().map(|e| (e.src, e.dst)).collect();
    let target = (q * edges.len() as f64).round() as usize;
    if target == 0 || edges.len() < 2 {
        return Ok(out);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let mut attempts = 0usize;
    let budget = 200 * target;
    while done < target && attempts < budget {
        attempts += 1;
        let i = rng.gen_range(0..edges.len());
        let j = rng.gen_range(0..edges.len());
        if i == j {
            continue;
        }
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        if a == d || c == b {
            continue;
        }
        if out.is_edge(a, d) || out.is_edge(c, b) {
            continue;
        }
        if !out.is_directed() && (out.is_edge(d, a) || out.is_edge(b, c)) {
            continue;
        }
        // the two replacement edges must also differ from each other
        if (a, d) == (c, b) || (!out.is_directed() && (a, d) == (b, c)) {
            continue;
        }
        out.del_edge(a, b).unwrap();
        out.del_edge(c, d).unwrap();
        out.add_edge(a, d).unwrap();
        out.add_edge(c, b).unwrap();
        edges[i] = (a, d);
        edges[j] = (c, b);
        done += 1;
    }
    Ok(out)
}
