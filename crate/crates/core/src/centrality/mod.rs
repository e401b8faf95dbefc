//! Node-importance algorithms: PageRank and personalized PageRank (power
//! iteration and a bidirectional push/walk estimator), HITS, and degree,
//! closeness, farness, betweenness and eigenvector centrality.

use crate::analytics::leading_eigenvalue;
use crate::error::{GraphError, Result};
use crate::graph::{GraphView, UndirectedGraph};
use crate::ids::NodeId;
use crate::scalar::Scalar;
use crate::traverse::{bfs, Direction};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// Stopping rule for the iterative score algorithms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum StopRule<F> {
    /// Run exactly this many iterations.
    Iterations(usize),
    /// Run until the L1 change between rounds drops below the bound.
    Tolerance(F),
}

/// Result of [`pagerank`] / [`personalized_pagerank_power`].
#[derive(Clone, Debug)]
pub struct PageRankResult<F> {
    pub scores: HashMap<NodeId, F>,
    pub iterations: usize,
    /// Meaningful in tolerance mode; always true in fixed-iteration mode.
    pub converged: bool,
}

const MAX_TOLERANCE_ITERS: usize = 10_000;

fn validate_distribution<F: Scalar, G: GraphView>(
    g: &G,
    dist: &HashMap<NodeId, F>,
) -> Result<()> {
    let mut sum = F::zero();
    for (&v, &p) in dist {
        if !g.is_node(v) {
            return Err(GraphError::MissingNode(v));
        }
        if p < F::zero() || !p.is_finite() {
            return Err(GraphError::InvalidDistribution(format!(
                "negative or non-finite probability at node {v}"
            )));
        }
        sum += p;
    }
    if (sum - F::one()).abs() > F::from_f64_(1e-12) {
        return Err(GraphError::InvalidDistribution(format!(
            "probabilities sum to {sum:?}, expected 1"
        )));
    }
    Ok(())
}

/// One power-iteration sweep shared by PageRank and personalized PageRank:
/// `next = α·teleport + (1−α)·(Wᵀ s + dangling-mass·teleport)` where W is the
/// out-degree-normalized walk matrix and `teleport` maps node → probability.
fn ppr_sweep<F: Scalar, G: GraphView>(
    g: &G,
    ids: &[NodeId],
    teleport: impl Fn(NodeId) -> F,
    alpha: F,
    s: &HashMap<NodeId, F>,
) -> HashMap<NodeId, F> {
    let follow = F::one() - alpha;
    let mut dangling = F::zero();
    let mut next: HashMap<NodeId, F> = ids.iter().map(|&v| (v, F::zero())).collect();
    for &u in ids {
        let deg = g.out_degree(u).unwrap_or(0);
        let su = s[&u];
        if deg == 0 {
            dangling += su;
        } else {
            let share = follow * su / F::from_usize_(deg);
            for v in g.out_neighbors(u) {
                *next.get_mut(&v).unwrap() += share;
            }
        }
    }
    let dangling = follow * dangling;
    for &v in ids {
        let t = teleport(v);
        *next.get_mut(&v).unwrap() += alpha * t + dangling * t;
    }
    next
}

fn l1_change<F: Scalar>(a: &HashMap<NodeId, F>, b: &HashMap<NodeId, F>) -> F {
    a.iter().map(|(v, &x)| (x - b[v]).abs()).sum()
}

/// PageRank with uniform teleport: per-iteration additive `(1−d)/n` term and
/// dangling-node mass redistributed uniformly, so scores always sum to 1.
pub fn pagerank<F: Scalar, G: GraphView>(
    g: &G,
    damping: F,
    stop: StopRule<F>,
) -> Result<PageRankResult<F>> {
    if g.is_empty() {
        return Err(GraphError::EmptyGraph);
    }
    let ids = g.node_ids();
    let uniform = F::one() / F::from_usize_(ids.len());
    // damping d is the follow probability; the sweep's teleport term is 1−d
    run_ppr(g, &ids, |_| uniform, F::one() - damping, stop)
}

/// Personalized PageRank by power iteration: teleport (and dangling restart)
/// go to the source distribution instead of the uniform one.
pub fn personalized_pagerank_power<F: Scalar, G: GraphView>(
    g: &G,
    source: &HashMap<NodeId, F>,
    alpha: F,
    stop: StopRule<F>,
) -> Result<PageRankResult<F>> {
    if g.is_empty() {
        return Err(GraphError::EmptyGraph);
    }
    validate_distribution(g, source)?;
    let ids = g.node_ids();
    run_ppr(
        g,
        &ids,
        |v| source.get(&v).copied().unwrap_or_else(F::zero),
        alpha,
        stop,
    )
}

fn run_ppr<F: Scalar, G: GraphView>(
    g: &G,
    ids: &[NodeId],
    teleport: impl Fn(NodeId) -> F + Copy,
    alpha: F,
    stop: StopRule<F>,
) -> Result<PageRankResult<F>> {
    let mut s: HashMap<NodeId, F> = ids.iter().map(|&v| (v, teleport(v))).collect();
    let mut iterations = 0;
    let mut converged = true;
    match stop {
        StopRule::Iterations(count) => {
            for _ in 0..count {
                s = ppr_sweep(g, ids, teleport, alpha, &s);
                iterations += 1;
            }
        }
        StopRule::Tolerance(tol) => {
            converged = false;
            for _ in 0..MAX_TOLERANCE_ITERS {
                let next = ppr_sweep(g, ids, teleport, alpha, &s);
                iterations += 1;
                let delta = l1_change(&next, &s);
                s = next;
                if delta < tol {
                    converged = true;
                    break;
                }
            }
        }
    }
    Ok(PageRankResult {
        scores: s,
        iterations,
        converged,
    })
}

/// Source distribution, target and accuracy of a bidirectional personalized
/// PageRank query. `alpha` is the per-step termination probability.
#[derive(Clone, Debug)]
pub struct PprQuery<F> {
    pub source: HashMap<NodeId, F>,
    pub target: NodeId,
    pub alpha: F,
    pub epsilon: F,
}

/// Tuning constants for [`ppr_bidirectional`]. The residual threshold is
/// `eps_r = sqrt(epsilon / mean_out_degree)` and the walk count is
/// `ceil(walk_constant * eps_r / epsilon²)`.
#[derive(Clone, Copy, Debug)]
pub struct PprConfig {
    pub walk_constant: f64,
}

impl Default for PprConfig {
    fn default() -> Self {
        PprConfig {
            walk_constant: 350.0,
        }
    }
}

/// Bidirectional personalized PageRank estimate of the score of `target`
/// under the query's source distribution: a reverse local push from the
/// target until every residual is below `eps_r`, then seeded forward random
/// walks that cash in the remaining residuals.
pub fn ppr_bidirectional<F: Scalar, G: GraphView>(
    g: &G,
    q: &PprQuery<F>,
    seed: u64,
    config: PprConfig,
) -> Result<F> {
    if !g.is_node(q.target) {
        return Err(GraphError::MissingNode(q.target));
    }
    validate_distribution(g, &q.source)?;
    let ids = g.node_ids();
    let n = ids.len();
    let m = g.edge_count();
    let mean_deg = (m as f64 / n as f64).max(1.0);
    let eps = q.epsilon.to_f64().unwrap();
    let eps_r = (eps / mean_deg).sqrt().min(1.0);
    let walks = ((config.walk_constant * eps_r / (eps * eps)).ceil() as usize).max(1);

    let alpha = q.alpha;
    let follow = F::one() - alpha;
    let sigma = |v: NodeId| q.source.get(&v).copied().unwrap_or_else(F::zero);
    let dangling: Vec<NodeId> = ids
        .iter()
        .copied()
        .filter(|&v| g.out_degree(v).unwrap_or(0) == 0)
        .collect();

    // Reverse push: maintain estimates p and residuals r with the invariant
    // pi_sigma(target) = Σ_s sigma(s)·p[s] + Σ_v r[v]·pi_sigma(v).
    let threshold = F::from_f64_(eps_r);
    let mut p: HashMap<NodeId, F> = HashMap::new();
    let mut r: HashMap<NodeId, F> = HashMap::new();
    r.insert(q.target, F::one());
    let mut queue = vec![q.target];
    while let Some(v) = queue.pop() {
        let rv = r.get(&v).copied().unwrap_or_else(F::zero);
        if rv < threshold {
            continue;
        }
        *r.get_mut(&v).unwrap() = F::zero();
        *p.entry(v).or_insert_with(F::zero) += alpha * rv;
        // ordinary in-edges: a walk at u steps to v with probability 1/outdeg(u)
        for u in g.in_neighbors(v) {
            let deg = F::from_usize_(g.out_degree(u).unwrap_or(1));
            let ru = r.entry(u).or_insert_with(F::zero);
            *ru += follow * rv / deg;
            if *ru >= threshold {
                queue.push(u);
            }
        }
        // dangling restart: a walk at any dangling node jumps to sigma
        let sv = sigma(v);
        if sv > F::zero() {
            for &u in &dangling {
                let ru = r.entry(u).or_insert_with(F::zero);
                *ru += follow * rv * sv;
                if *ru >= threshold {
                    queue.push(u);
                }
            }
        }
    }

    let pushed: F = p
        .iter()
        .map(|(&v, &pv)| sigma(v) * pv)
        .sum();

    // Forward walks from sigma cash in Σ_v r[v]·pi_sigma(v) as E[r[endpoint]].
    let source_nodes: Vec<(NodeId, F)> = {
        let mut v: Vec<(NodeId, F)> = q
            .source
            .iter()
            .filter(|(_, &pv)| pv > F::zero())
            .map(|(&k, &pv)| (k, pv))
            .collect();
        v.sort_by_key(|&(k, _)| k);
        v
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample_source = |rng: &mut ChaCha8Rng| -> NodeId {
        let mut x = F::from_f64_(rng.gen::<f64>());
        for &(v, pv) in &source_nodes {
            if x < pv {
                return v;
            }
            x -= pv;
        }
        source_nodes.last().unwrap().0
    };
    let alpha_f64 = alpha.to_f64().unwrap();
    let mut walk_sum = F::zero();
    for _ in 0..walks {
        let mut cur = sample_source(&mut rng);
        loop {
            if rng.gen_bool(alpha_f64) {
                break;
            }
            let deg = g.out_degree(cur).unwrap_or(0);
            if deg == 0 {
                cur = sample_source(&mut rng);
            } else {
                let k = rng.gen_range(0..deg);
                cur = g.out_neighbor_at(cur, k).unwrap();
            }
        }
        walk_sum += r.get(&cur).copied().unwrap_or_else(F::zero);
    }
    Ok(pushed + walk_sum / F::from_usize_(walks))
}

/// Result of [`hits`].
#[derive(Clone, Debug)]
pub struct HitsResult<F> {
    pub hubs: HashMap<NodeId, F>,
    pub authorities: HashMap<NodeId, F>,
    /// True when the graph had no edges and uniform vectors were returned.
    pub degenerate: bool,
    pub iterations: usize,
}

/// HITS hub/authority scores: alternating `a ← Aᵀh`, `h ← A a` with 2-norm
/// normalization each round. Edgeless graphs return uniform unit vectors
/// with the degenerate flag set.
pub fn hits<F: Scalar, G: GraphView>(g: &G, stop: StopRule<F>) -> Result<HitsResult<F>> {
    if g.is_empty() {
        return Err(GraphError::EmptyGraph);
    }
    let ids = g.node_ids();
    let n = ids.len();
    let uniform = F::one() / F::from_usize_(n).sqrt();
    if g.edge_count() == 0 {
        let flat: HashMap<NodeId, F> = ids.iter().map(|&v| (v, uniform)).collect();
        return Ok(HitsResult {
            hubs: flat.clone(),
            authorities: flat,
            degenerate: true,
            iterations: 0,
        });
    }
    let mut hubs: HashMap<NodeId, F> = ids.iter().map(|&v| (v, uniform)).collect();
    let mut auth: HashMap<NodeId, F> = hubs.clone();
    let (max_iters, tol) = match stop {
        StopRule::Iterations(k) => (k, None),
        StopRule::Tolerance(t) => (MAX_TOLERANCE_ITERS, Some(t)),
    };
    let mut iterations = 0;
    for _ in 0..max_iters {
        iterations += 1;
        let mut next_auth: HashMap<NodeId, F> = ids.iter().map(|&v| (v, F::zero())).collect();
        for &u in &ids {
            let hu = hubs[&u];
            for v in g.out_neighbors(u) {
                *next_auth.get_mut(&v).unwrap() += hu;
            }
        }
        normalize_2(&mut next_auth);
        let mut next_hubs: HashMap<NodeId, F> = ids.iter().map(|&v| (v, F::zero())).collect();
        for &u in &ids {
            let mut acc = F::zero();
            for v in g.out_neighbors(u) {
                acc += next_auth[&v];
            }
            *next_hubs.get_mut(&u).unwrap() = acc;
        }
        normalize_2(&mut next_hubs);
        let delta = linf_change(&next_hubs, &hubs).max(linf_change(&next_auth, &auth));
        hubs = next_hubs;
        auth = next_auth;
        if let Some(t) = tol {
            if delta < t {
                break;
            }
        }
    }
    Ok(HitsResult {
        hubs,
        authorities: auth,
        degenerate: false,
        iterations,
    })
}

fn normalize_2<F: Scalar>(v: &mut HashMap<NodeId, F>) {
    let norm = v.values().map(|&x| x * x).sum::<F>().sqrt();
    if norm > F::zero() {
        for x in v.values_mut() {
            *x /= norm;
        }
    }
}

fn linf_change<F: Scalar>(a: &HashMap<NodeId, F>, b: &HashMap<NodeId, F>) -> F {
    a.iter()
        .map(|(v, &x)| (x - b[v]).abs())
        .fold(F::zero(), F::max)
}

/// Degree centrality d(v)/(n−1); on directed containers d is out + in.
pub fn degree_centrality<F: Scalar, G: GraphView>(g: &G) -> HashMap<NodeId, F> {
    let n = g.node_count();
    let denom = if n > 1 {
        F::from_usize_(n - 1)
    } else {
        F::one()
    };
    g.node_ids()
        .into_iter()
        .map(|v| (v, F::from_usize_(g.degree(v).unwrap_or(0)) / denom))
        .collect()
}

/// Sum of hop distances from `v` over its reachable set, scaled by
/// `(n−1)/(reachable−1)` so disconnected graphs stay comparable.
/// Nodes that reach nothing get +∞.
pub fn farness<F: Scalar, G: GraphView>(g: &G, v: NodeId) -> Result<F> {
    let dist = bfs(g, v, Direction::Out)?;
    let reachable = dist.len(); // includes v itself
    if reachable <= 1 {
        return Ok(F::infinity());
    }
    let total: usize = dist.values().sum();
    let n = g.node_count();
    Ok(F::from_usize_(total) * F::from_usize_(n - 1) / F::from_usize_(reachable - 1))
}

/// Closeness with the reachable-set correction:
/// `((r−1)/Σd) · ((r−1)/(n−1))` where r counts v's reachable set.
/// Isolated nodes get 0.
pub fn closeness_centrality<F: Scalar, G: GraphView>(g: &G, v: NodeId) -> Result<F> {
    let dist = bfs(g, v, Direction::Out)?;
    let reachable = dist.len();
    let n = g.node_count();
    if reachable <= 1 || n <= 1 {
        return Ok(F::zero());
    }
    let total: usize = dist.values().sum();
    let r1 = F::from_usize_(reachable - 1);
    Ok(r1 / F::from_usize_(total) * (r1 / F::from_usize_(n - 1)))
}

/// Node and edge betweenness. Undirected edge keys are `(min, max)`.
#[derive(Clone, Debug)]
pub struct BetweennessResult<F> {
    pub nodes: HashMap<NodeId, F>,
    pub edges: HashMap<(NodeId, NodeId), F>,
}

/// Brandes dependency accumulation over BFS DAGs. Exact for
/// `sample_fraction = 1`; otherwise sources are sampled without replacement
/// and scores scaled by n/sources (= 1/fraction). Undirected scores are
/// halved so each unordered pair counts once.
pub fn betweenness<F: Scalar, G: GraphView>(
    g: &G,
    sample_fraction: f64,
    seed: u64,
) -> Result<BetweennessResult<F>> {
    if !(sample_fraction > 0.0 && sample_fraction <= 1.0) {
        return Err(GraphError::InvalidDistribution(format!(
            "sample fraction {sample_fraction} outside (0, 1]"
        )));
    }
    let ids = g.node_ids();
    let n = ids.len();
    let mut sources = ids.clone();
    let take = ((sample_fraction * n as f64).ceil() as usize).clamp(1.min(n), n);
    if take < n {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        sources.shuffle(&mut rng);
        sources.truncate(take);
        sources.sort_unstable();
    }
    let scale = if take == 0 {
        F::one()
    } else {
        F::from_usize_(n) / F::from_usize_(take)
    };

    let mut node_score: HashMap<NodeId, F> = ids.iter().map(|&v| (v, F::zero())).collect();
    let mut edge_score: HashMap<(NodeId, NodeId), F> = HashMap::new();
    let undirected = !g.is_directed();
    let edge_key = |u: NodeId, v: NodeId| if undirected && v < u { (v, u) } else { (u, v) };

    for &s in &sources {
        // BFS with shortest-path counting
        let mut order: Vec<NodeId> = Vec::new();
        let mut dist: HashMap<NodeId, usize> = HashMap::new();
        let mut sigma: HashMap<NodeId, F> = HashMap::new();
        let mut preds: HashMap<NodeId, Vec<NodeId>> = HashMap::new();
        dist.insert(s, 0);
        sigma.insert(s, F::one());
        let mut frontier = vec![s];
        let mut depth = 0;
        while !frontier.is_empty() {
            order.extend_from_slice(&frontier);
            depth += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                let su = sigma[&u];
                let mut nbrs: Vec<NodeId> = g.out_neighbors(u).collect();
                nbrs.sort_unstable();
                nbrs.dedup();
                for v in nbrs {
                    if v == u {
                        continue;
                    }
                    match dist.get(&v) {
                        None => {
                            dist.insert(v, depth);
                            sigma.insert(v, su);
                            preds.insert(v, vec![u]);
                            next.push(v);
                        }
                        Some(&d) if d == depth => {
                            *sigma.get_mut(&v).unwrap() += su;
                            preds.get_mut(&v).unwrap().push(u);
                        }
                        _ => {}
                    }
                }
            }
            next.sort_unstable();
            frontier = next;
        }
        // dependency accumulation in reverse BFS order
        let mut delta: HashMap<NodeId, F> = order.iter().map(|&v| (v, F::zero())).collect();
        for &w in order.iter().rev() {
            let coeff = (F::one() + delta[&w]) / sigma[&w];
            if let Some(ps) = preds.get(&w) {
                for &u in ps {
                    let c = sigma[&u] * coeff;
                    *delta.get_mut(&u).unwrap() += c;
                    *edge_score.entry(edge_key(u, w)).or_insert_with(F::zero) += c * scale;
                }
            }
            if w != s {
                *node_score.get_mut(&w).unwrap() += delta[&w] * scale;
            }
        }
    }
    if undirected {
        let half = F::from_f64_(0.5);
        for v in node_score.values_mut() {
            *v *= half;
        }
        for v in edge_score.values_mut() {
            *v *= half;
        }
    }
    Ok(BetweennessResult {
        nodes: node_score,
        edges: edge_score,
    })
}

/// Leading-eigenvector centrality, L1-normalized. Returns the scores and the
/// power-iteration convergence flag.
pub fn eigenvector_centrality<F: Scalar>(
    g: &UndirectedGraph,
) -> Result<(HashMap<NodeId, F>, bool)> {
    let est = leading_eigenvalue::<F>(g)?;
    let mut scores = est.vector;
    let norm: F = scores.values().map(|&x| x.abs()).sum();
    if norm > F::zero() {
        for x in scores.values_mut() {
            *x /= norm;
        }
    }
    Ok((scores, est.converged))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{DirectedGraph, GraphMut};

    fn n(v: u32) -> NodeId {
        NodeId::new(v)
    }

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

    fn ungraph(nodes: u32, edges: &[(u32, u32)]) -> UndirectedGraph {
        let mut g = UndirectedGraph::new();
        for i in 0..nodes {
            g.add_node(n(i)).unwrap();
        }
        for &(a, b) in edges {
            g.add_edge(n(a), n(b)).unwrap();
        }
        g
    }

    #[test]
    fn pagerank_cycle_is_uniform() {
        let g = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        let pr = pagerank::<f64, _>(&g, 0.85, StopRule::Iterations(50)).unwrap();
        for v in pr.scores.values() {
            assert!((v - 1.0 / 3.0).abs() < 1e-12);
        }
        assert_eq!(pr.iterations, 50);
    }

    #[test]
    fn pagerank_sums_to_one_with_dangling() {
        // node 2 is dangling
        let g = digraph(4, &[(0, 1), (1, 2), (3, 0)]);
        let pr = pagerank::<f64, _>(&g, 0.85, StopRule::Tolerance(1e-12)).unwrap();
        assert!(pr.converged);
        let sum: f64 = pr.scores.values().sum();
        assert!((sum - 1.0).abs() < 1e-9);
    }

    #[test]
    fn ppr_uniform_source_equals_pagerank() {
        let g = digraph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 0)]);
        let uniform: HashMap<NodeId, f64> =
            g.node_ids().into_iter().map(|v| (v, 0.2)).collect();
        let pr = pagerank::<f64, _>(&g, 0.85, StopRule::Tolerance(1e-13)).unwrap();
        let ppr =
            personalized_pagerank_power(&g, &uniform, 1.0 - 0.85, StopRule::Tolerance(1e-13))
                .unwrap();
        for v in g.node_ids() {
            assert!((pr.scores[&v] - ppr.scores[&v]).abs() < 1e-8);
        }
    }

    #[test]
    fn ppr_isolated_source_keeps_all_mass() {
        let mut g = digraph(2, &[(0, 1)]);
        g.add_node(n(9)).unwrap();
        let source: HashMap<NodeId, f64> = [(n(9), 1.0)].into_iter().collect();
        let r = personalized_pagerank_power(&g, &source, 0.2, StopRule::Tolerance(1e-12))
            .unwrap();
        assert!((r.scores[&n(9)] - 1.0).abs() < 1e-9);
        let bad: HashMap<NodeId, f64> = [(n(0), 0.7)].into_iter().collect();
        assert!(personalized_pagerank_power(&g, &bad, 0.2, StopRule::Tolerance(1e-9)).is_err());
    }

    #[test]
    fn ppr_bidirectional_two_node_closed_form() {
        // 0 → 1 with dangling restart at the source: pi(1) = 4/9 for alpha 0.2
        let g = digraph(2, &[(0, 1)]);
        let q = PprQuery {
            source: [(n(0), 1.0)].into_iter().collect(),
            target: n(1),
            alpha: 0.2,
            epsilon: 0.02,
        };
        let est: f64 = ppr_bidirectional(&g, &q, 42, PprConfig::default()).unwrap();
        assert!((est - 4.0 / 9.0).abs() < 0.02 * (4.0 / 9.0) * 3.0, "est {est}");
    }

    #[test]
    fn ppr_bidirectional_self_loop_identity() {
        let mut g = DirectedGraph::new();
        g.add_node(n(0)).unwrap();
        g.add_edge(n(0), n(0)).unwrap();
        let q = PprQuery {
            source: [(n(0), 1.0)].into_iter().collect(),
            target: n(0),
            alpha: 0.3,
            epsilon: 0.05,
        };
        let est: f64 = ppr_bidirectional(&g, &q, 7, PprConfig::default()).unwrap();
        assert!((est - 1.0).abs() < 1e-6, "est {est}");
        let missing = PprQuery {
            source: [(n(0), 1.0)].into_iter().collect(),
            target: n(5),
            alpha: 0.3,
            epsilon: 0.05,
        };
        assert!(ppr_bidirectional(&g, &missing, 7, PprConfig::default()).is_err());
    }

    #[test]
    fn hits_single_edge() {
        let g = digraph(2, &[(0, 1)]);
        let r = hits::<f64, _>(&g, StopRule::Iterations(20)).unwrap();
        assert!(!r.degenerate);
        assert!((r.hubs[&n(0)] - 1.0).abs() < 1e-9);
        assert!((r.authorities[&n(1)] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn hits_bipartite_uniform_sides() {
        // complete bipartite 0,1 → 2,3,4
        let mut edges = Vec::new();
        for l in 0..2 {
            for r in 2..5 {
                edges.push((l, r));
            }
        }
        let g = digraph(5, &edges);
        let r = hits::<f64, _>(&g, StopRule::Tolerance(1e-12)).unwrap();
        assert!((r.hubs[&n(0)] - r.hubs[&n(1)]).abs() < 1e-10);
        assert!((r.hubs[&n(0)] - 1.0 / 2f64.sqrt()).abs() < 1e-9);
        assert!((r.authorities[&n(2)] - 1.0 / 3f64.sqrt()).abs() < 1e-9);
        // edgeless graph: degenerate uniform
        let g = digraph(3, &[]);
        let r = hits::<f64, _>(&g, StopRule::Iterations(5)).unwrap();
        assert!(r.degenerate);
        assert!((r.hubs[&n(0)] - 1.0 / 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn closeness_and_farness() {
        // star with center 0 and 4 leaves
        let g = ungraph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert!((closeness_centrality::<f64, _>(&g, n(0)).unwrap() - 1.0).abs() < 1e-12);
        // path end of P3: sum of distances 3, closeness 2/3
        let p = ungraph(3, &[(0, 1), (1, 2)]);
        assert!((closeness_centrality::<f64, _>(&p, n(0)).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        // disconnected pair
        let mut d = ungraph(2, &[(0, 1)]);
        d.add_node(n(5)).unwrap();
        assert_eq!(closeness_centrality::<f64, _>(&d, n(5)).unwrap(), 0.0);
        assert!(farness::<f64, _>(&d, n(5)).unwrap().is_infinite());
        assert!(farness::<f64, _>(&d, n(0)).unwrap().is_finite());
    }

    #[test]
    fn degree_centrality_star() {
        let g = ungraph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let c = degree_centrality::<f64, _>(&g);
        assert!((c[&n(0)] - 1.0).abs() < 1e-12);
        assert!((c[&n(1)] - 0.25).abs() < 1e-12);
    }

    #[test]
    fn betweenness_path_and_star() {
        let p = ungraph(3, &[(0, 1), (1, 2)]);
        let b = betweenness::<f64, _>(&p, 1.0, 0).unwrap();
        assert!((b.nodes[&n(1)] - 1.0).abs() < 1e-12);
        assert_eq!(b.nodes[&n(0)], 0.0);
        // star: center carries all L(L-1)/2 leaf pairs
        let leaves = 6u32;
        let edges: Vec<(u32, u32)> = (1..=leaves).map(|i| (0, i)).collect();
        let s = ungraph(leaves + 1, &edges);
        let b = betweenness::<f64, _>(&s, 1.0, 0).unwrap();
        let expect = (leaves * (leaves - 1)) as f64 / 2.0;
        assert!((b.nodes[&n(0)] - expect).abs() < 1e-9);
        // every edge in P3 carries: (0,1) serves pairs {0-1, 0-2} → 2.0
        let b = betweenness::<f64, _>(&p, 1.0, 0).unwrap();
        let got = b.edges[&(n(0), n(1))];
        assert!((got - 2.0).abs() < 1e-12, "edge (0,1) score {got}");
    }

    #[test]
    fn betweenness_cycle_symmetric() {
        let nodes = 7u32;
        let edges: Vec<(u32, u32)> = (0..nodes).map(|i| (i, (i + 1) % nodes)).collect();
        let g = ungraph(nodes, &edges);
        let b = betweenness::<f64, _>(&g, 1.0, 0).unwrap();
        let first = b.nodes[&n(0)];
        for v in b.nodes.values() {
            assert!((v - first).abs() < 1e-9);
        }
    }

    #[test]
    fn eigenvector_centrality_star_center_largest() {
        let g = ungraph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let (scores, converged) = eigenvector_centrality::<f64>(&g).unwrap();
        assert!(converged);
        let sum: f64 = scores.values().sum();
        assert!((sum - 1.0).abs() < 1e-9);
        for i in 1..5 {
            assert!(scores[&n(0)] > scores[&n(i)]);
        }
        // center/leaf ratio is sqrt(L)
        assert!((scores[&n(0)] / scores[&n(1)] - 2.0).abs() < 1e-6);
    }
}
