//! Breadth-first and depth-first traversal, shortest paths, diameters and
//! hop plots. All traversals are iterative and visit neighbors in ascending
//! node id, so outputs are reproducible.

use crate::error::{GraphError, Result};
use crate::graph::GraphView;
use crate::ids::NodeId;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// Edge orientation followed by a traversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Out,
    In,
    Both,
}

fn directed_neighbors<G: GraphView>(g: &G, id: NodeId, dir: Direction) -> Vec<NodeId> {
    let mut nbrs: Vec<NodeId> = match dir {
        Direction::Out => g.out_neighbors(id).collect(),
        Direction::In => g.in_neighbors(id).collect(),
        Direction::Both => g.out_neighbors(id).chain(g.in_neighbors(id)).collect(),
    };
    nbrs.sort_unstable();
    nbrs.dedup();
    nbrs
}

/// Unweighted hop distances from `root` over the chosen orientation.
/// Unreachable nodes are absent from the map.
pub fn bfs<G: GraphView>(g: &G, root: NodeId, dir: Direction) -> Result<HashMap<NodeId, usize>> {
    if !g.is_node(root) {
        return Err(GraphError::MissingNode(root));
    }
    let mut dist = HashMap::new();
    dist.insert(root, 0);
    let mut frontier = vec![root];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for v in directed_neighbors(g, u, dir) {
                if !dist.contains_key(&v) {
                    dist.insert(v, depth);
                    next.push(v);
                }
            }
        }
        next.sort_unstable();
        frontier = next;
    }
    Ok(dist)
}

/// Iterative depth-first preorder over out-edges, neighbors in ascending id.
pub fn dfs<G: GraphView>(g: &G, root: NodeId) -> Result<Vec<NodeId>> {
    if !g.is_node(root) {
        return Err(GraphError::MissingNode(root));
    }
    let mut order = Vec::new();
    let mut visited = std::collections::HashSet::new();
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        if !visited.insert(u) {
            continue;
        }
        order.push(u);
        let nbrs = directed_neighbors(g, u, Direction::Out);
        for &v in nbrs.iter().rev() {
            if !visited.contains(&v) {
                stack.push(v);
            }
        }
    }
    Ok(order)
}

/// BFS distance plus one witness path. Parent ties resolve to the smallest
/// node id. Unreachable targets return `None`.
pub fn shortest_path<G: GraphView>(
    g: &G,
    src: NodeId,
    dst: NodeId,
) -> Result<Option<(usize, Vec<NodeId>)>> {
    if !g.is_node(src) {
        return Err(GraphError::MissingNode(src));
    }
    if !g.is_node(dst) {
        return Err(GraphError::MissingNode(dst));
    }
    let mut parent: HashMap<NodeId, NodeId> = HashMap::new();
    let mut dist: HashMap<NodeId, usize> = HashMap::new();
    dist.insert(src, 0);
    let mut frontier = vec![src];
    let mut depth = 0;
    while !frontier.is_empty() && !dist.contains_key(&dst) {
        depth += 1;
        let mut next = Vec::new();
        // frontier is sorted, so the first discoverer is the smallest parent
        for &u in &frontier {
            for v in directed_neighbors(g, u, Direction::Out) {
                if !dist.contains_key(&v) {
                    dist.insert(v, depth);
                    parent.insert(v, u);
                    next.push(v);
                }
            }
        }
        next.sort_unstable();
        frontier = next;
    }
    let Some(&d) = dist.get(&dst) else {
        return Ok(None);
    };
    let mut path = vec![dst];
    let mut cur = dst;
    while cur != src {
        cur = parent[&cur];
        path.push(cur);
    }
    path.reverse();
    Ok(Some((d, path)))
}

/// Maximum finite eccentricity over all-source BFS. O(n·m); desk scale only.
pub fn diameter_exact<G: GraphView>(g: &G) -> Result<usize> {
    if g.is_empty() {
        return Err(GraphError::EmptyGraph);
    }
    let mut best = 0;
    for id in g.node_ids() {
        let dist = bfs(g, id, Direction::Out)?;
        if let Some(&m) = dist.values().max() {
            best = best.max(m);
        }
    }
    Ok(best)
}

/// Cumulative fraction of reachable ordered pairs within h hops.
#[derive(Clone, Debug, PartialEq)]
pub struct HopPlot {
    /// (hop count, fraction), fraction non-decreasing, last point 1.0.
    pub points: Vec<(usize, f64)>,
}

/// Histogram of distances >= 1 from the sampled sources, index = distance.
fn sampled_distance_histogram<G: GraphView>(
    g: &G,
    sample_sources: usize,
    seed: u64,
) -> Vec<u64> {
    let mut ids = g.node_ids();
    if sample_sources < ids.len() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ids.shuffle(&mut rng);
        ids.truncate(sample_sources);
        ids.sort_unstable();
    }
    let mut hist: Vec<u64> = Vec::new();
    for src in ids {
        let dist = bfs(g, src, Direction::Out).expect("sampled id exists");
        for (_, d) in dist {
            if d > 0 {
                if d >= hist.len() {
                    hist.resize(d + 1, 0);
                }
                hist[d] += 1;
            }
        }
    }
    hist
}

/// Hop plot from sampled-source BFS distance histograms. With
/// `sample_sources >= n` this is the exact pair-distance CDF.
pub fn hop_plot<G: GraphView>(g: &G, sample_sources: usize, seed: u64) -> HopPlot {
    let hist = sampled_distance_histogram(g, sample_sources.max(1), seed);
    let total: u64 = hist.iter().sum();
    let mut points = Vec::new();
    if total == 0 {
        return HopPlot { points };
    }
    let mut cum = 0u64;
    for (h, &count) in hist.iter().enumerate().skip(1) {
        cum += count;
        points.push((h, cum as f64 / total as f64));
    }
    HopPlot { points }
}

/// Interpolated 90th percentile of the pairwise hop-distance distribution,
/// estimated from `sample_sources` BFS sweeps.
pub fn effective_diameter<G: GraphView>(g: &G, sample_sources: usize, seed: u64) -> f64 {
    let hist = sampled_distance_histogram(g, sample_sources.max(1), seed);
    let total: u64 = hist.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let target = 0.9;
    let mut prev_cdf = 0.0;
    for (h, &count) in hist.iter().enumerate() {
        let cdf = prev_cdf + count as f64 / total as f64;
        if cdf >= target {
            // linear interpolation between integer hops
            return (h as f64 - 1.0) + (target - prev_cdf) / (cdf - prev_cdf);
        }
        prev_cdf = cdf;
    }
    (hist.len() - 1) as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{DirectedGraph, GraphMut, UndirectedGraph};

    fn n(v: u32) -> NodeId {
        NodeId::new(v)
    }

    fn path(len: usize) -> UndirectedGraph {
        let mut g = UndirectedGraph::new();
        for i in 0..len {
            g.add_node(n(i as u32)).unwrap();
        }
        for i in 1..len {
            g.add_edge(n(i as u32 - 1), n(i as u32)).unwrap();
        }
        g
    }

    fn circle(len: usize) -> UndirectedGraph {
        let mut g = path(len);
        g.add_edge(n(len as u32 - 1), n(0)).unwrap();
        g
    }

    #[test]
    fn bfs_on_path() {
        let g = path(4);
        let dist = bfs(&g, n(0), Direction::Out).unwrap();
        for i in 0..4u32 {
            assert_eq!(dist[&n(i)], i as usize);
        }
    }

    #[test]
    fn bfs_respects_direction() {
        let mut g = DirectedGraph::new();
        g.add_node(n(0)).unwrap();
        g.add_node(n(1)).unwrap();
        g.add_edge(n(0), n(1)).unwrap();
        let dist = bfs(&g, n(1), Direction::Out).unwrap();
        assert_eq!(dist.len(), 1);
        assert_eq!(dist[&n(1)], 0);
        let dist = bfs(&g, n(1), Direction::In).unwrap();
        assert_eq!(dist.len(), 2);
        let dist = bfs(&g, n(0), Direction::Both).unwrap();
        assert_eq!(dist.len(), 2);
        assert!(bfs(&g, n(7), Direction::Out).is_err());
    }

    #[test]
    fn dfs_star_from_center() {
        let mut g = UndirectedGraph::new();
        for i in 0..5 {
            g.add_node(n(i)).unwrap();
        }
        for i in 1..5 {
            g.add_edge(n(0), n(i)).unwrap();
        }
        assert_eq!(dfs(&g, n(0)).unwrap(), vec![n(0), n(1), n(2), n(3), n(4)]);
    }

    #[test]
    fn dfs_path_in_order() {
        let g = path(5);
        assert_eq!(
            dfs(&g, n(0)).unwrap(),
            vec![n(0), n(1), n(2), n(3), n(4)]
        );
    }

    #[test]
    fn shortest_path_witness() {
        let g = circle(6);
        let (d, p) = shortest_path(&g, n(0), n(3)).unwrap().unwrap();
        assert_eq!(d, 3);
        assert_eq!(p.len(), 4);
        assert_eq!(p[0], n(0));
        assert_eq!(p[3], n(3));
        for w in p.windows(2) {
            assert!(g.is_edge(w[0], w[1]));
        }
    }

    #[test]
    fn shortest_path_adjacent_and_disconnected() {
        let mut g = path(2);
        g.add_node(n(9)).unwrap();
        assert_eq!(shortest_path(&g, n(0), n(1)).unwrap().unwrap().0, 1);
        assert_eq!(shortest_path(&g, n(0), n(9)).unwrap(), None);
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter_exact(&circle(6)).unwrap(), 3);
        assert_eq!(diameter_exact(&path(5)).unwrap(), 4);
        assert!(diameter_exact(&UndirectedGraph::new()).is_err());
    }

    #[test]
    fn effective_diameter_complete_graph() {
        let mut g = UndirectedGraph::new();
        for i in 0..8 {
            g.add_node(n(i)).unwrap();
        }
        for i in 0..8 {
            for j in (i + 1)..8 {
                g.add_edge(n(i), n(j)).unwrap();
            }
        }
        let eff = effective_diameter(&g, 8, 1);
        assert!((eff - 0.9).abs() < 1e-12);
        assert!(diameter_exact(&g).unwrap() as f64 >= eff.ceil());
    }

    #[test]
    fn hop_plot_is_monotone_and_ends_at_one() {
        let g = circle(10);
        let hp = hop_plot(&g, 10, 7);
        let mut prev = 0.0;
        for &(_, p) in &hp.points {
            assert!(p >= prev);
            prev = p;
        }
        assert!((hp.points.last().unwrap().1 - 1.0).abs() < 1e-12);
    }
}
