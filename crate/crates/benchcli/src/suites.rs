//! Benchmark suites: memory footprint, basic operations, edge-existence
//! latency, node deletion and the algorithm set. Each suite returns CSV
//! report rows; timing is the arithmetic mean over the requested repeats.

use crate::report::BenchReport;
use crate::{AppError, ALLOC};
use graph_core::analytics::{clustering_coefficient, count_triangles_par, k_core};
use graph_core::centrality::{pagerank, StopRule};
use graph_core::generators::gen_gnm;
use graph_core::io::{load_binary_bytes, load_edge_list, save_edge_list, save_undirected};
use graph_core::manipulate::weakly_connected_components;
use graph_core::{GraphMut, GraphView, NodeId, UndirectedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::io::BufReader;
use std::time::Instant;

/// Common size/seed knobs shared by every suite.
#[derive(Clone, Copy, Debug)]
pub struct BenchParams {
    pub n: u32,
    pub m: usize,
    pub repeats: usize,
    pub seed: u64,
    pub threads: usize,
}

fn time_mean<R>(repeats: usize, mut f: impl FnMut() -> R) -> (f64, R) {
    assert!(repeats >= 1);
    let mut total = 0.0;
    let mut last = None;
    for _ in 0..repeats {
        let t = Instant::now();
        let r = f();
        total += t.elapsed().as_secs_f64();
        last = Some(r);
    }
    (total / repeats as f64, last.unwrap())
}

fn row(p: &BenchParams, suite: &'static str, op: &str) -> BenchReport {
    BenchReport {
        suite,
        operation: op.to_string(),
        container: "undirected",
        n: p.n as usize,
        m: p.m,
        repeats: p.repeats,
        seed: p.seed,
        mean_seconds: 0.0,
        peak_bytes: None,
        bytes_per_node: None,
        bytes_per_edge: None,
        notes: String::new(),
    }
}

fn build(n: u32, m: usize, seed: u64) -> Result<UndirectedGraph, AppError> {
    gen_gnm::<UndirectedGraph>(n, m, seed).map_err(|e| AppError::Alg(e.to_string()))
}

/// Live-byte cost of one G(n,m), measured by allocator differencing around
/// the build (adjacency shrunk to fit so growth slack is excluded).
fn live_cost(n: u32, m: usize, seed: u64) -> Result<(u64, f64), AppError> {
    let before = ALLOC.live_bytes();
    let (secs, g) = time_mean(1, || build(n, m, seed));
    let mut g = g?;
    g.shrink_to_fit();
    let after = ALLOC.live_bytes();
    let bytes = after.saturating_sub(before) as u64;
    drop(g);
    Ok((bytes, secs))
}

/// Memory suite: builds G(n,10n) and G(n,100n) and derives bytes/edge from
/// the difference (per-node and fixed costs cancel), then bytes/node from
/// the smaller graph.
pub fn memory(p: &BenchParams) -> Result<Vec<BenchReport>, AppError> {
    let m1 = p.n as usize * 10;
    let m2 = p.n as usize * 100;
    let (live1, secs1) = live_cost(p.n, m1, p.seed)?;
    let (live2, secs2) = live_cost(p.n, m2, p.seed)?;
    let per_edge = (live2.saturating_sub(live1)) as f64 / (m2 - m1) as f64;
    let per_node = (live1 as f64 - per_edge * m1 as f64) / p.n as f64;
    let mut r1 = row(p, "memory", "build_sparse");
    r1.m = m1;
    r1.repeats = 1;
    r1.mean_seconds = secs1;
    r1.peak_bytes = Some(live1);
    let mut r2 = row(p, "memory", "build_dense");
    r2.m = m2;
    r2.repeats = 1;
    r2.mean_seconds = secs2;
    r2.peak_bytes = Some(live2);
    let mut derived = row(p, "memory", "differenced");
    derived.m = m2 - m1;
    derived.repeats = 1;
    derived.bytes_per_node = Some(per_node);
    derived.bytes_per_edge = Some(per_edge);
    derived.notes = "live-byte differencing between the two builds".to_string();
    Ok(vec![r1, r2, derived])
}

/// Basic operations: generate, binary save/load, text save/load.
pub fn basicops(p: &BenchParams) -> Result<Vec<BenchReport>, AppError> {
    let (gen_secs, g) = time_mean(p.repeats, || build(p.n, p.m, p.seed));
    let g = g?;
    let (bin_save_secs, bin) = time_mean(p.repeats, || {
        let mut buf = Vec::new();
        save_undirected(&g, &mut buf).unwrap();
        buf
    });
    let (bin_load_secs, _) = time_mean(p.repeats, || load_binary_bytes(&bin).unwrap());
    let (txt_save_secs, txt) = time_mean(p.repeats, || {
        let mut buf = Vec::new();
        save_edge_list(&g, &mut buf).unwrap();
        buf
    });
    let (txt_load_secs, _) = time_mean(p.repeats, || {
        load_edge_list(BufReader::new(txt.as_slice()), false).unwrap()
    });
    let mut out = Vec::new();
    for (op, secs, note) in [
        ("generate", gen_secs, String::new()),
        ("save_binary", bin_save_secs, format!("bytes={}", bin.len())),
        ("load_binary", bin_load_secs, String::new()),
        ("save_text", txt_save_secs, format!("bytes={}", txt.len())),
        ("load_text", txt_load_secs, String::new()),
    ] {
        let mut r = row(p, "basicops", op);
        r.mean_seconds = secs;
        r.notes = note;
        out.push(r);
    }
    Ok(out)
}

fn random_pairs(n: u32, count: usize, seed: u64) -> Vec<(NodeId, NodeId)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    (0..count)
        .map(|_| {
            (
                NodeId::new(rng.gen_range(0..n)),
                NodeId::new(rng.gen_range(0..n)),
            )
        })
        .collect()
}

/// Edge-existence latency: m random queries per repeat, as many tests as
/// the graph has edges.
pub fn edgetest(p: &BenchParams) -> Result<Vec<BenchReport>, AppError> {
    let g = build(p.n, p.m, p.seed)?;
    let queries = random_pairs(p.n, p.m, p.seed);
    let (secs, hits) = time_mean(p.repeats, || {
        queries.iter().filter(|&&(a, b)| g.is_edge(a, b)).count()
    });
    let mut r = row(p, "edgetest", "is_edge_batch");
    r.mean_seconds = secs;
    r.notes = format!("queries={};hits={hits}", p.m);
    Ok(vec![r])
}

/// Node deletion: removes 10% of nodes one by one in seeded random order,
/// with the paired generation time for comparison.
pub fn delete(p: &BenchParams) -> Result<Vec<BenchReport>, AppError> {
    let mut gen_total = 0.0;
    let mut del_total = 0.0;
    for rep in 0..p.repeats {
        let t = Instant::now();
        let mut g = build(p.n, p.m, p.seed)?;
        gen_total += t.elapsed().as_secs_f64();
        let mut victims: Vec<NodeId> = g.node_ids();
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed.wrapping_add(rep as u64));
        use rand::seq::SliceRandom;
        victims.shuffle(&mut rng);
        victims.truncate(p.n as usize / 10);
        let t = Instant::now();
        for v in victims {
            g.del_node(v).unwrap();
        }
        del_total += t.elapsed().as_secs_f64();
    }
    let mut r1 = row(p, "delete", "generate");
    r1.mean_seconds = gen_total / p.repeats as f64;
    let mut r2 = row(p, "delete", "delete_10pct");
    r2.mean_seconds = del_total / p.repeats as f64;
    r2.notes = format!("nodes_deleted={}", p.n as usize / 10);
    Ok(vec![r1, r2])
}

/// Algorithm set: PageRank (exactly 10 iterations), clustering coefficient,
/// triangle counting, weakly connected components, the 3-core and
/// edge-existence tests.
pub fn algorithms(p: &BenchParams) -> Result<Vec<BenchReport>, AppError> {
    let g = build(p.n, p.m, p.seed)?;
    let mut out = Vec::new();

    let (secs, pr) = time_mean(p.repeats, || {
        pagerank::<f64, _>(&g, 0.85, StopRule::Iterations(10)).unwrap()
    });
    assert_eq!(pr.iterations, 10, "benchmark protocol runs 10 iterations");
    let mut r = row(p, "algorithms", "pagerank");
    r.mean_seconds = secs;
    r.notes = format!("iterations={};damping=0.85", pr.iterations);
    out.push(r);

    let (secs, (avg, _)) = time_mean(p.repeats, || clustering_coefficient::<f64>(&g));
    let mut r = row(p, "algorithms", "clustering");
    r.mean_seconds = secs;
    r.notes = format!("avg={avg:.6}");
    out.push(r);

    let (secs, tri) = time_mean(p.repeats, || count_triangles_par(&g, p.threads));
    let mut r = row(p, "algorithms", "triangles");
    r.mean_seconds = secs;
    r.notes = format!("total={};threads={}", tri.total, p.threads);
    out.push(r);

    let (secs, wcc) = time_mean(p.repeats, || weakly_connected_components(&g));
    let mut r = row(p, "algorithms", "wcc");
    r.mean_seconds = secs;
    r.notes = format!("components={}", wcc.len());
    out.push(r);

    let (secs, core) = time_mean(p.repeats, || k_core(&g, 3));
    let mut r = row(p, "algorithms", "3core");
    r.mean_seconds = secs;
    r.notes = format!("core_nodes={}", core.node_count());
    out.push(r);

    let queries = random_pairs(p.n, p.m, p.seed);
    let (secs, hits) = time_mean(p.repeats, || {
        queries.iter().filter(|&&(a, b)| g.is_edge(a, b)).count()
    });
    let mut r = row(p, "algorithms", "edgetest");
    r.mean_seconds = secs;
    r.notes = format!("queries={};hits={hits}", p.m);
    out.push(r);

    Ok(out)
}
