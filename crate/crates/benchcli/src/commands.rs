//! Implementations of the gen/stats/convert/alg subcommands.

use crate::{AppError, FileFormat};
use graph_core::analytics::{
    clustering_coefficient, core_decomposition, count_triangles_par, k_core, leading_eigenvalue,
    triad_census, DegreeKind, degree_summary, TRIAD_NAMES,
};
use graph_core::centrality::{
    betweenness, closeness_centrality, degree_centrality, hits, pagerank, ppr_bidirectional,
    PprConfig, PprQuery, StopRule,
};
use graph_core::io::{self, load_binary_bytes, load_edge_list, save_binary, save_edge_list};
use graph_core::manipulate::{
    strongly_connected_components, to_undirected, weakly_connected_components,
};
use graph_core::traverse::{bfs, effective_diameter, hop_plot, Direction};
use graph_core::{AnyGraph, GraphView, NodeId, UndirectedGraph};
use std::fs;
use std::io::{BufReader, Write};
use std::path::Path;

/// Runs the body once with the concrete container type bound to `$g`.
macro_rules! with_graph {
    ($any:expr, |$g:ident| $body:expr) => {
        match &$any {
            AnyGraph::Undirected($g) => $body,
            AnyGraph::Directed($g) => $body,
            AnyGraph::Multi($g) => $body,
            AnyGraph::Attr($g) => $body,
        }
    };
}

fn map_io(path: &Path, e: io::IoError) -> AppError {
    match e {
        io::IoError::Io(inner) => AppError::Io(format!("{}: {inner}", path.display())),
        other => AppError::Parse(format!("{}: {other}", path.display())),
    }
}

pub fn load_graph(path: &Path, format: FileFormat, directed: bool) -> Result<AnyGraph, AppError> {
    let bytes =
        fs::read(path).map_err(|e| AppError::Io(format!("{}: {e}", path.display())))?;
    let format = match format {
        FileFormat::Auto => {
            if bytes.starts_with(&io::MAGIC) {
                FileFormat::Binary
            } else {
                FileFormat::Text
            }
        }
        f => f,
    };
    match format {
        FileFormat::Binary => load_binary_bytes(&bytes).map_err(|e| map_io(path, e)),
        FileFormat::Text => {
            load_edge_list(BufReader::new(bytes.as_slice()), directed).map_err(|e| map_io(path, e))
        }
        FileFormat::Auto => unreachable!(),
    }
}

pub fn save_graph(
    g: &AnyGraph,
    path: &Path,
    format: FileFormat,
) -> Result<(), AppError> {
    let mut buf = Vec::new();
    match format {
        FileFormat::Text => with_graph!(g, |view| save_edge_list(view, &mut buf))
            .map_err(|e| map_io(path, e))?,
        _ => {
            save_binary(g, &mut buf).map_err(|e| map_io(path, e))?;
        }
    }
    fs::write(path, buf).map_err(|e| AppError::Io(format!("{}: {e}", path.display())))
}

pub fn out_writer(path: Option<&Path>) -> Result<Box<dyn Write>, AppError> {
    match path {
        None => Ok(Box::new(std::io::stdout())),
        Some(p) => fs::File::create(p)
            .map(|f| Box::new(f) as Box<dyn Write>)
            .map_err(|e| AppError::Io(format!("{}: {e}", p.display()))),
    }
}

/// Undirected projection used by the algorithms that require one.
fn undirected_of(g: &AnyGraph) -> UndirectedGraph {
    match g {
        AnyGraph::Undirected(u) => u.clone(),
        other => with_graph!(other, |view| to_undirected(view)),
    }
}

pub fn stats(g: &AnyGraph, w: &mut dyn Write) -> Result<(), AppError> {
    let view = g.as_view();
    let kind = match g {
        AnyGraph::Undirected(_) => "undirected",
        AnyGraph::Directed(_) => "directed",
        AnyGraph::Multi(_) => "multigraph",
        AnyGraph::Attr(_) => "attrnetwork",
    };
    let summary = with_graph!(g, |gg| degree_summary(gg, DegreeKind::Total));
    let mut wcc = with_graph!(g, |gg| weakly_connected_components(gg));
    wcc.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let und = undirected_of(g);
    let tri = count_triangles_par(&und, 1);
    let (avg_cc, _) = clustering_coefficient::<f64>(&und);
    writeln!(w, "container: {kind}")?;
    writeln!(w, "nodes: {}", view.node_count())?;
    writeln!(w, "edges: {}", view.edge_count())?;
    writeln!(
        w,
        "degree: min={} max={} mean={:.4}",
        summary.min, summary.max, summary.mean
    )?;
    let sizes: Vec<String> = wcc.iter().take(10).map(|c| c.len().to_string()).collect();
    writeln!(w, "wcc: count={} largest=[{}]", wcc.len(), sizes.join(" "))?;
    writeln!(w, "triangles: {}", tri.total)?;
    writeln!(w, "clustering: {:.6}", avg_cc)?;
    Ok(())
}

fn write_scores<F: std::fmt::Display>(
    w: &mut dyn Write,
    header: &str,
    mut rows: Vec<(NodeId, F)>,
) -> Result<(), AppError> {
    rows.sort_by_key(|&(v, _)| v);
    writeln!(w, "{header}")?;
    for (v, s) in rows {
        writeln!(w, "{v},{s}")?;
    }
    Ok(())
}

fn score_rows(map: std::collections::HashMap<NodeId, f64>) -> Vec<(NodeId, String)> {
    map.into_iter().map(|(v, s)| (v, format!("{s:.6}"))).collect()
}

#[allow(clippy::too_many_arguments)]
pub mod alg {
    use super::*;

    pub fn pagerank_cmd(
        g: &AnyGraph,
        iters: Option<usize>,
        tolerance: Option<f64>,
        damping: f64,
        w: &mut dyn Write,
    ) -> Result<(), AppError> {
        let stop = match (iters, tolerance) {
            (_, Some(t)) => StopRule::Tolerance(t),
            (Some(k), None) => StopRule::Iterations(k),
            (None, None) => StopRule::Iterations(10),
        };
        let r = with_graph!(g, |gg| pagerank::<f64, _>(gg, damping, stop))
            .map_err(|e| AppError::Alg(e.to_string()))?;
        write_scores(w, "node,pagerank", score_rows(r.scores))
    }

    pub fn hits_cmd(g: &AnyGraph, iters: usize, w: &mut dyn Write) -> Result<(), AppError> {
        let r = with_graph!(g, |gg| hits::<f64, _>(gg, StopRule::Iterations(iters)))
            .map_err(|e| AppError::Alg(e.to_string()))?;
        let mut rows: Vec<(NodeId, String)> = r
            .hubs
            .iter()
            .map(|(&v, &h)| (v, format!("{h:.6},{:.6}", r.authorities[&v])))
            .collect();
        rows.sort_by_key(|&(v, _)| v);
        writeln!(w, "node,hub,authority")?;
        for (v, s) in rows {
            writeln!(w, "{v},{s}")?;
        }
        Ok(())
    }

    pub fn betweenness_cmd(
        g: &AnyGraph,
        fraction: f64,
        seed: u64,
        w: &mut dyn Write,
    ) -> Result<(), AppError> {
        let r = with_graph!(g, |gg| betweenness::<f64, _>(gg, fraction, seed))
            .map_err(|e| AppError::Alg(e.to_string()))?;
        write_scores(w, "node,betweenness", score_rows(r.nodes))
    }

    pub fn closeness_cmd(g: &AnyGraph, w: &mut dyn Write) -> Result<(), AppError> {
        let rows: Result<Vec<(NodeId, f64)>, _> = with_graph!(g, |gg| gg
            .node_ids()
            .into_iter()
            .map(|v| closeness_centrality::<f64, _>(gg, v).map(|c| (v, c)))
            .collect());
        let rows = rows.map_err(|e| AppError::Alg(e.to_string()))?;
        write_scores(
            w,
            "node,closeness",
            rows.into_iter()
                .map(|(v, c)| (v, format!("{c:.6}")))
                .collect(),
        )
    }

    pub fn degcent_cmd(g: &AnyGraph, w: &mut dyn Write) -> Result<(), AppError> {
        let scores = with_graph!(g, |gg| degree_centrality::<f64, _>(gg));
        write_scores(w, "node,degree_centrality", score_rows(scores))
    }

    pub fn kcore_cmd(g: &AnyGraph, k: usize, w: &mut dyn Write) -> Result<(), AppError> {
        let core = k_core(&undirected_of(g), k);
        writeln!(w, "node")?;
        for v in core.node_ids() {
            writeln!(w, "{v}")?;
        }
        Ok(())
    }

    pub fn coredecomp_cmd(g: &AnyGraph, w: &mut dyn Write) -> Result<(), AppError> {
        let core = core_decomposition(&undirected_of(g));
        write_scores(
            w,
            "node,core_number",
            core.into_iter().map(|(v, c)| (v, c.to_string())).collect(),
        )
    }

    pub fn triangles_cmd(g: &AnyGraph, threads: usize, w: &mut dyn Write) -> Result<(), AppError> {
        let tri = count_triangles_par(&undirected_of(g), threads);
        writeln!(w, "metric,value")?;
        writeln!(w, "triangles,{}", tri.total)?;
        Ok(())
    }

    pub fn clustering_cmd(g: &AnyGraph, w: &mut dyn Write) -> Result<(), AppError> {
        let (avg, per) = clustering_coefficient::<f64>(&undirected_of(g));
        writeln!(w, "node,clustering")?;
        writeln!(w, "average,{avg:.6}")?;
        let mut rows: Vec<(NodeId, f64)> = per.into_iter().collect();
        rows.sort_by_key(|&(v, _)| v);
        for (v, c) in rows {
            writeln!(w, "{v},{c:.6}")?;
        }
        Ok(())
    }

    pub fn components_cmd(
        g: &AnyGraph,
        strong: bool,
        w: &mut dyn Write,
    ) -> Result<(), AppError> {
        let mut comps = if strong {
            with_graph!(g, |gg| strongly_connected_components(gg))
        } else {
            with_graph!(g, |gg| weakly_connected_components(gg))
        };
        comps.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.iter().min().copied()));
        writeln!(w, "component,size,min_node")?;
        for (i, c) in comps.iter().enumerate() {
            writeln!(w, "{i},{},{}", c.len(), c.iter().min().unwrap())?;
        }
        Ok(())
    }

    pub fn triads_cmd(g: &AnyGraph, w: &mut dyn Write) -> Result<(), AppError> {
        let d = match g {
            AnyGraph::Directed(d) => d.clone(),
            AnyGraph::Undirected(u) => graph_core::manipulate::to_directed(u),
            other => with_graph!(other, |gg| graph_core::manipulate::multi_to_directed(gg)),
        };
        let census = triad_census(&d);
        writeln!(w, "class,count")?;
        for (name, count) in TRIAD_NAMES.iter().zip(census.counts.iter()) {
            writeln!(w, "{name},{count}")?;
        }
        Ok(())
    }

    pub fn eigen_cmd(g: &AnyGraph, w: &mut dyn Write) -> Result<(), AppError> {
        let est = leading_eigenvalue::<f64>(&undirected_of(g))
            .map_err(|e| AppError::Alg(e.to_string()))?;
        writeln!(w, "metric,value")?;
        writeln!(w, "eigenvalue,{:.9}", est.value)?;
        writeln!(w, "converged,{}", est.converged)?;
        writeln!(w, "iterations,{}", est.iterations)?;
        Ok(())
    }

    pub fn bfs_cmd(g: &AnyGraph, root: u32, w: &mut dyn Write) -> Result<(), AppError> {
        let dist = with_graph!(g, |gg| bfs(gg, NodeId::new(root), Direction::Out))
            .map_err(|e| AppError::Alg(e.to_string()))?;
        write_scores(
            w,
            "node,distance",
            dist.into_iter().map(|(v, d)| (v, d.to_string())).collect(),
        )
    }

    pub fn hopplot_cmd(
        g: &AnyGraph,
        sources: usize,
        seed: u64,
        w: &mut dyn Write,
    ) -> Result<(), AppError> {
        let hp = with_graph!(g, |gg| hop_plot(gg, sources, seed));
        writeln!(w, "hops,fraction")?;
        for (h, f) in hp.points {
            writeln!(w, "{h},{f:.6}")?;
        }
        Ok(())
    }

    pub fn effdiam_cmd(
        g: &AnyGraph,
        sources: usize,
        seed: u64,
        w: &mut dyn Write,
    ) -> Result<(), AppError> {
        let d = with_graph!(g, |gg| effective_diameter(gg, sources, seed));
        writeln!(w, "metric,value")?;
        writeln!(w, "effective_diameter,{d:.6}")?;
        Ok(())
    }

    pub fn ppr_cmd(
        g: &AnyGraph,
        source: u32,
        target: u32,
        alpha: f64,
        epsilon: f64,
        seed: u64,
        w: &mut dyn Write,
    ) -> Result<(), AppError> {
        let q = PprQuery {
            source: [(NodeId::new(source), 1.0)].into_iter().collect(),
            target: NodeId::new(target),
            alpha,
            epsilon,
        };
        let est: f64 = with_graph!(g, |gg| ppr_bidirectional(
            gg,
            &q,
            seed,
            PprConfig::default()
        ))
        .map_err(|e| AppError::Alg(e.to_string()))?;
        writeln!(w, "source,target,alpha,epsilon,estimate")?;
        writeln!(w, "{source},{target},{alpha},{epsilon},{est:.6}")?;
        Ok(())
    }
}
