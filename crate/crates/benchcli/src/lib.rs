//! `graphbench`: command-line harness over the graph library — generators,
//! statistics, format conversion, algorithm runs and benchmark suites with
//! CSV reports.
//!
//! Exit codes: 0 success, 2 usage error, 3 I/O error, 4 parse/format error,
//! 5 algorithm error.

pub mod alloc;
pub mod commands;
pub mod report;
pub mod suites;

use alloc::TrackingAlloc;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_core::generators as gen;
use graph_core::{AnyGraph, DirectedGraph, UndirectedGraph};
use std::path::PathBuf;

/// Byte-accounting allocator; lets the memory suite difference live heap
/// sizes. Installed for the CLI binary and every test that links this crate.
#[global_allocator]
pub static ALLOC: TrackingAlloc = TrackingAlloc::new();

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_PARSE: i32 = 4;
pub const EXIT_ALG: i32 = 5;

#[derive(Debug)]
pub enum AppError {
    Usage(String),
    Io(String),
    Parse(String),
    Alg(String),
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppError::Usage(m) | AppError::Io(m) | AppError::Parse(m) | AppError::Alg(m) => {
                f.write_str(m)
            }
        }
    }
}

impl AppError {
    pub fn code(&self) -> i32 {
        match self {
            AppError::Usage(_) => EXIT_USAGE,
            AppError::Io(_) => EXIT_IO,
            AppError::Parse(_) => EXIT_PARSE,
            AppError::Alg(_) => EXIT_ALG,
        }
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FileFormat {
    Auto,
    Binary,
    Text,
}

#[derive(Parser)]
#[command(
    name = "graphbench",
    version,
    about = "Graph generation, statistics, conversion, algorithms and benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it to a file
    Gen(GenCmd),
    /// Print summary statistics of a graph file
    Stats(StatsCmd),
    /// Run a benchmark suite and emit CSV
    Bench(BenchCmd),
    /// Convert between binary and text formats
    Convert(ConvertCmd),
    /// Run an algorithm and emit CSV results
    Alg(AlgCmd),
}

#[derive(Args)]
struct GenCmd {
    #[command(subcommand)]
    model: GenModel,
    /// Output file (omit to only print counts)
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = FileFormat::Binary)]
    format: FileFormat,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand)]
enum GenModel {
    /// Complete graph K_n
    Complete {
        #[arg(long)]
        n: u32,
    },
    /// Cycle C_n
    Circle {
        #[arg(long)]
        n: u32,
    },
    /// rows x cols grid
    Grid {
        #[arg(long)]
        rows: u32,
        #[arg(long)]
        cols: u32,
    },
    /// Star with center 0
    Star {
        #[arg(long)]
        n: u32,
    },
    /// Complete f-ary tree
    Tree {
        #[arg(long)]
        fanout: u32,
        #[arg(long)]
        depth: u32,
    },
    /// Erdős–Rényi G(n,m)
    Gnm {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        directed: bool,
    },
    /// Random bipartite graph
    Bipartite {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
        #[arg(long)]
        m: usize,
    },
    /// k-regular graph
    Constdeg {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
    },
    /// Barabási–Albert preferential attachment
    Ba {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k_out: usize,
    },
    /// Watts–Strogatz small world
    Ws {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k_half: u32,
        #[arg(long)]
        beta: f64,
    },
    /// R-MAT recursive quadrant model (directed)
    Rmat {
        #[arg(long)]
        scale: u32,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0.45)]
        a: f64,
        #[arg(long, default_value_t = 0.15)]
        b: f64,
        #[arg(long, default_value_t = 0.15)]
        c: f64,
    },
    /// Stochastic Kronecker graph (directed)
    Kronecker {
        /// Initiator rows separated by ';', entries by ',' e.g. "0.9,0.5;0.5,0.2"
        #[arg(long)]
        initiator: String,
        #[arg(long)]
        iterations: u32,
    },
    /// Forest Fire (directed)
    Forestfire {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p_fwd: f64,
        #[arg(long)]
        p_bwd: f64,
    },
    /// Copying model (directed)
    Copying {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        alpha: f64,
    },
    /// Power-law degree distribution
    Powerlaw {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        gamma: f64,
    },
}

#[derive(Args)]
struct StatsCmd {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = FileFormat::Auto)]
    format: FileFormat,
    /// Treat text edge lists as directed
    #[arg(long)]
    directed: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchCmd {
    #[command(subcommand)]
    suite: Suite,
    /// Node count (memory suite derives edge counts as 10n and 100n)
    #[arg(long, global = true, default_value_t = 100_000)]
    n: u32,
    /// Edge count; defaults to 10n
    #[arg(long, global = true)]
    m: Option<usize>,
    #[arg(long, global = true, default_value_t = 5)]
    repeats: usize,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Worker threads for the parallel read-only paths
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Suite {
    /// Bytes per node/edge by allocator differencing
    Memory,
    /// Generate, save and load timings
    Basicops,
    /// Edge-existence query latency
    Edgetest,
    /// One-by-one deletion of 10% of nodes
    Delete,
    /// PageRank, clustering, triangles, WCC, 3-core, edge tests
    Algorithms,
}

#[derive(Args)]
struct ConvertCmd {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(long = "from", value_enum, default_value_t = FileFormat::Auto)]
    from_format: FileFormat,
    #[arg(long = "to", value_enum)]
    to_format: FileFormat,
    #[arg(short, long)]
    output: PathBuf,
    /// Treat text edge lists as directed
    #[arg(long)]
    directed: bool,
}

#[derive(Args)]
struct AlgCmd {
    #[command(subcommand)]
    algorithm: Algorithm,
    #[arg(short, long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = FileFormat::Auto)]
    format: FileFormat,
    /// Treat text edge lists as directed
    #[arg(long, global = true)]
    directed: bool,
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Algorithm {
    Pagerank {
        #[arg(long)]
        iters: Option<usize>,
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long, default_value_t = 0.85)]
        damping: f64,
    },
    Hits {
        #[arg(long, default_value_t = 100)]
        iters: usize,
    },
    Betweenness {
        #[arg(long, default_value_t = 1.0)]
        fraction: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    Closeness,
    Degcent,
    Kcore {
        #[arg(short, long)]
        k: usize,
    },
    Coredecomp,
    Triangles {
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    Clustering,
    Wcc,
    Scc,
    Triads,
    Eigen,
    Bfs {
        #[arg(long)]
        root: u32,
    },
    Hopplot {
        #[arg(long, default_value_t = 64)]
        sources: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    Effdiam {
        #[arg(long, default_value_t = 64)]
        sources: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    Ppr {
        #[arg(long)]
        source: u32,
        #[arg(long)]
        target: u32,
        #[arg(long, default_value_t = 0.2)]
        alpha: f64,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn generate(model: &GenModel, seed: u64) -> Result<AnyGraph, AppError> {
    let usage = |e: gen::GenError| AppError::Usage(e.to_string());
    Ok(match *model {
        GenModel::Complete { n } => gen::gen_complete(n).map_err(usage)?.into(),
        GenModel::Circle { n } => gen::gen_circle(n).map_err(usage)?.into(),
        GenModel::Grid { rows, cols } => gen::gen_grid(rows, cols).map_err(usage)?.into(),
        GenModel::Star { n } => gen::gen_star(n).map_err(usage)?.into(),
        GenModel::Tree { fanout, depth } => gen::gen_tree(fanout, depth).map_err(usage)?.into(),
        GenModel::Gnm { n, m, directed } => {
            if directed {
                gen::gen_gnm::<DirectedGraph>(n, m, seed).map_err(usage)?.into()
            } else {
                gen::gen_gnm::<UndirectedGraph>(n, m, seed).map_err(usage)?.into()
            }
        }
        GenModel::Bipartite { n1, n2, m } => {
            gen::gen_bipartite_random(n1, n2, m, seed).map_err(usage)?.into()
        }
        GenModel::Constdeg { n, k } => {
            gen::gen_constant_degree(n, k, seed).map_err(usage)?.into()
        }
        GenModel::Ba { n, k_out } => {
            gen::gen_barabasi_albert(n, k_out, seed).map_err(usage)?.into()
        }
        GenModel::Ws { n, k_half, beta } => {
            gen::gen_watts_strogatz(n, k_half, beta, seed).map_err(usage)?.into()
        }
        GenModel::Rmat { scale, m, a, b, c } => {
            gen::gen_rmat(scale, m, a, b, c, seed).map_err(usage)?.into()
        }
        GenModel::Kronecker {
            ref initiator,
            iterations,
        } => {
            let matrix: Result<Vec<Vec<f64>>, _> = initiator
                .split(';')
                .map(|row| row.split(',').map(|x| x.trim().parse::<f64>()).collect())
                .collect();
            let matrix =
                matrix.map_err(|e| AppError::Usage(format!("bad initiator matrix: {e}")))?;
            gen::gen_kronecker(&matrix, iterations, seed).map_err(usage)?.into()
        }
        GenModel::Forestfire { n, p_fwd, p_bwd } => {
            gen::gen_forest_fire(n, p_fwd, p_bwd, seed).map_err(usage)?.into()
        }
        GenModel::Copying { n, alpha } => gen::gen_copying(n, alpha, seed).map_err(usage)?.into(),
        GenModel::Powerlaw { n, gamma } => {
            gen::gen_power_law(n, gamma, seed).map_err(usage)?.into()
        }
    })
}

fn dispatch(cli: Cli) -> Result<(), AppError> {
    match cli.cmd {
        Command::Gen(cmd) => {
            let g = generate(&cmd.model, cmd.seed)?;
            let view = g.as_view();
            println!("nodes={} edges={}", view.node_count(), view.edge_count());
            if let Some(path) = &cmd.output {
                let format = match cmd.format {
                    FileFormat::Auto => FileFormat::Binary,
                    f => f,
                };
                commands::save_graph(&g, path, format)?;
            }
            Ok(())
        }
        Command::Stats(cmd) => {
            let g = commands::load_graph(&cmd.input, cmd.format, cmd.directed)?;
            let mut w = commands::out_writer(cmd.output.as_deref())?;
            commands::stats(&g, &mut w)
        }
        Command::Convert(cmd) => {
            if cmd.to_format == FileFormat::Auto {
                return Err(AppError::Usage("--to must be binary or text".to_string()));
            }
            let g = commands::load_graph(&cmd.input, cmd.from_format, cmd.directed)?;
            commands::save_graph(&g, &cmd.output, cmd.to_format)
        }
        Command::Bench(cmd) => {
            if cmd.repeats == 0 {
                return Err(AppError::Usage("--repeats must be >= 1".to_string()));
            }
            let p = suites::BenchParams {
                n: cmd.n,
                m: cmd.m.unwrap_or(cmd.n as usize * 10),
                repeats: cmd.repeats,
                seed: cmd.seed,
                threads: cmd.threads.max(1),
            };
            let rows = match cmd.suite {
                Suite::Memory => suites::memory(&p)?,
                Suite::Basicops => suites::basicops(&p)?,
                Suite::Edgetest => suites::edgetest(&p)?,
                Suite::Delete => suites::delete(&p)?,
                Suite::Algorithms => suites::algorithms(&p)?,
            };
            let mut w = commands::out_writer(cmd.output.as_deref())?;
            use std::io::Write as _;
            writeln!(w, "{}", report::CSV_HEADER)?;
            for r in rows {
                writeln!(w, "{}", r.csv_row())?;
            }
            Ok(())
        }
        Command::Alg(cmd) => {
            let input = cmd.input.as_deref().ok_or_else(|| {
                AppError::Usage("--input is required for alg subcommands".to_string())
            })?;
            let g = commands::load_graph(input, cmd.format, cmd.directed)?;
            let mut w = commands::out_writer(cmd.output.as_deref())?;
            use commands::alg::*;
            match cmd.algorithm {
                Algorithm::Pagerank {
                    iters,
                    tolerance,
                    damping,
                } => pagerank_cmd(&g, iters, tolerance, damping, &mut w),
                Algorithm::Hits { iters } => hits_cmd(&g, iters, &mut w),
                Algorithm::Betweenness { fraction, seed } => {
                    betweenness_cmd(&g, fraction, seed, &mut w)
                }
                Algorithm::Closeness => closeness_cmd(&g, &mut w),
                Algorithm::Degcent => degcent_cmd(&g, &mut w),
                Algorithm::Kcore { k } => kcore_cmd(&g, k, &mut w),
                Algorithm::Coredecomp => coredecomp_cmd(&g, &mut w),
                Algorithm::Triangles { threads } => triangles_cmd(&g, threads, &mut w),
                Algorithm::Clustering => clustering_cmd(&g, &mut w),
                Algorithm::Wcc => components_cmd(&g, false, &mut w),
                Algorithm::Scc => components_cmd(&g, true, &mut w),
                Algorithm::Triads => triads_cmd(&g, &mut w),
                Algorithm::Eigen => eigen_cmd(&g, &mut w),
                Algorithm::Bfs { root } => bfs_cmd(&g, root, &mut w),
                Algorithm::Hopplot { sources, seed } => hopplot_cmd(&g, sources, seed, &mut w),
                Algorithm::Effdiam { sources, seed } => effdiam_cmd(&g, sources, seed, &mut w),
                Algorithm::Ppr {
                    source,
                    target,
                    alpha,
                    epsilon,
                    seed,
                } => ppr_cmd(&g, source, target, alpha, epsilon, seed, &mut w),
            }
        }
    }
}

/// CLI entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    }
}
