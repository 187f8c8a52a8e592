//! Command-line front end: graph generation, solving, k-sparse designs,
//! and benchmark CSV emission.
//!
//! Exit codes: 0 success; 1 usage, I/O, or parameter errors; 2 non-chordal
//! input; 3 colors exhausted; 4 budget exceeded; 5 infeasible infinite
//! costs.

use std::io::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sepsys::bench;
use sepsys::error::SolveError;
use sepsys::exact::{brute_force_min_cost, exact_min_cost_coloring, BruteForceLimits};
use sepsys::gen::{generate_chordal_with, GeneratorParams, WeightConvention};
use sepsys::greedy::{baseline_design, greedy_min_cost_design};
use sepsys::io::{load_graph, write_design, write_graph, LoadError};
use sepsys::ksparse::{
    default_lambda_grid, frontier_csv, frontier_sweep, ksparse_lower_bound,
    min_size_ksparse_design, weighted_ksparse_design,
};
use sepsys::separating::{coloring_to_design, design_cost, verify_separating};
use sepsys::weight::parse_decimal;
use sepsys::{InterventionDesign, WeightedGraph};

#[derive(Parser)]
#[command(name = "sepsys", version, about = "Minimum-cost and k-sparse intervention design on chordal graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a random connected chordal graph with Pareto weights.
    Generate(GenerateArgs),
    /// Solve the minimum-cost intervention design problem on a graph file.
    Solve(SolveArgs),
    /// Build k-sparse designs and cost/size frontiers.
    Ksparse(KsparseArgs),
    /// Reproduce the benchmark figures as CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    n: usize,
    /// Window size; the maximum degree is bounded by 2b.
    #[arg(long)]
    b: usize,
    /// Expected extra neighbors per vertex (0 <= d <= b).
    #[arg(long)]
    d: f64,
    #[arg(long)]
    seed: u64,
    /// Pareto tail exponent for the vertex weights.
    #[arg(long, default_value_t = 2.0)]
    pareto_shape: f64,
    /// Draw weights with minimum 0 (shifted convention) instead of 1.
    #[arg(long)]
    min_zero: bool,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Algo {
    Greedy,
    GreedyNoquant,
    Baseline,
    Exact,
    Brute,
}

#[derive(Args)]
struct SolveArgs {
    /// Graph JSON file.
    graph: PathBuf,
    #[arg(long, value_enum)]
    algo: Algo,
    /// Number of interventions (colors are {0,1}^m).
    #[arg(long)]
    m: u32,
    /// Where to write the design JSON.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where to write the greedy extraction trace JSON.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Where to write the coloring JSON.
    #[arg(long)]
    coloring: Option<PathBuf>,
    /// State cap for the exact solver; defaults to SEPSYS_DP_BUDGET or a
    /// built-in limit.
    #[arg(long)]
    dp_budget: Option<u128>,
}

#[derive(Args)]
struct KsparseArgs {
    /// Graph JSON file.
    graph: PathBuf,
    /// Sparsity bound: every intervention has at most k vertices.
    #[arg(long)]
    k: usize,
    /// Penalty added to every vertex weight; exact decimal, e.g. 0.125.
    #[arg(long, conflicts_with = "sweep")]
    lambda: Option<String>,
    /// Sweep the default penalty grid and emit the frontier CSV.
    #[arg(long)]
    sweep: bool,
    /// Output file (design JSON, or frontier CSV with --sweep).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Figure {
    #[value(name = "2a")]
    Fig2a,
    #[value(name = "2b")]
    Fig2b,
    #[value(name = "3")]
    Fig3,
    Runtime,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    figure: Figure,
    #[arg(long, default_value_t = 5)]
    seeds: u64,
    /// Output CSV; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Vertex counts for figure 2a, comma separated.
    #[arg(long, value_delimiter = ',')]
    n_list: Option<Vec<usize>>,
    /// Average-degree targets for figure 2b, comma separated.
    #[arg(long, value_delimiter = ',')]
    degree_list: Option<Vec<f64>>,
    /// Window size override for figure 2.
    #[arg(long)]
    b: Option<usize>,
    /// Design size override for figure 2 and runtime.
    #[arg(long)]
    m: Option<u32>,
    /// Average-degree target for figures 2a and runtime.
    #[arg(long)]
    avg_degree: Option<f64>,
    /// Sparsity bound override for figure 3.
    #[arg(long)]
    k: Option<usize>,
    /// Vertex-count override for figure 3.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    dp_budget: Option<u128>,
}

struct CmdError {
    code: i32,
    msg: String,
}

impl From<SolveError> for CmdError {
    fn from(e: SolveError) -> Self {
        let code = match e {
            SolveError::NonChordalInput => 2,
            SolveError::ColorsExhausted { .. } => 3,
            SolveError::BudgetExceeded { .. } => 4,
            SolveError::InfeasibleInfiniteCosts { .. } => 5,
            _ => 1,
        };
        CmdError { code, msg: e.to_string() }
    }
}

impl From<LoadError> for CmdError {
    fn from(e: LoadError) -> Self {
        CmdError { code: 1, msg: e.to_string() }
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError { code: 1, msg: e.to_string() }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    let result = match cli.cmd {
        Cmd::Generate(args) => cmd_generate(args),
        Cmd::Solve(args) => cmd_solve(args),
        Cmd::Ksparse(args) => cmd_ksparse(args),
        Cmd::Bench(args) => cmd_bench(args),
    };
    if let Err(e) = result {
        eprintln!("error: {}", e.msg);
        std::process::exit(e.code);
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CmdError> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => std::io::stdout().write_all(content.as_bytes())?,
    }
    Ok(())
}

fn cmd_generate(args: GenerateArgs) -> Result<(), CmdError> {
    let params = GeneratorParams {
        n: args.n,
        b: args.b,
        d: args.d,
        pareto_shape: args.pareto_shape,
        seed: args.seed,
    };
    let convention = if args.min_zero {
        WeightConvention::MinimumZero
    } else {
        WeightConvention::MinimumOne
    };
    let g = generate_chordal_with(&params, convention)?;
    let meta = serde_json::json!({
        "generator": {
            "n": args.n,
            "b": args.b,
            "d": args.d,
            "pareto_shape": args.pareto_shape,
            "seed": args.seed,
            "weights": if args.min_zero { "min_zero" } else { "min_one" },
        }
    });
    emit(&args.out, &write_graph(&g, Some(&meta)))
}

fn dp_budget(flag: Option<u128>) -> Option<u128> {
    flag.or_else(|| {
        std::env::var("SEPSYS_DP_BUDGET")
            .ok()
            .and_then(|s| s.parse().ok())
    })
}

fn load(path: &PathBuf) -> Result<WeightedGraph, CmdError> {
    let text = std::fs::read_to_string(path)?;
    Ok(load_graph(&text)?.0)
}

fn cmd_solve(args: SolveArgs) -> Result<(), CmdError> {
    let g = load(&args.graph)?;
    let start = Instant::now();
    let algo_name;
    let mut trace_json = None;
    let mut stats_line = None;
    let (design, coloring): (InterventionDesign, Option<sepsys::Coloring>) = match args.algo {
        Algo::Greedy | Algo::GreedyNoquant => {
            let quantize = args.algo == Algo::Greedy;
            algo_name = if quantize { "greedy" } else { "greedy-noquant" };
            let (design, trace) = greedy_min_cost_design(&g, args.m, quantize)?;
            trace_json = Some(serde_json::to_string_pretty(&trace).expect("trace serializes"));
            (design, None)
        }
        Algo::Baseline => {
            algo_name = "baseline";
            (baseline_design(&g, args.m)?, None)
        }
        Algo::Exact => {
            algo_name = "exact";
            let sol = exact_min_cost_coloring(&g, args.m, dp_budget(args.dp_budget))?;
            stats_line = Some(format!(
                "stats estimated_states={} bags={} treewidth={} dp_wall_ms={}",
                sol.stats.estimated_states, sol.stats.bag_count, sol.stats.treewidth, sol.stats.wall_ms
            ));
            let design = coloring_to_design(&g, &sol.coloring)?;
            (design, Some(sol.coloring))
        }
        Algo::Brute => {
            algo_name = "brute";
            let (coloring, _) = brute_force_min_cost(&g, args.m, BruteForceLimits::default())?;
            let design = coloring_to_design(&g, &coloring)?;
            (design, Some(coloring))
        }
    };
    if !verify_separating(&g, &design) {
        return Err(CmdError {
            code: 1,
            msg: "internal error: produced design does not separate the graph".into(),
        });
    }
    let cost = design_cost(&g, &design);
    let colors_used = sepsys::design_to_coloring(&design, g.n()).distinct_colors();
    let wall_ms = start.elapsed().as_millis();
    if let Some(path) = &args.out {
        std::fs::write(path, write_design(&design))?;
    }
    if let Some(path) = &args.trace {
        match &trace_json {
            Some(t) => std::fs::write(path, t)?,
            None => {
                return Err(CmdError {
                    code: 1,
                    msg: "--trace is only available for the greedy algorithms".into(),
                })
            }
        }
    }
    if let Some(path) = &args.coloring {
        let c = coloring.unwrap_or_else(|| sepsys::design_to_coloring(&design, g.n()));
        std::fs::write(path, sepsys::io::write_coloring(&c))?;
    }
    if let Some(line) = stats_line {
        println!("{line}");
    }
    println!(
        "algo={algo_name} m={} cost={cost} colors_used={colors_used} wall_ms={wall_ms}",
        args.m
    );
    Ok(())
}

fn cmd_ksparse(args: KsparseArgs) -> Result<(), CmdError> {
    let g = load(&args.graph)?;
    let lb = ksparse_lower_bound(&g, args.k)?;
    let start = Instant::now();
    if args.sweep {
        let grid = default_lambda_grid(&g);
        let points = frontier_sweep(&g, args.k, &grid)?;
        println!(
            "k={} lower_bound={lb} sweep_points={} wall_ms={}",
            args.k,
            points.len(),
            start.elapsed().as_millis()
        );
        return emit(&args.out, &frontier_csv(&points));
    }
    let (design, cost) = match &args.lambda {
        Some(text) => {
            let lambda = parse_decimal(text).ok_or_else(|| CmdError {
                code: 1,
                msg: format!("--lambda: expected a decimal, got {text:?}"),
            })?;
            let got = weighted_ksparse_design(&g, args.k, &lambda)?;
            (got.design, got.cost)
        }
        None => {
            let design = min_size_ksparse_design(&g, args.k)?;
            let cost = design_cost(&g, &design);
            (design, cost)
        }
    };
    if !verify_separating(&g, &design) || !design.is_k_sparse(args.k) {
        return Err(CmdError {
            code: 1,
            msg: "internal error: produced design is not a k-sparse separating system".into(),
        });
    }
    println!(
        "k={} lower_bound={lb} size={} cost={cost} wall_ms={}",
        args.k,
        design.size(),
        start.elapsed().as_millis()
    );
    if let Some(path) = &args.out {
        std::fs::write(path, write_design(&design))?;
    }
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<(), CmdError> {
    let cfg = bench::Fig2Config {
        b: args.b.unwrap_or(bench::FIG2_B),
        m: args.m.unwrap_or(bench::FIG2_M),
        pareto_shape: bench::FIG2_PARETO_SHAPE,
        seeds: args.seeds,
        dp_budget: dp_budget(args.dp_budget),
    };
    let csv = match args.figure {
        Figure::Fig2a => {
            let ns = args.n_list.unwrap_or_else(|| bench::FIG2A_N_LIST.to_vec());
            let avg = args.avg_degree.unwrap_or(bench::FIG2A_AVG_DEGREE);
            bench::series_csv(&bench::figure2a(&ns, avg, &cfg)?)
        }
        Figure::Fig2b => {
            let targets = args
                .degree_list
                .unwrap_or_else(|| bench::FIG2B_DEGREE_TARGETS.to_vec());
            bench::series_csv(&bench::figure2b(bench::FIG2B_N, &targets, &cfg)?)
        }
        Figure::Fig3 => {
            let k = args.k.unwrap_or(bench::FIG3_K);
            let n = args.n.unwrap_or(bench::FIG3_N);
            bench::figure3_csv(&bench::figure3_at(n, bench::FIG3_B, bench::FIG3_D, k, args.seeds)?)
        }
        Figure::Runtime => {
            let avg = args.avg_degree.unwrap_or(bench::FIG2A_AVG_DEGREE);
            bench::runtime_csv(&bench::runtime_bench(args.seeds, avg)?)
        }
    };
    emit(&args.out, &csv)
}
