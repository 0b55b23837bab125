//! Thin command-line front end; all logic lives in the library.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use metricdim::families::Family;
use metricdim::graph::{all_pairs_distances, Graph};
use metricdim::graph6::{graph6_read, graph6_write, json_read};
use metricdim::harness::{
    self, conjecture_csv, conjecture_sweep, parse_params, resolve_workers, sweep, Axis,
    VerifyOptions,
};
use metricdim::report::{write_csv, write_json, Status, StatusCounts};
use metricdim::resolving::{
    check_generator, counting_lower_bound, metric_vector, twin_lower_bound, twin_partition,
    LandmarkSet, TwinMode,
};
use metricdim::self_resolved::{max_self_resolution, self_k_resolution};
use metricdim::solver::metric_dimension_exact;
use metricdim::{cartesian_product, strong_product};

#[derive(Parser)]
#[command(name = "metricdim", version, about = "Metric dimension of graphs and strong products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a graph product and print it as graph6.
    Product {
        #[arg(long, value_enum)]
        kind: ProductKind,
        /// First factor: graph6/JSON file, "-" for stdin, or a family spec like P5.
        g: String,
        /// Second factor.
        h: String,
    },
    /// Exact metric dimension (or lower bounds only).
    Dim {
        graph: String,
        /// Run the full exact search (default).
        #[arg(long, conflicts_with = "bounds")]
        exact: bool,
        /// Report the twin and counting lower bounds without searching.
        #[arg(long)]
        bounds: bool,
        /// Node budget for the search; required for orders above 64.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Check whether a vertex set is a metric generator.
    CheckGenerator {
        graph: String,
        /// Comma-separated landmark vertices, e.g. 0,4,8.
        #[arg(long)]
        set: String,
    },
    /// Twin equivalence classes and the n - t lower bound.
    Twins {
        graph: String,
        #[arg(long, value_enum, default_value_t = TwinModeArg::True)]
        mode: TwinModeArg,
    },
    /// Self-k-resolution check or the maximum resolution index.
    SelfResolved {
        graph: String,
        #[arg(long, conflicts_with = "max")]
        k: Option<usize>,
        /// Scan downward from the diameter for the largest k.
        #[arg(long)]
        max: bool,
        /// Dump per-pair certificates as JSON (with --k).
        #[arg(long)]
        certificates: bool,
    },
    /// Build a landmark construction and verify it, as JSON.
    Construct {
        #[arg(long, value_enum)]
        which: Construction,
        /// Construction parameters, e.g. g=K3,h=P5,k=3 or n1=3,n2=5.
        #[arg(long)]
        params: String,
    },
    /// Verify one registered theorem instance.
    Verify {
        /// Theorem id (see `verify --list`).
        id: Option<String>,
        /// Parameters, e.g. n1=2,n2=4 or g=K3,h=P5,k=3.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        budget: Option<u64>,
        /// List registered theorem ids and statements.
        #[arg(long)]
        list: bool,
    },
    /// Verify a theorem across a parameter grid.
    Sweep {
        id: String,
        /// Integer axis, e.g. n1=2..6 (inclusive); repeatable.
        #[arg(long = "range")]
        ranges: Vec<String>,
        /// Explicit value axis, e.g. g=P4,C5,K3; repeatable.
        #[arg(long = "values")]
        values: Vec<String>,
        /// CSV output path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSON output path.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long)]
        workers: Option<usize>,
        /// Write real runtimes into the CSV (breaks byte reproducibility).
        #[arg(long)]
        timings: bool,
    },
    /// Tabulate dim(P_n1 ⊠ P_n2) against its floor/ceiling bounds.
    Conjecture {
        #[arg(long, default_value_t = 6)]
        max_n1: usize,
        #[arg(long, default_value_t = 12)]
        max_n2: usize,
        /// CSV output path.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Strong,
    Cartesian,
}

#[derive(Clone, Copy, ValueEnum)]
enum TwinModeArg {
    True,
    Mixed,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// (V1 × S2) ∪ (S1 × V2) from factor bases.
    Thm1,
    /// S1 × V2 for a self-k-resolved second factor.
    Thm2,
    /// Zig-zag set on P_n1 ⊠ P_n2.
    Pathpath,
    /// Three corners on P_n ⊠ P_n.
    Corner,
    /// Diagonal on P_n1 ⊠ C_n2.
    Diag,
}

/// Loads a graph from a file path ("-" = stdin), falling back to an
/// inline family spec such as P5 or S3x2.
fn load_graph(spec: &str) -> Result<Graph> {
    if spec == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        return parse_graph_text(text.trim()).context("reading graph from stdin");
    }
    let path = PathBuf::from(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(&path).with_context(|| format!("reading {spec}"))?;
        return parse_graph_text(text.trim()).with_context(|| format!("parsing {spec}"));
    }
    if let Ok(family) = spec.parse::<Family>() {
        return Ok(family.build()?);
    }
    bail!("{spec:?} is neither a readable file nor a family spec");
}

fn parse_graph_text(text: &str) -> Result<Graph> {
    if text.starts_with('{') {
        return Ok(json_read(text)?);
    }
    let first = text.lines().next().context("empty graph input")?;
    Ok(graph6_read(first)?)
}

fn main() {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            1
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Product { kind, g, h } => {
            let g = load_graph(&g)?;
            let h = load_graph(&h)?;
            let product = match kind {
                ProductKind::Strong => strong_product(&g, &h)?,
                ProductKind::Cartesian => cartesian_product(&g, &h)?,
            };
            println!("{}", graph6_write(&product));
            Ok(0)
        }
        Command::Dim { graph, exact: _, bounds, budget, json } => {
            let g = load_graph(&graph)?;
            let dm = all_pairs_distances(&g);
            dm.require_connected()?;
            let twin = twin_lower_bound(&g);
            let counting = if g.order() >= 2 {
                counting_lower_bound(g.order(), dm.diameter())
            } else {
                0
            };
            let result = if bounds {
                None
            } else {
                Some(metric_dimension_exact(&g, budget)?)
            };

            #[derive(Serialize)]
            struct DimJson {
                n: usize,
                dimension: usize,
                basis: Option<Vec<usize>>,
                lower_bounds: BTreeMap<&'static str, usize>,
                exact: bool,
            }
            let (dimension, basis, exact) = match &result {
                Some(r) => (
                    r.lower_bound,
                    r.basis.as_ref().map(|b| b.vertices().to_vec()),
                    r.is_exact(),
                ),
                None => (twin.max(counting), None, false),
            };
            if json {
                let out = DimJson {
                    n: g.order(),
                    dimension,
                    basis,
                    lower_bounds: BTreeMap::from([("twin", twin), ("counting", counting)]),
                    exact,
                };
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!("n = {}", g.order());
                println!("lower bounds: twin = {twin}, counting = {counting}");
                match &result {
                    Some(r) if r.is_exact() => {
                        println!("dimension = {} (exact, {} nodes)", dimension, r.nodes_explored);
                        println!("basis = {}", r.basis.as_ref().unwrap());
                    }
                    Some(r) => println!(
                        "dimension >= {} (budget exhausted after {} nodes)",
                        dimension, r.nodes_explored
                    ),
                    None => println!("dimension >= {dimension} (bounds only)"),
                }
            }
            Ok(if exact || bounds { 0 } else { 3 })
        }
        Command::CheckGenerator { graph, set } => {
            let g = load_graph(&graph)?;
            let dm = all_pairs_distances(&g);
            let vertices: Vec<usize> = set
                .split(',')
                .map(|v| v.trim().parse().context("landmark indices must be integers"))
                .collect::<Result<_>>()?;
            let s = LandmarkSet::new(vertices)?;
            s.check_range(g.order())?;
            let check = check_generator(&dm, &s)?;
            for u in 0..g.order() {
                let vec = metric_vector(&dm, u, &s)?;
                let coords: Vec<String> = vec.iter().map(|d| d.to_string()).collect();
                println!("r({} | {s}) = ({})", g.label(u), coords.join(","));
            }
            match check.witness {
                None => {
                    println!("generator: yes");
                    Ok(0)
                }
                Some((a, b)) => {
                    println!("generator: no ({} and {} share a representation)", g.label(a), g.label(b));
                    Ok(2)
                }
            }
        }
        Command::Twins { graph, mode } => {
            let g = load_graph(&graph)?;
            let mode = match mode {
                TwinModeArg::True => TwinMode::True,
                TwinModeArg::Mixed => TwinMode::Mixed,
            };
            let partition = twin_partition(&g, mode);
            for class in &partition.classes {
                let members: Vec<String> = class.iter().map(|&v| g.label(v)).collect();
                println!("{{{}}}", members.join(","));
            }
            println!("classes: t = {}", partition.class_count());
            println!("twin lower bound: {}", twin_lower_bound(&g));
            Ok(0)
        }
        Command::SelfResolved { graph, k, max, certificates } => {
            let g = load_graph(&graph)?;
            if max {
                println!("max self-resolution: {}", max_self_resolution(&g)?);
                return Ok(0);
            }
            let k = k.context("pass --k <level> or --max")?;
            let res = self_k_resolution(&g, k, certificates)?;
            if certificates {
                println!("{}", serde_json::to_string_pretty(&res.certificates)?);
            }
            match res.failing_pair {
                None => {
                    println!("self {k}-resolved: yes");
                    Ok(0)
                }
                Some((x, y)) => {
                    println!("self {k}-resolved: no (pair {},{})", g.label(x), g.label(y));
                    Ok(2)
                }
            }
        }
        Command::Construct { which, params } => {
            let p = parse_params(&params)?;
            let need = |key: &str| -> Result<usize> {
                p.get(key)
                    .with_context(|| format!("construction needs parameter {key}"))?
                    .parse()
                    .with_context(|| format!("parameter {key} must be an integer"))
            };
            let family = |key: &str| -> Result<Graph> {
                Ok(p.get(key)
                    .with_context(|| format!("construction needs parameter {key}"))?
                    .parse::<Family>()?
                    .build()?)
            };
            let out = match which {
                Construction::Thm1 => {
                    let g = family("g")?;
                    let h = family("h")?;
                    let s1 = metric_dimension_exact(&g, None)?.basis.context("factor too large")?;
                    let s2 = metric_dimension_exact(&h, None)?.basis.context("factor too large")?;
                    metricdim::upper_bound_generator(&g, &h, &s1, &s2)?
                }
                Construction::Thm2 => {
                    let g = family("g")?;
                    let h = family("h")?;
                    let s1 = metric_dimension_exact(&g, None)?.basis.context("factor too large")?;
                    metricdim::resolved_generator(&g, &h, &s1, need("k")?)?
                }
                Construction::Pathpath => metricdim::path_path_generator(need("n1")?, need("n2")?)?,
                Construction::Corner => metricdim::path_path_corner_generator(need("n")?)?,
                Construction::Diag => {
                    metricdim::path_cycle_diagonal_generator(need("n1")?, need("n2")?)?
                }
            };
            let dm = all_pairs_distances(&out.product);
            let check = check_generator(&dm, &out.landmarks)?;

            #[derive(Serialize)]
            struct ConstructJson {
                landmarks: Vec<usize>,
                labels: Vec<String>,
                claimed_size: usize,
                product_order: usize,
                is_generator: bool,
            }
            let json = ConstructJson {
                landmarks: out.landmarks.vertices().to_vec(),
                labels: out.landmarks.iter().map(|v| out.product.label(v)).collect(),
                claimed_size: out.claimed_size,
                product_order: out.product.order(),
                is_generator: check.is_generator,
            };
            println!("{}", serde_json::to_string_pretty(&json)?);
            Ok(if check.is_generator { 0 } else { 2 })
        }
        Command::Verify { id, params, budget, list } => {
            if list {
                for entry in harness::registry() {
                    println!("{:<4} {}", entry.id, entry.statement);
                    println!("     params: {}", entry.params_help);
                }
                return Ok(0);
            }
            let id = id.context("pass a theorem id or --list")?;
            let p = parse_params(&params)?;
            let report = harness::verify(&id, &p, &VerifyOptions { budget })?;
            println!("{}", report.summary_line());
            Ok(match report.status {
                Status::Violated => 2,
                Status::InexactBudget => 3,
                _ => 0,
            })
        }
        Command::Sweep { id, ranges, values, out, json, budget, workers, timings } => {
            let mut axes: Vec<Axis> = Vec::new();
            for r in &ranges {
                axes.push(Axis::from_range(r)?);
            }
            for v in &values {
                axes.push(Axis::from_values(v)?);
            }
            let workers = resolve_workers(workers);
            let result = sweep(&id, &axes, &VerifyOptions { budget: Some(budget) }, workers)?;
            for report in &result.reports {
                println!("{}", report.summary_line());
            }
            println!("summary: {}", result.counts.summary_line());
            if let Some(path) = out {
                std::fs::write(&path, write_csv(&result.reports, timings))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if let Some(path) = json {
                std::fs::write(&path, write_json(&result.reports))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(result.counts.exit_code())
        }
        Command::Conjecture { max_n1, max_n2, out, budget, workers } => {
            let workers = resolve_workers(workers);
            let rows = conjecture_sweep(
                max_n1,
                max_n2,
                &VerifyOptions { budget: Some(budget) },
                workers,
            )?;
            let csv = conjecture_csv(&rows);
            print!("{csv}");
            let mut counts = StatusCounts::default();
            for row in &rows {
                match row.verdict {
                    harness::ConjectureVerdict::MatchesCeil => counts.holds += 1,
                    harness::ConjectureVerdict::MatchesFloorOnly => {
                        println!(
                            "note: ({}, {}) sits strictly below its ceiling bound",
                            row.n1, row.n2
                        );
                        counts.holds += 1;
                    }
                    harness::ConjectureVerdict::Inconclusive => counts.inexact_budget += 1,
                }
            }
            if let Some(path) = out {
                std::fs::write(&path, csv).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(counts.exit_code())
        }
    }
}
