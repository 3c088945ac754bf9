//! `alphawidth`: exact desk-scale parameters (α-tw, α-td, tw), bramble and
//! domination certificates, wheel induced-minor detection, certificate
//! validation, property suites over graph6 streams, and format conversion.

mod report;
mod suites;

use alphawidth::bramble::check_strong_bramble;
use alphawidth::domination::{dominating_cycle_or_vertex, dominating_path, DominationOutcome};
use alphawidth::minor::check_model;
use alphawidth::treedepth::check_elimination_forest;
use alphawidth::*;
use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use report::RunReport;
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "alphawidth", version, about)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Dimacs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Graph6,
    Dimacs,
    Dot,
}

#[derive(Args)]
struct InputArg {
    /// Input file, or `-` for standard input.
    #[arg(default_value = "-")]
    input: String,
    /// Input graph format.
    #[arg(long, value_enum, default_value = "graph6")]
    from: GraphFormat,
}

#[derive(Subcommand)]
enum Verb {
    /// Compute exact parameters (α-tw, α-td, tw) for every stream graph.
    Param {
        #[arg(long)]
        alpha_tw: bool,
        #[arg(long)]
        alpha_td: bool,
        #[arg(long)]
        tw: bool,
        #[command(flatten)]
        input: InputArg,
    },
    /// Find, verify, or evaluate strong brambles.
    Bramble {
        #[command(subcommand)]
        action: BrambleAction,
    },
    /// Dominating paths and cycles for a bramble certificate.
    Dominate {
        #[command(subcommand)]
        action: DominateAction,
    },
    /// Detect or verify induced wheel minors.
    Wheel {
        #[command(subcommand)]
        action: WheelAction,
    },
    /// Validate a tree-decomposition certificate.
    Tdcheck {
        #[arg(long)]
        certificate: PathBuf,
        /// Emit the decomposition as DOT instead of a verdict.
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        input: InputArg,
    },
    /// Validate an elimination-forest certificate.
    Efcheck {
        #[arg(long)]
        certificate: PathBuf,
        /// Emit the forest as DOT instead of a verdict.
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        input: InputArg,
    },
    /// Run a named property suite over a graph6 stream.
    Suite {
        /// One of: duality, treedepth-formula, td-vs-tw, chordal-char,
        /// quasi-threshold-char, refine, small-model, wheel-dichotomy,
        /// domination.
        name: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 4)]
        l: usize,
        /// Skip graphs with more vertices than this.
        #[arg(long)]
        max_n: Option<usize>,
        /// Fail on malformed stream lines instead of skipping them.
        #[arg(long)]
        strict: bool,
        /// One JSON object per graph instead of the human summary.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        input: InputArg,
    },
    /// Convert between graph6, DIMACS, and DOT.
    Convert {
        #[arg(long, value_enum)]
        to: OutFormat,
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Subcommand)]
enum BrambleAction {
    /// Find a strong bramble of α-order at least k, if one is forced.
    Find {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: InputArg,
    },
    /// Verify a bramble certificate against the graph.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
        #[command(flatten)]
        input: InputArg,
    },
    /// Recompute the α-order and witness cover of a certificate's elements.
    Order {
        #[arg(long)]
        certificate: PathBuf,
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Subcommand)]
enum DominateAction {
    /// Induced path dominating the bramble.
    Path {
        #[arg(long)]
        bramble: PathBuf,
        #[command(flatten)]
        input: InputArg,
    },
    /// Dominating vertex or induced dominating cycle.
    Cycle {
        #[arg(long)]
        bramble: PathBuf,
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Subcommand)]
enum WheelAction {
    /// Exhaustive detection with a structural certificate on absence.
    Detect {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        l: usize,
        #[command(flatten)]
        input: InputArg,
    },
    /// Verify a model certificate against the graph.
    Verify {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        model: PathBuf,
        #[command(flatten)]
        input: InputArg,
    },
}

fn main() {
    init_workers();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn init_workers() {
    if let Ok(value) = std::env::var("ALPHAWIDTH_WORKERS") {
        if let Ok(workers) = value.parse::<usize>() {
            if workers >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build_global();
            }
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading standard input")?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

/// Parses the whole input as a stream: graph6 gives one graph per nonempty
/// line, DIMACS gives a single graph.
fn read_stream(arg: &InputArg) -> Result<Vec<(String, Result<Graph, Error>)>> {
    let text = read_input(&arg.input)?;
    match arg.from {
        GraphFormat::Graph6 => Ok(text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| (l.to_string(), parse_graph6(l)))
            .collect()),
        GraphFormat::Dimacs => {
            let g = parse_dimacs(&text);
            Ok(vec![(String::from("<dimacs>"), g)])
        }
    }
}

/// Single-graph verbs take the first graph of the stream.
fn read_one(arg: &InputArg) -> Result<Graph> {
    let mut stream = read_stream(arg)?;
    if stream.is_empty() {
        bail!("no graph in input");
    }
    let (line, parsed) = stream.remove(0);
    parsed.map_err(|e| anyhow!("graph `{line}`: {e}"))
}

fn read_json(path: &PathBuf) -> Result<serde_json::Value> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path:?}"))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {path:?}"))
}

fn run(cli: Cli) -> Result<i32> {
    match cli.verb {
        Verb::Param {
            alpha_tw,
            alpha_td,
            tw,
            input,
        } => cmd_param(alpha_tw, alpha_td, tw, &input),
        Verb::Bramble { action } => match action {
            BrambleAction::Find { k, input } => cmd_bramble_find(k, &input),
            BrambleAction::Verify { certificate, input } => cmd_bramble_verify(&certificate, &input),
            BrambleAction::Order { certificate, input } => cmd_bramble_order(&certificate, &input),
        },
        Verb::Dominate { action } => match action {
            DominateAction::Path { bramble, input } => cmd_dominate(&bramble, &input, false),
            DominateAction::Cycle { bramble, input } => cmd_dominate(&bramble, &input, true),
        },
        Verb::Wheel { action } => match action {
            WheelAction::Detect { d, l, input } => cmd_wheel_detect(d, l, &input),
            WheelAction::Verify { l, model, input } => cmd_wheel_verify(l, &model, &input),
        },
        Verb::Tdcheck {
            certificate,
            dot,
            input,
        } => cmd_tdcheck(&certificate, dot, &input),
        Verb::Efcheck {
            certificate,
            dot,
            input,
        } => cmd_efcheck(&certificate, dot, &input),
        Verb::Suite {
            name,
            k,
            d,
            l,
            max_n,
            strict,
            json,
            input,
        } => cmd_suite(&name, suites::SuiteParams { k, d, l }, max_n, strict, json, &input),
        Verb::Convert { to, input } => cmd_convert(to, &input),
    }
}

fn cmd_param(alpha_tw_f: bool, alpha_td_f: bool, tw_f: bool, input: &InputArg) -> Result<i32> {
    let all = !(alpha_tw_f || alpha_td_f || tw_f);
    let stream = read_stream(input)?;
    let mut graphs = Vec::with_capacity(stream.len());
    for (i, (line, parsed)) in stream.into_iter().enumerate() {
        graphs.push(parsed.map_err(|e| anyhow!("graph {i} (`{line}`): {e}"))?);
    }
    let lines: Vec<Result<String>> = graphs
        .par_iter()
        .map(|g| {
            let mut obj = serde_json::Map::new();
            if alpha_tw_f || all {
                obj.insert("alpha_tw".into(), json!(alpha_tw_exact(g)?.0));
            }
            if alpha_td_f || all {
                obj.insert("alpha_td".into(), json!(alpha_td_exact(g)?.0));
            }
            if tw_f || all {
                obj.insert("tw".into(), json!(treewidth_exact(g)?.0));
            }
            Ok(serde_json::Value::Object(obj).to_string())
        })
        .collect();
    for line in lines {
        println!("{}", line?);
    }
    Ok(0)
}

fn cmd_bramble_find(k: usize, input: &InputArg) -> Result<i32> {
    let g = read_one(input)?;
    match strong_bramble_of_order(&g, k)? {
        Some(b) => {
            let (order, cover) = alpha_order_exact(&g, &b)?;
            println!("{}", b.to_json(&cover, order));
            Ok(0)
        }
        None => {
            println!("{}", json!({ "bramble": null, "alpha_tw_at_most": 4 * k - 3 }));
            Ok(0)
        }
    }
}

fn cmd_bramble_verify(certificate: &PathBuf, input: &InputArg) -> Result<i32> {
    let g = read_one(input)?;
    let b = StrongBramble::from_json(&read_json(certificate)?)?;
    match check_strong_bramble(&g, &b) {
        Ok(()) => {
            println!("{}", json!({ "valid": true, "elements": b.len() }));
            Ok(0)
        }
        Err(v) => {
            println!("{}", json!({ "valid": false, "violation": v.to_string() }));
            Ok(1)
        }
    }
}

fn cmd_bramble_order(certificate: &PathBuf, input: &InputArg) -> Result<i32> {
    let g = read_one(input)?;
    let b = StrongBramble::from_json(&read_json(certificate)?)?;
    let (order, cover) = alpha_order_exact(&g, &b)?;
    println!("{}", b.to_json(&cover, order));
    Ok(0)
}

fn cmd_dominate(bramble: &PathBuf, input: &InputArg, close_cycle: bool) -> Result<i32> {
    let g = read_one(input)?;
    let b = StrongBramble::from_json(&read_json(bramble)?)?;
    if close_cycle {
        match dominating_cycle_or_vertex(&g, &b)? {
            DominationOutcome::Vertex(v) => println!("{}", json!({ "vertex": v })),
            DominationOutcome::Cycle(c) => println!("{}", json!({ "cycle": c })),
        }
    } else {
        let path = dominating_path(&g, &b)?;
        println!("{}", json!({ "path": path }));
    }
    Ok(0)
}

fn cmd_wheel_detect(d: usize, l: usize, input: &InputArg) -> Result<i32> {
    if l < 3 {
        bail!("wheel size l must be at least 3");
    }
    let g = read_one(input)?;
    match detect_wheel(&g, d, l)? {
        WheelOutcome::Model(m) => {
            println!("{}", m.to_json(&format!("W{l}")));
        }
        WheelOutcome::Decomposition {
            alpha_tw,
            td,
            vicinity,
        } => {
            println!(
                "{}",
                json!({
                    "wheel": null,
                    "alpha_tw": alpha_tw,
                    "vicinity": vicinity.is_some(),
                    "decomposition": td.to_json(),
                })
            );
        }
    }
    Ok(0)
}

fn cmd_wheel_verify(l: usize, model: &PathBuf, input: &InputArg) -> Result<i32> {
    if l < 3 {
        bail!("wheel size l must be at least 3");
    }
    let g = read_one(input)?;
    let m = InducedMinorModel::from_json(&read_json(model)?)?;
    match check_model(&g, &wheel_graph(l), &m) {
        Ok(()) => {
            println!("{}", json!({ "valid": true }));
            Ok(0)
        }
        Err(v) => {
            println!("{}", json!({ "valid": false, "violation": v.to_string() }));
            Ok(1)
        }
    }
}

fn cmd_tdcheck(certificate: &PathBuf, dot: bool, input: &InputArg) -> Result<i32> {
    let g = read_one(input)?;
    let td = TreeDecomposition::from_json(&read_json(certificate)?)?;
    if dot {
        print!("{}", td.to_dot());
        return Ok(0);
    }
    match check_tree_decomposition(&g, &td) {
        Ok(()) => {
            let width = alpha_width(&g, &td)?;
            println!("{}", json!({ "valid": true, "alpha_width": width }));
            Ok(0)
        }
        Err(v) => {
            println!("{}", json!({ "valid": false, "violation": v.to_string() }));
            Ok(1)
        }
    }
}

fn cmd_efcheck(certificate: &PathBuf, dot: bool, input: &InputArg) -> Result<i32> {
    let g = read_one(input)?;
    let f = EliminationForest::from_json(&read_json(certificate)?)?;
    if dot {
        print!("{}", f.to_dot());
        return Ok(0);
    }
    match check_elimination_forest(&g, &f) {
        Ok(()) => {
            let depth = alpha_depth(&g, &f)?;
            println!("{}", json!({ "valid": true, "alpha_depth": depth }));
            Ok(0)
        }
        Err(v) => {
            println!("{}", json!({ "valid": false, "violation": v.to_string() }));
            Ok(1)
        }
    }
}

fn cmd_suite(
    name: &str,
    params: suites::SuiteParams,
    max_n: Option<usize>,
    strict: bool,
    json_output: bool,
    input: &InputArg,
) -> Result<i32> {
    if !suites::SUITE_NAMES.contains(&name) {
        bail!(
            "unknown suite `{name}`; available: {}",
            suites::SUITE_NAMES.join(", ")
        );
    }
    let start = Instant::now();
    let stream = read_stream(input)?;
    let mut jobs = Vec::new();
    for (i, (line, parsed)) in stream.into_iter().enumerate() {
        match parsed {
            Ok(g) => jobs.push((i, line, Some(g))),
            Err(e) if strict => bail!("graph {i} (`{line}`): {e}"),
            Err(e) => {
                eprintln!("warning: skipping graph {i} (`{line}`): {e}");
                jobs.push((i, line, None));
            }
        }
    }
    let outcomes: Vec<report::GraphOutcome> = jobs
        .par_iter()
        .map(|(i, line, g)| match g {
            None => report::GraphOutcome {
                index: *i,
                graph6: line.clone(),
                outcome: report::Outcome::Skip,
                detail: String::from("malformed line"),
            },
            Some(g) if max_n.is_some_and(|cap| g.n() > cap) => report::GraphOutcome {
                index: *i,
                graph6: line.clone(),
                outcome: report::Outcome::Skip,
                detail: format!("{} vertices above --max-n", g.n()),
            },
            Some(g) => suites::run_one(name, *i, line, g, &params),
        })
        .collect();
    let report = RunReport {
        suite: name.to_string(),
        outcomes,
        wall: start.elapsed(),
    };
    if json_output {
        print!("{}", report.json_lines());
    } else {
        print!("{}", report.human());
    }
    eprintln!(
        "suite {} finished in {:.2?} ({} graphs)",
        name,
        report.wall,
        report.outcomes.len()
    );
    Ok(if report.failed() > 0 { 1 } else { 0 })
}

fn cmd_convert(to: OutFormat, input: &InputArg) -> Result<i32> {
    let stream = read_stream(input)?;
    for (i, (line, parsed)) in stream.into_iter().enumerate() {
        let g = parsed.map_err(|e| anyhow!("graph {i} (`{line}`): {e}"))?;
        match to {
            OutFormat::Graph6 => println!("{}", emit_graph6(&g)),
            OutFormat::Dimacs => print!("{}", emit_dimacs(&g)),
            OutFormat::Dot => print!("{}", graph_to_dot(&g)),
        }
    }
    Ok(0)
}
