//! Command-line front end for the safecolor library.
//!
//! Exit codes follow one contract across subcommands: 0 for a positive
//! answer (safe, found, generated), 1 for a negative answer, 2 for input or
//! parameter errors, 3 for out-of-scope graphs.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use sha2::{Digest, Sha256};

use safecolor::{
    decide_safe_3_with, find_three_independent_triplets, find_two_independent_triplets,
    gen_double_windmill, gen_random_min_deg3, oracle_safe_3, parse_coloring, parse_dimacs,
    parse_edge_list, serialize_coloring, serialize_edge_list, verify_safe, Coloring,
    DecideOptions, Decision, Graph, Verdict, DEFAULT_ORACLE_LIMIT,
};

const ORACLE_LIMIT_ENV: &str = "SAFECOLOR_ORACLE_LIMIT";

#[derive(Parser)]
#[command(name = "safecolor", version, about = "Safe 3-coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a coloring of a graph is a-safe
    Verify(VerifyArgs),
    /// Decide safe 3-colorability and construct a witness coloring
    Decide(DecideArgs),
    /// Search for independent connected triplets
    Triplets(TripletsArgs),
    /// Generate graphs as edge-list files
    Gen(GenArgs),
    /// Ground-truth decision by exhaustive enumeration (small graphs)
    Oracle(OracleArgs),
}

#[derive(Args)]
struct VerifyArgs {
    graph: PathBuf,
    coloring: PathBuf,
    /// Number of attacker vertices to remove
    #[arg(long, default_value_t = 2)]
    attackers: usize,
    #[arg(long, value_enum, default_value_t)]
    graph_format: GraphFormat,
    /// Emit a machine-readable JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DecideArgs {
    graph: PathBuf,
    /// Resolve graphs with minimum degree below 3 by exhaustive search
    #[arg(long)]
    oracle_fallback: bool,
    /// Write the witness coloring here when the graph is safe-colorable
    #[arg(long)]
    witness_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    graph_format: GraphFormat,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TripletsArgs {
    graph: PathBuf,
    /// How many independent triplets to look for
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
    count: u8,
    #[arg(long, value_enum, default_value_t)]
    graph_format: GraphFormat,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,
}

#[derive(Subcommand)]
enum GenKind {
    /// A double windmill with l blades on 2l+2 vertices
    Windmill {
        #[arg(long)]
        l: usize,
        /// Make the two centers adjacent
        #[arg(long)]
        adjacent: bool,
        /// Leave the two centers non-adjacent (the default)
        #[arg(long, conflicts_with = "adjacent")]
        non_adjacent: bool,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// A seeded random graph with minimum degree 3
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct OracleArgs {
    graph: PathBuf,
    /// Maximum graph size to enumerate; overrides SAFECOLOR_ORACLE_LIMIT
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    graph_format: GraphFormat,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    /// Sniff DIMACS vs edge-list from the first content line
    #[default]
    Auto,
    Edges,
    Dimacs,
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, std::io::Error),
    Parse(PathBuf, String),
    Input(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Parse(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Input(msg) => write!(f, "{msg}"),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Verify(args) => cmd_verify(args),
        Command::Decide(args) => cmd_decide(args),
        Command::Triplets(args) => cmd_triplets(args),
        Command::Gen(args) => cmd_gen(args.kind),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load_graph(path: &Path, format: GraphFormat) -> Result<(Graph, String), CliError> {
    let text = read_file(path)?;
    let format = match format {
        GraphFormat::Auto => sniff_format(&text),
        other => other,
    };
    let graph = match format {
        GraphFormat::Dimacs => parse_dimacs(&text),
        _ => parse_edge_list(&text),
    }
    .map_err(|e| CliError::Parse(path.to_path_buf(), e.to_string()))?;
    Ok((graph, text))
}

/// DIMACS lines start with `c`, `p`, or `e`; the edge-list format starts
/// with a `#` comment or the numeric header.
fn sniff_format(text: &str) -> GraphFormat {
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('p') || line == "c" || line.starts_with("c ") || line.starts_with('e')
        {
            return GraphFormat::Dimacs;
        }
        return GraphFormat::Edges;
    }
    GraphFormat::Edges
}

fn load_coloring(path: &Path) -> Result<(Coloring, String), CliError> {
    let text = read_file(path)?;
    let coloring =
        parse_coloring(&text).map_err(|e| CliError::Parse(path.to_path_buf(), e.to_string()))?;
    Ok((coloring, text))
}

fn digest(parts: &[&[u8]]) -> String {
    let mut hasher = Sha256::new();
    for part in parts {
        hasher.update(part);
    }
    format!("sha256:{}", hex::encode(hasher.finalize()))
}

fn print_report(
    command: &str,
    input_digest: &str,
    started: Instant,
    result: serde_json::Value,
) {
    let report = json!({
        "command": command,
        "tool_version": env!("CARGO_PKG_VERSION"),
        "input_digest": input_digest,
        "elapsed_ms": started.elapsed().as_secs_f64() * 1e3,
        "result": result,
    });
    println!("{report}");
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, CliError> {
    let started = Instant::now();
    let (graph, graph_text) = load_graph(&args.graph, args.graph_format)?;
    let (coloring, coloring_text) = load_coloring(&args.coloring)?;
    let input_digest = digest(&[graph_text.as_bytes(), coloring_text.as_bytes()]);
    let result = verify_safe(&graph, &coloring, args.attackers)
        .map_err(|e| CliError::Input(e.to_string()))?;
    if args.json {
        print_report(
            "verify",
            &input_digest,
            started,
            json!({
                "attackers": args.attackers,
                "safe": result.safe,
                "witness": result.witness,
                "violated_condition": result.violated_condition,
            }),
        );
    } else if result.safe {
        println!("safe");
    } else {
        let condition = result.violated_condition.expect("unsafe result").as_str();
        let witness = result.witness.as_ref().expect("unsafe result");
        println!("unsafe ({condition}): witness {witness}");
    }
    Ok(if result.safe { 0 } else { 1 })
}

fn oracle_limit(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(limit) = flag {
        return Ok(limit);
    }
    match std::env::var(ORACLE_LIMIT_ENV) {
        Ok(value) => value
            .parse()
            .map_err(|_| CliError::Input(format!("{ORACLE_LIMIT_ENV}: invalid limit {value:?}"))),
        Err(_) => Ok(DEFAULT_ORACLE_LIMIT),
    }
}

fn decision_exit_code(d: &Decision) -> i32 {
    match d.verdict {
        Verdict::SafeColorable => 0,
        Verdict::NotSafeColorable => 1,
        Verdict::OutOfScope => 3,
    }
}

fn report_decision(
    command: &str,
    d: &Decision,
    witness_path: Option<&Path>,
    input_digest: &str,
    started: Instant,
    json_output: bool,
) {
    if json_output {
        print_report(
            command,
            input_digest,
            started,
            json!({
                "verdict": d.verdict,
                "reason": d.reason,
                "witness_coloring": d.witness_coloring,
                "witness_attack": d.witness_attack,
                "witness_path": witness_path.map(|p| p.display().to_string()),
            }),
        );
    } else {
        println!("{} ({})", d.verdict.as_str(), d.reason.as_str());
        if let Some(attack) = &d.witness_attack {
            println!("attack: {attack}");
        }
        if let Some(path) = witness_path {
            println!("witness coloring written to {}", path.display());
        }
    }
}

fn write_witness(
    d: &Decision,
    witness_out: Option<&PathBuf>,
) -> Result<Option<PathBuf>, CliError> {
    let (Some(coloring), Some(path)) = (&d.witness_coloring, witness_out) else {
        return Ok(None);
    };
    fs::write(path, serialize_coloring(coloring)).map_err(|e| CliError::Io(path.clone(), e))?;
    Ok(Some(path.clone()))
}

fn cmd_decide(args: DecideArgs) -> Result<i32, CliError> {
    let started = Instant::now();
    let (graph, text) = load_graph(&args.graph, args.graph_format)?;
    let input_digest = digest(&[text.as_bytes()]);
    let opts = DecideOptions {
        oracle_fallback: args.oracle_fallback,
        oracle_limit: oracle_limit(None)?,
    };
    let decision = decide_safe_3_with(&graph, &opts);
    let witness_path = write_witness(&decision, args.witness_out.as_ref())?;
    report_decision(
        "decide",
        &decision,
        witness_path.as_deref(),
        &input_digest,
        started,
        args.json,
    );
    Ok(decision_exit_code(&decision))
}

fn cmd_triplets(args: TripletsArgs) -> Result<i32, CliError> {
    let started = Instant::now();
    let (graph, text) = load_graph(&args.graph, args.graph_format)?;
    let input_digest = digest(&[text.as_bytes()]);
    let found = match args.count {
        2 => find_two_independent_triplets(&graph),
        _ => find_three_independent_triplets(&graph),
    };
    if args.json {
        print_report(
            "triplets",
            &input_digest,
            started,
            json!({
                "count": args.count,
                "triplets": found.as_ref().map(|t| &t.triplets),
            }),
        );
    } else {
        match &found {
            Some(t) => {
                for triplet in &t.triplets {
                    println!("{triplet}");
                }
            }
            None => println!("none"),
        }
    }
    Ok(if found.is_some() { 0 } else { 1 })
}

fn cmd_gen(kind: GenKind) -> Result<i32, CliError> {
    let started = Instant::now();
    let (graph, params, out, json_output, kind_name) = match kind {
        GenKind::Windmill {
            l,
            adjacent,
            non_adjacent: _,
            out,
            json,
        } => {
            let g = gen_double_windmill(l, adjacent)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let params = format!("windmill l={l} adjacent={adjacent}");
            (g, params, out, json, "windmill")
        }
        GenKind::Random {
            n,
            edge_prob,
            seed,
            out,
            json,
        } => {
            let g = gen_random_min_deg3(n, edge_prob, seed)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let params = format!("random n={n} edge_prob={edge_prob} seed={seed}");
            (g, params, out, json, "random")
        }
    };
    let text = serialize_edge_list(&graph);
    let input_digest = digest(&[params.as_bytes()]);
    if let Some(path) = &out {
        fs::write(path, &text).map_err(|e| CliError::Io(path.clone(), e))?;
    }
    if json_output {
        print_report(
            "gen",
            &input_digest,
            started,
            json!({
                "kind": kind_name,
                "n": graph.n(),
                "edges": graph.edge_count(),
                "out": out.as_ref().map(|p| p.display().to_string()),
                "edge_list": if out.is_none() { Some(&text) } else { None },
            }),
        );
    } else if let Some(path) = &out {
        println!(
            "wrote {}-vertex graph ({} edges) to {}",
            graph.n(),
            graph.edge_count(),
            path.display()
        );
    } else {
        print!("{text}");
    }
    Ok(0)
}

fn cmd_oracle(args: OracleArgs) -> Result<i32, CliError> {
    let started = Instant::now();
    let (graph, text) = load_graph(&args.graph, args.graph_format)?;
    let input_digest = digest(&[text.as_bytes()]);
    let limit = oracle_limit(args.limit)?;
    let decision =
        oracle_safe_3(&graph, limit).map_err(|e| CliError::Input(e.to_string()))?;
    if args.json {
        print_report(
            "oracle",
            &input_digest,
            started,
            json!({
                "limit": limit,
                "verdict": decision.verdict,
                "reason": decision.reason,
                "witness_coloring": decision.witness_coloring,
            }),
        );
    } else {
        println!("{} ({})", decision.verdict.as_str(), decision.reason.as_str());
        if let Some(coloring) = &decision.witness_coloring {
            let colors: Vec<String> = coloring.iter().map(|c| c.to_string()).collect();
            println!("witness coloring: {}", colors.join(" "));
        }
    }
    Ok(decision_exit_code(&decision))
}
