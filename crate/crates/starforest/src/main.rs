//! Command-line front end. Machine-readable JSON goes to stdout, human
//! summaries to stderr. Exit codes: 0 success, 1 negative verdict,
//! 2 usage or malformed input, 3 capacity or budget limit.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use starforest::{bounds, construct, decomp, error::Error, exact, graph6, squarecolor};

#[derive(Parser)]
#[command(name = "starforest", version, about = "Galaxy edge decompositions of hypercubes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose Q_n into galaxies and emit the decomposition JSON.
    Decompose(DecomposeArgs),
    /// Check a decomposition JSON document against its graph.
    Verify(VerifyArgs),
    /// Report lower/upper bounds for one dimension or a range.
    Bounds(BoundsArgs),
    /// Run the exhaustive solver on a small graph6 graph.
    Exact(ExactArgs),
    /// Decompose via a proper coloring of the square graph.
    Square(SquareArgs),
}

#[derive(Args)]
struct DecomposeArgs {
    /// Hypercube dimension.
    n: u32,
    /// "auto" for the planner, or an explicit plan expression such as
    /// "PlusOne(PowerPlus1(3))".
    #[arg(long, default_value = "auto")]
    method: String,
    /// Write the JSON document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Decomposition JSON file.
    file: PathBuf,
    /// Override the host graph: a dimension ("8") or a graph6 string.
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Args)]
struct BoundsArgs {
    /// Single dimension; omit when using --range.
    n: Option<u32>,
    /// Inclusive range "a..b" of dimensions.
    #[arg(long)]
    range: Option<String>,
}

#[derive(Args)]
struct ExactArgs {
    /// graph6 string of the graph to solve.
    graph6: String,
    #[arg(long, default_value_t = 16)]
    max_classes: usize,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
}

#[derive(Args)]
struct SquareArgs {
    /// Use the perfect-code coloring of Q_{2^t-1}.
    #[arg(long, short = 't')]
    t: Option<u32>,
    /// graph6 string, paired with --coloring.
    #[arg(long)]
    graph6: Option<String>,
    /// JSON file {"k": ..., "colors": [...]}.
    #[arg(long)]
    coloring: Option<PathBuf>,
}

#[derive(Deserialize)]
struct ColoringDoc {
    k: usize,
    colors: Vec<u32>,
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Capacity(_) | Error::BudgetExhausted => 3,
        Error::Graph6 { .. } | Error::InvalidArgument(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Decompose(a) => cmd_decompose(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Exact(a) => cmd_exact(a),
        Command::Square(a) => cmd_square(a),
    }
}

fn emit_decomposition(
    d: &decomp::GalaxyDecomposition,
    out: Option<&PathBuf>,
) -> Result<(), Error> {
    let doc = d.to_doc()?;
    let text = serde_json::to_string_pretty(&doc)
        .map_err(|e| Error::InvalidArgument(format!("serialization failed: {e}")))?;
    match out {
        Some(path) => fs::write(path, text.as_bytes())
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn cmd_decompose(a: DecomposeArgs) -> Result<u8, Error> {
    let d = if a.method == "auto" {
        construct::decompose(a.n)?
    } else {
        let step: construct::PlanStep = a.method.parse()?;
        if step.dimension() != a.n {
            return Err(Error::InvalidArgument(format!(
                "plan expression targets n={}, command asked for n={}",
                step.dimension(),
                a.n
            )));
        }
        construct::execute_plan(&step)?
    };
    let report = decomp::verify_decomposition(&d.graph, &d);
    emit_decomposition(&d, a.out.as_ref())?;
    eprintln!(
        "Q_{} decomposed into {} galaxies via {} (verifier: {})",
        a.n,
        d.class_count(),
        d.provenance,
        if report.valid { "valid" } else { "INVALID" }
    );
    if report.valid {
        Ok(0)
    } else {
        Ok(1)
    }
}

fn cmd_verify(a: VerifyArgs) -> Result<u8, Error> {
    let text = fs::read_to_string(&a.file)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", a.file.display())))?;
    let mut doc: decomp::DecompositionDoc = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidArgument(format!("malformed decomposition JSON: {e}")))?;
    if let Some(spec) = &a.graph {
        match spec.parse::<u32>() {
            Ok(n) => {
                doc.n = Some(n);
                doc.graph6 = None;
            }
            Err(_) => {
                doc.n = None;
                doc.graph6 = Some(spec.clone());
            }
        }
    }
    let d = decomp::GalaxyDecomposition::from_doc(doc)?;
    let graph = d.graph.clone();
    let report = decomp::verify_decomposition(&graph, &d);
    let text = serde_json::to_string_pretty(&report)
        .map_err(|e| Error::InvalidArgument(format!("serialization failed: {e}")))?;
    println!("{text}");
    if report.valid {
        eprintln!("valid: {} classes cover all {} edges", report.class_count, graph.edge_count());
        Ok(0)
    } else {
        eprintln!("INVALID: {} violation(s)", report.violations.len());
        Ok(1)
    }
}

fn parse_range(s: &str) -> Result<(u32, u32), Error> {
    let bad = || Error::InvalidArgument(format!("range must look like \"a..b\", got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let lo: u32 = a.trim().parse().map_err(|_| bad())?;
    let hi: u32 = b.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn cmd_bounds(a: BoundsArgs) -> Result<u8, Error> {
    let (lo, hi) = match (a.n, &a.range) {
        (Some(n), None) => (n, n),
        (None, Some(r)) => parse_range(r)?,
        _ => {
            return Err(Error::InvalidArgument(
                "give either a dimension or --range a..b".into(),
            ))
        }
    };
    let reports: Vec<bounds::BoundsReport> =
        (lo..=hi).map(bounds::status).collect::<Result<_, _>>()?;
    let payload = if reports.len() == 1 {
        serde_json::to_value(&reports[0])
    } else {
        serde_json::to_value(&reports)
    }
    .map_err(|e| Error::InvalidArgument(format!("serialization failed: {e}")))?;
    println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    for r in &reports {
        eprintln!(
            "Q_{}: [{}, {}]{}",
            r.n,
            r.lower,
            r.upper,
            if r.exact { " exact" } else { "" }
        );
    }
    Ok(0)
}

fn cmd_exact(a: ExactArgs) -> Result<u8, Error> {
    let g = graph6::parse_graph6(&a.graph6)?;
    let cfg = exact::SearchConfig {
        max_classes: a.max_classes,
        node_budget: a.budget,
        symmetry_breaking: true,
    };
    let (t, d) = exact::exact_sa(&g, &cfg)?;
    let doc = d.to_doc()?;
    let payload = json!({ "sa": t, "decomposition": doc });
    println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    eprintln!("sa = {t} for {} ({} vertices, {} edges)", a.graph6, g.vertex_count(), g.edge_count());
    Ok(0)
}

fn cmd_square(a: SquareArgs) -> Result<u8, Error> {
    let (g, coloring) = match (a.t, &a.graph6, &a.coloring) {
        (Some(t), None, None) => {
            let (g, c) = squarecolor::hamming_square_coloring(t)?;
            (g, c)
        }
        (None, Some(g6), Some(path)) => {
            let g = graph6::parse_graph6(g6)?;
            let text = fs::read_to_string(path).map_err(|e| {
                Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
            })?;
            let doc: ColoringDoc = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidArgument(format!("malformed coloring JSON: {e}")))?;
            (g, squarecolor::SquareColoring { k: doc.k, colors: doc.colors })
        }
        _ => {
            return Err(Error::InvalidArgument(
                "give either --t, or both --graph6 and --coloring".into(),
            ))
        }
    };
    let d = squarecolor::sa_from_square_coloring(&g, &coloring)?;
    emit_decomposition(&d, None)?;
    eprintln!(
        "{} classes from a {}-coloring of the square",
        d.class_count(),
        coloring.k
    );
    Ok(0)
}
