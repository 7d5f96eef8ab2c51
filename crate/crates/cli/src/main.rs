use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use geodex::io::{parse_edge_list, parse_graph6, write_edge_list};
use geodex::{
    convexity_number_bnb, convexity_number_exhaustive, enumerate_free_trees, named_family, ConvexityResult,
    DistanceMatrix, Graph, TreeFamily, MAX_SOLVER_ORDER,
};
use geodex_cli::campaign::{lemma_suite, verify_trees, SolverChoice};
use geodex_cli::report;
use serde_json::json;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_REJECTED: u8 = 3;

#[derive(Parser)]
#[command(name = "geodex", version, about = "Geodesic convexity of graphs and complementary prisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(clap::Args)]
struct Output {
    /// One JSON object per line instead of TSV.
    #[arg(long)]
    json: bool,
    /// Drop timing fields so output is byte-for-byte reproducible.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Convexity number of a graph (or of its complementary prism).
    Con {
        /// Input file, `-` for stdin.
        input: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        /// Solve the complementary prism of the input instead.
        #[arg(long)]
        prism: bool,
        #[arg(long, value_enum, default_value = "exhaustive")]
        solver: SolverChoice,
        #[command(flatten)]
        output: Output,
    },
    /// Emit the complementary prism of a graph as an edge list.
    Prism {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
    },
    /// Emit a named tree as an edge list.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// One line per non-isomorphic tree: canonical code, `n m`, edges.
    Enum { n: usize },
    /// Compare predicted and exact convexity numbers over all trees.
    VerifyTrees {
        max_n: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        solver: SolverChoice,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Permit max_n up to 11.
        #[arg(long)]
        allow_slow: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Run the hull, propagation and witness checks over all trees.
    Lemmas {
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    Path { n: usize },
    Star { leaves: usize },
    DoubleStar { a: usize, b: usize },
    Spider { legs: usize, leg_len: usize },
    BushySpider { legs: usize, pendants: usize },
    /// Leaf count of each spine vertex, in spine order.
    Caterpillar {
        #[arg(required = true)]
        leaf_counts: Vec<usize>,
    },
}

/// An error with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<geodex::Error>() {
            Some(geodex::Error::Parse { .. }) => EXIT_USAGE,
            Some(
                geodex::Error::Disconnected(..)
                | geodex::Error::TooLarge { .. }
                | geodex::Error::TooSmall { .. },
            ) => EXIT_REJECTED,
            Some(geodex::Error::InvalidFamily(_)) => EXIT_USAGE,
            _ => EXIT_MISMATCH,
        };
        Failure { code, error }
    }
}

impl From<geodex::Error> for Failure {
    fn from(e: geodex::Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn usage(msg: String) -> Failure {
    Failure {
        code: EXIT_USAGE,
        error: anyhow::anyhow!(msg),
    }
}

fn read_graph(path: &PathBuf, format: Format) -> Result<Graph, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).context("reading stdin")?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    let g = match format {
        Format::Edgelist => parse_edge_list(&text),
        Format::Graph6 => parse_graph6(&text),
    };
    g.map_err(|e| anyhow::Error::from(e).context(path.display().to_string()).into())
}

fn solve(dm: &DistanceMatrix, solver: SolverChoice) -> Result<Vec<(&'static str, ConvexityResult)>, Failure> {
    let mut runs = Vec::new();
    if matches!(solver, SolverChoice::Exhaustive | SolverChoice::Both) {
        runs.push(("exhaustive", convexity_number_exhaustive(dm)?));
    }
    if matches!(solver, SolverChoice::Bnb | SolverChoice::Both) {
        runs.push(("bnb", convexity_number_bnb(dm)?));
    }
    Ok(runs)
}

fn cmd_con(
    out: &mut impl Write,
    input: &PathBuf,
    format: Format,
    prism: bool,
    solver: SolverChoice,
    output: &Output,
) -> Result<(), Failure> {
    let mut g = read_graph(input, format)?;
    if prism {
        g = g.complementary_prism()?;
    }
    if g.order() > MAX_SOLVER_ORDER {
        return Err(geodex::Error::TooLarge {
            n: g.order(),
            max: MAX_SOLVER_ORDER,
        }
        .into());
    }
    let dm = DistanceMatrix::new(&g)?;
    let runs = solve(&dm, solver)?;
    let timing = !output.no_timing;
    let value = runs[0].1.value;
    if output.json {
        for (name, r) in &runs {
            let mut v = json!({
                "n": g.order(),
                "con": r.value,
                "witness": r.witness.iter().collect::<Vec<_>>(),
                "solver": name,
                "explored": r.explored,
            });
            if timing {
                v["elapsed_ms"] = json!((r.elapsed.as_secs_f64() * 1e6).round() / 1e3);
            }
            writeln!(out, "{v}").context("writing output")?;
        }
    } else {
        writeln!(out, "con={value}").context("writing output")?;
        for (name, r) in &runs {
            let mut line = format!("solver={name} witness={{{}}} explored={}", r.witness, r.explored);
            if timing {
                line.push_str(&format!(" elapsed_ms={:.3}", r.elapsed.as_secs_f64() * 1e3));
            }
            writeln!(out, "{line}").context("writing output")?;
        }
    }
    if runs.iter().any(|(_, r)| r.value != value) {
        return Err(Failure {
            code: EXIT_MISMATCH,
            error: anyhow::anyhow!("solvers disagree"),
        });
    }
    Ok(())
}

fn cmd_enum(out: &mut impl Write, n: usize) -> Result<(), Failure> {
    for t in enumerate_free_trees(n).map_err(|e| usage(e.to_string()))? {
        let g = t.tree.graph();
        let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u} {v}")).collect();
        writeln!(out, "{}\t{} {}\t{}", t.code, g.order(), g.size(), edges.join(",")).context("writing output")?;
    }
    Ok(())
}

fn family(f: Family) -> TreeFamily {
    match f {
        Family::Path { n } => TreeFamily::Path(n),
        Family::Star { leaves } => TreeFamily::Star(leaves),
        Family::DoubleStar { a, b } => TreeFamily::DoubleStar(a, b),
        Family::Spider { legs, leg_len } => TreeFamily::Spider { legs, leg_len },
        Family::BushySpider { legs, pendants } => TreeFamily::BushySpider { legs, pendants },
        Family::Caterpillar { leaf_counts } => TreeFamily::Caterpillar(leaf_counts),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match command {
        Command::Con {
            input,
            format,
            prism,
            solver,
            output,
        } => cmd_con(&mut out, &input, format, prism, solver, &output)?,
        Command::Prism { input, format } => {
            let g = read_graph(&input, format)?.complementary_prism()?;
            out.write_all(write_edge_list(&g).as_bytes()).context("writing output")?;
        }
        Command::Gen { family: f } => {
            let t = named_family(&family(f))?;
            out.write_all(write_edge_list(t.graph()).as_bytes()).context("writing output")?;
        }
        Command::Enum { n } => cmd_enum(&mut out, n)?,
        Command::VerifyTrees {
            max_n,
            solver,
            jobs,
            allow_slow,
            output,
        } => {
            let limit = if allow_slow { 11 } else { 9 };
            if !(3..=limit).contains(&max_n) {
                return Err(usage(format!(
                    "max_n must be in 3..={limit}{}",
                    if allow_slow { "" } else { " (up to 11 with --allow-slow)" }
                )));
            }
            let start = Instant::now();
            let records = verify_trees(max_n, solver, jobs)?;
            let elapsed = start.elapsed().as_secs_f64() * 1e3;
            let timing = !output.no_timing;
            let body = if output.json {
                report::records_json(&records, timing)
            } else {
                report::records_tsv(&records, timing)
            };
            out.write_all(body.as_bytes()).context("writing output")?;
            out.write_all(report::summary(&records, elapsed, timing, output.json).as_bytes())
                .context("writing output")?;
            let bad = report::mismatches(&records);
            if bad > 0 {
                out.flush().ok();
                return Err(Failure {
                    code: EXIT_MISMATCH,
                    error: anyhow::anyhow!("{bad} mismatches"),
                });
            }
        }
        Command::Lemmas { max_n, jobs, json } => {
            if !(3..=8).contains(&max_n) {
                return Err(usage("max_n must be in 3..=8".into()));
            }
            let ledger = lemma_suite(max_n, jobs)?;
            let body = if json {
                report::lemma_json(&ledger)
            } else {
                report::lemma_tsv(&ledger)
            };
            out.write_all(body.as_bytes()).context("writing output")?;
            if ledger.failures() > 0 {
                out.flush().ok();
                return Err(Failure {
                    code: EXIT_MISMATCH,
                    error: anyhow::anyhow!("{} lemma check failures", ledger.failures()),
                });
            }
        }
    }
    out.flush().context("writing output")?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
