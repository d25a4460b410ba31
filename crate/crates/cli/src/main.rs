use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use bicay::families::{self, FamilySpec};
use bicay::graph::parse_graph;
use bicay::symmetry;
use bicay::{BiCayleyGraph, Graph, MetacyclicGroup, Presentation};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Cubic bi-Cayley graphs over metacyclic p-groups.
#[derive(Parser)]
#[command(name = "bicay", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member and describe it.
    Family {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compute the symmetry report of a graph read from a file.
    Analyze {
        /// graph6 or edge-list file; `-` reads standard input.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Run one of the verifiers.
    Verify {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Classify the cubic bi-Cayley graphs `BiCay(H, ∅, ∅, {1, x, y})`.
    Census {
        /// Group parameters `p,m,n,r`.
        #[arg(long, value_parser = parse_group)]
        group: GroupParams,
        /// Also enumerate pairs that do not generate the group.
        #[arg(long)]
        include_disconnected: bool,
    },
    /// Write a family member to a graph file.
    Export {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = GraphFile::G6)]
        format: GraphFile,
        /// Relabel to the canonical form before writing.
        #[arg(long)]
        canonical: bool,
        /// Output path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    /// Root of `x^2 - x + 1` modulo `n`; the smallest one when absent.
    #[arg(long)]
    lambda: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Gamma,
    Sigma,
    Abelian,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Edges,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFile {
    G6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Lemma51,
    Lemma52,
    Arithmetic,
}

#[derive(Clone, Copy, Debug)]
struct GroupParams {
    p: u64,
    m: u32,
    n: u32,
    r: u32,
}

fn parse_group(text: &str) -> Result<GroupParams, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [p, m, n, r] = parts.as_slice() else {
        return Err("expected four comma-separated integers p,m,n,r".into());
    };
    let num = |s: &str| s.parse::<u64>().map_err(|e| format!("{s:?}: {e}"));
    let small = |s: &str| s.parse::<u32>().map_err(|e| format!("{s:?}: {e}"));
    Ok(GroupParams { p: num(p)?, m: small(m)?, n: small(n)?, r: small(r)? })
}

/// A failure that maps to a specific exit status.
#[derive(Debug)]
enum Failure {
    /// Bad input or parameters.
    Usage(anyhow::Error),
    /// A verifier ran and reported failing checks.
    Verification,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<bicay::Error> for Failure {
    fn from(e: bicay::Error) -> Self {
        Failure::Usage(e.into())
    }
}

#[derive(Serialize)]
struct FamilyOutput {
    family: FamilySpec,
    group: Presentation,
    vertices: usize,
    edges: usize,
    connected: bool,
    graph6: String,
}

fn resolve(args: &FamilyArgs) -> anyhow::Result<FamilySpec> {
    let need_t = || args.t.context("--t is required for this family");
    Ok(match args.kind {
        Kind::Gamma => FamilySpec::Gamma { t: need_t()? },
        Kind::Sigma => FamilySpec::Sigma { t: need_t()? },
        Kind::Abelian => {
            let m = args.m.context("--m is required for the abelian family")?;
            let n = args.n.context("--n is required for the abelian family")?;
            let lambda = match args.lambda {
                Some(l) => l,
                None => families::find_lambda(n)?,
            };
            FamilySpec::Abelian { m, n, lambda }
        }
    })
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn write_graph(graph: &Graph, format: GraphFile, out: Option<&PathBuf>) -> anyhow::Result<()> {
    let text = match format {
        GraphFile::G6 => format!("{}\n", graph.to_graph6()),
        GraphFile::Edges => graph.to_edge_list(),
    };
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(Into::into),
    }
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn verdict(passed: bool) -> Result<(), Failure> {
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Family { family, format } => {
            let spec = resolve(&family)?;
            let built: BiCayleyGraph = spec.build()?;
            match format {
                Format::G6 => write_graph(built.graph(), GraphFile::G6, None)?,
                Format::Edges => write_graph(built.graph(), GraphFile::Edges, None)?,
                Format::Json => print_json(&FamilyOutput {
                    family: spec,
                    group: built.group().presentation(),
                    vertices: built.vertex_count(),
                    edges: built.graph().edge_count(),
                    connected: built.is_connected()?,
                    graph6: built.graph().to_graph6(),
                })?,
            }
        }
        Command::Analyze { input } => {
            let text = read_input(&input)?;
            let (graph, _) = parse_graph(&text).with_context(|| format!("parsing {}", input.display()))?;
            print_json(&symmetry::classify(&graph)?)?;
        }
        Command::Verify { target, t, p, m, n, r, trials, seed } => match target {
            Target::Lemma51 | Target::Lemma52 => {
                let t = t.context("--t is required for this target")?;
                if matches!(target, Target::Lemma51) {
                    let report = families::verify_lemma_5_1(t)?;
                    print_json(&report)?;
                    verdict(report.passed)?;
                } else {
                    let report = families::verify_lemma_5_2(t)?;
                    print_json(&report)?;
                    verdict(report.passed)?;
                }
            }
            Target::Arithmetic => {
                let (Some(p), Some(m), Some(n), Some(r)) = (p, m, n, r) else {
                    return Err(anyhow::anyhow!("--p, --m, --n and --r are required for arithmetic").into());
                };
                let group = MetacyclicGroup::new(p, m, n, r)?;
                let report = families::verify_arithmetic(&group, trials, seed)?;
                print_json(&report)?;
                verdict(report.passed)?;
            }
        },
        Command::Census { group, include_disconnected } => {
            let GroupParams { p, m, n, r } = group;
            let h = MetacyclicGroup::new(p, m, n, r)?;
            print_json(&families::census(&h, !include_disconnected)?)?;
        }
        Command::Export { family, format, canonical, out } => {
            let spec = resolve(&family)?;
            let built = spec.build()?;
            if canonical {
                write_graph(&symmetry::canonical_graph(built.graph())?, format, out.as_ref())?;
            } else {
                write_graph(built.graph(), format, out.as_ref())?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
