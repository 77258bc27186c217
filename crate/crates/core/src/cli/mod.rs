//! The `bbt` command line.
//!
//! JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 verification failure, 2 usage or input error, 3 computational limits
//! (oversized instances, caps, search budgets) and internal solver errors.

mod check;

pub use check::{
    enumerate_check, CheckSummary, Counterexample, OrderCount, MAX_CHECK_ORDER,
    MAX_ORACLE_CHECK_ORDER,
};

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::backbone::{solve_with_budget, verify_backbone_coloring, SolveError, SolveMode};
use crate::coloring::{Color, ColoringError, DEFAULT_NODE_BUDGET};
use crate::graph::{generate, parse_dimacs, write_dimacs, Edge, EdgeSet, Graph, GraphError, GraphFamily};
use crate::oracle::{self, BackboneInstance, OracleError, DEFAULT_TREE_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bbt", version, about = "Spanning-tree backbone colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Color a connected graph and pick a spanning-tree backbone.
    Solve(SolveArgs),
    /// Check a solution JSON against a graph.
    Verify(VerifyArgs),
    /// Brute-force ground truth for small graphs.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Write a generated graph as DIMACS.
    Gen(GenArgs),
    /// Run the solver over every connected graph up to a given order.
    EnumerateCheck(EnumerateArgs),
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    q: u32,
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    /// Include the Kempe swap trace in the output.
    #[arg(long)]
    trace: bool,
    /// Node budget of the exact chromatic search.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// DIMACS file, or `-` for stdin.
    input: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Heuristic,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    q: u32,
    #[arg(long)]
    solution: PathBuf,
    input: PathBuf,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Exact backbone chromatic number for a given backbone.
    Bbc {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        /// One 0-based `u v` pair per line.
        #[arg(long)]
        backbone: PathBuf,
        input: PathBuf,
    },
    /// Minimum over all spanning trees.
    BestTree {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        #[arg(long, default_value_t = DEFAULT_TREE_CAP)]
        cap: usize,
        input: PathBuf,
    },
    /// Chromatic number by plain backtracking.
    Chi { input: PathBuf },
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Complete,
    Cycle,
    Path,
    Star,
    Wheel,
    CompleteBipartite,
    Petersen,
    Gnp,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_delimiter = ',', required = true,
          value_parser = clap::value_parser!(u32).range(1..))]
    q: Vec<u32>,
}

/// JSON printed by the oracle subcommands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOutput {
    pub value: Color,
    pub witness_colors: Vec<Color>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree: Option<Vec<[usize; 2]>>,
    pub nodes: u64,
}

/// The parts of a solution JSON that `verify` reads. Values are taken as
/// signed integers so malformed claims are reported instead of rejected.
#[derive(Debug, Deserialize)]
struct ClaimedSolution {
    colors: Vec<i64>,
    tree: Vec<[i64; 2]>,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::NotConnectedInput
            | SolveError::TooSmall(_)
            | SolveError::InvalidSeparation
            | SolveError::Graph(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::TooLarge(_) | OracleError::CapExceeded(_) => Failure::Compute(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<ColoringError> for Failure {
    fn from(e: ColoringError) -> Self {
        Failure::Compute(e.to_string())
    }
}

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_COMPUTE
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    match command {
        Command::Solve(args) => {
            let g = read_graph(&args.input, stdin)?;
            let mode = match args.mode {
                ModeArg::Exact => SolveMode::Exact,
                ModeArg::Heuristic => SolveMode::Heuristic,
            };
            let result = solve_with_budget(&g, args.q, mode, args.budget)?;
            if mode == SolveMode::Heuristic {
                let _ = writeln!(
                    stderr,
                    "heuristic mode: guarantee k_target = {} is relative to a {}-coloring from DSATUR",
                    result.k_target, result.t
                );
            }
            emit(stdout, &result.to_solution(args.trace).to_json())?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let g = read_graph(&args.input, stdin)?;
            let text = std::fs::read_to_string(&args.solution)
                .map_err(|e| Failure::Usage(format!("{}: {e}", args.solution.display())))?;
            let claim: ClaimedSolution = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", args.solution.display())))?;
            let colors: Vec<Color> = claim
                .colors
                .iter()
                .map(|&c| Color::try_from(c).unwrap_or(0))
                .collect();
            let tree: Vec<Edge> = claim
                .tree
                .iter()
                .map(|&[u, v]| (to_vertex(u), to_vertex(v)))
                .collect();
            let report = verify_backbone_coloring(&g, &tree, &colors, args.q);
            emit(stdout, &serde_json::to_string(&report).expect("report serializes"))?;
            if report.ok() {
                Ok(EXIT_OK)
            } else {
                let _ = writeln!(stderr, "verification failed");
                Ok(EXIT_VERIFY_FAILED)
            }
        }
        Command::Oracle(OracleCommand::Bbc { q, backbone, input }) => {
            let g = read_graph(&input, stdin)?;
            let h = read_edge_list(&backbone)?;
            let result = oracle::bbc_exact(&BackboneInstance::new(g, h)?, q)?;
            let out = OracleOutput {
                value: result.value,
                witness_colors: result.witness.into_colors(),
                tree: None,
                nodes: result.nodes_explored,
            };
            emit(stdout, &serde_json::to_string(&out).expect("output serializes"))?;
            Ok(EXIT_OK)
        }
        Command::Oracle(OracleCommand::BestTree { q, cap, input }) => {
            let g = read_graph(&input, stdin)?;
            let best = oracle::best_tree_exact(&g, q, cap)?;
            let out = OracleOutput {
                value: best.value,
                witness_colors: best.coloring.into_colors(),
                tree: Some(best.tree.iter().map(|&(u, v)| [u, v]).collect()),
                nodes: best.nodes_explored,
            };
            emit(stdout, &serde_json::to_string(&out).expect("output serializes"))?;
            Ok(EXIT_OK)
        }
        Command::Oracle(OracleCommand::Chi { input }) => {
            let g = read_graph(&input, stdin)?;
            let result = oracle::chromatic_number(&g)?;
            let out = OracleOutput {
                value: result.value,
                witness_colors: result.witness.into_colors(),
                tree: None,
                nodes: result.nodes_explored,
            };
            emit(stdout, &serde_json::to_string(&out).expect("output serializes"))?;
            Ok(EXIT_OK)
        }
        Command::Gen(args) => {
            let g = generate(&family_from_args(&args)?)?;
            stdout
                .write_all(write_dimacs(&g).as_bytes())
                .map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(EXIT_OK)
        }
        Command::EnumerateCheck(args) => {
            if args.n_max > MAX_CHECK_ORDER {
                return Err(Failure::Usage(format!(
                    "--n-max must be at most {MAX_CHECK_ORDER}"
                )));
            }
            let summary = enumerate_check(args.n_max, &args.q)?;
            emit(stdout, &serde_json::to_string(&summary).expect("summary serializes"))?;
            if summary.passed() {
                Ok(EXIT_OK)
            } else {
                let _ = writeln!(stderr, "{} check(s) failed", summary.failures);
                Ok(EXIT_VERIFY_FAILED)
            }
        }
    }
}

fn to_vertex(x: i64) -> usize {
    usize::try_from(x).unwrap_or(usize::MAX)
}

fn emit(stdout: &mut dyn Write, json: &str) -> Result<(), Failure> {
    writeln!(stdout, "{json}").map_err(|e| Failure::Usage(e.to_string()))
}

fn read_graph(path: &Path, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    let mut bytes = Vec::new();
    if path == Path::new("-") {
        stdin
            .read_to_end(&mut bytes)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
    } else {
        bytes = std::fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    parse_dimacs(&bytes).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Reads a backbone file: one whitespace-separated 0-based pair per line.
/// Blank lines and lines starting with `#` are skipped.
fn read_edge_list(path: &Path) -> Result<EdgeSet, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut pairs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed = match fields.as_slice() {
            [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
            _ => None,
        };
        match parsed {
            Some((u, v)) if u != v => pairs.push((u, v)),
            _ => {
                return Err(Failure::Usage(format!(
                    "{}:{}: expected two distinct vertex indices",
                    path.display(),
                    idx + 1
                )))
            }
        }
    }
    Ok(EdgeSet::from_pairs(pairs))
}

fn family_from_args(args: &GenArgs) -> Result<GraphFamily, Failure> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| Failure::Usage(format!("--family {:?} requires --{flag}", args.family)))
    };
    Ok(match args.family {
        FamilyArg::Complete => GraphFamily::Complete(need(args.n, "n")?),
        FamilyArg::Cycle => GraphFamily::Cycle(need(args.n, "n")?),
        FamilyArg::Path => GraphFamily::Path(need(args.n, "n")?),
        FamilyArg::Star => GraphFamily::Star(need(args.n, "n")?),
        FamilyArg::Wheel => GraphFamily::Wheel(need(args.n, "n")?),
        FamilyArg::CompleteBipartite => {
            GraphFamily::CompleteBipartite(need(args.a, "a")?, need(args.b, "b")?)
        }
        FamilyArg::Petersen => GraphFamily::Petersen,
        FamilyArg::Gnp => GraphFamily::Gnp {
            n: need(args.n, "n")?,
            p: args
                .p
                .ok_or_else(|| Failure::Usage("--family gnp requires --p".to_owned()))?,
            seed: args.seed,
        },
    })
}
