//! `exdef`: solve, verify, generate, reduce and benchmark exact defective
//! colorings from the command line.
//!
//! Exit codes: 0 answered, 1 usage or input error, 2 unknown (budget
//! exhausted or only bounds known), 3 invalid coloring or failed check.

mod bench;
mod reduce;
mod report;
mod solve;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use exdef_core::coloring::io::read_coloring;
use exdef_core::coloring::{defects, DEFAULT_NODE_BUDGET};
use exdef_core::graph::generate::{self, Family};
use exdef_core::graph::io::{read_graph, write_graph, Format};
use exdef_core::graph::random;
use exdef_core::Graph;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_UNKNOWN: u8 = 2;
pub const EXIT_INVALID: u8 = 3;

#[derive(Parser)]
#[command(name = "exdef", version, about = "Exact defective graph coloring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide `χ_d^= <= k` or compute `χ_d^=`, printing a JSON report.
    Solve(solve::SolveArgs),
    /// Check that a coloring gives every vertex exactly d same-colored neighbors.
    Verify(VerifyArgs),
    /// Write a named or random graph as an edge list.
    Generate(GenerateArgs),
    /// Build a hardness gadget instance, optionally checking it round trip.
    Reduce(reduce::ReduceArgs),
    /// Time the polynomial solvers on random instances of growing size.
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => Format::EdgeList,
            FormatArg::Dimacs => Format::Dimacs,
        }
    }
}

#[derive(Args)]
pub struct GraphInput {
    /// Graph file; `-` reads standard input.
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Coloring file: `k`, then one color per vertex.
    coloring: PathBuf,
    #[arg(long)]
    d: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cycle,
    Path,
    Complete,
    Wheel,
    Star,
    Petersen,
    CartesianK2Complete,
    CategoricalK2Complete,
    TightnessGadget,
    Bowtie,
    Octahedron,
    Icosahedron,
    RandomCactus,
    RandomBlockGraph,
    Gnp,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    family: FamilyArg,
    /// Vertex count (order for wheels, leaves for stars).
    #[arg(long)]
    n: Option<usize>,
    /// Clique size in the `K2` products.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Bridge probability for random cacti.
    #[arg(long, default_value_t = 0.2)]
    bridge_prob: f64,
    /// Longest cycle for random cacti.
    #[arg(long, default_value_t = 6)]
    max_cycle: usize,
    /// Largest clique for random block graphs.
    #[arg(long, default_value_t = 4)]
    max_block: usize,
    /// Edge probability for `gnp`.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: FormatArg,
}

/// An error that maps to an exit code, with a message for standard error.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<exdef_core::Error> for Failure {
    fn from(e: exdef_core::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

pub fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        return std::io::read_to_string(std::io::stdin())
            .map_err(|e| Failure::usage(format!("stdin: {e}")));
    }
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub fn load_graph(input: &GraphInput) -> Result<Graph, Failure> {
    let text = read_text(&input.graph)?;
    read_graph(&text, input.format.into())
        .map_err(|e| Failure::usage(format!("{}: {e}", input.graph.display())))
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let g = load_graph(&args.input)?;
    let text = read_text(&args.coloring)?;
    let c = read_coloring(&text)
        .map_err(|e| Failure::usage(format!("{}: {e}", args.coloring.display())))?;
    let defects = defects(&g, &c)?;
    let bad: Vec<(usize, usize)> = defects
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, x)| x != args.d)
        .collect();
    if bad.is_empty() {
        println!(
            "valid: exact ({}, {})-coloring of {} vertices",
            c.k(),
            args.d,
            g.n()
        );
        return Ok(EXIT_OK);
    }
    println!(
        "invalid: {} of {} vertices have the wrong defect",
        bad.len(),
        g.n()
    );
    for (v, x) in bad {
        println!(
            "vertex {v}: color {}, {x} same-colored neighbors, expected {}",
            c.color(v),
            args.d
        );
    }
    Ok(EXIT_INVALID)
}

fn generate_graph(args: &GenerateArgs) -> Result<Graph, Failure> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::usage(format!("this family needs --{flag}")))
    };
    let g = match args.family {
        FamilyArg::Cycle => generate::generate(Family::Cycle(need(args.n, "n")?))?,
        FamilyArg::Path => generate::generate(Family::Path(need(args.n, "n")?))?,
        FamilyArg::Complete => generate::generate(Family::Complete(need(args.n, "n")?))?,
        FamilyArg::Wheel => generate::generate(Family::Wheel(need(args.n, "n")?))?,
        FamilyArg::Star => generate::generate(Family::Star(need(args.n, "n")?))?,
        FamilyArg::Petersen => generate::petersen(),
        FamilyArg::CartesianK2Complete => {
            generate::generate(Family::CartesianK2Complete(need(args.m, "m")?))?
        }
        FamilyArg::CategoricalK2Complete => {
            generate::generate(Family::CategoricalK2Complete(need(args.m, "m")?))?
        }
        FamilyArg::TightnessGadget => generate::tightness_gadget(),
        FamilyArg::Bowtie => generate::bowtie(),
        FamilyArg::Octahedron => generate::octahedron(),
        FamilyArg::Icosahedron => generate::icosahedron(),
        FamilyArg::RandomCactus | FamilyArg::RandomBlockGraph | FamilyArg::Gnp => {
            let n = need(args.n, "n")?;
            eprintln!("seed: {}", args.seed);
            match args.family {
                FamilyArg::RandomCactus => {
                    if args.max_cycle < 3 || !(0.0..=1.0).contains(&args.bridge_prob) {
                        return Err(Failure::usage(
                            "need --max-cycle >= 3 and --bridge-prob in [0, 1]",
                        ));
                    }
                    random::random_cactus(n, args.bridge_prob, args.max_cycle, args.seed)
                }
                FamilyArg::RandomBlockGraph => {
                    if args.max_block < 2 {
                        return Err(Failure::usage("need --max-block >= 2"));
                    }
                    random::random_block_graph(n, args.max_block, args.seed)
                }
                _ => {
                    if !(0.0..=1.0).contains(&args.p) {
                        return Err(Failure::usage("need --p in [0, 1]"));
                    }
                    random::gnp(n, args.p, args.seed)
                }
            }
        }
    };
    Ok(g)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Solve(args) => solve::run(&args),
        Command::Verify(args) => verify(&args),
        Command::Generate(args) => {
            let g = generate_graph(&args)?;
            print!("{}", write_graph(&g, args.format.into()));
            Ok(EXIT_OK)
        }
        Command::Reduce(args) => reduce::run(&args),
        Command::Bench(args) => bench::run(&args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Node budget flag shared by the solving commands.
#[derive(Args, Clone, Copy)]
pub struct BudgetArgs {
    /// Search node budget; exhausting it yields an `unknown` verdict.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    /// Worker threads for the brute-force search.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}
