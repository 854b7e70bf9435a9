use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};
use exdef_core::cactus::{cactus_chi1, cactus_chi2, Chi1Outcome};
use exdef_core::coloring::io::write_coloring;
use exdef_core::coloring::{chromatic_number, feasibility_precheck, Budget};
use exdef_core::graph::block_cut_tree;
use exdef_core::oracle::{brute_chi_with, brute_solve_with};
use exdef_core::{blockgraph, closed_form, Coloring, Error, Graph, SolveOutcome};

use crate::report::{Report, Verdict};
use crate::{load_graph, write_file, BudgetArgs, Failure, GraphInput, EXIT_OK, EXIT_UNKNOWN};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Auto,
    Brute,
    Cactus,
    Blockgraph,
    Closedform,
}

#[derive(Args)]
pub struct SolveArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Required number of same-colored neighbors.
    #[arg(long)]
    d: usize,
    /// Decide whether an exact (k, d)-coloring exists.
    #[arg(long, required_unless_present = "chi", conflicts_with = "chi")]
    k: Option<usize>,
    /// Compute the smallest such k.
    #[arg(long)]
    chi: bool,
    #[arg(long, value_enum, default_value = "auto")]
    algorithm: Algorithm,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Also write the witness coloring to this file.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

/// What an algorithm established.
enum Answer {
    Chi(SolveOutcome),
    Decided(Option<Coloring>),
    Bounds {
        lower: usize,
        upper: usize,
        witness: Coloring,
    },
}

struct Solved {
    answer: Answer,
    algorithm: String,
    reason: Option<String>,
}

impl Solved {
    fn new(answer: Answer, algorithm: impl Into<String>) -> Self {
        Solved {
            answer,
            algorithm: algorithm.into(),
            reason: None,
        }
    }
}

pub fn run(args: &SolveArgs) -> Result<u8, Failure> {
    let g = load_graph(&args.input)?;
    let budget = Budget::new(args.budget.budget);
    let start = Instant::now();
    let solved = match solve(&g, args, &budget) {
        Ok(s) => Ok(s),
        Err(Error::BudgetExceeded(limit)) => Err(format!("node budget of {limit} exhausted")),
        Err(e) => return Err(e.into()),
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let report = match solved {
        Ok(s) => build_report(s, args, elapsed_ms),
        Err(reason) => Report {
            verdict: Verdict::Unknown,
            chi: None,
            bounds: None,
            witness: None,
            k: args.k,
            d: args.d,
            algorithm: algorithm_name(args.algorithm).into(),
            elapsed_ms,
            reason: Some(reason),
        },
    };
    if let (Some(path), Some(w)) = (&args.witness_out, &report.witness) {
        let palette = report.k.expect("a witness carries its palette");
        let c = Coloring::new(palette, w.clone()).expect("witness colors are below k");
        write_file(path, &write_coloring(&c))?;
    }
    println!(
        "{}",
        serde_json::to_string(&report).expect("reports serialize")
    );
    Ok(if report.verdict == Verdict::Unknown {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    })
}

fn algorithm_name(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Auto => "auto",
        Algorithm::Brute => "brute",
        Algorithm::Cactus => "cactus",
        Algorithm::Blockgraph => "blockgraph",
        Algorithm::Closedform => "closedform",
    }
}

fn build_report(s: Solved, args: &SolveArgs, elapsed_ms: f64) -> Report {
    let mut r = Report {
        verdict: Verdict::Unknown,
        chi: None,
        bounds: None,
        witness: None,
        k: None,
        d: args.d,
        algorithm: s.algorithm,
        elapsed_ms,
        reason: s.reason,
    };
    let set_witness = |r: &mut Report, c: &Coloring| {
        r.witness = Some(c.colors().to_vec());
        r.k = Some(c.k());
    };
    match (s.answer, args.k) {
        (Answer::Chi(SolveOutcome::Finite { chi, witness }), None) => {
            r.verdict = Verdict::Yes;
            r.chi = Some(chi);
            set_witness(&mut r, &witness);
        }
        (Answer::Chi(SolveOutcome::Finite { chi, witness }), Some(k)) => {
            r.chi = Some(chi);
            if chi <= k {
                r.verdict = Verdict::Yes;
                set_witness(&mut r, &witness.with_k(k).expect("chi <= k"));
            } else {
                r.verdict = Verdict::No;
                r.k = Some(k);
            }
        }
        (Answer::Chi(SolveOutcome::Infeasible), k) => {
            r.verdict = if k.is_some() {
                Verdict::No
            } else {
                Verdict::Infinite
            };
            r.k = k;
            r.reason
                .get_or_insert_with(|| "no exact coloring exists for any k".into());
        }
        (Answer::Decided(found), k) => {
            let k = k.expect("decisions come from --k");
            r.k = Some(k);
            match found {
                Some(c) => {
                    r.verdict = Verdict::Yes;
                    set_witness(&mut r, &c);
                }
                None => r.verdict = Verdict::No,
            }
        }
        (
            Answer::Bounds {
                lower,
                upper,
                witness,
            },
            k,
        ) => {
            r.bounds = Some([lower, upper]);
            let reason =
                format!("chi is between {lower} and {upper}; the matching search was cut short");
            r.reason = Some(reason);
            match k {
                Some(k) if k >= upper => {
                    r.verdict = Verdict::Yes;
                    set_witness(&mut r, &witness.with_k(k).expect("upper <= k"));
                }
                Some(k) if k < lower => {
                    r.verdict = Verdict::No;
                    r.k = Some(k);
                }
                Some(k) => r.k = Some(k),
                None => set_witness(&mut r, &witness),
            }
        }
    }
    r
}

fn solve(g: &Graph, args: &SolveArgs, budget: &Budget) -> Result<Solved, Error> {
    let d = args.d;
    match args.algorithm {
        Algorithm::Brute => brute(g, args, budget),
        Algorithm::Closedform => match closed_form::solve_recognized(g, d) {
            Some((family, out)) => Ok(Solved::new(
                Answer::Chi(out),
                format!("closedform:{}", family.name()),
            )),
            None => Err(Error::BadParameter(format!(
                "no closed form applies to this graph with d = {d}"
            ))),
        },
        Algorithm::Cactus => cactus(g, d),
        Algorithm::Blockgraph => Ok(Solved::new(
            Answer::Chi(blockgraph::blockgraph_chi(g, d)?),
            "blockgraph",
        )),
        Algorithm::Auto => {
            if !feasibility_precheck(g, d) {
                let reason = if g.min_degree().is_some_and(|delta| d > delta) {
                    "d exceeds min degree"
                } else {
                    "a component has at most d vertices"
                };
                let mut s = Solved::new(Answer::Chi(SolveOutcome::Infeasible), "precheck");
                s.reason = Some(reason.into());
                return Ok(s);
            }
            if let Some((family, out)) = closed_form::solve_recognized(g, d) {
                return Ok(Solved::new(
                    Answer::Chi(out),
                    format!("closedform:{}", family.name()),
                ));
            }
            let tree = block_cut_tree(g);
            if (d == 1 || d == 2) && tree.is_cactus() {
                return cactus(g, d);
            }
            if tree.is_block_graph() {
                return Ok(Solved::new(
                    Answer::Chi(blockgraph::blockgraph_chi(g, d)?),
                    "blockgraph",
                ));
            }
            brute(g, args, budget)
        }
    }
}

fn brute(g: &Graph, args: &SolveArgs, budget: &Budget) -> Result<Solved, Error> {
    let threads = args.budget.threads.max(1);
    let answer = match args.k {
        Some(k) => Answer::Decided(brute_solve_with(g, k, args.d, budget, threads)?),
        None => Answer::Chi(brute_chi_with(g, args.d, g.n().max(1), budget, threads)?),
    };
    Ok(Solved::new(answer, "brute"))
}

fn cactus(g: &Graph, d: usize) -> Result<Solved, Error> {
    if !block_cut_tree(g).is_cactus() {
        return Err(Error::NotACactus);
    }
    let answer = match d {
        0 => Answer::Chi(SolveOutcome::finite(chromatic_number(
            g,
            &Budget::default(),
        )?)),
        1 => match cactus_chi1(g)? {
            Chi1Outcome::Solved(out) => Answer::Chi(out),
            Chi1Outcome::Bounded {
                lower,
                upper,
                witness,
            } => Answer::Bounds {
                lower,
                upper,
                witness,
            },
        },
        2 => Answer::Chi(cactus_chi2(g)?),
        // Every nonempty cactus has a vertex of degree at most 2.
        _ if g.n() > 0 => Answer::Chi(SolveOutcome::Infeasible),
        _ => Answer::Chi(SolveOutcome::finite(Coloring::monochromatic(0))),
    };
    Ok(Solved::new(answer, "cactus"))
}
