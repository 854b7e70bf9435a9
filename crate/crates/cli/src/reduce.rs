use std::path::PathBuf;

use clap::{Args, Subcommand};
use exdef_core::coloring::{is_exact_coloring, is_proper, Budget};
use exdef_core::graph::io::{write_graph, Format};
use exdef_core::oracle::brute_solve;
use exdef_core::reductions::{
    lift_solution, reduce_coloring_to_exact, reduce_increment_defect, reduce_nae3sat,
    reduce_planar_variant, NaeFormula, Reduction, ReductionMap, SourceInstance, SourceSolution,
    VariableCycle,
};
use exdef_core::{Error, Graph};

use crate::{
    load_graph, read_text, write_file, Failure, GraphInput, EXIT_INVALID, EXIT_OK, EXIT_UNKNOWN,
};

#[derive(Args)]
pub struct ReduceArgs {
    #[command(subcommand)]
    kind: Kind,
    /// Write the target graph here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Write the JSON vertex map here.
    #[arg(long, global = true)]
    map: Option<PathBuf>,
    /// Solve both sides by brute force and confirm the answers agree.
    #[arg(long, global = true)]
    check: bool,
    #[arg(long, global = true, default_value_t = exdef_core::coloring::DEFAULT_NODE_BUDGET)]
    budget: u64,
}

#[derive(Subcommand)]
enum Kind {
    /// Proper k-coloring to exact (k, d)-coloring.
    Coloring {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Proper 3-coloring of a 4-regular graph to exact (3, d)-coloring.
    Planar {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        d: usize,
    },
    /// Exact (2, d)-coloring to exact (2, d + 2)-coloring.
    Increment {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        d: usize,
    },
    /// Monotone NAE-3SAT to exact (2, 2)-coloring.
    Nae3sat {
        /// Formula file: `p nae <vars> <clauses>`, then one clause per line.
        formula: PathBuf,
        /// Use triangles instead of 4-cycles for the variable gadgets.
        #[arg(long)]
        c3: bool,
        /// Reject clauses that repeat a variable.
        #[arg(long)]
        strict: bool,
    },
}

pub fn run(args: &ReduceArgs) -> Result<u8, Failure> {
    let (target, map) = match &args.kind {
        Kind::Coloring { input, k, d } => reduce_coloring_to_exact(&load_graph(input)?, *k, *d)?,
        Kind::Planar { input, d } => reduce_planar_variant(&load_graph(input)?, *d)?,
        Kind::Increment { input, d } => reduce_increment_defect(&load_graph(input)?, *d)?,
        Kind::Nae3sat {
            formula,
            c3,
            strict,
        } => {
            let f = NaeFormula::parse(&read_text(formula)?, *strict)
                .map_err(|e| Failure::usage(format!("{}: {e}", formula.display())))?;
            let cycle = if *c3 {
                VariableCycle::C3
            } else {
                VariableCycle::C4
            };
            reduce_nae3sat(&f, cycle)
        }
    };
    let text = write_graph(&target, Format::EdgeList);
    match &args.output {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    if let Some(path) = &args.map {
        write_file(path, &map.to_json())?;
    }
    if !args.check {
        return Ok(EXIT_OK);
    }
    let budget = Budget::new(args.budget);
    match check(&target, &map, &budget) {
        Ok(Ok(answer)) => {
            eprintln!(
                "check: source and target agree ({})",
                if answer { "yes" } else { "no" }
            );
            Ok(EXIT_OK)
        }
        Ok(Err(message)) => {
            eprintln!("check failed: {message}");
            Ok(EXIT_INVALID)
        }
        Err(Error::BudgetExceeded(limit)) => {
            eprintln!("check: node budget of {limit} exhausted");
            Ok(EXIT_UNKNOWN)
        }
        Err(e) => Err(e.into()),
    }
}

/// Decides both instances. The outer error is a solver failure; the inner one
/// describes a disagreement.
fn check(
    target: &Graph,
    map: &ReductionMap,
    budget: &Budget,
) -> Result<Result<bool, String>, Error> {
    let source_yes = match (&map.source, &map.reduction) {
        (SourceInstance::Formula(f), _) => f.brute_force().is_some(),
        (SourceInstance::Graph { .. }, reduction) => {
            let g = map.source_graph().expect("graph sources rebuild");
            let (k, d) = match *reduction {
                Reduction::ColoringToExact { k, .. } => (k, 0),
                Reduction::Planar { .. } => (3, 0),
                Reduction::IncrementDefect { d } => (2, d),
                Reduction::Nae3Sat { .. } => unreachable!("NAE reductions start from formulas"),
            };
            brute_solve(&g, k, d, budget)?.is_some()
        }
    };
    let (k, d) = map.reduction.target_parameters();
    let witness = brute_solve(target, k, d, budget)?;
    let Some(w) = witness else {
        return Ok(if source_yes {
            Err("source is a yes instance but the target is not".into())
        } else {
            Ok(false)
        });
    };
    if !source_yes {
        return Ok(Err("target is a yes instance but the source is not".into()));
    }
    let lifted = match lift_solution(map, &w) {
        Ok(s) => s,
        Err(e) => return Ok(Err(format!("lifting the target witness failed: {e}"))),
    };
    let valid = match (&lifted, &map.source, &map.reduction) {
        (SourceSolution::Assignment(a), SourceInstance::Formula(f), _) => f.is_nae_satisfied(a),
        (SourceSolution::Coloring(c), _, Reduction::IncrementDefect { d }) => {
            is_exact_coloring(&map.source_graph().expect("graph source"), c, *d)
        }
        (SourceSolution::Coloring(c), _, _) => {
            is_proper(&map.source_graph().expect("graph source"), c)
        }
        _ => false,
    };
    Ok(if valid {
        Ok(true)
    } else {
        Err("lifted solution is not valid on the source".into())
    })
}
