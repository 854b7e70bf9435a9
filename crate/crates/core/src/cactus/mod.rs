//! Exact defective coloring on cactus graphs.
//!
//! For `d = 2` every vertex must lie on exactly one monochromatic cycle.
//! [`cactus_label`] decides which cycles are monochromatic (`M`) and which
//! are polychromatic (`P`) by propagating forced labels over an auxiliary
//! graph whose vertices are the cycles, and [`cactus_extract_coloring`]
//! turns an accepted labeling into a coloring. For `d = 1` the answer comes
//! from perfect matchings and is always 2, 3 or infinite.

mod auxiliary;
mod extract;
mod label;

use std::ops::ControlFlow;

use serde::Serialize;

pub use auxiliary::{cactus_preprocess, CactusAux};
pub use extract::cactus_extract_coloring;
pub use label::{
    cactus_label, cactus_label_with_order, CycleLabeling, Label, Palette, RejectReason, Rejection,
};

use crate::coloring::{greedy_degeneracy_coloring, Budget, Coloring, SolveOutcome};
use crate::error::{Error, Result};
use crate::graph::{
    block_cut_tree, contract_partition, for_each_perfect_matching, maximum_matching, Graph,
};
use crate::oracle::lift_quotient_coloring;

/// Perfect matchings examined by [`cactus_chi1`] before settling for an
/// interval.
pub const DEFAULT_MATCHING_LIMIT: usize = 100_000;

/// `χ_2^=` of a cactus.
///
/// A disjoint union of cycles takes one color. Otherwise two colors suffice
/// exactly when the two-color labeling succeeds, three when the relaxed
/// labeling does, and no number of colors works when both fail.
pub fn cactus_chi2(g: &Graph) -> Result<SolveOutcome> {
    let aux = cactus_preprocess(g)?;
    if g.is_regular(2) {
        return Ok(SolveOutcome::finite(Coloring::monochromatic(g.n())));
    }
    for (palette, k) in [(Palette::Two, 2), (Palette::Many, 3)] {
        if let Ok(labeling) = cactus_label(&aux, palette) {
            return Ok(SolveOutcome::finite(cactus_extract_coloring(
                g, &aux, &labeling, k,
            )?));
        }
    }
    Ok(SolveOutcome::Infeasible)
}

/// Result of [`cactus_chi1`]: an exact value, or the interval `[2, 3]`
/// when the matching search ran out before finding a bipartite quotient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Chi1Outcome {
    Solved(SolveOutcome),
    Bounded {
        lower: usize,
        upper: usize,
        witness: Coloring,
    },
}

impl Chi1Outcome {
    pub fn exact(&self) -> Option<&SolveOutcome> {
        match self {
            Chi1Outcome::Solved(s) => Some(s),
            Chi1Outcome::Bounded { .. } => None,
        }
    }
}

/// `χ_1^=` of a cactus, examining at most [`DEFAULT_MATCHING_LIMIT`] perfect
/// matchings.
pub fn cactus_chi1(g: &Graph) -> Result<Chi1Outcome> {
    cactus_chi1_with(g, DEFAULT_MATCHING_LIMIT, &Budget::default())
}

/// As [`cactus_chi1`] with an explicit matching limit and search budget.
/// Exhausting either yields [`Chi1Outcome::Bounded`] rather than an error.
pub fn cactus_chi1_with(g: &Graph, limit: usize, budget: &Budget) -> Result<Chi1Outcome> {
    if !block_cut_tree(g).is_cactus() {
        return Err(Error::NotACactus);
    }
    let solved = |c: Coloring| Ok(Chi1Outcome::Solved(SolveOutcome::finite(c)));
    if g.is_regular(1) || g.n() == 0 {
        return solved(Coloring::monochromatic(g.n()));
    }
    let any = maximum_matching(g);
    if !any.is_perfect_in(g) {
        return Ok(Chi1Outcome::Solved(SolveOutcome::Infeasible));
    }
    let two_colored = |parts: &[Vec<usize>]| -> Result<Option<Coloring>> {
        let q = contract_partition(g, parts)?;
        Ok(q.bipartition().map(|side| {
            lift_quotient_coloring(g.n(), parts, &Coloring::new(2, side).expect("two sides"))
        }))
    };
    let any_parts = any.as_partition();
    if let Some(c) = two_colored(&any_parts)? {
        return solved(c);
    }

    let mut seen = 0;
    let mut found = None;
    let mut failure = None;
    let search = for_each_perfect_matching(g, budget, |edges| {
        seen += 1;
        let parts: Vec<Vec<usize>> = edges.iter().map(|&(u, v)| vec![u, v]).collect();
        match two_colored(&parts) {
            Ok(Some(c)) => {
                found = Some(c);
                return ControlFlow::Break(());
            }
            Ok(None) => {}
            Err(e) => {
                failure = Some(e);
                return ControlFlow::Break(());
            }
        }
        if seen >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    if let Some(c) = found {
        return solved(c);
    }
    let exhausted = match search {
        Ok(()) => seen < limit,
        Err(Error::BudgetExceeded(_)) => false,
        Err(e) => return Err(e),
    };
    // Quotients of a cactus are outerplanar, so greedy needs at most three
    // colors, and exactly three here since no quotient was bipartite.
    let q = contract_partition(g, &any_parts)?;
    let witness = lift_quotient_coloring(g.n(), &any_parts, &greedy_degeneracy_coloring(&q));
    debug_assert_eq!(witness.k(), 3);
    if exhausted {
        solved(witness)
    } else {
        Ok(Chi1Outcome::Bounded {
            lower: 2,
            upper: 3,
            witness,
        })
    }
}

#[cfg(test)]
mod tests;
