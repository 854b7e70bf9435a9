//! Ground truth for small graphs.
//!
//! Two independent routes to the exact defective chromatic number:
//! [`brute_chi`] searches colorings directly, while [`chi_via_quotients`]
//! minimises the chromatic number of `G / H` over all partitions `H` of the
//! vertices into `d`-regular induced subgraphs.

mod partitions;
mod search;

use std::ops::ControlFlow;

pub use partitions::{enumerate_regular_partitions, for_each_regular_partition, RegularPartition};
pub use search::{brute_solve, brute_solve_with};

use crate::coloring::{chromatic_number, feasibility_precheck, Budget, Coloring, SolveOutcome};
use crate::error::{Error, Result};
use crate::graph::{contract_partition, perfect_matchings, Graph};

/// Smallest `k <= k_max` admitting an exact `(k, d)`-coloring.
///
/// Each component is solved on its own and the maximum taken. A component
/// on `s` vertices with no exact `(s, d)`-coloring is infeasible for every
/// `k`, since a finite value never exceeds `s`. When the value is finite but
/// above `k_max`, [`Error::ExceedsColorLimit`] is returned.
pub fn brute_chi(g: &Graph, d: usize, k_max: usize, budget: &Budget) -> Result<SolveOutcome> {
    brute_chi_with(g, d, k_max, budget, 1)
}

pub fn brute_chi_with(
    g: &Graph,
    d: usize,
    k_max: usize,
    budget: &Budget,
    threads: usize,
) -> Result<SolveOutcome> {
    let mut assign = vec![0; g.n()];
    let mut chi = 1;
    for comp in g.components() {
        let h = g.induced(&comp);
        let Some(witness) = component_chi(&h, d, k_max, budget, threads)? else {
            return Ok(SolveOutcome::Infeasible);
        };
        chi = chi.max(witness.k());
        for (i, &v) in comp.iter().enumerate() {
            assign[v] = witness.color(i);
        }
    }
    Ok(SolveOutcome::finite(Coloring::new(chi, assign)?))
}

fn component_chi(
    h: &Graph,
    d: usize,
    k_max: usize,
    budget: &Budget,
    threads: usize,
) -> Result<Option<Coloring>> {
    let s = h.n();
    if !feasibility_precheck(h, d) {
        return Ok(None);
    }
    let top = k_max.min(s);
    if top == s {
        // One search at the full palette settles feasibility and bounds the
        // remaining sweep by the number of colors the witness uses.
        let Some(w) = brute_solve_with(h, s, d, budget, threads)? else {
            return Ok(None);
        };
        let used = w.used_colors();
        for k in 1..used {
            if let Some(c) = brute_solve_with(h, k, d, budget, threads)? {
                return Ok(Some(c));
            }
        }
        return Ok(Some(w.with_k(used)?));
    }
    for k in 1..=top {
        if let Some(c) = brute_solve_with(h, k, d, budget, threads)? {
            return Ok(Some(c));
        }
    }
    match brute_solve_with(h, s, d, budget, threads)? {
        None => Ok(None),
        Some(_) => Err(Error::ExceedsColorLimit(k_max)),
    }
}

/// Minimum over `H` in `R_d(G)` of `χ(G / H)`, with the witness lifted by
/// giving every vertex the quotient color of its part. Infeasible when no
/// such partition exists.
pub fn chi_via_quotients(g: &Graph, d: usize, budget: &Budget) -> Result<SolveOutcome> {
    let mut best: Option<(Vec<Vec<usize>>, Coloring)> = None;
    for_each_regular_partition(g, d, budget, |parts| {
        let q = contract_partition(g, parts)?;
        let c = chromatic_number(&q, budget)?;
        if best.as_ref().is_none_or(|(_, b)| c.k() < b.k()) {
            best = Some((parts.to_vec(), c));
        }
        let optimal = best.as_ref().is_some_and(|(_, b)| b.k() <= 1);
        Ok(if optimal {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        })
    })?;
    Ok(match best {
        None => SolveOutcome::Infeasible,
        Some((parts, qc)) => SolveOutcome::finite(lift_quotient_coloring(g.n(), &parts, &qc)),
    })
}

/// The `d = 1` special case through perfect matchings: the minimum of
/// `χ(G / M)` over perfect matchings `M`.
pub fn chi1_via_matchings(g: &Graph, budget: &Budget) -> Result<SolveOutcome> {
    let mut best: Option<(Vec<Vec<usize>>, Coloring)> = None;
    for m in perfect_matchings(g, usize::MAX) {
        budget.tick()?;
        let parts = m.as_partition();
        let c = chromatic_number(&contract_partition(g, &parts)?, budget)?;
        if best.as_ref().is_none_or(|(_, b)| c.k() < b.k()) {
            best = Some((parts, c));
        }
    }
    Ok(match best {
        None => SolveOutcome::Infeasible,
        Some((parts, qc)) => SolveOutcome::finite(lift_quotient_coloring(g.n(), &parts, &qc)),
    })
}

/// Blows a coloring of `G / parts` back up to `G`.
pub fn lift_quotient_coloring(n: usize, parts: &[Vec<usize>], quotient: &Coloring) -> Coloring {
    let mut assign = vec![0; n];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            assign[v] = quotient.color(i);
        }
    }
    Coloring::new(quotient.k(), assign).expect("quotient colors are below k")
}
