//! Exact defective coloring on block graphs.
//!
//! In a block graph every color class of an exact `(k, d)`-coloring is a
//! disjoint union of `K_{d+1}`'s, so the classes come from a
//! `K_{d+1}`-factor. The factor is found by eliminating blocks from the
//! leaves of the block-cut tree inwards; contracting it leaves another
//! block graph whose chromatic number is the answer.

use crate::coloring::{chromatic_number, Budget, Coloring, SolveOutcome};
use crate::error::{Error, Result};
use crate::graph::{block_cut_tree, contract_partition, Graph};
use crate::oracle::lift_quotient_coloring;

const NONE: usize = usize::MAX;

/// A partition of the vertices into cliques of size exactly `r`, or `None`
/// if there is none.
///
/// Blocks are processed children first. A block sees its vertices minus its
/// parent cut vertex and minus any cut vertex already claimed by a child
/// block. If their number is divisible by `r` they are grouped on their
/// own; if it is one short, the parent cut vertex joins them; otherwise no
/// factor exists. Within a block the members are grouped in ascending
/// order, which makes the result the lexicographically least factor.
pub fn clique_factor(g: &Graph, r: usize) -> Result<Option<Vec<Vec<usize>>>> {
    let tree = block_cut_tree(g);
    if !tree.is_block_graph() {
        return Err(Error::NotABlockGraph);
    }
    match r {
        0 => return Err(Error::BadParameter("clique size must be positive".into())),
        1 => return Ok(Some((0..g.n()).map(|v| vec![v]).collect())),
        _ => {}
    }
    let n = g.n();
    if !n.is_multiple_of(r) || tree.vertex_blocks.iter().any(Vec::is_empty) {
        return Ok(None);
    }

    let mut order = Vec::with_capacity(tree.blocks.len());
    let mut queued = vec![false; tree.blocks.len()];
    for root in 0..tree.blocks.len() {
        if queued[root] {
            continue;
        }
        queued[root] = true;
        let mut stack = vec![(root, NONE)];
        while let Some((b, parent_cut)) = stack.pop() {
            order.push((b, parent_cut));
            for &u in &tree.blocks[b].vertices {
                if u == parent_cut {
                    continue;
                }
                for &child in &tree.vertex_blocks[u] {
                    if !queued[child] {
                        queued[child] = true;
                        stack.push((child, u));
                    }
                }
            }
        }
    }

    let mut claimed = vec![false; n];
    let mut classes = Vec::with_capacity(n / r);
    for &(b, parent_cut) in order.iter().rev() {
        let mut members: Vec<usize> = tree.blocks[b]
            .vertices
            .iter()
            .copied()
            .filter(|&v| v != parent_cut && !claimed[v])
            .collect();
        match members.len() % r {
            0 => {}
            t if t == r - 1 && parent_cut != NONE && !claimed[parent_cut] => {
                claimed[parent_cut] = true;
                members.push(parent_cut);
                members.sort_unstable();
            }
            _ => return Ok(None),
        }
        classes.extend(members.chunks(r).map(<[usize]>::to_vec));
    }
    classes.sort();
    Ok(Some(classes))
}

/// Decides whether an exact `(k, d)`-coloring exists, returning a witness
/// with palette `k` when it does.
pub fn blockgraph_solve(g: &Graph, k: usize, d: usize) -> Result<Option<Coloring>> {
    match blockgraph_chi(g, d)? {
        SolveOutcome::Finite { chi, witness } if chi <= k => Ok(Some(witness.with_k(k)?)),
        _ => Ok(None),
    }
}

/// `χ_d^=` of a block graph: the chromatic number of the graph obtained by
/// contracting a `K_{d+1}`-factor, or infinite when there is no factor.
pub fn blockgraph_chi(g: &Graph, d: usize) -> Result<SolveOutcome> {
    let Some(factor) = clique_factor(g, d + 1)? else {
        return Ok(SolveOutcome::Infeasible);
    };
    if g.n() == 0 {
        return Ok(SolveOutcome::finite(Coloring::monochromatic(0)));
    }
    let quotient = contract_partition(g, &factor)?;
    // The quotient is a block graph, hence chordal, so this takes the
    // linear-time path and never touches the budget.
    let qc = chromatic_number(&quotient, &Budget::unlimited())?;
    Ok(SolveOutcome::finite(lift_quotient_coloring(
        g.n(),
        &factor,
        &qc,
    )))
}
