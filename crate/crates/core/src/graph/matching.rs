use std::ops::ControlFlow;

use petgraph::graph::UnGraph;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::coloring::Budget;
use crate::error::Result;

/// A set of vertex-disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        let mut covered = vec![false; g.n()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || covered[u] || covered[v] {
                return false;
            }
            covered[u] = true;
            covered[v] = true;
        }
        covered.into_iter().all(|c| c)
    }

    /// The matching as a vertex partition into pairs, for contraction.
    pub fn as_partition(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&(u, v)| vec![u, v]).collect()
    }
}

/// Perfect matchings, at most `limit` of them. The lowest unmatched vertex
/// is always matched next, trying partners in increasing order, so
/// truncated output is deterministic.
pub fn perfect_matchings(g: &Graph, limit: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    for_each_perfect_matching(g, &Budget::unlimited(), |edges| {
        out.push(Matching {
            edges: edges.to_vec(),
        });
        if out.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .expect("unlimited budget");
    out
}

/// Streams perfect matchings in the order of [`perfect_matchings`]. Each
/// search node costs one budget tick.
pub fn for_each_perfect_matching<F>(g: &Graph, budget: &Budget, mut visit: F) -> Result<()>
where
    F: FnMut(&[(usize, usize)]) -> ControlFlow<()>,
{
    let n = g.n();
    if n % 2 == 1 {
        return Ok(());
    }
    let mut matched = vec![false; n];
    let mut current = Vec::with_capacity(n / 2);
    let _ = extend(g, budget, &mut matched, &mut current, 0, &mut visit)?;
    Ok(())
}

fn extend<F>(
    g: &Graph,
    budget: &Budget,
    matched: &mut [bool],
    current: &mut Vec<(usize, usize)>,
    from: usize,
    visit: &mut F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[(usize, usize)]) -> ControlFlow<()>,
{
    budget.tick()?;
    let Some(v) = (from..g.n()).find(|&v| !matched[v]) else {
        return Ok(visit(current));
    };
    matched[v] = true;
    let mut flow = ControlFlow::Continue(());
    for &u in g.neighbors(v) {
        if matched[u] {
            continue;
        }
        matched[u] = true;
        current.push((v, u));
        flow = extend(g, budget, matched, current, v + 1, visit)?;
        current.pop();
        matched[u] = false;
        if flow.is_break() {
            break;
        }
    }
    matched[v] = false;
    Ok(flow)
}

/// A maximum matching (Gabow's algorithm), edges sorted.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut pg = UnGraph::<(), ()>::with_capacity(g.n(), g.m());
    for _ in 0..g.n() {
        pg.add_node(());
    }
    pg.extend_with_edges(g.edges().map(|(u, v)| (u as u32, v as u32)));
    let mut edges: Vec<(usize, usize)> = petgraph::algo::maximum_matching(&pg)
        .edges()
        .map(|(a, b)| {
            let (a, b) = (a.index(), b.index());
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    Matching { edges }
}
