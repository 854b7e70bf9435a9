//! Closed-form values of the exact defective chromatic number for cycles,
//! wheels, trees and complete graphs, each with a constructive witness.
//!
//! Witnesses for [`chi_cycle`], [`chi_wheel`] and [`chi_complete`] use the
//! canonical numbering of [`crate::graph::generate`]. [`solve_recognized`]
//! detects these families in an arbitrary labelling and maps the witness
//! back.

use crate::coloring::{max_clique, Budget, Coloring, SolveOutcome};
use crate::error::{Error, Result};
use crate::graph::{recognize, Graph};

pub fn chi_cycle(n: usize, d: usize) -> Result<SolveOutcome> {
    if n < 3 {
        return Err(Error::BadParameter(format!("cycle length {n} is below 3")));
    }
    let out = match d {
        0 => {
            let mut assign: Vec<usize> = (0..n).map(|v| v % 2).collect();
            if n % 2 == 1 {
                assign[n - 1] = 2;
            }
            finite(n % 2 + 2, assign)
        }
        1 if n % 2 == 1 => SolveOutcome::Infeasible,
        1 => {
            // Pair vertices 2i, 2i+1 and alternate colors along the pairs;
            // an odd number of pairs closes with a third color.
            let pairs = n / 2;
            let pair_color = |p: usize| {
                if pairs % 2 == 1 && p == pairs - 1 {
                    2
                } else {
                    p % 2
                }
            };
            let k = if pairs.is_multiple_of(2) { 2 } else { 3 };
            finite(k, (0..n).map(|v| pair_color(v / 2)).collect())
        }
        2 => SolveOutcome::finite(Coloring::monochromatic(n)),
        _ => SolveOutcome::Infeasible,
    };
    Ok(out)
}

/// Only `d = 1` is answered for `d <= 3`; other small defects return
/// [`Error::BadParameter`] so callers fall back to the oracle.
pub fn chi_wheel(n: usize, d: usize) -> Result<SolveOutcome> {
    if n < 4 {
        return Err(Error::BadParameter(format!("wheel order {n} is below 4")));
    }
    match d {
        1 => {}
        _ if d > 3 => return Ok(SolveOutcome::Infeasible),
        _ => {
            return Err(Error::BadParameter(format!(
                "no closed form for wheels with d = {d}"
            )))
        }
    }
    if n % 2 == 1 {
        return Ok(SolveOutcome::Infeasible);
    }
    if n == 4 {
        return Ok(finite(2, vec![0, 0, 1, 1]));
    }
    // Hub 0 pairs with rim vertex 1; the rest of the rim pairs up along the
    // path 2..n and alternates between colors 1 and 2.
    let assign = (0..n)
        .map(|v| if v < 2 { 0 } else { 1 + (v / 2 + 1) % 2 })
        .collect();
    Ok(finite(3, assign))
}

/// Trees: a perfect matching decides everything for `d = 1`.
pub fn chi_tree(g: &Graph, d: usize) -> Result<SolveOutcome> {
    if !recognize(g).is_tree {
        return Err(Error::NotATree);
    }
    let n = g.n();
    if n == 1 {
        return Ok(if d == 0 {
            finite(1, vec![0])
        } else {
            SolveOutcome::Infeasible
        });
    }
    match d {
        0 => {
            let side = g.bipartition().expect("trees are bipartite");
            Ok(finite(2, side))
        }
        1 => Ok(match tree_perfect_matching(g) {
            None => SolveOutcome::Infeasible,
            Some(mate) => {
                // T/M is again a tree: 2-color it by walking from vertex 0.
                let mut assign = vec![usize::MAX; n];
                assign[0] = 0;
                assign[mate[0]] = 0;
                let mut stack = vec![0, mate[0]];
                while let Some(v) = stack.pop() {
                    for &u in g.neighbors(v) {
                        if assign[u] == usize::MAX {
                            let c = if u == mate[v] {
                                assign[v]
                            } else {
                                1 - assign[v]
                            };
                            assign[u] = c;
                            assign[mate[u]] = c;
                            stack.extend([u, mate[u]]);
                        }
                    }
                }
                // A single matched pair contracts to one vertex.
                finite(if n == 2 { 1 } else { 2 }, assign)
            }
        }),
        _ => Ok(SolveOutcome::Infeasible),
    }
}

/// Leaf pairing: in reverse BFS order each unmatched vertex must take its
/// parent. Returns the mate of every vertex.
fn tree_perfect_matching(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n % 2 == 1 {
        return None;
    }
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    parent[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &u in g.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                order.push(u);
            }
        }
    }
    let mut mate = vec![usize::MAX; n];
    for &v in order.iter().skip(1).rev() {
        if mate[v] != usize::MAX {
            continue;
        }
        let p = parent[v];
        if mate[p] != usize::MAX {
            return None;
        }
        mate[v] = p;
        mate[p] = v;
    }
    (mate[0] != usize::MAX).then_some(mate)
}

pub fn chi_complete(n: usize, d: usize) -> Result<SolveOutcome> {
    if n == 0 {
        return Err(Error::BadParameter(
            "complete graph needs at least one vertex".into(),
        ));
    }
    let r = d + 1;
    if !n.is_multiple_of(r) {
        return Ok(SolveOutcome::Infeasible);
    }
    Ok(finite(n / r, (0..n).map(|v| v / r).collect()))
}

/// `⌈ω / (d + 1)⌉`, at least 1.
pub fn clique_lower_bound(g: &Graph, d: usize, budget: &Budget) -> Result<usize> {
    let omega = max_clique(g, budget)?.len();
    Ok(omega.div_ceil(d + 1).max(1))
}

/// A `d`-regular graph is its own single color class. `None` when `g` is not
/// `d`-regular.
pub fn chi_regular_trivial(g: &Graph, d: usize) -> Option<SolveOutcome> {
    g.is_regular(d)
        .then(|| SolveOutcome::finite(Coloring::monochromatic(g.n())))
}

fn finite(k: usize, assign: Vec<usize>) -> SolveOutcome {
    SolveOutcome::finite(Coloring::new(k, assign).expect("closed-form witness is in range"))
}

/// A family with a closed form, as detected in an arbitrary labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognized {
    /// `order[i]` is the vertex at canonical position `i`.
    Cycle {
        order: Vec<usize>,
    },
    /// Hub first, then the rim in cyclic order.
    Wheel {
        order: Vec<usize>,
    },
    Complete,
    Tree,
}

impl Recognized {
    pub fn name(&self) -> &'static str {
        match self {
            Recognized::Cycle { .. } => "cycle",
            Recognized::Wheel { .. } => "wheel",
            Recognized::Complete => "complete",
            Recognized::Tree => "tree",
        }
    }
}

/// Detects cycles, complete graphs, trees and wheels (checked in that
/// order, so `K4` counts as complete).
pub fn recognize_family(g: &Graph) -> Option<Recognized> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    if n >= 3 && g.is_connected() && g.is_regular(2) {
        return Some(Recognized::Cycle {
            order: cyclic_order(g, &(0..n).collect::<Vec<_>>())?,
        });
    }
    if g.m() == n * (n - 1) / 2 {
        return Some(Recognized::Complete);
    }
    if g.m() + 1 == n && g.is_connected() {
        return Some(Recognized::Tree);
    }
    if n >= 5 && g.m() == 2 * (n - 1) {
        let hub = (0..n).find(|&v| g.degree(v) == n - 1)?;
        let rim: Vec<usize> = (0..n).filter(|&v| v != hub).collect();
        let ring = g.induced(&rim);
        if ring.is_regular(2) && ring.is_connected() {
            let local = cyclic_order(&ring, &(0..rim.len()).collect::<Vec<_>>())?;
            let mut order = vec![hub];
            order.extend(local.into_iter().map(|i| rim[i]));
            return Some(Recognized::Wheel { order });
        }
    }
    None
}

/// Traversal order of a connected 2-regular graph starting at the lowest
/// vertex.
fn cyclic_order(g: &Graph, vertices: &[usize]) -> Option<Vec<usize>> {
    let start = *vertices.first()?;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start)[0];
    while cur != start {
        order.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&u| u != prev)?;
        prev = cur;
        cur = next;
    }
    (order.len() == vertices.len()).then_some(order)
}

/// Closed-form answer for a recognized family, with the witness expressed
/// in `g`'s own labelling. `None` when no closed form applies.
pub fn solve_recognized(g: &Graph, d: usize) -> Option<(Recognized, SolveOutcome)> {
    let family = recognize_family(g)?;
    let relabel = |out: SolveOutcome, order: &[usize]| match out {
        SolveOutcome::Finite { chi, witness } => {
            let mut assign = vec![0; order.len()];
            for (i, &v) in order.iter().enumerate() {
                assign[v] = witness.color(i);
            }
            SolveOutcome::finite(Coloring::new(chi, assign).expect("same palette"))
        }
        SolveOutcome::Infeasible => SolveOutcome::Infeasible,
    };
    let out = match &family {
        Recognized::Cycle { order } => relabel(chi_cycle(order.len(), d).ok()?, order),
        Recognized::Wheel { order } => relabel(chi_wheel(order.len(), d).ok()?, order),
        Recognized::Complete => chi_complete(g.n(), d).ok()?,
        Recognized::Tree => chi_tree(g, d).ok()?,
    };
    Some((family, out))
}
