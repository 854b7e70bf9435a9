use std::collections::VecDeque;

use super::{CactusAux, CycleLabeling, Label};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// Turns an accepted labeling into an exact `(k, 2)`-coloring.
///
/// Each component is explored breadth-first from its lowest vertex, which
/// gets color 0. Crossing an edge of an `M` cycle keeps the color. Crossing
/// an edge of a `P` cycle or a bridge takes the smallest color absent from
/// the already colored neighbors in that block; with two colors on an even
/// cycle this alternates.
pub fn cactus_extract_coloring(
    g: &Graph,
    aux: &CactusAux,
    labeling: &CycleLabeling,
    k: usize,
) -> Result<Coloring> {
    if labeling.cycles.len() != aux.cycle_count() {
        return Err(Error::IncompleteLabeling(
            labeling.cycles.len().min(aux.cycle_count()),
        ));
    }
    if let Some(i) = labeling.cycles.iter().position(|&l| l == Label::Unlabeled) {
        return Err(Error::IncompleteLabeling(i));
    }
    let edge_cycle = edge_cycles(g, aux);
    let mut color = vec![NONE; g.n()];
    let mut queue = VecDeque::new();
    for s in 0..g.n() {
        if color[s] != NONE {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for (idx, &v) in g.neighbors(u).iter().enumerate() {
                if color[v] != NONE {
                    continue;
                }
                let block = edge_cycle[u][idx];
                color[v] = if block != NONE && labeling.cycles[block] == Label::M {
                    color[u]
                } else {
                    let taken: Vec<usize> = if block == NONE {
                        vec![color[u]]
                    } else {
                        g.neighbors(v)
                            .iter()
                            .enumerate()
                            .filter(|&(i, &w)| edge_cycle[v][i] == block && color[w] != NONE)
                            .map(|(_, &w)| color[w])
                            .collect()
                    };
                    (0..)
                        .find(|c| !taken.contains(c))
                        .expect("some color is free")
                };
                if color[v] >= k {
                    return Err(Error::BadParameter(format!(
                        "labeling needs more than {k} colors"
                    )));
                }
                queue.push_back(v);
            }
        }
    }
    Coloring::new(k, color)
}

/// For every adjacency entry, the cycle containing that edge, or `NONE` for
/// a bridge.
fn edge_cycles(g: &Graph, aux: &CactusAux) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![NONE; g.degree(v)]).collect();
    for (i, cycle) in aux.cycles.iter().enumerate() {
        for (t, &a) in cycle.iter().enumerate() {
            let b = cycle[(t + 1) % cycle.len()];
            let ia = g.neighbors(a).binary_search(&b).expect("cycle edge");
            let ib = g.neighbors(b).binary_search(&a).expect("cycle edge");
            out[a][ia] = i;
            out[b][ib] = i;
        }
    }
    out
}
