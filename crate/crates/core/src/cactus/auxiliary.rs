use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{block_cut_tree, Graph};

/// The cycle structure of a cactus together with the auxiliary graph used
/// for labeling.
///
/// Cycles are indexed by their sorted vertex lists in lexicographic order,
/// so by ascending smallest vertex. Each cycle is stored in cyclic order,
/// starting at its smallest vertex and continuing towards the smaller of
/// that vertex's two cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CactusAux {
    pub n: usize,
    pub cycles: Vec<Vec<usize>>,
    /// Whether cycle `i` contains a vertex lying on no other cycle, i.e.
    /// whether `w_i` exists.
    pub has_simplicial: Vec<bool>,
    /// `v_i`–`v_j` adjacency: cycles sharing a vertex. Sorted.
    pub cycle_adj: Vec<Vec<usize>>,
    /// `U_j`: sorted indices of the cycles through original vertex `j`.
    pub cliques: Vec<Vec<usize>>,
}

/// Builds the auxiliary structure of a cactus.
pub fn cactus_preprocess(g: &Graph) -> Result<CactusAux> {
    let tree = block_cut_tree(g);
    if !tree.is_cactus() {
        return Err(Error::NotACactus);
    }
    let mut cycles: Vec<Vec<usize>> = tree
        .blocks
        .iter()
        .filter(|b| b.is_cycle())
        .map(|b| b.vertices.clone())
        .collect();
    cycles.sort();
    let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| cyclic_order(g, c)).collect();

    let mut cliques = vec![Vec::new(); g.n()];
    for (i, c) in cycles.iter().enumerate() {
        for &u in c {
            cliques[u].push(i);
        }
    }
    let has_simplicial = cycles
        .iter()
        .map(|c| c.iter().any(|&u| cliques[u].len() == 1))
        .collect();
    let mut cycle_adj = vec![Vec::new(); cycles.len()];
    for u_cycles in &cliques {
        for &a in u_cycles {
            cycle_adj[a].extend(u_cycles.iter().copied().filter(|&b| b != a));
        }
    }
    for adj in &mut cycle_adj {
        // Two cycles of a cactus share at most one vertex, so no duplicates.
        adj.sort_unstable();
    }
    Ok(CactusAux {
        n: g.n(),
        cycles,
        has_simplicial,
        cycle_adj,
        cliques,
    })
}

fn cyclic_order(g: &Graph, sorted: &[usize]) -> Vec<usize> {
    let on_cycle = |u: usize| sorted.binary_search(&u).is_ok();
    let start = sorted[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = *g
        .neighbors(start)
        .iter()
        .find(|&&u| on_cycle(u))
        .expect("cycle vertex");
    while cur != start {
        order.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&u| u != prev && on_cycle(u))
            .expect("every cycle vertex has two cycle neighbors");
        prev = cur;
        cur = next;
    }
    order
}

impl CactusAux {
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Index of `x` in [`CactusAux::graph`].
    pub fn x(&self) -> usize {
        0
    }

    /// Index of `v_i` in [`CactusAux::graph`].
    pub fn v(&self, i: usize) -> usize {
        1 + i
    }

    /// Index of `w_i` in [`CactusAux::graph`], if present. The `w` vertices
    /// follow the `v` vertices in cycle order.
    pub fn w(&self, i: usize) -> Option<usize> {
        self.has_simplicial[i].then(|| {
            1 + self.cycles.len() + self.has_simplicial[..i].iter().filter(|&&s| s).count()
        })
    }

    /// The auxiliary graph `G'` on `x`, the `v_i` and the `w_i`.
    pub fn graph(&self) -> Graph {
        let r = self.cycles.len();
        let ws = self.has_simplicial.iter().filter(|&&s| s).count();
        let mut edges = Vec::new();
        let mut next_w = 1 + r;
        for i in 0..r {
            if self.has_simplicial[i] {
                edges.push((next_w, self.v(i)));
                edges.push((next_w, self.x()));
                next_w += 1;
            }
            for &j in &self.cycle_adj[i] {
                if i < j {
                    edges.push((self.v(i), self.v(j)));
                }
            }
        }
        Graph::new(1 + r + ws, edges).expect("auxiliary edges are in range")
    }
}
