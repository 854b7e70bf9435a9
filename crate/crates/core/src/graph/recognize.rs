use serde::Serialize;

use super::{block_cut_tree, Graph};

/// Structural class membership of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub is_tree: bool,
    pub is_cactus: bool,
    pub is_block_graph: bool,
    pub is_chordal: bool,
    pub is_disjoint_cycles: bool,
    /// The common degree when the graph is regular.
    pub regular_degree: Option<usize>,
}

impl ClassFlags {
    pub fn is_d_regular(&self, d: usize) -> bool {
        self.regular_degree == Some(d)
    }
}

pub fn recognize(g: &Graph) -> ClassFlags {
    let tree = block_cut_tree(g);
    let regular_degree = match g.min_degree() {
        Some(d) if g.is_regular(d) => Some(d),
        _ => None,
    };
    ClassFlags {
        is_tree: g.n() >= 1 && g.m() + 1 == g.n() && g.is_connected(),
        is_cactus: tree.is_cactus(),
        is_block_graph: tree.is_block_graph(),
        is_chordal: chordal_order(g).is_some(),
        is_disjoint_cycles: g.is_regular(2),
        regular_degree,
    }
}

/// Maximum cardinality search. Returns the visit order.
pub fn max_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    if n > 0 {
        buckets[0] = (0..n).rev().collect();
    }
    let mut top = 0;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = loop {
            while buckets[top].is_empty() {
                top -= 1;
            }
            let v = buckets[top].pop().expect("bucket is non-empty");
            if !visited[v] && weight[v] == top {
                break v;
            }
        };
        visited[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
                buckets[weight[u]].push(u);
                top = top.max(weight[u]);
            }
        }
    }
    order
}

/// If the graph is chordal, an order in which the earlier neighbors of every
/// vertex form a clique (the reverse of a perfect elimination ordering).
pub fn chordal_order(g: &Graph) -> Option<Vec<usize>> {
    let order = max_cardinality_search(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let earlier = g.neighbors(v).iter().copied().filter(|&u| pos[u] < pos[v]);
        let Some(parent) = earlier.clone().max_by_key(|&u| pos[u]) else {
            continue;
        };
        if earlier
            .filter(|&u| u != parent)
            .any(|u| !g.has_edge(parent, u))
        {
            return None;
        }
    }
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::*;

    #[test]
    fn cycle_six() {
        let f = recognize(&cycle(6).unwrap());
        assert!(f.is_cactus);
        assert!(!f.is_chordal);
        assert!(f.is_d_regular(2));
        assert!(f.is_disjoint_cycles);
        assert!(!f.is_tree);
    }

    #[test]
    fn complete_five() {
        let f = recognize(&complete(5).unwrap());
        assert!(f.is_block_graph);
        assert!(f.is_chordal);
        assert!(!f.is_cactus);
    }

    #[test]
    fn tightness_gadget_is_cactus_not_tree() {
        let f = recognize(&tightness_gadget());
        assert!(f.is_cactus);
        assert!(!f.is_tree);
        assert!(f.is_chordal);
    }

    #[test]
    fn trees_and_chordality() {
        assert!(recognize(&path(5).unwrap()).is_tree);
        assert!(recognize(&star(6).unwrap()).is_tree);
        assert!(!recognize(&petersen()).is_chordal);
        assert!(recognize(&fan(6).unwrap()).is_chordal);
        assert!(!recognize(&wheel(6).unwrap()).is_chordal);
        assert!(!recognize(&octahedron()).is_chordal);
    }
}
