//! Seeded random generators for test corpora.
//!
//! All generators use ChaCha8 so the same seed yields the same graph on
//! every platform and release.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are in range")
}

/// Connected cactus on exactly `n` vertices, grown from vertex `0` by
/// attaching blocks at uniformly chosen existing vertices. Each block is a
/// bridge with probability `bridge_prob`, otherwise a cycle of length
/// `3..=max_cycle` (truncated to the vertices still missing).
pub fn random_cactus(n: usize, bridge_prob: f64, max_cycle: usize, seed: u64) -> Graph {
    assert!(max_cycle >= 3, "max_cycle must be at least 3");
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    let mut size = n.min(1);
    while size < n {
        let anchor = rng.random_range(0..size);
        let missing = n - size;
        if missing < 2 || rng.random_bool(bridge_prob) {
            edges.push((anchor, size));
            size += 1;
            continue;
        }
        let len = rng.random_range(3..=max_cycle.min(missing + 1));
        let mut prev = anchor;
        for _ in 1..len {
            edges.push((prev, size));
            prev = size;
            size += 1;
        }
        edges.push((prev, anchor));
    }
    Graph::new(n, edges).expect("generated edges are in range")
}

/// Connected block graph on exactly `n` vertices, grown by attaching
/// cliques of size `2..=max_block` at uniformly chosen existing vertices.
pub fn random_block_graph(n: usize, max_block: usize, seed: u64) -> Graph {
    assert!(max_block >= 2, "max_block must be at least 2");
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    let mut size = n.min(1);
    while size < n {
        let anchor = rng.random_range(0..size);
        let block = rng.random_range(2..=max_block.min(n - size + 1));
        let members: Vec<usize> = std::iter::once(anchor)
            .chain(size..size + block - 1)
            .collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                edges.push((u, v));
            }
        }
        size += block - 1;
    }
    Graph::new(n, edges).expect("generated edges are in range")
}

/// `g` with its vertices renamed by a uniformly random permutation.
pub fn shuffled(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut rng(seed));
    Graph::new(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v])))
        .expect("permuted edges are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::recognize;

    #[test]
    fn deterministic() {
        assert_eq!(random_cactus(30, 0.2, 6, 7), random_cactus(30, 0.2, 6, 7));
        assert_eq!(random_block_graph(30, 4, 7), random_block_graph(30, 4, 7));
        assert_eq!(gnp(12, 0.4, 3), gnp(12, 0.4, 3));
    }

    #[test]
    fn classes_hold() {
        for seed in 0..50 {
            let c = random_cactus(25, 0.3, 7, seed);
            assert_eq!(c.n(), 25);
            assert!(c.is_connected());
            assert!(recognize(&c).is_cactus);
            let b = random_block_graph(25, 5, seed);
            assert_eq!(b.n(), 25);
            assert!(b.is_connected());
            assert!(recognize(&b).is_block_graph);
            let s = shuffled(&c, seed);
            assert_eq!((s.n(), s.m()), (c.n(), c.m()));
            assert!(recognize(&s).is_cactus);
        }
    }
}
