use super::Budget;
use crate::error::Result;
use crate::graph::{chordal_order, Graph};

/// A maximum clique, sorted. Chordal graphs take the linear path through a
/// perfect elimination ordering; other graphs use branch and bound over a
/// degeneracy ordering.
pub fn max_clique(g: &Graph, budget: &Budget) -> Result<Vec<usize>> {
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    if let Some(order) = chordal_order(g) {
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let best = order
            .iter()
            .map(|&v| {
                let mut c: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| pos[u] < pos[v])
                    .collect();
                c.push(v);
                c
            })
            .max_by_key(Vec::len)
            .expect("graph is non-empty");
        let mut best = best;
        best.sort_unstable();
        return Ok(best);
    }

    let order = degeneracy_order(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut best = vec![order[0]];
    let mut current = Vec::new();
    for &v in &order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] > pos[v])
            .collect();
        if later.len() < best.len() {
            continue;
        }
        current.push(v);
        expand(g, &mut current, later, &mut best, budget)?;
        current.pop();
    }
    best.sort_unstable();
    Ok(best)
}

fn expand(
    g: &Graph,
    current: &mut Vec<usize>,
    mut candidates: Vec<usize>,
    best: &mut Vec<usize>,
    budget: &Budget,
) -> Result<()> {
    budget.tick()?;
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return Ok(());
    }
    while let Some(u) = candidates.pop() {
        if current.len() + candidates.len() < best.len() {
            return Ok(());
        }
        let next: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&w| g.has_edge(u, w))
            .collect();
        current.push(u);
        expand(g, current, next, best, budget)?;
        current.pop();
    }
    if current.len() > best.len() {
        *best = current.clone();
    }
    Ok(())
}

/// Repeatedly removes a vertex of minimum remaining degree.
pub(crate) fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
    for v in (0..n).rev() {
        buckets[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut low = 0;
    while order.len() < n {
        let v = loop {
            while buckets[low].is_empty() {
                low += 1;
            }
            let v = buckets[low].pop().expect("bucket is non-empty");
            if !removed[v] && deg[v] == low {
                break v;
            }
        };
        removed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
                buckets[deg[u]].push(u);
                low = low.min(deg[u]);
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::*;
    use proptest::prelude::*;

    fn brute_clique_number(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|mask| {
                (0..n).all(|u| {
                    mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || g.has_edge(u, v))
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn known_values() {
        let b = Budget::default();
        assert_eq!(max_clique(&complete(7).unwrap(), &b).unwrap().len(), 7);
        assert_eq!(max_clique(&petersen(), &b).unwrap().len(), 2);
        assert_eq!(max_clique(&wheel(6).unwrap(), &b).unwrap().len(), 3);
        assert_eq!(max_clique(&octahedron(), &b).unwrap().len(), 3);
        assert_eq!(max_clique(&Graph::empty(3), &b).unwrap().len(), 1);
    }

    proptest! {
        #[test]
        fn matches_subset_enumeration(n in 1usize..12, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = crate::graph::random::gnp(n, p, seed);
            let c = max_clique(&g, &Budget::default()).unwrap();
            prop_assert_eq!(c.len(), brute_clique_number(&g));
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    prop_assert!(g.has_edge(u, v));
                }
            }
        }
    }
}
