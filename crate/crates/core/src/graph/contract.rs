use super::Graph;
use crate::error::{Error, Result};

/// Quotient graph with one vertex per class of `parts` (in the given order).
/// Two classes are adjacent when some edge crosses between them. Every class
/// must be non-empty and induce a connected subgraph.
pub fn contract_partition(g: &Graph, parts: &[Vec<usize>]) -> Result<Graph> {
    let n = g.n();
    let mut class_of = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::NotAPartition(format!("class {i} is empty")));
        }
        for &v in part {
            if v >= n {
                return Err(Error::OutOfRange { vertex: v, n });
            }
            if class_of[v] != usize::MAX {
                return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
            }
            class_of[v] = i;
        }
    }
    if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
        return Err(Error::NotAPartition(format!("vertex {v} is not covered")));
    }
    for (i, part) in parts.iter().enumerate() {
        if !g.induces_connected(part) {
            return Err(Error::DisconnectedClass(i));
        }
    }
    let edges = g
        .edges()
        .map(|(u, v)| (class_of[u], class_of[v]))
        .filter(|(a, b)| a != b);
    Graph::new(parts.len(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::*;

    #[test]
    fn c4_matching_gives_k2() {
        let q = contract_partition(&cycle(4).unwrap(), &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(q, complete(2).unwrap());
    }

    #[test]
    fn singletons_are_identity() {
        let g = petersen();
        let parts: Vec<_> = (0..g.n()).map(|v| vec![v]).collect();
        assert_eq!(contract_partition(&g, &parts).unwrap(), g);
    }

    #[test]
    fn tightness_gadget_contracts_to_triangle() {
        let parts = [vec![0, 3], vec![1, 4], vec![2, 5]];
        let q = contract_partition(&tightness_gadget(), &parts).unwrap();
        assert_eq!(q, complete(3).unwrap());
    }

    #[test]
    fn rejects_bad_partitions() {
        let g = cycle(4).unwrap();
        assert!(matches!(
            contract_partition(&g, &[vec![0, 1], vec![2]]),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            contract_partition(&g, &[vec![0, 1], vec![1, 2, 3]]),
            Err(Error::NotAPartition(_))
        ));
        assert_eq!(
            contract_partition(&g, &[vec![0, 2], vec![1, 3]]),
            Err(Error::DisconnectedClass(0))
        );
    }
}
