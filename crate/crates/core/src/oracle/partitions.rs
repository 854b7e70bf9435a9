use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::coloring::Budget;
use crate::error::Result;
use crate::graph::Graph;

/// A partition of the vertex set into connected `d`-regular induced
/// subgraphs. Parts are sorted and ordered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegularPartition {
    pub parts: Vec<Vec<usize>>,
    pub d: usize,
}

impl RegularPartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for part in &self.parts {
            for &v in part {
                if v >= g.n() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            if !g.induced(part).is_regular(self.d) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Visits every partition into connected `d`-regular induced subgraphs.
///
/// The lowest unassigned vertex always opens a new part, which is grown by
/// repeatedly taking its lowest vertex that still lacks neighbors inside the
/// part and branching on the smallest neighbor added next. Smaller
/// candidates are excluded once their branch is exhausted, so every part is
/// produced exactly once.
pub fn for_each_regular_partition<F>(
    g: &Graph,
    d: usize,
    budget: &Budget,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&[Vec<usize>]) -> Result<ControlFlow<()>>,
{
    let n = g.n();
    let mut e = Enumerator {
        g,
        d,
        budget,
        assigned: vec![false; n],
        in_part: vec![false; n],
        excluded: vec![false; n],
        inner_degree: vec![0; n],
        part: Vec::new(),
        parts: Vec::new(),
    };
    let _ = e.open_part(&mut visit)?;
    Ok(())
}

pub fn enumerate_regular_partitions(
    g: &Graph,
    d: usize,
    limit: usize,
    budget: &Budget,
) -> Result<Vec<RegularPartition>> {
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    for_each_regular_partition(g, d, budget, |parts| {
        out.push(RegularPartition {
            parts: parts.to_vec(),
            d,
        });
        Ok(if out.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        })
    })?;
    Ok(out)
}

struct Enumerator<'a> {
    g: &'a Graph,
    d: usize,
    budget: &'a Budget,
    assigned: Vec<bool>,
    in_part: Vec<bool>,
    excluded: Vec<bool>,
    /// Neighbors inside the part under construction.
    inner_degree: Vec<usize>,
    part: Vec<usize>,
    parts: Vec<Vec<usize>>,
}

type Flow = Result<ControlFlow<()>>;

impl Enumerator<'_> {
    fn open_part<F>(&mut self, visit: &mut F) -> Flow
    where
        F: FnMut(&[Vec<usize>]) -> Flow,
    {
        self.budget.tick()?;
        let Some(v) = (0..self.g.n()).find(|&v| !self.assigned[v]) else {
            return visit(&self.parts);
        };
        self.add(v);
        let flow = self.grow(visit);
        self.remove(v);
        flow
    }

    fn add(&mut self, w: usize) -> bool {
        self.in_part[w] = true;
        self.part.push(w);
        let mut ok = true;
        for &x in self.g.neighbors(w) {
            if self.in_part[x] {
                self.inner_degree[x] += 1;
                self.inner_degree[w] += 1;
                ok &= self.inner_degree[x] <= self.d;
            }
        }
        ok && self.inner_degree[w] <= self.d
    }

    fn remove(&mut self, w: usize) {
        for &x in self.g.neighbors(w) {
            if self.in_part[x] {
                self.inner_degree[x] -= 1;
            }
        }
        self.inner_degree[w] = 0;
        self.in_part[w] = false;
        self.part.pop();
    }

    fn grow<F>(&mut self, visit: &mut F) -> Flow
    where
        F: FnMut(&[Vec<usize>]) -> Flow,
    {
        self.budget.tick()?;
        let deficient = self
            .part
            .iter()
            .copied()
            .filter(|&u| self.inner_degree[u] < self.d)
            .min();
        let Some(u) = deficient else {
            return self.commit(visit);
        };
        let candidates: Vec<usize> = self
            .g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| !self.assigned[w] && !self.in_part[w] && !self.excluded[w])
            .collect();
        if candidates.len() < self.d - self.inner_degree[u] {
            return Ok(ControlFlow::Continue(()));
        }
        let mut flow = Ok(ControlFlow::Continue(()));
        let mut tried = 0;
        for &w in &candidates {
            if self.add(w) {
                flow = self.grow(visit);
            }
            self.remove(w);
            self.excluded[w] = true;
            tried += 1;
            if !matches!(flow, Ok(ControlFlow::Continue(()))) {
                break;
            }
        }
        for &w in &candidates[..tried] {
            self.excluded[w] = false;
        }
        flow
    }

    fn commit<F>(&mut self, visit: &mut F) -> Flow
    where
        F: FnMut(&[Vec<usize>]) -> Flow,
    {
        let mut part = self.part.clone();
        part.sort_unstable();
        // The next part starts from scratch: clear the growth state.
        let saved_excluded = std::mem::replace(&mut self.excluded, vec![false; self.g.n()]);
        let saved_part = std::mem::take(&mut self.part);
        for &v in &part {
            self.assigned[v] = true;
            self.in_part[v] = false;
        }
        let saved_degrees: Vec<usize> = part.iter().map(|&v| self.inner_degree[v]).collect();
        for &v in &part {
            self.inner_degree[v] = 0;
        }
        self.parts.push(part);

        let flow = self.open_part(visit);

        let part = self.parts.pop().expect("part pushed above");
        for (i, &v) in part.iter().enumerate() {
            self.assigned[v] = false;
            self.in_part[v] = true;
            self.inner_degree[v] = saved_degrees[i];
        }
        self.part = saved_part;
        self.excluded = saved_excluded;
        flow
    }
}
