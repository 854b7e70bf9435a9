use rayon::prelude::*;

use crate::coloring::{Budget, Coloring};
use crate::error::Result;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// Backtracking state for one connected component. Vertices are colored in
/// index order; vertex `i` may only take a color at most one above the
/// largest color used on `0..i`.
struct ExactSearch<'a> {
    g: &'a Graph,
    k: usize,
    d: usize,
    color: Vec<usize>,
    /// Colored neighbors sharing the vertex's color.
    same: Vec<usize>,
    /// Neighbors not yet colored.
    open: Vec<usize>,
}

impl<'a> ExactSearch<'a> {
    fn new(g: &'a Graph, k: usize, d: usize) -> Self {
        let n = g.n();
        Self {
            g,
            k,
            d,
            color: vec![NONE; n],
            same: vec![0; n],
            open: (0..n).map(|v| g.degree(v)).collect(),
        }
    }

    fn viable(&self, v: usize) -> bool {
        self.same[v] <= self.d && self.same[v] + self.open[v] >= self.d
    }

    /// Colors `v` and reports whether every affected vertex can still end
    /// with exactly `d` same-colored neighbors.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        for &u in self.g.neighbors(v) {
            self.open[u] -= 1;
            if self.color[u] == c {
                self.same[u] += 1;
                self.same[v] += 1;
            }
        }
        self.viable(v)
            && self
                .g
                .neighbors(v)
                .iter()
                .all(|&u| self.color[u] == NONE || self.viable(u))
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        for &u in self.g.neighbors(v) {
            self.open[u] += 1;
            if self.color[u] == c {
                self.same[u] -= 1;
                self.same[v] -= 1;
            }
        }
        self.color[v] = NONE;
    }

    fn run(&mut self, v: usize, used: usize, budget: &Budget) -> Result<bool> {
        if v == self.g.n() {
            return Ok(true);
        }
        budget.tick()?;
        for c in 0..self.k.min(used + 1) {
            let ok = self.assign(v, c);
            if ok && self.run(v + 1, used.max(c + 1), budget)? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }

    /// Replays a prefix of colors; false when the prefix is already dead.
    fn replay(&mut self, prefix: &[usize]) -> bool {
        prefix.iter().enumerate().all(|(v, &c)| self.assign(v, c))
    }

    /// All viable colorings of the first `depth` vertices, in lexicographic
    /// order.
    fn prefixes(&mut self, depth: usize, budget: &Budget) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.collect_prefixes(0, 0, depth, &mut stack, &mut out, budget)?;
        Ok(out)
    }

    fn collect_prefixes(
        &mut self,
        v: usize,
        used: usize,
        depth: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        budget: &Budget,
    ) -> Result<()> {
        if v == depth {
            out.push(stack.clone());
            return Ok(());
        }
        budget.tick()?;
        for c in 0..self.k.min(used + 1) {
            if self.assign(v, c) {
                stack.push(c);
                self.collect_prefixes(v + 1, used.max(c + 1), depth, stack, out, budget)?;
                stack.pop();
            }
            self.unassign(v);
        }
        Ok(())
    }
}

fn solve_component(g: &Graph, k: usize, d: usize, budget: &Budget) -> Result<Option<Vec<usize>>> {
    let mut s = ExactSearch::new(g, k, d);
    Ok(s.run(0, 0, budget)?.then_some(s.color))
}

fn solve_component_parallel(
    g: &Graph,
    k: usize,
    d: usize,
    budget: &Budget,
    threads: usize,
) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    let mut depth = 0;
    let mut prefixes = vec![Vec::new()];
    while depth < n && prefixes.len() < 8 * threads {
        depth += 1;
        prefixes = ExactSearch::new(g, k, d).prefixes(depth, budget)?;
        if prefixes.is_empty() {
            return Ok(None);
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool construction");
    pool.install(|| {
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut s = ExactSearch::new(g, k, d);
                if !s.replay(prefix) {
                    return Ok(None);
                }
                let used = prefix.iter().copied().max().map_or(0, |c| c + 1);
                Ok(s.run(prefix.len(), used, budget)?.then_some(s.color))
            })
            .find_map_first(|r: Result<Option<Vec<usize>>>| r.transpose())
            .transpose()
    })
}

/// Decides whether `g` has an exact `(k, d)`-coloring by exhaustive
/// backtracking, solving each connected component separately. On success
/// the witness is the lexicographically least one under the symmetry
/// breaking (per component).
///
/// With `threads > 1` the top of the search tree is split across a thread
/// pool; the verdict and witness are identical to the sequential run.
pub fn brute_solve_with(
    g: &Graph,
    k: usize,
    d: usize,
    budget: &Budget,
    threads: usize,
) -> Result<Option<Coloring>> {
    let mut assign = vec![0; g.n()];
    for comp in g.components() {
        let h = g.induced(&comp);
        let found = if threads > 1 {
            solve_component_parallel(&h, k, d, budget, threads)?
        } else {
            solve_component(&h, k, d, budget)?
        };
        let Some(colors) = found else {
            return Ok(None);
        };
        for (i, &v) in comp.iter().enumerate() {
            assign[v] = colors[i];
        }
    }
    if k == 0 {
        return Ok((g.n() == 0).then(|| Coloring::new(0, Vec::new()).expect("empty coloring")));
    }
    Ok(Some(Coloring::new(k, assign)?))
}

pub fn brute_solve(g: &Graph, k: usize, d: usize, budget: &Budget) -> Result<Option<Coloring>> {
    brute_solve_with(g, k, d, budget, 1)
}
