use super::clique::degeneracy_order;
use super::{max_clique, Budget, Coloring};
use crate::error::Result;
use crate::graph::{chordal_order, Graph};

/// Exact chromatic number with an optimal proper coloring (`k` = χ).
///
/// Solved per component. Chordal components are colored greedily along a
/// maximum cardinality search order, which uses exactly ω colors. Other
/// components run iterative deepening from the clique bound up to the
/// DSATUR bound, each step an exhaustive DSATUR backtrack.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<Coloring> {
    let mut assign = vec![0; g.n()];
    let mut chi = if g.n() == 0 { 0 } else { 1 };
    for comp in g.components() {
        let sub = g.induced(&comp);
        let colors = component_chromatic(&sub, budget)?;
        chi = chi.max(colors.iter().copied().max().map_or(0, |c| c + 1));
        for (i, &v) in comp.iter().enumerate() {
            assign[v] = colors[i];
        }
    }
    Coloring::new(chi.max(1), assign)
}

fn component_chromatic(g: &Graph, budget: &Budget) -> Result<Vec<usize>> {
    if let Some(order) = chordal_order(g) {
        return Ok(greedy_in_order(g, &order));
    }
    let lower = max_clique(g, budget)?.len();
    let upper = dsatur_greedy(g);
    let upper_k = upper.iter().copied().max().map_or(0, |c| c + 1);
    for k in lower..upper_k {
        if let Some(colors) = KColoring::new(g, k).solve(budget)? {
            return Ok(colors);
        }
    }
    Ok(upper)
}

fn greedy_in_order(g: &Graph, order: &[usize]) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    let mut color = vec![NONE; g.n()];
    let mut taken = Vec::new();
    for &v in order {
        taken.clear();
        taken.extend(
            g.neighbors(v)
                .iter()
                .map(|&u| color[u])
                .filter(|&c| c != NONE),
        );
        taken.sort_unstable();
        taken.dedup();
        color[v] = taken
            .iter()
            .enumerate()
            .find(|&(i, &c)| i != c)
            .map_or(taken.len(), |(i, _)| i);
    }
    color
}

/// Greedy coloring along the reverse degeneracy order; uses at most
/// degeneracy + 1 colors (three on outerplanar graphs).
pub fn greedy_degeneracy_coloring(g: &Graph) -> Coloring {
    let mut order = degeneracy_order(g);
    order.reverse();
    let colors = greedy_in_order(g, &order);
    let k = colors.iter().copied().max().map_or(1, |c| c + 1);
    Coloring::new(k, colors).expect("greedy colors are below k")
}

fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    const NONE: usize = usize::MAX;
    let mut color = vec![NONE; n];
    let mut seen: Vec<Vec<bool>> = vec![vec![false; n + 1]; n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == NONE)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let c = (0..=n)
            .find(|&c| !seen[v][c])
            .expect("n + 1 colors always suffice");
        color[v] = c;
        for &u in g.neighbors(v) {
            if !seen[u][c] {
                seen[u][c] = true;
                sat[u] += 1;
            }
        }
    }
    color
}

/// Exhaustive DSATUR backtracking for a fixed number of colors. Colors are
/// introduced in increasing order, so the first vertex always gets color 0.
struct KColoring<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    /// `counts[v][c]`: colored neighbors of `v` with color `c`.
    counts: Vec<Vec<u32>>,
    sat: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl<'a> KColoring<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.n();
        Self {
            g,
            k,
            color: vec![NONE; n],
            counts: vec![vec![0; k]; n],
            sat: vec![0; n],
        }
    }

    fn solve(mut self, budget: &Budget) -> Result<Option<Vec<usize>>> {
        if self.k == 0 {
            return Ok((self.g.n() == 0).then(Vec::new));
        }
        Ok(self.search(0, 0, budget)?.then_some(self.color))
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for &u in self.g.neighbors(v) {
            self.counts[u][c] += 1;
            if self.counts[u][c] == 1 {
                self.sat[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = NONE;
        for &u in self.g.neighbors(v) {
            self.counts[u][c] -= 1;
            if self.counts[u][c] == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn search(&mut self, colored: usize, used: usize, budget: &Budget) -> Result<bool> {
        budget.tick()?;
        let n = self.g.n();
        if colored == n {
            return Ok(true);
        }
        let v = (0..n)
            .filter(|&v| self.color[v] == NONE)
            .max_by_key(|&v| (self.sat[v], self.g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        if self.sat[v] >= self.k {
            return Ok(false);
        }
        for c in 0..self.k.min(used + 1) {
            if self.counts[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(colored + 1, used.max(c + 1), budget)? {
                return Ok(true);
            }
            self.unassign(v, c);
        }
        Ok(false)
    }
}
