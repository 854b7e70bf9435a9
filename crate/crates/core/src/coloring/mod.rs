//! Colorings and the exactness check that defines the problem.

mod budget;
mod chromatic;
mod clique;
pub mod io;

pub use budget::{Budget, DEFAULT_NODE_BUDGET};
pub use chromatic::{chromatic_number, greedy_degeneracy_coloring};
pub use clique::max_clique;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Assignment of colors `0..k` to vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    k: usize,
    assign: Vec<usize>,
}

impl Coloring {
    pub fn new(k: usize, assign: Vec<usize>) -> Result<Self> {
        if let Some((vertex, &color)) = assign.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(Error::ColorOutOfRange { vertex, color, k });
        }
        Ok(Self { k, assign })
    }

    /// All vertices colored `0`, with a palette of one.
    pub fn monochromatic(n: usize) -> Self {
        Self {
            k: 1,
            assign: vec![0; n],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.assign
    }

    pub fn color(&self, v: usize) -> usize {
        self.assign[v]
    }

    pub fn len(&self) -> usize {
        self.assign.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assign.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut seen = vec![false; self.k];
        self.assign.iter().for_each(|&c| seen[c] = true);
        seen.into_iter().filter(|&s| s).count()
    }

    /// Same assignment with a larger palette.
    pub fn with_k(mut self, k: usize) -> Result<Self> {
        if let Some((vertex, &color)) = self.assign.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(Error::ColorOutOfRange { vertex, color, k });
        }
        self.k = k;
        Ok(self)
    }

    /// Restriction to `vertices`, in the given order.
    pub fn restrict(&self, vertices: impl IntoIterator<Item = usize>) -> Coloring {
        Coloring {
            k: self.k,
            assign: vertices.into_iter().map(|v| self.assign[v]).collect(),
        }
    }

    /// Color classes, indexed by color; unused colors give empty classes.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.assign.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// Exact defective chromatic number, `Infeasible` standing for infinity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolveOutcome {
    Finite { chi: usize, witness: Coloring },
    Infeasible,
}

impl SolveOutcome {
    pub fn finite(witness: Coloring) -> Self {
        SolveOutcome::Finite {
            chi: witness.k(),
            witness,
        }
    }

    pub fn chi(&self) -> Option<usize> {
        match self {
            SolveOutcome::Finite { chi, .. } => Some(*chi),
            SolveOutcome::Infeasible => None,
        }
    }

    pub fn witness(&self) -> Option<&Coloring> {
        match self {
            SolveOutcome::Finite { witness, .. } => Some(witness),
            SolveOutcome::Infeasible => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, SolveOutcome::Infeasible)
    }
}

/// For each vertex, the number of neighbors sharing its color.
pub fn defects(g: &Graph, c: &Coloring) -> Result<Vec<usize>> {
    if c.len() != g.n() {
        return Err(Error::LengthMismatch {
            coloring: c.len(),
            graph: g.n(),
        });
    }
    Ok((0..g.n())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| c.color(u) == c.color(v))
                .count()
        })
        .collect())
}

/// Whether every vertex has exactly `d` neighbors of its own color.
pub fn is_exact_coloring(g: &Graph, c: &Coloring, d: usize) -> bool {
    defects(g, c).is_ok_and(|def| def.iter().all(|&x| x == d))
}

pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    is_exact_coloring(g, c, 0)
}

/// Necessary condition for an exact coloring with defect `d`: minimum
/// degree at least `d` and every component has at least `d + 1` vertices.
pub fn feasibility_precheck(g: &Graph, d: usize) -> bool {
    if g.min_degree().is_some_and(|delta| d > delta) {
        return false;
    }
    g.components().iter().all(|c| c.len() > d)
}
