//! Named graph families.
//!
//! Canonical numbering:
//!
//! * `cycle(n)`: vertices `0..n` in cyclic order.
//! * `path(n)`: vertices `0..n` in path order.
//! * `wheel(n)`: hub `0`, rim `1..n` in cyclic order.
//! * `star(n)`: center `0`, leaves `1..n`.
//! * `petersen`: outer 5-cycle `0..5`, spoke `i`–`i+5`, inner pentagram
//!   `5+i`–`5+(i+2) mod 5`.
//! * Products with `K2`: vertex `(i, j)` is `i * m + j`.
//! * `tightness_gadget`: triangle `0, 1, 2` with pendant `i + 3` on vertex `i`.

use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

/// A family descriptor accepted by [`generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Wheel(usize),
    Star(usize),
    Petersen,
    CartesianK2Complete(usize),
    CategoricalK2Complete(usize),
    TightnessGadget,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Path(n) => write!(f, "path({n})"),
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::Wheel(n) => write!(f, "wheel({n})"),
            Family::Star(n) => write!(f, "star({n})"),
            Family::Petersen => write!(f, "petersen"),
            Family::CartesianK2Complete(m) => write!(f, "cartesian_k2_complete({m})"),
            Family::CategoricalK2Complete(m) => write!(f, "categorical_k2_complete({m})"),
            Family::TightnessGadget => write!(f, "tightness_gadget"),
        }
    }
}

fn require(ok: bool, family: &str, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::BadParameter(format!("{family} requires {what}")))
    }
}

pub fn generate(family: Family) -> Result<Graph> {
    match family {
        Family::Cycle(n) => cycle(n),
        Family::Path(n) => path(n),
        Family::Complete(n) => complete(n),
        Family::Wheel(n) => wheel(n),
        Family::Star(n) => star(n),
        Family::Petersen => Ok(petersen()),
        Family::CartesianK2Complete(m) => cartesian_k2_complete(m),
        Family::CategoricalK2Complete(m) => categorical_k2_complete(m),
        Family::TightnessGadget => Ok(tightness_gadget()),
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle", "n >= 3")?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, "path", "n >= 1")?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, "complete", "n >= 1")?;
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn wheel(n: usize) -> Result<Graph> {
    require(n >= 4, "wheel", "n >= 4")?;
    let rim = n - 1;
    let spokes = (1..n).map(|v| (0, v));
    let ring = (0..rim).map(move |i| (1 + i, 1 + (i + 1) % rim));
    Graph::new(n, spokes.chain(ring))
}

pub fn star(n: usize) -> Result<Graph> {
    require(n >= 1, "star", "n >= 1")?;
    Graph::new(n, (1..n).map(|v| (0, v)))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("static edge list")
}

/// `K2 □ Km`: two copies of `Km` joined by a perfect matching.
pub fn cartesian_k2_complete(m: usize) -> Result<Graph> {
    require(m >= 1, "cartesian_k2_complete", "m >= 1")?;
    let mut edges = Vec::new();
    for i in 0..2 {
        for a in 0..m {
            for b in a + 1..m {
                edges.push((i * m + a, i * m + b));
            }
        }
    }
    edges.extend((0..m).map(|j| (j, m + j)));
    Graph::new(2 * m, edges)
}

/// `K2 × Km`: `(0, a)` adjacent to `(1, b)` exactly when `a != b`.
pub fn categorical_k2_complete(m: usize) -> Result<Graph> {
    require(m >= 2, "categorical_k2_complete", "m >= 2")?;
    let edges = (0..m).flat_map(|a| (0..m).filter(move |&b| a != b).map(move |b| (a, m + b)));
    Graph::new(2 * m, edges)
}

/// Triangle with one pendant vertex on each corner.
pub fn tightness_gadget() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).expect("static edge list")
}

/// Two triangles sharing vertex `2`.
pub fn bowtie() -> Graph {
    Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).expect("static edge list")
}

/// Path on `0..path_len` plus the universal vertex `path_len`.
pub fn fan(path_len: usize) -> Result<Graph> {
    let p = path(path_len)?;
    let hub = path_len;
    Graph::new(
        path_len + 1,
        p.edges()
            .chain((0..path_len).map(|v| (v, hub)))
            .collect::<Vec<_>>(),
    )
}

/// Octahedron `K_{2,2,2}`: antipodal pairs are `(i, i + 3)`.
pub fn octahedron() -> Graph {
    let edges = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|&(u, v)| v != u + 3);
    Graph::new(6, edges).expect("static edge list")
}

/// Icosahedron: poles `0` and `11`, upper ring `1..=5`, lower ring `6..=10`.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let lo = 6 + i;
        let lo_next = 6 + (i + 1) % 5;
        edges.extend([
            (0, up),
            (up, up_next),
            (up, lo),
            (up, lo_next),
            (lo, lo_next),
            (lo, 11),
        ]);
    }
    Graph::new(12, edges).expect("static edge list")
}
