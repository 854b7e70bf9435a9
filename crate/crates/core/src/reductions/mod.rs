//! Hardness gadgets with solution lifting.
//!
//! Each construction returns the target graph and a [`ReductionMap`]
//! recording where every target vertex came from, so a coloring of the
//! target can be pulled back to the source and checked there. Wherever a
//! construction is free to pick a vertex or edge, it picks the lowest index.
//!
//! Numbering: the source vertices keep their indices `0..n` and gadget
//! vertices follow, gadget by gadget in source-vertex order. The formula
//! reduction puts the six vertices of clause `j` at `6j..6j+6` (literal
//! positions first, then the pair, then the apex) and the cycle of variable
//! `i` after all clauses, with its labeled vertex first.

mod formula;

use serde::{Deserialize, Serialize};

pub use formula::NaeFormula;

use crate::coloring::{is_exact_coloring, is_proper, Coloring};
use crate::error::{Error, Result};
use crate::graph::generate::{complete, icosahedron, octahedron};
use crate::graph::Graph;

/// What produced a target vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// A vertex of the source graph.
    Original { vertex: usize },
    /// Vertex `role` of the gadget attached to source vertex `owner`; role 0
    /// is the vertex identified with `owner` and never appears here.
    Gadget { owner: usize, role: usize },
    /// A vertex of the gadget for clause `clause`.
    Clause { clause: usize, role: ClauseRole },
    /// Position `position` on the cycle of variable `variable`; position 0
    /// is the labeled vertex.
    Variable { variable: usize, position: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseRole {
    /// The triangle vertex carrying the clause's literal at this position.
    Literal(usize),
    /// One end of the edge joined to the triangle.
    Pair(usize),
    /// The single vertex joined to the triangle.
    Apex,
}

/// Cycle length used for variables in the formula reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariableCycle {
    #[default]
    C4,
    C3,
}

impl VariableCycle {
    pub fn order(self) -> usize {
        match self {
            VariableCycle::C4 => 4,
            VariableCycle::C3 => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reduction", rename_all = "snake_case")]
pub enum Reduction {
    /// Proper `k`-coloring to exact `(k, d)`-coloring via `K_{d+1}` gadgets.
    ColoringToExact { k: usize, d: usize },
    /// Proper 3-coloring of a 4-regular graph to exact `(3, d)`-coloring via
    /// planar `d`-regular gadgets.
    Planar { d: usize },
    /// Exact `(2, d)` to exact `(2, d + 2)`.
    IncrementDefect { d: usize },
    /// Monotone NAE-3SAT to exact `(2, 2)`-coloring.
    Nae3Sat { cycle: VariableCycle },
}

impl Reduction {
    /// Colors and defect of the target instance.
    pub fn target_parameters(&self) -> (usize, usize) {
        match *self {
            Reduction::ColoringToExact { k, d } => (k, d),
            Reduction::Planar { d } => (3, d),
            Reduction::IncrementDefect { d } => (2, d + 2),
            Reduction::Nae3Sat { .. } => (2, 2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SourceInstance {
    Graph {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
    Formula(NaeFormula),
}

/// How a reduction's target relates to its source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionMap {
    pub reduction: Reduction,
    pub source: SourceInstance,
    /// One record per target vertex.
    pub provenance: Vec<Provenance>,
}

/// A source-side answer recovered from a target coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceSolution {
    Coloring(Coloring),
    Assignment(Vec<bool>),
}

fn graph_source(g: &Graph) -> SourceInstance {
    SourceInstance::Graph {
        n: g.n(),
        edges: g.edges().collect(),
    }
}

/// Identifies every vertex `v` of `g` with vertex 0 of its own copy of
/// `gadget`.
fn attach(g: &Graph, gadget: &Graph) -> (Graph, Vec<Provenance>) {
    let n = g.n();
    let extra = gadget.n() - 1;
    let mut provenance: Vec<Provenance> = (0..n)
        .map(|vertex| Provenance::Original { vertex })
        .collect();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for v in 0..n {
        let base = n + v * extra;
        let at = |role: usize| if role == 0 { v } else { base + role - 1 };
        edges.extend(gadget.edges().map(|(a, b)| (at(a), at(b))));
        provenance.extend((1..gadget.n()).map(|role| Provenance::Gadget { owner: v, role }));
    }
    let target = Graph::new(n + n * extra, edges).expect("gadget edges are in range");
    (target, provenance)
}

/// Attaches a `K_{d+1}` at every vertex: `g` is `k`-colorable exactly when
/// the result has an exact `(k, d)`-coloring.
pub fn reduce_coloring_to_exact(g: &Graph, k: usize, d: usize) -> Result<(Graph, ReductionMap)> {
    if k < 3 || d < 1 {
        return Err(Error::BadParameter(format!(
            "requires k >= 3 and d >= 1, got k = {k}, d = {d}"
        )));
    }
    let (target, provenance) = attach(g, &complete(d + 1)?);
    let map = ReductionMap {
        reduction: Reduction::ColoringToExact { k, d },
        source: graph_source(g),
        provenance,
    };
    Ok((target, map))
}

/// The planar `d`-regular gadget for `1 <= d <= 5`.
pub fn planar_gadget(d: usize) -> Result<Graph> {
    match d {
        1..=3 => complete(d + 1),
        4 => Ok(octahedron()),
        5 => Ok(icosahedron()),
        _ => Err(Error::BadParameter(format!(
            "no planar gadget for d = {d}; need 1..=5"
        ))),
    }
}

/// As [`reduce_coloring_to_exact`] with three colors, a 4-regular source and
/// planar gadgets, so planar sources give planar targets of maximum degree
/// `d + 4`.
pub fn reduce_planar_variant(g: &Graph, d: usize) -> Result<(Graph, ReductionMap)> {
    let gadget = planar_gadget(d)?;
    if !g.is_regular(4) {
        return Err(Error::NotFourRegular);
    }
    let (target, provenance) = attach(g, &gadget);
    let map = ReductionMap {
        reduction: Reduction::Planar { d },
        source: graph_source(g),
        provenance,
    };
    Ok((target, map))
}

/// Attaches to every vertex a `K_{d+3}` minus the edge between its two
/// lowest vertices, both of which are joined to the source vertex.
pub fn reduce_increment_defect(g: &Graph, d: usize) -> Result<(Graph, ReductionMap)> {
    if d < 1 {
        return Err(Error::BadParameter("requires d >= 1".into()));
    }
    let size = d + 3;
    let mut edges: Vec<(usize, usize)> = (0..size)
        .flat_map(|a| (a + 1..size).map(move |b| (a + 1, b + 1)))
        .filter(|&e| e != (1, 2))
        .collect();
    edges.extend([(0, 1), (0, 2)]);
    let gadget = Graph::new(size + 1, edges).expect("gadget edges are in range");
    let (target, provenance) = attach(g, &gadget);
    let map = ReductionMap {
        reduction: Reduction::IncrementDefect { d },
        source: graph_source(g),
        provenance,
    };
    Ok((target, map))
}

/// Clause gadgets `K3 + (K2 ∪ K1)` whose triangle vertices are joined to the
/// labeled vertex of their variable's cycle.
pub fn reduce_nae3sat(f: &NaeFormula, cycle: VariableCycle) -> (Graph, ReductionMap) {
    let m = f.clauses().len();
    let len = cycle.order();
    let n = 6 * m + len * f.num_vars();
    let var_base = |i: usize| 6 * m + len * i;
    let mut edges = Vec::new();
    let mut provenance = Vec::with_capacity(n);
    for (j, clause) in f.clauses().iter().enumerate() {
        let b = 6 * j;
        let (lits, pair, apex) = ([b, b + 1, b + 2], [b + 3, b + 4], b + 5);
        edges.extend([
            (lits[0], lits[1]),
            (lits[1], lits[2]),
            (lits[0], lits[2]),
            (pair[0], pair[1]),
        ]);
        for &l in &lits {
            edges.extend([(l, pair[0]), (l, pair[1]), (l, apex)]);
        }
        for (pos, &x) in clause.iter().enumerate() {
            edges.push((lits[pos], var_base(x)));
        }
        provenance.extend((0..3).map(|p| Provenance::Clause {
            clause: j,
            role: ClauseRole::Literal(p),
        }));
        provenance.extend((0..2).map(|p| Provenance::Clause {
            clause: j,
            role: ClauseRole::Pair(p),
        }));
        provenance.push(Provenance::Clause {
            clause: j,
            role: ClauseRole::Apex,
        });
    }
    for i in 0..f.num_vars() {
        let b = var_base(i);
        edges.extend((0..len).map(|t| (b + t, b + (t + 1) % len)));
        provenance.extend((0..len).map(|position| Provenance::Variable {
            variable: i,
            position,
        }));
    }
    let target = Graph::new(n, edges).expect("gadget edges are in range");
    let map = ReductionMap {
        reduction: Reduction::Nae3Sat { cycle },
        source: SourceInstance::Formula(f.clone()),
        provenance,
    };
    (target, map)
}

impl ReductionMap {
    pub fn source_graph(&self) -> Option<Graph> {
        match &self.source {
            SourceInstance::Graph { n, edges } => Graph::new(*n, edges.iter().copied()).ok(),
            SourceInstance::Formula(_) => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reduction maps serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }
}

/// Pulls a target coloring back to the source and checks it there.
///
/// Graph reductions restrict the coloring to the original vertices, which
/// must form a proper coloring (or an exact `(2, d)`-coloring for the defect
/// increment). The formula reduction reads each variable off the color of
/// its labeled cycle vertex, color 1 meaning true, and the result must
/// satisfy the formula. Any failure is [`Error::LiftContractViolated`].
pub fn lift_solution(map: &ReductionMap, target: &Coloring) -> Result<SourceSolution> {
    if target.len() != map.provenance.len() {
        return Err(Error::LengthMismatch {
            coloring: target.len(),
            graph: map.provenance.len(),
        });
    }
    let violated = |why: String| Err(Error::LiftContractViolated(why));
    let (k, _) = map.reduction.target_parameters();
    if target.k() > k {
        return violated(format!(
            "target coloring uses a palette of {} but the target allows {k}",
            target.k()
        ));
    }
    match (&map.reduction, &map.source) {
        (Reduction::Nae3Sat { .. }, SourceInstance::Formula(f)) => {
            let mut assignment = vec![false; f.num_vars()];
            for (v, p) in map.provenance.iter().enumerate() {
                if let Provenance::Variable {
                    variable,
                    position: 0,
                } = *p
                {
                    assignment[variable] = target.color(v) == 1;
                }
            }
            if !f.is_nae_satisfied(&assignment) {
                return violated(format!("assignment {assignment:?} is not NAE-satisfying"));
            }
            Ok(SourceSolution::Assignment(assignment))
        }
        (reduction, SourceInstance::Graph { .. }) => {
            let g = checked_source(map)?;
            let restricted = target.restrict(0..g.n());
            let ok = match *reduction {
                Reduction::IncrementDefect { d } => is_exact_coloring(&g, &restricted, d),
                _ => is_proper(&g, &restricted),
            };
            if !ok {
                return violated(format!(
                    "restriction {:?} fails the source contract",
                    restricted.colors()
                ));
            }
            Ok(SourceSolution::Coloring(restricted))
        }
        _ => violated("reduction kind does not match its source".into()),
    }
}

fn checked_source(map: &ReductionMap) -> Result<Graph> {
    map.source_graph()
        .ok_or_else(|| Error::LiftContractViolated("source graph is malformed".into()))
}
