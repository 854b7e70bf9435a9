//! Python bindings. Graphs are immutable `Graph` objects, colorings are
//! plain lists of ints, and solvers return an `Outcome`.

use exdef_core::cactus::{self, Chi1Outcome};
use exdef_core::coloring::{self, Budget, DEFAULT_NODE_BUDGET};
use exdef_core::graph::generate;
use exdef_core::graph::io::{read_graph, write_graph, Format};
use exdef_core::graph::random;
use exdef_core::reductions::{self, NaeFormula, ReductionMap, SourceSolution, VariableCycle};
use exdef_core::{blockgraph, closed_form, oracle, Coloring, Error, SolveOutcome};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(
    exdef,
    BudgetExceeded,
    PyException,
    "The search node budget ran out."
);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded(_) => BudgetExceeded::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn budget(limit: Option<u64>) -> Budget {
    Budget::new(limit.unwrap_or(DEFAULT_NODE_BUDGET))
}

fn parse_format(format: &str) -> PyResult<Format> {
    match format {
        "edgelist" => Ok(Format::EdgeList),
        "dimacs" => Ok(Format::Dimacs),
        other => Err(PyValueError::new_err(format!("unknown format {other:?}"))),
    }
}

fn coloring_from(colors: Vec<usize>) -> PyResult<Coloring> {
    let k = colors.iter().max().map_or(0, |&c| c + 1);
    Coloring::new(k, colors).map_err(to_py)
}

/// An undirected simple graph on vertices `0..n`.
#[pyclass(frozen, skip_from_py_object, module = "exdef")]
#[derive(Clone)]
pub struct Graph {
    inner: exdef_core::Graph,
}

impl From<exdef_core::Graph> for Graph {
    fn from(inner: exdef_core::Graph) -> Self {
        Graph { inner }
    }
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        exdef_core::Graph::new(n, edges)
            .map(Graph::from)
            .map_err(to_py)
    }

    #[staticmethod]
    #[pyo3(signature = (text, format="edgelist"))]
    fn parse(text: &str, format: &str) -> PyResult<Self> {
        read_graph(text, parse_format(format)?)
            .map(Graph::from)
            .map_err(to_py)
    }

    #[pyo3(signature = (format="edgelist"))]
    fn to_text(&self, format: &str) -> PyResult<String> {
        Ok(write_graph(&self.inner, parse_format(format)?))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.inner.degree(v))
    }

    fn disjoint_union(&self, other: &Graph) -> Graph {
        self.inner.disjoint_union(&other.inner).into()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __eq__(&self, other: &Graph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Graph> {
        generate::cycle(n).map(Graph::from).map_err(to_py)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Graph> {
        generate::path(n).map(Graph::from).map_err(to_py)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Graph> {
        generate::complete(n).map(Graph::from).map_err(to_py)
    }

    /// Wheel of order `n`: a hub joined to a cycle on `n - 1` vertices.
    #[staticmethod]
    fn wheel(n: usize) -> PyResult<Graph> {
        generate::wheel(n).map(Graph::from).map_err(to_py)
    }

    #[staticmethod]
    fn petersen() -> Graph {
        generate::petersen().into()
    }

    #[staticmethod]
    fn tightness_gadget() -> Graph {
        generate::tightness_gadget().into()
    }

    #[staticmethod]
    fn bowtie() -> Graph {
        generate::bowtie().into()
    }

    #[staticmethod]
    fn octahedron() -> Graph {
        generate::octahedron().into()
    }

    #[staticmethod]
    #[pyo3(signature = (n, bridge_prob=0.2, max_cycle=6, seed=0))]
    fn random_cactus(n: usize, bridge_prob: f64, max_cycle: usize, seed: u64) -> PyResult<Graph> {
        if max_cycle < 3 || !(0.0..=1.0).contains(&bridge_prob) {
            return Err(PyValueError::new_err(
                "need max_cycle >= 3 and bridge_prob in [0, 1]",
            ));
        }
        Ok(random::random_cactus(n, bridge_prob, max_cycle, seed).into())
    }

    #[staticmethod]
    #[pyo3(signature = (n, max_block=4, seed=0))]
    fn random_block_graph(n: usize, max_block: usize, seed: u64) -> PyResult<Graph> {
        if max_block < 2 {
            return Err(PyValueError::new_err("need max_block >= 2"));
        }
        Ok(random::random_block_graph(n, max_block, seed).into())
    }

    #[staticmethod]
    #[pyo3(signature = (n, p, seed=0))]
    fn gnp(n: usize, p: f64, seed: u64) -> PyResult<Graph> {
        if !(0.0..=1.0).contains(&p) {
            return Err(PyValueError::new_err("need p in [0, 1]"));
        }
        Ok(random::gnp(n, p, seed).into())
    }
}

impl Graph {
    fn check(&self, v: usize) -> PyResult<()> {
        if v < self.inner.n() {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!(
                "vertex {v} out of range for n = {}",
                self.inner.n()
            )))
        }
    }
}

/// Result of computing `chi_d^=`: `chi` is `None` when no exact coloring
/// exists, and `bounds` is set instead when only an interval is known.
#[pyclass(frozen, get_all, module = "exdef")]
pub struct Outcome {
    chi: Option<usize>,
    witness: Option<Vec<usize>>,
    bounds: Option<(usize, usize)>,
}

#[pymethods]
impl Outcome {
    #[getter]
    fn feasible(&self) -> bool {
        self.chi.is_some() || self.bounds.is_some()
    }

    fn __repr__(&self) -> String {
        match (self.chi, self.bounds) {
            (Some(chi), _) => format!("Outcome(chi={chi})"),
            (None, Some((lo, hi))) => format!("Outcome(bounds=({lo}, {hi}))"),
            (None, None) => "Outcome(infeasible)".into(),
        }
    }
}

impl From<SolveOutcome> for Outcome {
    fn from(o: SolveOutcome) -> Self {
        Outcome {
            chi: o.chi(),
            witness: o.witness().map(|c| c.colors().to_vec()),
            bounds: None,
        }
    }
}

/// Smallest `k` with an exact `(k, d)`-coloring, by exhaustive search.
#[pyfunction]
#[pyo3(signature = (g, d, budget=None, threads=1))]
fn brute_chi(
    py: Python<'_>,
    g: &Graph,
    d: usize,
    budget: Option<u64>,
    threads: usize,
) -> PyResult<Outcome> {
    let b = self::budget(budget);
    let n = g.inner.n().max(1);
    py.detach(|| oracle::brute_chi_with(&g.inner, d, n, &b, threads.max(1)))
        .map(Outcome::from)
        .map_err(to_py)
}

/// An exact `(k, d)`-coloring, or `None` when there is none.
#[pyfunction]
#[pyo3(signature = (g, k, d, budget=None))]
fn brute_solve(
    py: Python<'_>,
    g: &Graph,
    k: usize,
    d: usize,
    budget: Option<u64>,
) -> PyResult<Option<Vec<usize>>> {
    let b = self::budget(budget);
    py.detach(|| oracle::brute_solve(&g.inner, k, d, &b))
        .map(|c| c.map(|c| c.colors().to_vec()))
        .map_err(to_py)
}

/// `chi_d^=` as the minimum chromatic number over quotients by partitions
/// into connected `d`-regular parts.
#[pyfunction]
#[pyo3(signature = (g, d, budget=None))]
fn chi_via_quotients(
    py: Python<'_>,
    g: &Graph,
    d: usize,
    budget: Option<u64>,
) -> PyResult<Outcome> {
    let b = self::budget(budget);
    py.detach(|| oracle::chi_via_quotients(&g.inner, d, &b))
        .map(Outcome::from)
        .map_err(to_py)
}

#[pyfunction]
fn chi_cycle(n: usize, d: usize) -> PyResult<Outcome> {
    closed_form::chi_cycle(n, d)
        .map(Outcome::from)
        .map_err(to_py)
}

#[pyfunction]
fn chi_wheel(n: usize, d: usize) -> PyResult<Outcome> {
    closed_form::chi_wheel(n, d)
        .map(Outcome::from)
        .map_err(to_py)
}

#[pyfunction]
fn chi_complete(n: usize, d: usize) -> PyResult<Outcome> {
    closed_form::chi_complete(n, d)
        .map(Outcome::from)
        .map_err(to_py)
}

#[pyfunction]
fn chi_tree(g: &Graph, d: usize) -> PyResult<Outcome> {
    closed_form::chi_tree(&g.inner, d)
        .map(Outcome::from)
        .map_err(to_py)
}

/// `chi_2^=` of a cactus.
#[pyfunction]
fn cactus_chi2(g: &Graph) -> PyResult<Outcome> {
    cactus::cactus_chi2(&g.inner)
        .map(Outcome::from)
        .map_err(to_py)
}

/// `chi_1^=` of a cactus; may return bounds `(2, 3)` on very large inputs.
#[pyfunction]
fn cactus_chi1(g: &Graph) -> PyResult<Outcome> {
    match cactus::cactus_chi1(&g.inner).map_err(to_py)? {
        Chi1Outcome::Solved(o) => Ok(o.into()),
        Chi1Outcome::Bounded {
            lower,
            upper,
            witness,
        } => Ok(Outcome {
            chi: None,
            witness: Some(witness.colors().to_vec()),
            bounds: Some((lower, upper)),
        }),
    }
}

/// The two-color `{M, P}` labeling as `(labels, None)` with `"M"`, `"P"` or
/// `"-"` per cycle, or `(None, reason)` when it is rejected.
#[pyfunction]
fn cactus_labels(g: &Graph) -> PyResult<(Option<Vec<String>>, Option<String>)> {
    let aux = cactus::cactus_preprocess(&g.inner).map_err(to_py)?;
    Ok(match cactus::cactus_label(&aux, cactus::Palette::Two) {
        Ok(l) => (
            Some(
                l.cycles
                    .iter()
                    .map(|&x| match x {
                        cactus::Label::M => "M".to_owned(),
                        cactus::Label::P => "P".to_owned(),
                        cactus::Label::Unlabeled => "-".to_owned(),
                    })
                    .collect(),
            ),
            None,
        ),
        Err(r) => (None, Some(r.reason.code().to_owned())),
    })
}

/// `chi_d^=` of a block graph.
#[pyfunction]
fn blockgraph_chi(g: &Graph, d: usize) -> PyResult<Outcome> {
    blockgraph::blockgraph_chi(&g.inner, d)
        .map(Outcome::from)
        .map_err(to_py)
}

#[pyfunction]
fn is_exact_coloring(g: &Graph, colors: Vec<usize>, d: usize) -> PyResult<bool> {
    if colors.len() != g.inner.n() {
        return Ok(false);
    }
    Ok(coloring::is_exact_coloring(
        &g.inner,
        &coloring_from(colors)?,
        d,
    ))
}

/// Same-colored neighbor count per vertex.
#[pyfunction]
fn defects(g: &Graph, colors: Vec<usize>) -> PyResult<Vec<usize>> {
    coloring::defects(&g.inner, &coloring_from(colors)?).map_err(to_py)
}

/// A reduction's target graph with the JSON map needed to lift solutions.
#[pyclass(frozen, get_all, module = "exdef")]
pub struct Reduced {
    graph: Graph,
    k: usize,
    d: usize,
    map_json: String,
}

impl From<(exdef_core::Graph, ReductionMap)> for Reduced {
    fn from((g, map): (exdef_core::Graph, ReductionMap)) -> Self {
        let (k, d) = map.reduction.target_parameters();
        Reduced {
            graph: g.into(),
            k,
            d,
            map_json: map.to_json(),
        }
    }
}

#[pymethods]
impl Reduced {
    /// Source solution for a target coloring: a coloring as a list of ints,
    /// or a truth assignment as a list of bools.
    fn lift(&self, py: Python<'_>, colors: Vec<usize>) -> PyResult<Py<PyAny>> {
        let map = ReductionMap::from_json(&self.map_json).map_err(to_py)?;
        let lifted = reductions::lift_solution(&map, &coloring_from(colors)?).map_err(to_py)?;
        Ok(match lifted {
            SourceSolution::Coloring(c) => {
                c.colors().to_vec().into_pyobject(py)?.into_any().unbind()
            }
            SourceSolution::Assignment(a) => a.into_pyobject(py)?.into_any().unbind(),
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Reduced(n={}, m={}, k={}, d={})",
            self.graph.inner.n(),
            self.graph.inner.m(),
            self.k,
            self.d
        )
    }
}

#[pyfunction]
fn reduce_coloring_to_exact(g: &Graph, k: usize, d: usize) -> PyResult<Reduced> {
    reductions::reduce_coloring_to_exact(&g.inner, k, d)
        .map(Reduced::from)
        .map_err(to_py)
}

#[pyfunction]
fn reduce_planar_variant(g: &Graph, d: usize) -> PyResult<Reduced> {
    reductions::reduce_planar_variant(&g.inner, d)
        .map(Reduced::from)
        .map_err(to_py)
}

#[pyfunction]
fn reduce_increment_defect(g: &Graph, d: usize) -> PyResult<Reduced> {
    reductions::reduce_increment_defect(&g.inner, d)
        .map(Reduced::from)
        .map_err(to_py)
}

/// Monotone NAE-3SAT with 0-based variables to exact `(2, 2)`-coloring.
#[pyfunction]
#[pyo3(signature = (num_vars, clauses, c3=false, strict=false))]
fn reduce_nae3sat(
    num_vars: usize,
    clauses: Vec<[usize; 3]>,
    c3: bool,
    strict: bool,
) -> PyResult<Reduced> {
    let f = NaeFormula::new(num_vars, clauses, strict).map_err(to_py)?;
    let cycle = if c3 {
        VariableCycle::C3
    } else {
        VariableCycle::C4
    };
    Ok(reductions::reduce_nae3sat(&f, cycle).into())
}

#[pymodule]
fn exdef(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add_class::<Graph>()?;
    m.add_class::<Outcome>()?;
    m.add_class::<Reduced>()?;
    m.add_function(wrap_pyfunction!(brute_chi, m)?)?;
    m.add_function(wrap_pyfunction!(brute_solve, m)?)?;
    m.add_function(wrap_pyfunction!(chi_via_quotients, m)?)?;
    m.add_function(wrap_pyfunction!(chi_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(chi_wheel, m)?)?;
    m.add_function(wrap_pyfunction!(chi_complete, m)?)?;
    m.add_function(wrap_pyfunction!(chi_tree, m)?)?;
    m.add_function(wrap_pyfunction!(cactus_chi2, m)?)?;
    m.add_function(wrap_pyfunction!(cactus_chi1, m)?)?;
    m.add_function(wrap_pyfunction!(cactus_labels, m)?)?;
    m.add_function(wrap_pyfunction!(blockgraph_chi, m)?)?;
    m.add_function(wrap_pyfunction!(is_exact_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(defects, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_coloring_to_exact, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_planar_variant, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_increment_defect, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_nae3sat, m)?)?;
    Ok(())
}
