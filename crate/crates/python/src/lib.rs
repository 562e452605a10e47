//! Python bindings for `stepcomp`, importable as `pystepcomp`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use stepcomp::io::{
    emit_digraph, emit_graph, emit_partitioned, export_dot, export_graph_dot, parse_digraph, parse_graph, ParsedDigraph,
};
use stepcomp::oracle::{self, BruteForceOptions, DEFAULT_EDGE_CAP};
use stepcomp::{Competitiveness, Construction, PartitionSpec, PartitionedDigraph, SeedId, StepPair, WitnessClause};

fn err(e: stepcomp::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn steps(i: usize, j: usize) -> PyResult<StepPair> {
    StepPair::new(i, j).map_err(err)
}

fn partition(sizes: Vec<usize>) -> PyResult<PartitionSpec> {
    PartitionSpec::new(sizes).map_err(err)
}

/// A digraph without loops or 2-cycles, optionally carrying the partition
/// of the complete multipartite graph it orients.
#[pyclass(name = "Digraph", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyDigraph {
    inner: stepcomp::Digraph,
    partition: Option<PartitionSpec>,
}

impl PyDigraph {
    fn plain(inner: stepcomp::Digraph) -> Self {
        PyDigraph { inner, partition: None }
    }

    fn from_partitioned(p: PartitionedDigraph) -> Self {
        let partition = Some(p.partition().clone());
        PyDigraph { inner: p.into_digraph(), partition }
    }
}

#[pymethods]
impl PyDigraph {
    #[new]
    fn new(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        stepcomp::Digraph::from_arcs(n, arcs).map(PyDigraph::plain).map_err(err)
    }

    /// Parses the arc-list text format (`digraph n` or `kpartite sizes...`).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(match parse_digraph(text).map_err(err)? {
            ParsedDigraph::Plain(d) => PyDigraph::plain(d),
            ParsedDigraph::Partitioned(p) => PyDigraph::from_partitioned(p),
        })
    }

    fn emit(&self) -> PyResult<String> {
        match &self.partition {
            None => Ok(emit_digraph(&self.inner)),
            Some(p) => {
                PartitionedDigraph::new(self.inner.clone(), p.clone()).map(|pd| emit_partitioned(&pd)).map_err(err)
            }
        }
    }

    fn dot(&self) -> String {
        export_dot(&self.inner, self.partition.as_ref())
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn arc_count(&self) -> usize {
        self.inner.arc_count()
    }

    /// Part sizes when this digraph orients a complete multipartite graph.
    #[getter]
    fn partition(&self) -> Option<Vec<usize>> {
        self.partition.as_ref().map(|p| p.sizes().to_vec())
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().collect()
    }

    fn has_arc(&self, u: usize, v: usize) -> bool {
        self.inner.has_arc(u, v)
    }

    fn out_neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(v).map_err(err)?;
        Ok(self.inner.out_neighbors(v).collect())
    }

    fn in_neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(v).map_err(err)?;
        Ok(self.inner.in_neighbors(v).collect())
    }

    fn out_degree(&self, v: usize) -> PyResult<usize> {
        self.inner.check_vertex(v).map_err(err)?;
        Ok(self.inner.out_degree(v))
    }

    fn in_degree(&self, v: usize) -> PyResult<usize> {
        self.inner.check_vertex(v).map_err(err)?;
        Ok(self.inner.in_degree(v))
    }

    /// Removes every arc at `v`; indices are unchanged.
    fn delete_vertex(&self, v: usize) -> PyResult<Self> {
        self.inner.delete_vertex(v).map(PyDigraph::plain).map_err(err)
    }

    /// Shortest distances from `source`, `None` beyond `bound` or unreachable.
    fn bounded_distance(&self, source: usize, bound: usize) -> PyResult<Vec<Option<usize>>> {
        Ok(self.inner.bounded_distance(source, bound).map_err(err)?.as_slice().to_vec())
    }

    fn underlying_graph(&self) -> PyGraph {
        PyGraph { inner: self.inner.underlying_graph() }
    }

    fn __repr__(&self) -> String {
        format!("Digraph(n={}, arcs={})", self.inner.vertex_count(), self.inner.arc_count())
    }
}

/// A simple undirected graph.
#[pyclass(name = "Graph", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyGraph {
    inner: stepcomp::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        stepcomp::Graph::from_edges(n, edges).map(|inner| PyGraph { inner }).map_err(err)
    }

    #[staticmethod]
    fn complete_multipartite(sizes: Vec<usize>) -> PyResult<Self> {
        Ok(PyGraph { inner: partition(sizes)?.complete_graph() })
    }

    /// Parses `graph n` / `edge u v` text, or a digraph file's underlying graph.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_graph(text).map(|inner| PyGraph { inner }).map_err(err)
    }

    fn emit(&self) -> String {
        emit_graph(&self.inner)
    }

    fn dot(&self) -> String {
        export_graph_dot(&self.inner)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.vertex_count(), self.inner.edge_count())
    }
}

/// Outcome of `decide`.
#[pyclass(name = "Verdict", frozen, get_all)]
struct PyVerdict {
    /// One of `orientable`, `not_orientable`, `unsupported`.
    status: &'static str,
    clause: Option<&'static str>,
    seed: Option<String>,
    text: String,
}

#[pymethods]
impl PyVerdict {
    #[getter]
    fn orientable(&self) -> bool {
        self.status == "orientable"
    }

    fn __str__(&self) -> String {
        self.text.clone()
    }

    fn __repr__(&self) -> String {
        format!("Verdict({:?})", self.text)
    }
}

/// Common out-neighbour certifying that `u` and `v` compete, as
/// `(w, d(u,w), d(v,w), clause)`, or `None`.
#[pyfunction]
fn ij_compete(
    d: &PyDigraph,
    u: usize,
    v: usize,
    i: usize,
    j: usize,
) -> PyResult<Option<(usize, usize, usize, &'static str)>> {
    let witness = stepcomp::ij_compete(&d.inner, u, v, steps(i, j)?).map_err(err)?;
    Ok(witness.map(|w| {
        let clause = match w.clause {
            WitnessClause::Direct => "direct",
            WitnessClause::Swapped => "swapped",
        };
        (w.w, w.len_from_u, w.len_from_v, clause)
    }))
}

#[pyfunction]
fn competes(d: &PyDigraph, u: usize, v: usize, i: usize, j: usize) -> PyResult<bool> {
    stepcomp::competes(&d.inner, u, v, steps(i, j)?).map_err(err)
}

#[pyfunction]
fn competition_graph(d: &PyDigraph, i: usize, j: usize) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: stepcomp::competition_graph(&d.inner, steps(i, j)?) })
}

#[pyfunction]
fn is_competitive(d: &PyDigraph, i: usize, j: usize) -> PyResult<bool> {
    Ok(stepcomp::is_competitive(&d.inner, steps(i, j)?).map_err(err)?.is_competitive())
}

/// The first pair (in lexicographic order) that fails to compete, if any.
#[pyfunction]
fn failing_pair(d: &PyDigraph, i: usize, j: usize) -> PyResult<Option<(usize, usize)>> {
    Ok(match stepcomp::is_competitive(&d.inner, steps(i, j)?).map_err(err)? {
        Competitiveness::Competitive => None,
        Competitiveness::FailingPair(u, v) => Some((u, v)),
    })
}

/// `(number, description, passed, counterexample)`.
type ConditionRow = (usize, &'static str, bool, Option<String>);

#[pyfunction]
fn check_necessary(g: &PyGraph, i: usize, j: usize) -> PyResult<Vec<ConditionRow>> {
    let report = stepcomp::check_necessary(&g.inner, steps(i, j)?).map_err(err)?;
    Ok(report
        .outcomes()
        .iter()
        .map(|(c, outcome)| (c.number(), c.description(), outcome.is_none(), outcome.as_ref().map(ToString::to_string)))
        .collect())
}

#[pyfunction]
fn decide(sizes: Vec<usize>, i: usize, j: usize) -> PyResult<PyVerdict> {
    let verdict = stepcomp::decide(&partition(sizes)?, steps(i, j)?).map_err(err)?;
    let text = verdict.to_string();
    Ok(match verdict {
        stepcomp::Verdict::Orientable { clause, plan } => {
            PyVerdict { status: "orientable", clause: Some(clause.tag()), seed: Some(plan.seed.to_string()), text }
        }
        stepcomp::Verdict::NotOrientable { clause } => {
            PyVerdict { status: "not_orientable", clause: Some(clause.tag()), seed: None, text }
        }
        stepcomp::Verdict::Unsupported => PyVerdict { status: "unsupported", clause: None, seed: None, text },
    })
}

/// A verified competitive orientation of `K_sizes`, or `None` when none exists.
/// Raises `ValueError` for steps (1,1).
#[pyfunction]
fn construct(sizes: Vec<usize>, i: usize, j: usize) -> PyResult<Option<PyDigraph>> {
    match stepcomp::construct(&partition(sizes)?, steps(i, j)?).map_err(err)? {
        Construction::Built { orientation, .. } => Ok(Some(PyDigraph::from_partitioned(orientation))),
        Construction::NotOrientable { .. } => Ok(None),
        Construction::Unsupported => Err(PyValueError::new_err("steps (1,1) are not covered")),
    }
}

/// A seed digraph by name: `D1` to `D10`, or `T<k>` for k >= 5.
#[pyfunction]
fn seed(name: &str) -> PyResult<PyDigraph> {
    let id: SeedId = name.parse().map_err(err)?;
    stepcomp::seed(id).map(PyDigraph::from_partitioned).map_err(err)
}

#[allow(clippy::too_many_arguments)]
#[pyfunction]
#[pyo3(signature = (g, i, j, *, cap = DEFAULT_EDGE_CAP, count = false, jobs = 1, audit = false))]
fn brute_force_orientable<'py>(
    py: Python<'py>,
    g: &PyGraph,
    i: usize,
    j: usize,
    cap: usize,
    count: bool,
    jobs: usize,
    audit: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let opts = BruteForceOptions { cap, count, jobs: jobs.max(1), audit };
    let st = steps(i, j)?;
    let r = py.detach(|| oracle::brute_force_orientable(&g.inner, st, &opts)).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("orientable", r.orientable)?;
    out.set_item("witness_mask", r.witness_mask)?;
    out.set_item("competitive_count", r.competitive_count)?;
    out.set_item("orientations_checked", r.orientations_checked)?;
    out.set_item(
        "quick_reject",
        r.quick_reject.map(|rep| rep.failed().iter().map(|c| c.number()).collect::<Vec<_>>()),
    )?;
    out.set_item("elapsed_seconds", r.elapsed.as_secs_f64())?;
    Ok(out)
}

/// Each unordered pair gets an arc with probability `p`, in a uniformly random direction.
#[pyfunction]
fn random_digraph(n: usize, p: f64, seed: u64) -> PyResult<PyDigraph> {
    oracle::random_digraph(n, p, seed).map(PyDigraph::plain).map_err(err)
}

#[pymodule]
fn pystepcomp(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDigraph>()?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(ij_compete, m)?)?;
    m.add_function(wrap_pyfunction!(competes, m)?)?;
    m.add_function(wrap_pyfunction!(competition_graph, m)?)?;
    m.add_function(wrap_pyfunction!(is_competitive, m)?)?;
    m.add_function(wrap_pyfunction!(failing_pair, m)?)?;
    m.add_function(wrap_pyfunction!(check_necessary, m)?)?;
    m.add_function(wrap_pyfunction!(decide, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(seed, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_orientable, m)?)?;
    m.add_function(wrap_pyfunction!(random_digraph, m)?)?;
    Ok(())
}
