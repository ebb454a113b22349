//! Python module `gaddr`: graphs, exact inertia, closed-form spectra,
//! addressings and exact minimum biclique partitions.

use std::time::Duration;

use graph_addressing::addressing::{self, addressing_to_bicliques, verify_biclique_partition};
use graph_addressing::cli::{reproduce as run_reproduce, ClaimStatus, ReproduceOptions};
use graph_addressing::graph::{parse_graph_text, parse_spec, render_graph_text};
use graph_addressing::linalg::{self, witsenhausen_bound as wbound};
use graph_addressing::search::{min_biclique_partition as run_search, SearchConfig};
use graph_addressing::{Addressing, Biclique, Error, Graph, IntSymMatrix, Multigraph, Rational, SpectrumTable, Verification};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.numer().clone(), r.denom().clone()))
}

/// Accepts anything whose `str()` reads as an integer or `p/q`, which covers
/// `int` and `fractions.Fraction`.
fn rational_arg(value: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let text = value.str()?.to_string();
    text.trim().parse().map_err(|_| PyValueError::new_err(format!("not a rational: {text}")))
}

fn matrix_arg(rows: Vec<Vec<i64>>) -> PyResult<IntSymMatrix> {
    IntSymMatrix::from_rows(&rows).map_err(err)
}

fn inertia_tuple(i: linalg::Inertia) -> (usize, usize, usize) {
    (i.n_plus, i.n_zero, i.n_minus)
}

fn violation(v: Verification) -> Option<(usize, usize, u64, u64)> {
    match v {
        Verification::Ok => None,
        Verification::Violation { u, v, got, want } => Some((u, v, got, want)),
    }
}

fn biclique_pair(b: &Biclique) -> (Vec<usize>, Vec<usize>) {
    (b.left().to_vec(), b.right().to_vec())
}

/// A finite simple undirected graph.
#[pyclass(name = "Graph", module = "gaddr", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph(Graph);

#[pymethods]
impl PyGraph {
    /// Build from a family spec such as `"hamming:2,3"` or `"petersen"`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        parse_spec(spec).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::new(n, edges).map(PyGraph).map_err(err)
    }

    /// Parse the `n m` header plus one edge per line text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        parse_graph_text(text).map(PyGraph).map_err(err)
    }

    fn to_text(&self) -> String {
        render_graph_text(&self.0)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn diameter(&self) -> PyResult<u32> {
        self.0.diameter().map_err(err)
    }

    fn distances(&self) -> PyResult<Vec<Vec<i64>>> {
        let d = self.0.all_pairs_distances().map_err(err)?;
        Ok((0..d.order()).map(|i| d.row(i).to_vec()).collect())
    }

    /// `(n_plus, n_zero, n_minus)` of the distance matrix.
    fn distance_inertia(&self) -> PyResult<(usize, usize, usize)> {
        Ok(inertia_tuple(self.0.all_pairs_distances().map_err(err)?.inertia()))
    }

    /// Lower bound `max(n_plus, n_minus)` on the addressing length.
    fn spectral_bound(&self) -> PyResult<usize> {
        Ok(wbound(&self.0.distance_multigraph().map_err(err)?))
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, size={})", self.0.order(), self.0.size())
    }
}

/// One word over `{0, a, b}` per vertex.
#[pyclass(name = "Addressing", module = "gaddr", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyAddressing(Addressing);

#[pymethods]
impl PyAddressing {
    #[new]
    fn new(rows: Vec<String>) -> PyResult<Self> {
        Addressing::from_strs(&rows).map(PyAddressing).map_err(err)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Addressing::parse_text(text).map(PyAddressing).map_err(err)
    }

    fn to_text(&self) -> String {
        self.0.render_text()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn length(&self) -> usize {
        self.0.length()
    }

    fn rows(&self) -> Vec<String> {
        (0..self.0.order()).map(|v| self.0.row_string(v)).collect()
    }

    /// The `(left, right)` biclique of every column that has both symbols.
    fn bicliques(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        addressing_to_bicliques(&self.0).iter().map(biclique_pair).collect()
    }

    fn __repr__(&self) -> String {
        format!("Addressing(order={}, length={})", self.0.order(), self.0.length())
    }
}

/// Exact inertia of a symmetric integer matrix, optionally of `M - shift*I`.
#[pyfunction]
#[pyo3(signature = (matrix, shift=None))]
fn inertia(matrix: Vec<Vec<i64>>, shift: Option<&Bound<'_, PyAny>>) -> PyResult<(usize, usize, usize)> {
    let m = matrix_arg(matrix)?;
    Ok(inertia_tuple(match shift {
        Some(s) => m.shifted_inertia(&rational_arg(s)?),
        None => m.inertia(),
    }))
}

/// `max(n_plus, n_minus)` of a multiplicity matrix with zero diagonal.
#[pyfunction]
fn witsenhausen_bound(matrix: Vec<Vec<i64>>) -> PyResult<usize> {
    let h = Multigraph::from_matrix(&matrix_arg(matrix)?).map_err(err)?;
    Ok(wbound(&h))
}

fn spectrum_list<'py>(py: Python<'py>, table: graph_addressing::Result<SpectrumTable>) -> PyResult<Bound<'py, PyList>> {
    let table = table.map_err(err)?;
    let items = table.entries().iter().map(|(l, k)| Ok((fraction(py, l)?, *k))).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Distance spectrum of H(n, q) as `(Fraction, multiplicity)` pairs.
#[pyfunction]
fn hamming_spectrum(py: Python<'_>, n: u32, q: u32) -> PyResult<Bound<'_, PyList>> {
    spectrum_list(py, linalg::hamming_distance_spectrum(n, q))
}

#[pyfunction]
fn triangular_spectrum(py: Python<'_>, n: u32) -> PyResult<Bound<'_, PyList>> {
    spectrum_list(py, linalg::triangular_distance_spectrum(n))
}

#[pyfunction]
fn johnson_spectrum(py: Python<'_>, n: u32, m: u32) -> PyResult<Bound<'_, PyList>> {
    spectrum_list(py, linalg::johnson_distance_spectrum(n, m))
}

#[pyfunction]
fn hamming_addressing(n: usize, q: usize) -> PyResult<PyAddressing> {
    addressing::hamming_addressing(n, q).map(PyAddressing).map_err(err)
}

/// Addressing from a known construction, or `None` when the graph has none.
#[pyfunction]
fn constructive_addressing(graph: &PyGraph) -> Option<PyAddressing> {
    addressing::constructive_addressing(&graph.0).map(PyAddressing)
}

/// `None` if valid, else the first failing `(u, v, got, want)`.
#[pyfunction]
fn verify_addressing(graph: &PyGraph, addressing: &PyAddressing) -> PyResult<Option<(usize, usize, u64, u64)>> {
    addressing::verify_addressing(&graph.0, &addressing.0).map(violation).map_err(err)
}

/// `None` if the bicliques partition the distance multigraph exactly.
#[pyfunction]
fn verify_bicliques(graph: &PyGraph, parts: Vec<(Vec<usize>, Vec<usize>)>) -> PyResult<Option<(usize, usize, u64, u64)>> {
    let parts = parts.into_iter().map(|(l, r)| Biclique::new(l, r)).collect::<graph_addressing::Result<Vec<_>>>().map_err(err)?;
    let h = graph.0.distance_multigraph().map_err(err)?;
    verify_biclique_partition(&h, &parts).map(violation).map_err(err)
}

fn target_multigraph(target: &Bound<'_, PyAny>) -> PyResult<Multigraph> {
    if let Ok(g) = target.cast::<PyGraph>() {
        return g.get().0.distance_multigraph().map_err(err);
    }
    Multigraph::from_matrix(&matrix_arg(target.extract()?)?).map_err(err)
}

/// Exact minimum biclique partition of a graph's distance multigraph, or of
/// a multiplicity matrix. Returns a dict mirroring the CLI's JSON output.
#[pyfunction]
#[pyo3(signature = (target, node_budget=None, time_budget=None, upper=None, threads=1))]
fn min_biclique_partition<'py>(
    py: Python<'py>,
    target: &Bound<'py, PyAny>,
    node_budget: Option<u64>,
    time_budget: Option<f64>,
    upper: Option<usize>,
    threads: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let h = target_multigraph(target)?;
    let mut cfg = SearchConfig { initial_upper: upper, threads, ..SearchConfig::default() };
    if let Some(b) = node_budget {
        cfg.node_budget = b;
    }
    if let Some(secs) = time_budget {
        cfg.time_budget = Some(Duration::try_from_secs_f64(secs).map_err(|e| PyValueError::new_err(e.to_string()))?);
    }
    let r = py.detach(|| run_search(&h, &cfg)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("status", r.status.as_str())?;
    d.set_item("best_size", r.best_size)?;
    d.set_item("proven_lower", r.proven_lower)?;
    d.set_item("spectral_lower", r.spectral_lower)?;
    d.set_item("nodes_explored", r.nodes_explored)?;
    d.set_item("elapsed_secs", r.elapsed.as_secs_f64())?;
    d.set_item("certificate", r.certificate.map(|c| c.iter().map(biclique_pair).collect::<Vec<_>>()))?;
    Ok(d)
}

/// Recompute the stored claims for `id`; each is a dict with `id`, `status`,
/// `expected` and `computed`.
#[pyfunction]
#[pyo3(signature = (id, n=None, q=None, m=None, search=false, seed=1))]
fn reproduce<'py>(
    py: Python<'py>,
    id: &str,
    n: Option<u32>,
    q: Option<u32>,
    m: Option<u32>,
    search: bool,
    seed: u64,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let opts = ReproduceOptions { n, q, m, search, seed, ..ReproduceOptions::default() };
    let claims = py.detach(|| run_reproduce(id, &opts)).map_err(err)?;
    claims
        .into_iter()
        .map(|c| {
            let d = PyDict::new(py);
            d.set_item("id", c.id)?;
            let status = match c.status {
                ClaimStatus::Pass => "PASS",
                ClaimStatus::Fail => "FAIL",
                ClaimStatus::KnownDiscrepancy => "KNOWN-DISCREPANCY",
            };
            d.set_item("status", status)?;
            d.set_item("expected", c.expected)?;
            d.set_item("computed", c.computed)?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
fn gaddr(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyAddressing>()?;
    m.add_function(wrap_pyfunction!(inertia, m)?)?;
    m.add_function(wrap_pyfunction!(witsenhausen_bound, m)?)?;
    m.add_function(wrap_pyfunction!(hamming_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(triangular_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(johnson_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(hamming_addressing, m)?)?;
    m.add_function(wrap_pyfunction!(constructive_addressing, m)?)?;
    m.add_function(wrap_pyfunction!(verify_addressing, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bicliques, m)?)?;
    m.add_function(wrap_pyfunction!(min_biclique_partition, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce, m)?)?;
    Ok(())
}
