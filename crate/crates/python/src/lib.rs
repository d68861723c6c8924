//! Python bindings: graphs, intersection arrays, spectra, the spectral
//! predicates, graph analysis and the array scanner.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use sdrg_core::scan::{open_question_report, scan_with, Tag};
use sdrg_core::{self as core, Precision};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn precision(epsilon: f64) -> PyResult<Precision> {
    Precision::new(epsilon).map_err(value_error)
}

fn fields_to_dict<'py, K: AsRef<str>>(
    py: Python<'py>,
    fields: &[(K, String)],
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (k, v) in fields {
        d.set_item(k.as_ref(), v)?;
    }
    Ok(d)
}

#[pyclass(frozen, name = "Graph", module = "sdrg")]
struct PyGraph {
    inner: core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        core::Graph::from_edges(n, edges)
            .map(|inner| Self { inner })
            .map_err(value_error)
    }

    /// Parses the `n m` / `u v` edge-list format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::Graph::parse(text)
            .map(|inner| Self { inner })
            .map_err(value_error)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

#[pyclass(frozen, name = "IntersectionArray", module = "sdrg")]
struct PyArray {
    inner: core::IntersectionArray,
}

#[pymethods]
impl PyArray {
    /// Accepts either `"b0 b1 b2 b3 ; c1 c2 c3 c4"` or two lists `b`, `c`.
    #[new]
    #[pyo3(signature = (b, c=None))]
    fn new(b: &Bound<'_, PyAny>, c: Option<[u64; 4]>) -> PyResult<Self> {
        let inner = match c {
            None => b.extract::<String>()?.parse().map_err(value_error)?,
            Some(c) => core::IntersectionArray::new(b.extract()?, c).map_err(value_error)?,
        };
        Ok(Self { inner })
    }

    #[getter]
    fn b(&self) -> [u64; 4] {
        self.inner.b()
    }

    #[getter]
    fn c(&self) -> [u64; 4] {
        self.inner.c()
    }

    #[getter]
    fn a(&self) -> [u64; 5] {
        self.inner.a()
    }

    #[getter]
    fn k(&self) -> u64 {
        self.inner.k()
    }

    #[getter]
    fn distance_sizes(&self) -> [u64; 5] {
        self.inner.distance_sizes()
    }

    #[getter]
    fn vertex_count(&self) -> u64 {
        self.inner.vertex_count()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("IntersectionArray('{}')", self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

#[pyclass(frozen, name = "Spectrum", module = "sdrg")]
struct PySpectrum {
    inner: core::Spectrum,
}

#[pymethods]
impl PySpectrum {
    #[new]
    #[pyo3(signature = (array, epsilon=1e-12))]
    fn new(array: &PyArray, epsilon: f64) -> PyResult<Self> {
        core::Spectrum::from_array_with(&array.inner, &precision(epsilon)?)
            .map(|inner| Self { inner })
            .map_err(value_error)
    }

    /// Midpoint approximations of the eigenvalues, largest first.
    #[getter]
    fn eigenvalues(&self) -> Vec<f64> {
        self.inner.eigenvalues().iter().map(|e| e.to_f64()).collect()
    }

    /// Exact integers or `[lo,hi]~approx` isolating intervals.
    #[getter]
    fn eigenvalue_strings(&self) -> Vec<String> {
        self.inner.eigenvalues().iter().map(ToString::to_string).collect()
    }

    #[getter]
    fn multiplicities(&self) -> [u64; 5] {
        self.inner.multiplicities()
    }

    #[getter]
    fn pi_products(&self) -> Vec<f64> {
        self.inner.pi_products().iter().map(|p| p.to_f64()).collect()
    }

    fn report(&self) -> String {
        self.inner.report_lines()
    }
}

#[pyfunction]
fn hypercube(d: u32) -> PyResult<PyGraph> {
    core::hypercube(d).map(|inner| PyGraph { inner }).map_err(value_error)
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<PyGraph> {
    core::cycle(n).map(|inner| PyGraph { inner }).map_err(value_error)
}

#[pyfunction]
fn kneser(v: u32, t: u32) -> PyResult<PyGraph> {
    core::kneser(v, t).map(|inner| PyGraph { inner }).map_err(value_error)
}

/// Hadamard graph of the Sylvester matrix of order `2^t`.
#[pyfunction]
fn hadamard_graph(t: u32) -> PyResult<PyGraph> {
    let h = core::hadamard_matrix_sylvester(t).map_err(value_error)?;
    core::hadamard_graph(&h)
        .map(|inner| PyGraph { inner })
        .map_err(value_error)
}

#[pyfunction]
fn net_array(m: u64, mu: u64) -> PyResult<PyArray> {
    core::net_array(m, mu)
        .map(|inner| PyArray { inner })
        .map_err(value_error)
}

#[pyfunction]
fn intersection_array(g: &PyGraph) -> PyResult<PyArray> {
    core::intersection_array(&g.inner)
        .map(|inner| PyArray { inner })
        .map_err(value_error)
}

/// `(n, k, lambda, mu)`, or `ValueError` with a witness.
#[pyfunction]
fn srg_params(g: &PyGraph) -> PyResult<(usize, usize, usize, usize)> {
    core::srg_params(&g.inner)
        .map(|p| (p.n, p.k, p.lambda, p.mu))
        .map_err(value_error)
}

/// `(r, fibres)`, or `ValueError` with a witness.
#[pyfunction]
fn antipodal_fibres(g: &PyGraph) -> PyResult<(usize, Vec<Vec<usize>>)> {
    core::antipodal_fibres(&g.inner)
        .map(|p| (p.r, p.fibres))
        .map_err(value_error)
}

#[pyfunction]
fn is_bipartite(g: &PyGraph) -> bool {
    core::is_bipartite(&g.inner).is_bipartite()
}

/// Analysis report as an ordered dict of strings.
#[pyfunction]
#[pyo3(signature = (g, source="graph", epsilon=1e-12))]
fn analyze<'py>(py: Python<'py>, g: &PyGraph, source: &str, epsilon: f64) -> PyResult<Bound<'py, PyDict>> {
    let report = core::analyze_with(&g.inner, source, &precision(epsilon)?);
    fields_to_dict(py, &report.fields())
}

/// Spectral predicates of an array as an ordered dict of strings.
#[pyfunction]
#[pyo3(signature = (array, epsilon=1e-12))]
fn check<'py>(py: Python<'py>, array: &PyArray, epsilon: f64) -> PyResult<Bound<'py, PyDict>> {
    let fields = core::check_fields(&array.inner, &precision(epsilon)?).map_err(value_error)?;
    fields_to_dict(py, &fields)
}

/// Record lines of a scan followed by the summary text.
#[pyfunction]
#[pyo3(signature = (k_max, n_max, witnesses_only=false, epsilon=1e-12))]
fn scan(k_max: u64, n_max: u64, witnesses_only: bool, epsilon: f64) -> PyResult<(Vec<String>, String)> {
    let records = scan_with(k_max, n_max, &precision(epsilon)?).map_err(value_error)?;
    let lines = records
        .iter()
        .filter(|r| !witnesses_only || r.tag() == Tag::SdrgNonAntipodalCandidate)
        .map(|r| r.to_line())
        .collect();
    Ok((lines, open_question_report(&records, Some((k_max, n_max)))))
}

#[pymodule]
fn sdrg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyArray>()?;
    m.add_class::<PySpectrum>()?;
    m.add_function(wrap_pyfunction!(hypercube, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(kneser, m)?)?;
    m.add_function(wrap_pyfunction!(hadamard_graph, m)?)?;
    m.add_function(wrap_pyfunction!(net_array, m)?)?;
    m.add_function(wrap_pyfunction!(intersection_array, m)?)?;
    m.add_function(wrap_pyfunction!(srg_params, m)?)?;
    m.add_function(wrap_pyfunction!(antipodal_fibres, m)?)?;
    m.add_function(wrap_pyfunction!(is_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    Ok(())
}
