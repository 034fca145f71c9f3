//! Python bindings. Vertex indices are 0-based on this side; edges are `(u, w)`
//! pairs and arcs `(a, b)` pairs.

use extendix_core::certificate::{self, Certificate, Claim};
use extendix_core::connectivity;
use extendix_core::correspondence;
use extendix_core::extendability::{self, PieceKind};
use extendix_core::format::{self, Instance};
use extendix_core::graph::{BipartiteGraph, Digraph, Edge, ZeroOneMatrix};
use extendix_core::matching::{self, Matching};
use extendix_core::matrix;
use extendix_core::search;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pairs(edges: &[Edge]) -> Vec<(usize, usize)> {
    edges.iter().map(|e| (e.u, e.w)).collect()
}

#[pyclass(name = "BipartiteGraph", frozen)]
struct PyBipartite {
    inner: BipartiteGraph,
}

impl PyBipartite {
    fn matching(&self, matching: Option<Vec<(usize, usize)>>) -> PyResult<Matching> {
        match matching {
            Some(m) => Matching::perfect(&self.inner, m.into_iter().map(|(u, w)| Edge::new(u, w))).map_err(value_error),
            None => matching::first_perfect_matching(&self.inner).ok_or_else(|| value_error("graph has no perfect matching")),
        }
    }
}

#[pymethods]
impl PyBipartite {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = BipartiteGraph::new(n, edges.into_iter().map(|(u, w)| Edge::new(u, w))).map_err(value_error)?;
        Ok(PyBipartite { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().map(|e| (e.u, e.w)).collect()
    }

    fn perfect_matching(&self) -> Option<Vec<(usize, usize)>> {
        matching::first_perfect_matching(&self.inner).map(|m| pairs(m.edges()))
    }

    fn count_perfect_matchings(&self) -> PyResult<u64> {
        matching::count_perfect_matchings(&self.inner).map_err(value_error)
    }

    fn is_k_extendable(&self, k: usize) -> PyResult<bool> {
        Ok(extendability::is_k_extendable(&self.inner, k).map_err(value_error)?.holds)
    }

    fn max_extendability(&self) -> usize {
        extendability::max_extendability(&self.inner)
    }

    fn is_minimal_k_extendable(&self, k: usize) -> PyResult<bool> {
        Ok(extendability::is_minimal_k_extendable(&self.inner, k).map_err(value_error)?.is_minimal())
    }

    /// `D(G, M)` for the given perfect matching, or the first one.
    #[pyo3(signature = (matching=None))]
    fn digraph(&self, matching: Option<Vec<(usize, usize)>>) -> PyResult<PyDigraph> {
        let m = self.matching(matching)?;
        let (d, _) = correspondence::digraph_of(&self.inner, &m).map_err(value_error)?;
        Ok(PyDigraph { inner: d })
    }

    fn reduced_adjacency(&self) -> PyMatrix {
        PyMatrix { inner: correspondence::reduced_adjacency(&self.inner) }
    }

    /// Pieces as `(kind, u_vertices, w_vertices, edges)` with kind `elementary` or
    /// `fixed_double`.
    fn elementary_components(&self) -> PyResult<Vec<(String, Vec<usize>, Vec<usize>, Vec<(usize, usize)>)>> {
        let map = extendability::elementary_components(&self.inner).map_err(value_error)?;
        Ok(map
            .pieces
            .iter()
            .map(|p| {
                let kind = match p.kind {
                    PieceKind::Elementary => "elementary",
                    PieceKind::FixedDouble => "fixed_double",
                };
                (kind.to_string(), p.u.clone(), p.w.clone(), pairs(&p.edges))
            })
            .collect())
    }

    fn to_text(&self) -> String {
        format::write_instance(&Instance::Bipartite(self.inner.clone()))
    }

    fn __repr__(&self) -> String {
        format!("BipartiteGraph(n={}, edges={})", self.inner.n(), self.inner.edge_count())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

#[pyclass(name = "Digraph", frozen)]
struct PyDigraph {
    inner: Digraph,
}

#[pymethods]
impl PyDigraph {
    #[new]
    fn new(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyDigraph { inner: Digraph::loop_free(n, arcs).map_err(value_error)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().collect()
    }

    fn is_strong(&self) -> bool {
        connectivity::is_strong(&self.inner)
    }

    fn strong_components(&self) -> Vec<Vec<usize>> {
        connectivity::strong_components(&self.inner)
    }

    fn vertex_connectivity(&self) -> usize {
        connectivity::vertex_connectivity(&self.inner)
    }

    fn is_k_strong(&self, k: usize) -> bool {
        connectivity::is_k_strong(&self.inner, k).holds
    }

    fn minimum_separator(&self) -> Option<Vec<usize>> {
        connectivity::minimum_separator(&self.inner)
    }

    fn menger_paths(&self, s: usize, t: usize, k: usize) -> PyResult<Vec<Vec<usize>>> {
        Ok(connectivity::menger_paths(&self.inner, s, t, k).map_err(value_error)?.paths)
    }

    fn ear_decomposition(&self) -> PyResult<Vec<Vec<usize>>> {
        let dec = connectivity::ear_decomposition_digraph(&self.inner, None).map_err(value_error)?;
        Ok(dec.ears.into_iter().map(|e| e.vertices).collect())
    }

    fn is_minimal_k_strong(&self, k: usize) -> bool {
        connectivity::is_minimal_k_strong(&self.inner, k).is_minimal()
    }

    /// `B(D)`, whose canonical matching `{(i, i)}` maps back to `D`.
    fn bipartite(&self) -> PyResult<PyBipartite> {
        let (g, _, _) = correspondence::bipartite_of_digraph(&self.inner).map_err(value_error)?;
        Ok(PyBipartite { inner: g })
    }

    fn to_text(&self) -> String {
        format::write_instance(&Instance::Digraph(self.inner.clone()))
    }

    fn __repr__(&self) -> String {
        format!("Digraph(n={}, arcs={})", self.inner.n(), self.inner.arc_count())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

#[pyclass(name = "Matrix", frozen)]
struct PyMatrix {
    inner: ZeroOneMatrix,
}

#[pymethods]
impl PyMatrix {
    #[new]
    fn new(rows: Vec<Vec<u8>>) -> PyResult<Self> {
        Ok(PyMatrix { inner: ZeroOneMatrix::from_rows(&rows).map_err(value_error)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn rows(&self) -> Vec<Vec<u32>> {
        self.inner.rows().into_iter().map(|r| r.into_iter().map(u32::from).collect()).collect()
    }

    fn is_reducible(&self) -> bool {
        matrix::is_reducible(&self.inner).holds
    }

    fn is_k_reducible(&self, k: usize) -> PyResult<bool> {
        Ok(matrix::is_k_reducible(&self.inner, k).map_err(value_error)?.holds)
    }

    fn is_partly_decomposable(&self) -> bool {
        matrix::is_partly_decomposable(&self.inner).holds
    }

    fn is_k_partly_decomposable(&self, k: usize) -> PyResult<bool> {
        Ok(matrix::is_k_partly_decomposable(&self.inner, k).map_err(value_error)?.holds)
    }

    fn count_nonzero_diagonals(&self) -> Option<u64> {
        matrix::count_nonzero_diagonals(&self.inner)
    }

    fn bipartite(&self) -> PyBipartite {
        PyBipartite { inner: correspondence::bipartite_of_matrix(&self.inner) }
    }

    /// `D(A)`, loops included for nonzero diagonal entries.
    fn digraph(&self) -> PyDigraph {
        PyDigraph { inner: self.inner.digraph() }
    }

    fn to_text(&self) -> String {
        format::write_instance(&Instance::Matrix(self.inner.clone()))
    }

    fn __repr__(&self) -> String {
        format!("Matrix(n={})", self.inner.n())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

fn wrap(py: Python<'_>, instance: Instance) -> PyResult<Py<PyAny>> {
    Ok(match instance {
        Instance::Bipartite(g) => Bound::new(py, PyBipartite { inner: g })?.into_any().unbind(),
        Instance::Digraph(d) => Bound::new(py, PyDigraph { inner: d })?.into_any().unbind(),
        Instance::Matrix(a) => Bound::new(py, PyMatrix { inner: a })?.into_any().unbind(),
    })
}

/// Reads a `bg`, `dg` or `mat` file body.
#[pyfunction]
fn parse(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    wrap(py, format::parse(text).map_err(value_error)?)
}

/// Certificate text for `claim` (`k-extendable`, `k-strong`, `k-indecomposable` or
/// `k-irreducible`) on an instance given as file text.
#[pyfunction]
fn certify(text: &str, claim: &str, k: usize) -> PyResult<String> {
    let instance = format::parse(text).map_err(value_error)?;
    let claim: Claim = claim.parse().map_err(value_error)?;
    Ok(certificate::certify(&instance, claim, k).map_err(value_error)?.to_string())
}

/// `(valid, verdict_holds)`; malformed text raises.
#[pyfunction]
fn verify(text: &str) -> PyResult<(bool, bool)> {
    let cert: Certificate = text.parse().map_err(value_error)?;
    Ok((certificate::verify(&cert).is_ok(), cert.holds))
}

#[pyfunction]
fn minimal_k_strong(n_max: usize, k: usize) -> PyResult<Vec<PyDigraph>> {
    let found = search::minimal_k_strong(n_max, k).map_err(value_error)?;
    Ok(found.into_iter().map(|e| PyDigraph { inner: e.digraph }).collect())
}

#[pyfunction]
fn minimal_k_extendable(n_max: usize, k: usize) -> PyResult<Vec<PyBipartite>> {
    let found = search::minimal_k_extendable(n_max, k).map_err(value_error)?;
    Ok(found.into_iter().map(|e| PyBipartite { inner: e.graph }).collect())
}

/// Minimal strong digraphs whose bipartite graph is not minimal 1-extendable, at the
/// smallest order where one exists.
#[pyfunction]
fn minimality_counterexample(n_max: usize) -> PyResult<Vec<PyDigraph>> {
    let found = search::minimality_counterexample(n_max).map_err(value_error)?;
    Ok(found.into_iter().map(|e| PyDigraph { inner: e.digraph }).collect())
}

#[pymodule]
#[pyo3(name = "extendix")]
fn extendix_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBipartite>()?;
    m.add_class::<PyDigraph>()?;
    m.add_class::<PyMatrix>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_k_strong, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_k_extendable, m)?)?;
    m.add_function(wrap_pyfunction!(minimality_counterexample, m)?)?;
    Ok(())
}
