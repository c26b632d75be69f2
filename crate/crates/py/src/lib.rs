//! Python bindings: graphs, automorphism orders, the genus bound, and the
//! candidate constructions. Exact integers cross the boundary as decimal
//! strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use cubic_aut::arith;
use cubic_aut::autgroup;
use cubic_aut::candidates;
use cubic_aut::enumerate;
use cubic_aut::graph;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A simple undirected graph.
#[pyclass(name = "Graph", skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: graph::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::Graph::new(n, &edges).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::parse_graph6(text).map_err(err)?,
        })
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges().to_vec()
    }

    fn genus(&self) -> i64 {
        self.inner.genus()
    }

    fn is_cubic(&self) -> bool {
        self.inner.is_cubic()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn graph6(&self) -> PyResult<String> {
        graph::emit_graph6(&self.inner).map_err(err)
    }

    fn dot(&self) -> String {
        graph::emit_dot(&self.inner)
    }

    /// |Aut G| as a decimal string.
    fn aut_order(&self) -> String {
        autgroup::automorphism_group(&self.inner).order.to_str_radix(10)
    }

    /// Size of a minimal edge orbit.
    fn m(&self) -> usize {
        autgroup::m_of(&self.inner)
    }

    /// max_e |Aut'_e| as a decimal string.
    fn pi(&self) -> String {
        autgroup::pi_of(&self.inner).to_str_radix(10)
    }

    fn is_isomorphic_to(&self, other: &PyGraph) -> bool {
        autgroup::are_isomorphic(&self.inner, &other.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(v={}, e={}, genus={})",
            self.inner.vertex_count(),
            self.inner.edge_count(),
            self.inner.genus()
        )
    }
}

/// l(g): minimum number of terms writing g as a sum of 2^n and 3*2^n.
#[pyfunction]
fn l(g: u64) -> PyResult<u32> {
    arith::l_of(g).map_err(err)
}

/// o(g) = g - l(g).
#[pyfunction]
fn o(g: u64) -> PyResult<u64> {
    arith::o_of(g).map_err(err)
}

/// Sharp bound on |Aut| at genus g, as a decimal string.
#[pyfunction]
fn bound(g: u64) -> PyResult<String> {
    Ok(candidates::bound(g).map_err(err)?.to_str_radix(10))
}

/// The candidate extremal graph C_g with its branch data.
#[pyfunction]
fn candidate(g: u64) -> PyResult<(PyGraph, String, String)> {
    let (graph, spec) = candidates::candidate(g).map_err(err)?;
    Ok((
        PyGraph { inner: graph },
        spec.branch.name().to_string(),
        spec.predicted_aut.to_str_radix(10),
    ))
}

/// All connected simple cubic graphs on v vertices.
#[pyfunction]
fn enumerate_cubic(v: usize) -> PyResult<Vec<PyGraph>> {
    Ok(enumerate::enumerate_cubic(v)
        .map_err(err)?
        .into_iter()
        .map(|inner| PyGraph { inner })
        .collect())
}

#[pymodule]
fn cubic_aut_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(l, m)?)?;
    m.add_function(wrap_pyfunction!(o, m)?)?;
    m.add_function(wrap_pyfunction!(bound, m)?)?;
    m.add_function(wrap_pyfunction!(candidate, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_cubic, m)?)?;
    Ok(())
}
