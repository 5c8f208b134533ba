//! Python bindings: digraph and graph types, family generators, the
//! cordiality and orientability deciders, the closed-form constructions,
//! and the small algebra helpers.
//!
//! Verdicts and constructions cross into Python as plain dicts shaped like
//! the library's JSON output: `{"decision": bool, "witness": {...},
//! "search_space": int}`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use cordial::construct::ConstructionResult;
use cordial::decide::{Verdict, Witness};
use cordial::graph::Tournament;
use cordial::labelling::{LambdaTriple, Scope};

fn to_py_err(e: cordial::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_scope(s: &str) -> PyResult<Scope> {
    s.parse().map_err(|_| {
        PyValueError::new_err(format!(
            "unknown scope '{s}', expected 'nonisolated' or 'all'"
        ))
    })
}

fn lambda_dict<'py>(py: Python<'py>, l: &LambdaTriple) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("alpha", l.alpha)?;
    d.set_item("beta", l.beta)?;
    d.set_item("gamma", l.gamma)?;
    Ok(d)
}

fn witness_dict<'py>(py: Python<'py>, w: &Witness) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    let labels: Vec<u32> = w.labelling.labels().iter().map(|&b| u32::from(b)).collect();
    d.set_item("labelling", labels)?;
    if let Some(o) = &w.orientation {
        d.set_item("orientation", o.arcs().to_vec())?;
    }
    d.set_item("lambda", lambda_dict(py, &w.lambda)?)?;
    Ok(d)
}

fn verdict_dict<'py>(py: Python<'py>, v: &Verdict) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("decision", v.decision)?;
    if let Some(w) = &v.witness {
        d.set_item("witness", witness_dict(py, w)?)?;
    }
    d.set_item("search_space", v.search_space)?;
    Ok(d)
}

fn construction_dict<'py>(py: Python<'py>, r: &ConstructionResult) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("decision", r.validated)?;
    d.set_item("witness", witness_dict(py, &r.witness())?)?;
    d.set_item("search_space", 1u64)?;
    if let Some(case) = r.case {
        d.set_item("case", case.as_str())?;
    }
    Ok(d)
}

/// A digraph on vertices `0..n` with loop-free arcs; digons are allowed.
#[pyclass(frozen, name = "Digraph")]
struct PyDigraph {
    inner: cordial::Digraph,
}

#[pymethods]
impl PyDigraph {
    #[new]
    fn new(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self {
            inner: cordial::Digraph::new(n, arcs).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().to_vec()
    }

    fn arc_count(&self) -> usize {
        self.inner.arc_count()
    }

    fn reversed(&self) -> Self {
        Self {
            inner: self.inner.reversed(),
        }
    }

    fn underlying(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.underlying_graph(),
        }
    }

    fn out_degrees(&self) -> Vec<usize> {
        self.inner.out_degree_sequence()
    }

    fn canonical_hex(&self) -> PyResult<String> {
        Ok(cordial::canonical_form(&self.inner)
            .map_err(to_py_err)?
            .hex())
    }

    fn to_text(&self) -> String {
        cordial::io::digraph_to_text(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Digraph(n={}, arcs={:?})",
            self.inner.vertex_count(),
            self.inner.arcs()
        )
    }
}

/// An undirected graph on vertices `0..n`, loop-free and simple.
#[pyclass(frozen, name = "Graph")]
struct PyGraph {
    inner: cordial::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self {
            inner: cordial::Graph::new(n, edges).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Orients edge `k` low-to-high when bit `k` of `mask` is clear.
    fn orientation(&self, mask: u64) -> PyResult<PyDigraph> {
        Ok(PyDigraph {
            inner: self.inner.orientation(mask).map_err(to_py_err)?,
        })
    }

    fn canonical_hex(&self) -> PyResult<String> {
        Ok(cordial::canonical_form_graph(&self.inner)
            .map_err(to_py_err)?
            .hex())
    }

    fn to_text(&self) -> String {
        cordial::io::graph_to_text(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={:?})",
            self.inner.vertex_count(),
            self.inner.edges()
        )
    }
}

#[pyfunction]
fn gen_wheel(n: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: cordial::families::wheel(n).map_err(to_py_err)?,
    })
}

#[pyfunction]
fn gen_fan(n: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: cordial::families::fan(n).map_err(to_py_err)?,
    })
}

#[pyfunction]
fn gen_cycle(n: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: cordial::families::cycle(n).map_err(to_py_err)?,
    })
}

#[pyfunction]
fn gen_complete_graph(n: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: cordial::families::complete_graph(n).map_err(to_py_err)?,
    })
}

#[pyfunction]
fn gen_parallel_edges(n: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: cordial::families::parallel_edges(n).map_err(to_py_err)?,
    })
}

#[pyfunction]
fn gen_cycle_out_wheel(n: usize) -> PyResult<PyDigraph> {
    Ok(PyDigraph {
        inner: cordial::families::cycle_out_wheel(n).map_err(to_py_err)?,
    })
}

#[pyfunction]
fn gen_cycle_out_fan(n: usize) -> PyResult<PyDigraph> {
    Ok(PyDigraph {
        inner: cordial::families::cycle_out_fan(n).map_err(to_py_err)?,
    })
}

#[pyfunction]
#[pyo3(signature = (d, scope = "nonisolated"))]
fn is_23_cordial<'py>(py: Python<'py>, d: &PyDigraph, scope: &str) -> PyResult<Bound<'py, PyDict>> {
    let verdict = cordial::is_23_cordial(&d.inner, parse_scope(scope)?).map_err(to_py_err)?;
    verdict_dict(py, &verdict)
}

#[pyfunction]
#[pyo3(signature = (g, scope = "nonisolated"))]
fn is_23_orientable<'py>(
    py: Python<'py>,
    g: &PyGraph,
    scope: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let verdict = cordial::is_23_orientable(&g.inner, parse_scope(scope)?).map_err(to_py_err)?;
    verdict_dict(py, &verdict)
}

#[pyfunction]
#[pyo3(signature = (g, scope = "nonisolated"))]
fn brute_force_orientable_oracle(g: &PyGraph, scope: &str) -> PyResult<bool> {
    cordial::brute_force_orientable_oracle(&g.inner, parse_scope(scope)?).map_err(to_py_err)
}

#[pyfunction]
fn cordial_feasible_triple(m: u64, z: u64) -> bool {
    cordial::cordial_feasible_triple(m, z)
}

#[pyfunction]
fn max_arcs(n: usize) -> PyResult<u64> {
    cordial::max_arcs(n).map_err(to_py_err)
}

#[pyfunction]
fn tournament_census<'py>(py: Python<'py>, n: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let report = cordial::tournament_census(n).map_err(to_py_err)?;
    let mut rows = Vec::with_capacity(report.classes.len());
    for c in &report.classes {
        let d = PyDict::new(py);
        d.set_item("canonical", c.canonical.hex())?;
        d.set_item("out_degrees", c.out_degrees.clone())?;
        d.set_item("size", c.size)?;
        d.set_item("cordial", c.cordial)?;
        rows.push(d);
    }
    Ok(rows)
}

#[pyfunction]
fn wheel_case(n: usize) -> PyResult<String> {
    Ok(cordial::construct::wheel_case(n)
        .map_err(to_py_err)?
        .as_str()
        .to_string())
}

#[pyfunction]
fn orient_wheel<'py>(py: Python<'py>, n: usize) -> PyResult<Option<Bound<'py, PyDict>>> {
    match cordial::construct::orient_wheel(n).map_err(to_py_err)? {
        Some(r) => Ok(Some(construction_dict(py, &r)?)),
        None => Ok(None),
    }
}

#[pyfunction]
fn orient_fan<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let r = cordial::construct::orient_fan(n).map_err(to_py_err)?;
    construction_dict(py, &r)
}

#[pyfunction]
fn label_5_tournament<'py>(py: Python<'py>, d: &PyDigraph) -> PyResult<Bound<'py, PyDict>> {
    let t = Tournament::new(d.inner.clone()).map_err(to_py_err)?;
    let r = cordial::construct::label_5_tournament(&t).map_err(to_py_err)?;
    construction_dict(py, &r)
}

#[pyfunction]
fn zk_minus_table(k: usize) -> PyResult<Vec<Vec<u32>>> {
    let table = cordial::labelling::quasigroup::zk_minus_table(k).map_err(to_py_err)?;
    Ok(table
        .rows()
        .into_iter()
        .map(|row| row.into_iter().map(u32::from).collect())
        .collect())
}

#[pyfunction]
fn quasigroup_count(order: usize) -> PyResult<usize> {
    Ok(cordial::labelling::quasigroup::enumerate_quasigroups(order)
        .map_err(to_py_err)?
        .len())
}

#[pymodule]
fn cordial_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDigraph>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(gen_wheel, m)?)?;
    m.add_function(wrap_pyfunction!(gen_fan, m)?)?;
    m.add_function(wrap_pyfunction!(gen_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(gen_complete_graph, m)?)?;
    m.add_function(wrap_pyfunction!(gen_parallel_edges, m)?)?;
    m.add_function(wrap_pyfunction!(gen_cycle_out_wheel, m)?)?;
    m.add_function(wrap_pyfunction!(gen_cycle_out_fan, m)?)?;
    m.add_function(wrap_pyfunction!(is_23_cordial, m)?)?;
    m.add_function(wrap_pyfunction!(is_23_orientable, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_orientable_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(cordial_feasible_triple, m)?)?;
    m.add_function(wrap_pyfunction!(max_arcs, m)?)?;
    m.add_function(wrap_pyfunction!(tournament_census, m)?)?;
    m.add_function(wrap_pyfunction!(wheel_case, m)?)?;
    m.add_function(wrap_pyfunction!(orient_wheel, m)?)?;
    m.add_function(wrap_pyfunction!(orient_fan, m)?)?;
    m.add_function(wrap_pyfunction!(label_5_tournament, m)?)?;
    m.add_function(wrap_pyfunction!(zk_minus_table, m)?)?;
    m.add_function(wrap_pyfunction!(quasigroup_count, m)?)?;
    Ok(())
}
