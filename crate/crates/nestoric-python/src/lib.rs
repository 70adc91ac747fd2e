//! Python extension module `pynestoric`: thin wrappers over the exact
//! Betti-number engines in the `nestoric` crate.
//!
//! Building sets enter as lists of member lists of positive labels, graphs as
//! edge lists; results come back as plain lists of integers.

use nestoric::betti::{
    compare_methods, complex_betti as complex_betti_of, hochschild_betti as hochschild_closed,
    real_betti_alternating, real_betti_graph, real_betti_homology_oracle, sa_number,
};
use nestoric::building::BuildingSet;
use nestoric::graph::SimpleGraph;
use nestoric::set::{ElementSet, MAX_LABEL};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn set_from_labels(labels: &[u32]) -> PyResult<ElementSet> {
    let mut set = ElementSet::EMPTY;
    for &label in labels {
        if label == 0 || label as usize > MAX_LABEL as usize {
            return Err(PyValueError::new_err(format!(
                "label {label} outside 1..={MAX_LABEL}"
            )));
        }
        set = set.with(label);
    }
    Ok(set)
}

fn building_from_members(members: Vec<Vec<u32>>) -> PyResult<BuildingSet> {
    let mut sets = Vec::with_capacity(members.len());
    let mut ground = ElementSet::EMPTY;
    for member in &members {
        let set = set_from_labels(member)?;
        ground = ground | set;
        sets.push(set);
    }
    BuildingSet::new(ground, sets).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn graph_from_edges(vertices: u32, edges: Vec<(u32, u32)>) -> PyResult<SimpleGraph> {
    if vertices as usize > MAX_LABEL as usize {
        return Err(PyValueError::new_err(format!(
            "vertex count {vertices} exceeds {MAX_LABEL}"
        )));
    }
    let mut graph = SimpleGraph::new(ElementSet::initial(vertices));
    for (u, v) in edges {
        graph
            .add_edge(u, v)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
    }
    Ok(graph)
}

/// Betti numbers of the real toric manifold of a building set.
///
/// `method` selects the engine: "alt" counts alternating B-permutations,
/// "homology" runs the simplicial-homology oracle.
#[pyfunction]
#[pyo3(signature = (members, method = "alt"))]
fn real_betti(members: Vec<Vec<u32>>, method: &str) -> PyResult<Vec<u64>> {
    let b = building_from_members(members)?;
    let report = match method {
        "alt" => real_betti_alternating(&b),
        "homology" => real_betti_homology_oracle(&b),
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown method {other:?}; expected \"alt\" or \"homology\""
            )))
        }
    };
    report
        .map(|r| r.betti)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Betti numbers of the real toric manifold of the graphical building set of
/// a graph on vertices 1..=vertices, computed through graph a-numbers.
#[pyfunction]
fn graph_betti(vertices: u32, edges: Vec<(u32, u32)>) -> PyResult<Vec<u64>> {
    let graph = graph_from_edges(vertices, edges)?;
    real_betti_graph(&graph)
        .map(|r| r.betti)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// The signed a-number of a graph on vertices 1..=vertices.
#[pyfunction]
fn graph_sa_number(vertices: u32, edges: Vec<(u32, u32)>) -> PyResult<i64> {
    let graph = graph_from_edges(vertices, edges)?;
    sa_number(&graph).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Betti numbers of the real toric manifold of the Hochschild building set
/// with `m` clear and `n` shaded elements, by the closed form.
#[pyfunction]
fn hochschild_betti(m: u32, n: u32) -> PyResult<Vec<u64>> {
    hochschild_closed(m, n)
        .map(|r| r.betti)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Betti numbers of the complex toric manifold of a building set.
#[pyfunction]
fn complex_betti(members: Vec<Vec<u32>>) -> PyResult<Vec<u64>> {
    let b = building_from_members(members)?;
    complex_betti_of(&b).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Run the two real-Betti engines side by side; returns a dict with keys
/// "alternating", "homology", "chordal", and "agree".
#[pyfunction]
fn compare(py: Python<'_>, members: Vec<Vec<u32>>) -> PyResult<Py<PyAny>> {
    let b = building_from_members(members)?;
    let report = compare_methods(&b).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let dict = pyo3::types::PyDict::new(py);
    dict.set_item("alternating", report.alternating.betti)?;
    dict.set_item("homology", report.homology.betti)?;
    dict.set_item("chordal", report.chordal)?;
    dict.set_item("agree", report.agree)?;
    Ok(dict.into_any().unbind())
}

#[pymodule]
fn pynestoric(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(real_betti, m)?)?;
    m.add_function(wrap_pyfunction!(graph_betti, m)?)?;
    m.add_function(wrap_pyfunction!(graph_sa_number, m)?)?;
    m.add_function(wrap_pyfunction!(hochschild_betti, m)?)?;
    m.add_function(wrap_pyfunction!(complex_betti, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    Ok(())
}
