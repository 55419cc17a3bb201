//! Python bindings. Structured results (reports, role maps, bounds) cross
//! the boundary as JSON and come out as plain dicts and lists.

use dichroma::claims::{run_claim, ClaimOptions, Level, CLAIMS, DEFAULT_SEED};
use dichroma::cnf::CnfFormula;
use dichroma::enumeration::{
    dicritical_census_with, verify_census_bound_with, ArboricityFilter, BoundOptions, CensusOptions,
};
use dichroma::io::{from_arc_list, from_digraph6, parse_digraph, to_arc_list, to_digraph6};
use dichroma::reductions::{reduce_digon, reduce_oriented, verify_equivalence, PlanarIncidenceEmbedding};
use dichroma::solver::{
    dichromatic_number, is_dicritical, is_k_dicolourable, is_k_dicolourable_sat, verify_dicolouring, Dicolouring,
};
use dichroma::structure::structure_report;
use dichroma::surfaces::{dichromatic_bounds, Surface};
use dichroma::{canonical_cert, is_isomorphic, known, Digraph as CoreDigraph};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Digraph", module = "pydichroma", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyDigraph {
    inner: CoreDigraph,
}

#[pymethods]
impl PyDigraph {
    #[new]
    #[pyo3(signature = (n, arcs = Vec::new()))]
    fn new(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        CoreDigraph::from_arcs(n, arcs).map(|inner| Self { inner }).map_err(value_err)
    }

    #[staticmethod]
    fn from_digraph6(text: &str) -> PyResult<Self> {
        from_digraph6(text.trim()).map(|inner| Self { inner }).map_err(value_err)
    }

    #[staticmethod]
    fn from_arc_list(text: &str) -> PyResult<Self> {
        from_arc_list(text).map(|inner| Self { inner }).map_err(value_err)
    }

    /// digraph6 or arc list, detected from the text.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_digraph(text).map(|inner| Self { inner }).map_err(value_err)
    }

    #[staticmethod]
    #[pyo3(signature = (n, connection))]
    fn circulant_tournament(n: usize, connection: Vec<usize>) -> PyResult<Self> {
        CoreDigraph::circulant_tournament(n, &connection).map(|inner| Self { inner }).map_err(value_err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn arc_count(&self) -> usize {
        self.inner.arc_count()
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().collect()
    }

    fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.inner.order() && v < self.inner.order() && self.inner.has_arc(u, v)
    }

    fn is_oriented(&self) -> bool {
        self.inner.is_oriented()
    }

    fn to_digraph6(&self) -> String {
        to_digraph6(&self.inner)
    }

    fn to_arc_list(&self) -> String {
        to_arc_list(&self.inner)
    }

    /// Hex canonical certificate; equal iff the digraphs are isomorphic.
    fn canonical_cert(&self) -> String {
        canonical_cert(&self.inner).to_hex()
    }

    fn is_isomorphic(&self, other: &PyDigraph) -> bool {
        is_isomorphic(&self.inner, &other.inner)
    }

    /// `(k, colouring)` with colours in `1..=k`.
    fn dichromatic_number(&self) -> (usize, Vec<usize>) {
        let (k, c) = dichromatic_number(&self.inner);
        (k, c.colours().to_vec())
    }

    /// A k-dicolouring, or `None`.
    #[pyo3(signature = (k, sat = false))]
    fn k_dicolouring(&self, k: usize, sat: bool) -> Option<Vec<usize>> {
        let c = if sat { is_k_dicolourable_sat(&self.inner, k) } else { is_k_dicolourable(&self.inner, k) };
        c.map(|c| c.colours().to_vec())
    }

    fn is_k_dicolourable(&self, k: usize) -> bool {
        is_k_dicolourable(&self.inner, k).is_some()
    }

    fn verify_dicolouring(&self, k: usize, colours: Vec<usize>) -> bool {
        colours.len() == self.inner.order()
            && Dicolouring::new(k, colours).is_some_and(|c| verify_dicolouring(&self.inner, &c))
    }

    fn is_dicritical(&self, k: usize) -> bool {
        is_dicritical(&self.inner, k).is_dicritical
    }

    /// Criticality report with per-arc certificates.
    fn criticality_report<'py>(&self, py: Python<'py>, k: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &is_dicritical(&self.inner, k))
    }

    fn structure<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &structure_report(&self.inner))
    }

    fn __repr__(&self) -> String {
        format!("Digraph({:?})", to_digraph6(&self.inner))
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }
}

/// The 11-vertex circulant tournament of dichromatic number 4.
#[pyfunction]
fn st11() -> PyDigraph {
    PyDigraph { inner: known::st11() }
}

/// The unique 3-dicritical oriented graph of order 7 with 20 arcs.
#[pyfunction]
fn dicritical_7_20() -> PyDigraph {
    PyDigraph { inner: known::dicritical_7_20() }
}

#[pyfunction]
#[pyo3(signature = (n, k, filter = "vertex", min_arcs_only = false, jobs = None, checkpoint = None))]
fn census<'py>(
    py: Python<'py>,
    n: usize,
    k: usize,
    filter: &str,
    min_arcs_only: bool,
    jobs: Option<usize>,
    checkpoint: Option<std::path::PathBuf>,
) -> PyResult<Bound<'py, PyAny>> {
    let filter: ArboricityFilter = filter.parse().map_err(value_err)?;
    let opts = CensusOptions { filter, jobs, min_arcs_only, checkpoint };
    let r = py.detach(|| dicritical_census_with(n, k, &opts)).map_err(value_err)?;
    to_py(py, &r)
}

/// Whether every tournament of order `n` is `k`-dicolourable.
#[pyfunction]
#[pyo3(signature = (n, k, jobs = None))]
fn tournament_bound<'py>(py: Python<'py>, n: usize, k: usize, jobs: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let r =
        py.detach(|| verify_census_bound_with(n, k, &BoundOptions { jobs, checkpoint: None })).map_err(value_err)?;
    to_py(py, &r)
}

/// Dichromatic bounds for a surface named like `S5` or `N10`.
#[pyfunction]
fn bounds<'py>(py: Python<'py>, surface: &str) -> PyResult<Bound<'py, PyAny>> {
    let s: Surface = surface.parse().map_err(value_err)?;
    to_py(py, &dichromatic_bounds(&s))
}

/// Reduces a DIMACS 3-CNF formula; returns `(digraph, roles)`, plus the
/// equivalence check when `verify` is set.
#[pyfunction]
#[pyo3(signature = (dimacs, gadget = "digon", embedding = None, verify = false))]
fn reduce<'py>(
    py: Python<'py>,
    dimacs: &str,
    gadget: &str,
    embedding: Option<&str>,
    verify: bool,
) -> PyResult<(PyDigraph, Bound<'py, PyAny>, Option<Bound<'py, PyAny>>)> {
    let phi = CnfFormula::parse_dimacs(dimacs).map_err(value_err)?;
    let emb: Option<PlanarIncidenceEmbedding> = embedding.map(serde_json::from_str).transpose().map_err(value_err)?;
    let out = match gadget {
        "digon" => reduce_digon(&phi, emb.as_ref()),
        "oriented" => {
            let g3 = known::dicritical_7_20();
            let arc = g3.arcs().next().expect("G3 has arcs");
            reduce_oriented(&phi, &g3, arc, emb.as_ref())
        }
        other => return Err(PyValueError::new_err(format!("unknown gadget {other:?}"))),
    }
    .map_err(value_err)?;
    let check = match verify {
        true => Some(to_py(py, &verify_equivalence(&phi, &out).map_err(value_err)?)?),
        false => None,
    };
    let roles = to_py(py, &out.roles)?;
    Ok((PyDigraph { inner: out.digraph }, roles, check))
}

/// Runs acceptance criteria; `ids` overrides the level selection.
#[pyfunction]
#[pyo3(signature = (level = "quick", ids = None, seed = DEFAULT_SEED))]
fn verify_paper<'py>(py: Python<'py>, level: &str, ids: Option<Vec<u8>>, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let level = match level {
        "quick" => Level::Quick,
        "full" => Level::Full,
        other => return Err(PyValueError::new_err(format!("level must be quick or full, not {other:?}"))),
    };
    let ids: Vec<u8> = match ids {
        Some(ids) => {
            if let Some(bad) = ids.iter().find(|i| !CLAIMS.iter().any(|c| c.id == **i)) {
                return Err(PyValueError::new_err(format!("no criterion {bad}")));
            }
            ids
        }
        None => CLAIMS.iter().filter(|c| level == Level::Full || !c.extended).map(|c| c.id).collect(),
    };
    let opts = ClaimOptions { seed, ..ClaimOptions::default() };
    let outcomes: Vec<_> = py.detach(|| ids.iter().map(|&i| run_claim(i, &opts)).collect());
    to_py(py, &outcomes)
}

#[pymodule]
fn pydichroma(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDigraph>()?;
    m.add_function(wrap_pyfunction!(st11, m)?)?;
    m.add_function(wrap_pyfunction!(dicritical_7_20, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(tournament_bound, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(verify_paper, m)?)?;
    m.add("DEFAULT_SEED", DEFAULT_SEED)?;
    Ok(())
}
