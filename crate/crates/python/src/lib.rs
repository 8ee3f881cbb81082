//! Python bindings: complexes, characteristic matrices, diagrams and puzzles.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyMemoryError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use toric_puzzle::charmap::{enumerate_z2, enumerate_z_bounded};
use toric_puzzle::diagram::{build_diagram, build_prediagram};
use toric_puzzle::json::{from_str, to_canonical_string};
use toric_puzzle::puzzle::{
    enumerate_realizable, is_realizable, is_realizable_by_squares, is_realizable_by_subcubes,
    reducibility_report, WedgeContext,
};
use toric_puzzle::simplicial::{cyclic_boundary, ngon, simplex_boundary};
use toric_puzzle::{Error, Ring, WedgeVector};

fn err(e: Error) -> PyErr {
    match e {
        Error::SizeLimit(_) => PyMemoryError::new_err(e.to_string()),
        Error::InvariantViolation(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn ring(name: &str) -> PyResult<Ring> {
    Ring::parse(name).map_err(err)
}

fn wedge_vector(j: Vec<usize>) -> PyResult<WedgeVector> {
    WedgeVector::new(j).map_err(err)
}

#[pyclass(name = "SimplicialComplex", module = "toric_puzzle_py", frozen)]
struct PyComplex(toric_puzzle::SimplicialComplex);

#[pymethods]
impl PyComplex {
    /// A pure pseudomanifold on vertices `1..=m` from its facets.
    #[new]
    fn new(m: usize, facets: Vec<Vec<usize>>) -> PyResult<Self> {
        toric_puzzle::SimplicialComplex::from_facets(m, &facets)
            .map(Self)
            .map_err(err)
    }

    #[staticmethod]
    fn ngon(k: usize) -> PyResult<Self> {
        ngon(k).map(Self).map_err(err)
    }

    #[staticmethod]
    fn cyclic(n: usize, m: usize) -> PyResult<Self> {
        cyclic_boundary(n, m).map(Self).map_err(err)
    }

    #[staticmethod]
    fn simplex_boundary(d: usize) -> PyResult<Self> {
        simplex_boundary(d).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file = from_str(text).map_err(err)?;
        toric_puzzle::SimplicialComplex::from_file(&file)
            .map(Self)
            .map_err(err)
    }

    fn to_json(&self) -> PyResult<String> {
        to_canonical_string(&self.0.to_file()).map_err(err)
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn picard(&self) -> usize {
        self.0.picard()
    }

    #[getter]
    fn facets(&self) -> Vec<Vec<usize>> {
        self.0.facets_one_based()
    }

    fn minimal_non_faces(&self) -> Vec<Vec<usize>> {
        self.0
            .minimal_non_faces()
            .into_iter()
            .map(|s| s.to_one_based())
            .collect()
    }

    fn is_seed(&self) -> bool {
        self.0.is_seed()
    }

    /// Wedge at the 1-based vertex `v`.
    fn wedge(&self, v: usize) -> PyResult<Self> {
        if v == 0 || v > self.0.m() {
            return Err(err(Error::VertexOutOfRange {
                vertex: v,
                m: self.0.m(),
            }));
        }
        self.0.wedge(v - 1).map(Self).map_err(err)
    }

    fn expand(&self, j: Vec<usize>) -> PyResult<Self> {
        self.0.expand(&wedge_vector(j)?).map(Self).map_err(err)
    }

    fn join(&self, other: &PyComplex) -> PyResult<Self> {
        self.0.join(&other.0).map(Self).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "SimplicialComplex(m={}, facets={:?})",
            self.0.m(),
            self.0.facets_one_based()
        )
    }
}

#[pyclass(
    name = "CharMatrix",
    module = "toric_puzzle_py",
    frozen,
    eq,
    hash,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyCharMatrix(toric_puzzle::CharMatrix);

#[pymethods]
impl PyCharMatrix {
    #[new]
    #[pyo3(signature = (rows, ring = "z2"))]
    fn new(rows: Vec<Vec<i64>>, ring: &str) -> PyResult<Self> {
        toric_puzzle::CharMatrix::from_i64(self::ring(ring)?, &rows)
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn rows(&self) -> PyResult<Vec<Vec<i64>>> {
        self.0
            .to_i64_rows()
            .ok_or_else(|| PyValueError::new_err("entries do not fit in 64 bits"))
    }

    #[getter]
    fn ring(&self) -> &'static str {
        self.0.ring().name()
    }

    fn canonical(&self) -> PyResult<Self> {
        self.0.canonical().map(Self).map_err(err)
    }

    fn is_characteristic(&self, k: &PyComplex) -> PyResult<bool> {
        self.0.is_characteristic(&k.0).map_err(err)
    }

    fn dj_equivalent(&self, other: &PyCharMatrix) -> PyResult<bool> {
        self.0.dj_equivalent(&other.0).map_err(err)
    }

    fn to_json(&self) -> PyResult<String> {
        to_canonical_string(&self.0.to_file(None)).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "CharMatrix({:?}, ring={:?})",
            self.0.to_i64_rows().unwrap_or_default(),
            self.0.ring().name()
        )
    }
}

#[pyclass(name = "Diagram", module = "toric_puzzle_py", frozen)]
struct PyDiagram(toric_puzzle::Diagram);

#[pymethods]
impl PyDiagram {
    #[getter]
    fn classes(&self) -> Vec<PyCharMatrix> {
        self.0
            .prediagram()
            .classes()
            .iter()
            .cloned()
            .map(PyCharMatrix)
            .collect()
    }

    /// Non-loop edges as `(a, b, color)` with 1-based colors.
    #[getter]
    fn edges(&self) -> Vec<(usize, usize, usize)> {
        self.0
            .prediagram()
            .edges()
            .iter()
            .map(|e| (e.a, e.b, e.color + 1))
            .collect()
    }

    /// Stored squares as `(c00, c10, c01, c11, v, w)` with 1-based colors.
    #[getter]
    fn squares(&self) -> Vec<(usize, usize, usize, usize, usize, usize)> {
        self.0
            .squares()
            .iter()
            .map(|s| {
                let [a, b, c, d] = s.corners;
                (a, b, c, d, s.v + 1, s.w + 1)
            })
            .collect()
    }

    fn __len__(&self) -> usize {
        self.0.prediagram().len()
    }

    fn index_of(&self, m: &PyCharMatrix) -> Option<usize> {
        self.0.prediagram().index_of(&m.0)
    }

    /// Colors (1-based) of the edges between two classes.
    fn colors_between(&self, a: usize, b: usize) -> Vec<usize> {
        self.0
            .prediagram()
            .colors_between(a, b)
            .into_iter()
            .map(|c| c + 1)
            .collect()
    }

    fn to_dot(&self) -> String {
        self.0.to_dot()
    }

    fn to_json(&self) -> PyResult<String> {
        to_canonical_string(&self.0.to_file()).map_err(err)
    }

    /// Realizable puzzles on the board of `J`, sorted.
    fn puzzles(&self, py: Python<'_>, j: Vec<usize>) -> PyResult<Vec<PyPuzzle>> {
        let j = wedge_vector(j)?;
        let pre = self.0.prediagram();
        let e = py.detach(|| enumerate_realizable(pre, &j)).map_err(err)?;
        Ok(e.puzzles.into_iter().map(PyPuzzle).collect())
    }

    fn count_puzzles(&self, py: Python<'_>, j: Vec<usize>) -> PyResult<usize> {
        let j = wedge_vector(j)?;
        let pre = self.0.prediagram();
        py.detach(|| enumerate_realizable(pre, &j))
            .map(|e| e.count())
            .map_err(err)
    }

    /// Whether a puzzle is realizable, by the direct construction.
    fn is_realizable(&self, p: &PyPuzzle) -> PyResult<bool> {
        let pre = self.0.prediagram();
        let ctx = WedgeContext::new(pre.complex(), p.0.j()).map_err(err)?;
        is_realizable(&ctx, pre, &p.0).map_err(err)
    }

    fn is_realizable_by_squares(&self, p: &PyPuzzle) -> PyResult<bool> {
        is_realizable_by_squares(&p.0, &self.0).map_err(err)
    }

    fn is_realizable_by_subcubes(&self, p: &PyPuzzle) -> PyResult<bool> {
        is_realizable_by_subcubes(self.0.prediagram(), &p.0).map_err(err)
    }
}

#[pyclass(
    name = "Puzzle",
    module = "toric_puzzle_py",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPuzzle(toric_puzzle::Puzzle);

#[pymethods]
impl PyPuzzle {
    /// `assignment` lists class indices in board order (first coordinate slowest).
    #[new]
    fn new(j: Vec<usize>, assignment: Vec<usize>) -> PyResult<Self> {
        toric_puzzle::Puzzle::new(wedge_vector(j)?, assignment)
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn j(&self) -> Vec<usize> {
        self.0.j().entries().to_vec()
    }

    #[getter]
    fn assignment(&self) -> Vec<usize> {
        self.0.assignment().to_vec()
    }

    #[getter]
    fn center(&self) -> usize {
        self.0.center()
    }

    fn is_constant(&self) -> bool {
        self.0.is_constant()
    }

    fn is_reducible(&self) -> PyResult<bool> {
        reducibility_report(&self.0)
            .map(|r| r.is_reducible())
            .map_err(err)
    }

    /// Board vertex (1-based copies) to class index.
    fn as_dict(&self) -> BTreeMap<String, usize> {
        self.0.to_file().assignment
    }

    fn to_json(&self) -> PyResult<String> {
        to_canonical_string(&self.0.to_file()).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Puzzle(j={:?}, assignment={:?})",
            self.0.j().entries(),
            self.0.assignment()
        )
    }
}

/// D-J classes over `K`: exhaustive over Z2, or bounded by `bound` over Z.
#[pyfunction]
#[pyo3(signature = (k, ring = "z2", bound = 1))]
fn characteristic_maps(
    py: Python<'_>,
    k: &PyComplex,
    ring: &str,
    bound: i64,
) -> PyResult<Vec<PyCharMatrix>> {
    let r = self::ring(ring)?;
    let found = py
        .detach(|| match r {
            Ring::Z2 => enumerate_z2(&k.0),
            Ring::Z => enumerate_z_bounded(&k.0, bound),
        })
        .map_err(err)?;
    Ok(found
        .into_iter()
        .map(|c| PyCharMatrix(c.canonical))
        .collect())
}

/// The Z2 diagram of `K`, or the diagram of a given class list.
#[pyfunction]
#[pyo3(signature = (k, classes = None))]
fn diagram(
    py: Python<'_>,
    k: &PyComplex,
    classes: Option<Vec<PyCharMatrix>>,
) -> PyResult<PyDiagram> {
    let d = py
        .detach(|| match classes {
            None => build_diagram(&k.0, Ring::Z2),
            Some(list) => toric_puzzle::PreDiagram::from_classes(
                &k.0,
                list.into_iter().map(|c| c.0).collect(),
            )
            .and_then(toric_puzzle::Diagram::from_prediagram),
        })
        .map_err(err)?;
    Ok(PyDiagram(d))
}

/// Puzzle count and class count over `K(J)`; they agree.
#[pyfunction]
fn crosscheck(py: Python<'_>, k: &PyComplex, j: Vec<usize>) -> PyResult<(usize, usize)> {
    let j = wedge_vector(j)?;
    py.detach(|| {
        let pre = build_prediagram(&k.0, Ring::Z2)?;
        let count = enumerate_realizable(&pre, &j)?.count();
        let direct = enumerate_z2(&k.0.expand(&j)?)?.len();
        Ok((count, direct))
    })
    .map_err(err)
}

#[pymodule]
fn toric_puzzle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComplex>()?;
    m.add_class::<PyCharMatrix>()?;
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyPuzzle>()?;
    m.add_function(wrap_pyfunction!(characteristic_maps, m)?)?;
    m.add_function(wrap_pyfunction!(diagram, m)?)?;
    m.add_function(wrap_pyfunction!(crosscheck, m)?)?;
    Ok(())
}
