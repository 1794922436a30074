//! Python bindings: bead diagrams, generator matrices and the dimension checks.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qwalled_core::centralizer::{commutant_dim as core_commutant_dim, Side};
use qwalled_core::diagram::{self, enumerate_basis as core_basis};
use qwalled_core::quantum::{self, QGen};
use qwalled_core::relations::all_hold;
use qwalled_core::scalar::Scalar;
use qwalled_core::superlinalg::{GradedOperator, RankMode};

fn err(e: qwalled_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn mode(s: &str) -> PyResult<RankMode> {
    s.parse().map_err(err)
}

/// A bead diagram on r + s strands per row.
#[pyclass(name = "BeadDiagram", module = "qwalled")]
#[derive(Clone)]
struct PyDiagram(diagram::BeadDiagram);

#[pymethods]
impl PyDiagram {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        diagram::BeadDiagram::from_json(&v).map(Self).map_err(err)
    }

    /// The 12-bead example on (4,3).
    #[staticmethod]
    fn example() -> Self {
        Self(diagram::worked_example())
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0.to_json()).expect("json serializes")
    }

    #[getter]
    fn r(&self) -> usize {
        self.0.r()
    }

    #[getter]
    fn s(&self) -> usize {
        self.0.s()
    }

    #[getter]
    fn num_beads(&self) -> u32 {
        self.0.num_beads()
    }

    fn statistics<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let st = diagram::statistics(&self.0);
        let d = PyDict::new(py);
        let names = [
            "l1", "l2", "rho1", "rho2", "p1", "p2", "c", "alpha", "beta", "gamma",
        ];
        for (k, v) in names.iter().zip(st.as_tuple()) {
            d.set_item(k, v)?;
        }
        Ok(d)
    }

    /// (sign, normal form word).
    fn normalize(&self) -> (i32, String) {
        let (sign, nd) = diagram::normalize(&self.0);
        (sign.into(), nd.to_string())
    }

    /// self below other; None when a closed loop appears.
    fn multiply(&self, other: &Self) -> PyResult<Option<Self>> {
        self.0
            .multiply_raw(&other.0)
            .map(|d| d.map(Self))
            .map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!(
            "BeadDiagram(r={}, s={}, beads={})",
            self.0.r(),
            self.0.s(),
            self.0.num_beads()
        )
    }
}

/// An operator on V^{⊗m} with entries in Q(q).
#[pyclass(name = "Operator", module = "qwalled")]
#[derive(Clone)]
struct PyOperator(GradedOperator<Scalar>);

#[pymethods]
impl PyOperator {
    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn factors(&self) -> usize {
        self.0.out_factors()
    }

    #[getter]
    fn nnz(&self) -> usize {
        self.0.nnz()
    }

    /// 0 or 1, or None for a mixed operator.
    #[getter]
    fn parity(&self) -> Option<u8> {
        self.0.parity()
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __matmul__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(Self).map_err(err)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_add(&other.0).map(Self).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    /// Entry (row, col) as a string such as "(q^2 - 1)/(q)".
    fn entry(&self, row: usize, col: usize) -> String {
        self.0
            .get(row, col)
            .map_or_else(|| "0".to_string(), ToString::to_string)
    }

    fn to_json(&self) -> PyResult<String> {
        let v = self.0.to_json().map_err(err)?;
        Ok(serde_json::to_string(&v).expect("json serializes"))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        GradedOperator::from_json(&v).map(Self).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Operator(n={}, factors={}, nnz={})",
            self.0.n(),
            self.0.out_factors(),
            self.0.nnz()
        )
    }
}

/// Normal forms of the basis of BD_{r,s}.
#[pyfunction]
fn enumerate_basis(r: usize, s: usize) -> Vec<String> {
    core_basis(r, s).iter().map(ToString::to_string).collect()
}

/// Normal-form monomials of BC_{r,s}(q), as words.
#[pyfunction]
fn normal_monomials(r: usize, s: usize) -> Vec<String> {
    quantum::enumerate_normal_monomials(r, s)
        .iter()
        .map(ToString::to_string)
        .collect()
}

/// Matrix of a generator ("t1", "tstar1", "e", "c1", "cstar1", "t1^-1", …).
#[pyfunction]
fn generator_matrix(gen: &str, n: usize, r: usize, s: usize) -> PyResult<PyOperator> {
    let g: QGen = gen.parse().map_err(err)?;
    quantum::generator_matrix(g, n, r, s)
        .map(PyOperator)
        .map_err(err)
}

/// True when every defining relation holds as a matrix identity.
#[pyfunction]
fn relations_hold(n: usize, r: usize, s: usize) -> PyResult<bool> {
    quantum::check_all_relations(n, r, s)
        .map(|c| all_hold(&c))
        .map_err(err)
}

/// (count, rank) of the normal-form monomial images.
#[pyfunction]
#[pyo3(signature = (n, r, s, mode = "exact"))]
fn certify_dimension(n: usize, r: usize, s: usize, mode: &str) -> PyResult<(usize, usize)> {
    let c = quantum::certify_dimension(n, r, s, self::mode(mode)?).map_err(err)?;
    Ok((c.count, c.rank.rank))
}

/// Supercommutant dimension; side is "uq", "bc" or "classical".
#[pyfunction]
#[pyo3(signature = (n, r, s, side, mode = "exact"))]
fn commutant_dim(n: usize, r: usize, s: usize, side: &str, mode: &str) -> PyResult<usize> {
    let side: Side = side.parse().map_err(err)?;
    core_commutant_dim(n, r, s, side, self::mode(mode)?)
        .map(|c| c.dim)
        .map_err(err)
}

/// (quotient dim of A_q(n,2), dim of the Hecke-Clifford commutant).
#[pyfunction]
fn aq_dual(n: usize) -> PyResult<(usize, usize)> {
    let span = quantum::aq_relation_span(n, 2).map_err(err)?;
    let hc = quantum::hecke_clifford_commutant_dim(n).map_err(err)?;
    Ok((span.quotient_dim, hc))
}

/// Runs the acceptance suite; returns (title, passed) per criterion.
#[pyfunction]
#[pyo3(signature = (quick = true))]
fn selftest(quick: bool) -> Vec<(String, bool)> {
    qwalled_core::acceptance::run_all(quick)
        .into_iter()
        .map(|r| {
            let ok = r.passed();
            (r.title, ok)
        })
        .collect()
}

#[pymodule]
fn qwalled(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyOperator>()?;
    m.add_function(wrap_pyfunction!(enumerate_basis, m)?)?;
    m.add_function(wrap_pyfunction!(normal_monomials, m)?)?;
    m.add_function(wrap_pyfunction!(generator_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(relations_hold, m)?)?;
    m.add_function(wrap_pyfunction!(certify_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(commutant_dim, m)?)?;
    m.add_function(wrap_pyfunction!(aq_dual, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
