//! Python bindings for `dcpell`.
//!
//! Dual-complex values cross the boundary with exact rational components:
//! integral components come back as `int`, the rest as `fractions.Fraction`.

use dcpell::audit::{self, Assignment, GridOverrides, Selection};
use dcpell::{BigInt, BigRational, ConjKind, DualComplex, Error, SeqKind};
use pyo3::exceptions::{PyKeyError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

type Value = DualComplex<BigRational>;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero | Error::NonInvertible(_) => {
            PyZeroDivisionError::new_err(e.to_string())
        }
        Error::UnknownIdentity(_) => PyKeyError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse_kind(name: &str) -> PyResult<SeqKind> {
    name.parse().map_err(|_| {
        PyValueError::new_err(format!(
            "unknown sequence {name:?}; expected pell, pell-lucas or modified-pell"
        ))
    })
}

fn conj_kind(k: u8) -> PyResult<ConjKind> {
    match k {
        1..=5 => Ok(ConjKind::ALL[usize::from(k) - 1]),
        _ => Err(PyValueError::new_err(format!(
            "conjugation must be 1..5, got {k}"
        ))),
    }
}

fn component<'py>(py: Python<'py>, x: &BigRational) -> PyResult<Bound<'py, PyAny>> {
    if x.is_integer() {
        Ok(x.numer().clone().into_pyobject(py)?.into_any())
    } else {
        x.into_pyobject(py)
    }
}

fn lift(w: DualComplex<BigInt>) -> Value {
    w.map(BigRational::from_integer)
}

/// An element of the dual-complex ring with exact rational coefficients.
#[pyclass(
    name = "DualComplex",
    module = "pydcpell",
    eq,
    frozen,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyDualComplex(Value);

#[pymethods]
impl PyDualComplex {
    #[new]
    #[pyo3(signature = (re, im = None, du = None, imdu = None))]
    fn new(
        re: BigRational,
        im: Option<BigRational>,
        du: Option<BigRational>,
        imdu: Option<BigRational>,
    ) -> Self {
        let z = || BigRational::from_integer(0.into());
        PyDualComplex(DualComplex::new(
            re,
            im.unwrap_or_else(z),
            du.unwrap_or_else(z),
            imdu.unwrap_or_else(z),
        ))
    }

    #[staticmethod]
    fn i() -> Self {
        PyDualComplex(DualComplex::i())
    }

    #[staticmethod]
    fn eps() -> Self {
        PyDualComplex(DualComplex::eps())
    }

    #[staticmethod]
    fn i_eps() -> Self {
        PyDualComplex(DualComplex::i_eps())
    }

    /// `(re, im, du, imdu)`
    fn components<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        self.0
            .components()
            .into_iter()
            .map(|c| component(py, c))
            .collect()
    }

    /// Conjugation `1..5`: complex, dual, coupled, dual-complex, anti-dual.
    fn conj(&self, kind: u8) -> PyResult<Self> {
        self.0
            .conj(conj_kind(kind)?)
            .map(PyDualComplex)
            .map_err(to_py)
    }

    fn norm_sq(&self, kind: u8) -> PyResult<Self> {
        self.0
            .norm_sq(conj_kind(kind)?)
            .map(PyDualComplex)
            .map_err(to_py)
    }

    fn inv(&self) -> PyResult<Self> {
        self.0.inv().map(PyDualComplex).map_err(to_py)
    }

    fn is_zero(&self) -> bool {
        self.0 == Value::default()
    }

    fn __add__(&self, other: PyRef<'_, Self>) -> Self {
        PyDualComplex(&self.0 + &other.0)
    }

    fn __sub__(&self, other: PyRef<'_, Self>) -> Self {
        PyDualComplex(&self.0 - &other.0)
    }

    fn __mul__(&self, other: PyRef<'_, Self>) -> Self {
        PyDualComplex(&self.0 * &other.0)
    }

    fn __truediv__(&self, other: PyRef<'_, Self>) -> PyResult<Self> {
        self.0
            .checked_div(&other.0)
            .map(PyDualComplex)
            .map_err(to_py)
    }

    fn __pow__(&self, exp: u32, _modulo: Option<Py<PyAny>>) -> Self {
        PyDualComplex(self.0.pow(exp))
    }

    fn __neg__(&self) -> Self {
        PyDualComplex(-self.0.clone())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("DualComplex({})", self.0.to_strings().join(", "))
    }
}

#[pyfunction]
fn seq_at(kind: &str, n: i64) -> PyResult<BigInt> {
    Ok(dcpell::seq_at(parse_kind(kind)?, n))
}

/// Values for `lo..=hi`.
#[pyfunction]
fn seq_range(kind: &str, lo: i64, hi: i64) -> PyResult<Vec<BigInt>> {
    dcpell::seq_range(parse_kind(kind)?, lo, hi).map_err(to_py)
}

#[pyfunction]
fn pell(n: i64) -> BigInt {
    dcpell::sequences::pell(n)
}

#[pyfunction]
fn pell_lucas(n: i64) -> BigInt {
    dcpell::sequences::pell_lucas(n)
}

#[pyfunction]
fn modified_pell(n: i64) -> BigInt {
    dcpell::sequences::modified_pell(n)
}

#[pyfunction]
fn qp(n: i64) -> PyDualComplex {
    PyDualComplex(lift(dcpell::qp(n).into_value()))
}

#[pyfunction]
fn qpl(n: i64) -> PyDualComplex {
    PyDualComplex(lift(dcpell::qpl(n).into_value()))
}

/// Closed-form Pell quaternion evaluated over Q(sqrt 2).
#[pyfunction]
fn binet_qp(n: i64) -> PyResult<PyDualComplex> {
    let q = dcpell::binet_qp(n).map_err(to_py)?;
    Ok(PyDualComplex(lift(q.into_value())))
}

#[pyfunction]
fn identity_ids() -> Vec<&'static str> {
    let mut ids: Vec<_> = audit::registry().into_iter().map(|r| r.id).collect();
    ids.sort_unstable();
    ids
}

/// Residual `lhs - rhs` of one identity, e.g. `evaluate_identity("eq66", n=5)`.
#[pyfunction]
#[pyo3(signature = (id, **at))]
fn evaluate_identity(id: &str, at: Option<&Bound<'_, PyDict>>) -> PyResult<PyDualComplex> {
    let mut point = Assignment::new();
    if let Some(at) = at {
        for (k, v) in at.iter() {
            point = point.with(&k.extract::<String>()?, v.extract()?);
        }
    }
    audit::evaluate_identity(id, &point)
        .map(PyDualComplex)
        .map_err(to_py)
}

/// Runs an audit and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (ids = "all", n_max = None, m_max = None, r_max = None, p_max = None))]
fn run_audit(
    py: Python<'_>,
    ids: &str,
    n_max: Option<i64>,
    m_max: Option<i64>,
    r_max: Option<i64>,
    p_max: Option<i64>,
) -> PyResult<String> {
    let grid = [("n", n_max), ("m", m_max), ("r", r_max), ("p", p_max)]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k, v)))
        .fold(GridOverrides::new(), |g, (k, v)| g.with_max(k, v));
    let sel = Selection::parse(ids);
    let report = py.detach(|| audit::audit(&sel, &grid)).map_err(to_py)?;
    Ok(report.to_json())
}

#[pymodule]
fn pydcpell(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDualComplex>()?;
    m.add_function(wrap_pyfunction!(seq_at, m)?)?;
    m.add_function(wrap_pyfunction!(seq_range, m)?)?;
    m.add_function(wrap_pyfunction!(pell, m)?)?;
    m.add_function(wrap_pyfunction!(pell_lucas, m)?)?;
    m.add_function(wrap_pyfunction!(modified_pell, m)?)?;
    m.add_function(wrap_pyfunction!(qp, m)?)?;
    m.add_function(wrap_pyfunction!(qpl, m)?)?;
    m.add_function(wrap_pyfunction!(binet_qp, m)?)?;
    m.add_function(wrap_pyfunction!(identity_ids, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_identity, m)?)?;
    m.add_function(wrap_pyfunction!(run_audit, m)?)?;
    Ok(())
}
