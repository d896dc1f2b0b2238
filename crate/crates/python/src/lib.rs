//! Python bindings. Exact rationals cross the boundary as
//! `fractions.Fraction` and big integers as `int`.

use bettikit_core::arith::{self, format_rational, Rational};
use bettikit_core::bounds::{self, BoundReport};
use bettikit_core::decomp::{self, Part};
use bettikit_core::explorer::{self, Check, Constraint, Guardrails, SearchSpec};
use bettikit_core::hilbert::{self, HilbertData};
use bettikit_core::table::{self, DegreeSequence};
use bettikit_core::Error;
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((format_rational(r),))
}

fn int<'py>(py: Python<'py>, n: &BigInt) -> PyResult<Bound<'py, PyAny>> {
    py.import("builtins")?.getattr("int")?.call1((n.to_string(),))
}

/// Accepts `int`, `Fraction` or anything whose `str` parses as `p/q`.
fn rational(value: &Bound<'_, PyAny>) -> PyResult<Rational> {
    arith::parse_rational(&value.str()?.to_cow()?).map_err(py_err)
}

fn sequence(d: Vec<i64>) -> PyResult<DegreeSequence> {
    DegreeSequence::new(d).map_err(py_err)
}

fn parts<'py>(py: Python<'py>, parts: &[Part]) -> PyResult<Bound<'py, PyList>> {
    let out = PyList::empty(py);
    for p in parts {
        out.append((fraction(py, &p.coefficient)?, p.degrees.degrees().to_vec()))?;
    }
    Ok(out)
}

fn bound_dict<'py>(py: Python<'py>, b: &BoundReport, digits: usize) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("l", b.l)?;
    d.set_item("e_value", fraction(py, &b.e_value)?)?;
    d.set_item("bound", fraction(py, &b.bound)?)?;
    d.set_item("decimal", arith::to_decimal(&b.bound, digits))?;
    d.set_item("holds", b.holds)?;
    d.set_item("conjectural", b.conjectural)?;
    d.set_item("beta0", fraction(py, &b.beta0)?)?;
    d.set_item("s", b.s)?;
    d.set_item("min_shifts", b.shifts.min.clone())?;
    d.set_item("max_shifts", b.shifts.max.clone())?;
    d.set_item("tilde", b.tilde.clone())?;
    d.set_item("psi", int(py, &b.psi)?)?;
    d.set_item("f_value", int(py, &b.f_value)?)?;
    d.set_item("factorial_of", b.factorial_of)?;
    Ok(d)
}

/// Graded Betti table with exact rational entries.
#[pyclass(name = "BettiTable", module = "bettikit", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyBettiTable {
    inner: table::BettiTable,
}

impl From<table::BettiTable> for PyBettiTable {
    fn from(inner: table::BettiTable) -> Self {
        PyBettiTable { inner }
    }
}

#[pymethods]
impl PyBettiTable {
    /// Build from `{(i, j): beta}`; values may be ints or Fractions.
    #[new]
    fn new(entries: &Bound<'_, PyDict>) -> PyResult<Self> {
        let mut raw = Vec::new();
        for (key, value) in entries.iter() {
            let (i, j): (usize, i64) = key.extract()?;
            raw.push(((i, j), rational(&value)?));
        }
        table::BettiTable::validate(raw).map(Into::into).map_err(py_err)
    }

    #[staticmethod]
    fn from_diagram(text: &str) -> PyResult<Self> {
        table::parse_betti_diagram(text).map(Into::into).map_err(py_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        table::BettiTable::from_json(text).map(Into::into).map_err(py_err)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn to_diagram(&self) -> String {
        self.inner.to_diagram()
    }

    #[getter]
    fn length(&self) -> usize {
        self.inner.length()
    }

    /// `(t, T)`: minimal and maximal shift of each column.
    fn shifts(&self) -> (Vec<i64>, Vec<i64>) {
        let s = self.inner.shifts();
        (s.min, s.max)
    }

    /// `(s, N)` when the table is self-dual, else `None`.
    fn is_self_dual(&self) -> Option<(usize, i64)> {
        table::is_self_dual(&self.inner)
    }

    fn get<'py>(&self, py: Python<'py>, i: usize, j: i64) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.get(i, j))
    }

    fn entries<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (i, j, v) in self.inner.entries() {
            d.set_item((i, j), fraction(py, v)?)?;
        }
        Ok(d)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("BettiTable.from_json('{}')", self.inner.to_json())
    }

    fn __str__(&self) -> String {
        self.inner.to_diagram()
    }
}

fn codim_of(t: &PyBettiTable, codim: Option<usize>) -> usize {
    codim.unwrap_or(t.inner.length())
}

#[pyfunction]
fn pure_betti(d: Vec<i64>) -> PyResult<PyBettiTable> {
    Ok(table::pure_betti(&sequence(d)?).into())
}

#[pyfunction]
fn symmetrized_pure(d: Vec<i64>, n: i64) -> PyResult<PyBettiTable> {
    table::symmetrized_pure(&sequence(d)?, n).map(Into::into).map_err(py_err)
}

#[pyfunction]
fn koszul_table(n: usize) -> PyResult<PyBettiTable> {
    explorer::koszul_table(n).map(Into::into).map_err(py_err)
}

/// `[e_0, ..., e_max_l]` from the h-polynomial.
#[pyfunction]
#[pyo3(signature = (table, max_l = 2, codim = None))]
fn hilbert_coefficients<'py>(
    py: Python<'py>,
    table: &PyBettiTable,
    max_l: usize,
    codim: Option<usize>,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let data = HilbertData::compute(&table.inner, codim_of(table, codim), max_l).map_err(py_err)?;
    data.coefficients.iter().map(|r| fraction(py, r)).collect()
}

#[pyfunction]
#[pyo3(signature = (table, l, codim = None))]
fn coefficient_nu<'py>(py: Python<'py>, table: &PyBettiTable, l: usize, codim: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let e = hilbert::coefficient_nu(&table.inner, codim_of(table, codim), l).map_err(py_err)?;
    fraction(py, &e)
}

#[pyfunction]
#[pyo3(signature = (table, codim = None))]
fn multiplicity_ps<'py>(py: Python<'py>, table: &PyBettiTable, codim: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let e = hilbert::multiplicity_ps(&table.inner, codim_of(table, codim)).map_err(py_err)?;
    fraction(py, &e)
}

/// `[(r, d), ...]` with `table == sum r * pure_betti(d)`.
#[pyfunction]
fn decompose<'py>(py: Python<'py>, table: &PyBettiTable) -> PyResult<Bound<'py, PyList>> {
    let dec = decomp::decompose(&table.inner).map_err(py_err)?;
    parts(py, &dec.parts)
}

/// `(N, [(r, d), ...])` with `table == sum r * symmetrized_pure(d, N)`.
#[pyfunction]
fn symmetric_decompose<'py>(py: Python<'py>, table: &PyBettiTable) -> PyResult<(i64, Bound<'py, PyList>)> {
    let dec = decomp::symmetric_decompose(&table.inner).map_err(py_err)?;
    Ok((dec.n, parts(py, &dec.parts)?))
}

#[pyfunction]
#[pyo3(signature = (table, decimal_digits = 6))]
fn bound_e0<'py>(py: Python<'py>, table: &PyBettiTable, decimal_digits: usize) -> PyResult<Bound<'py, PyDict>> {
    bound_dict(py, &bounds::bound_e0(&table.inner).map_err(py_err)?, decimal_digits)
}

#[pyfunction]
#[pyo3(signature = (table, decimal_digits = 6))]
fn bound_e1<'py>(py: Python<'py>, table: &PyBettiTable, decimal_digits: usize) -> PyResult<Bound<'py, PyDict>> {
    bound_dict(py, &bounds::bound_e1(&table.inner).map_err(py_err)?, decimal_digits)
}

#[pyfunction]
#[pyo3(signature = (table, j, decimal_digits = 6))]
fn bound_ej<'py>(py: Python<'py>, table: &PyBettiTable, j: usize, decimal_digits: usize) -> PyResult<Bound<'py, PyDict>> {
    bound_dict(py, &bounds::bound_ej(&table.inner, j).map_err(py_err)?, decimal_digits)
}

/// `(lhs, rhs, holds)` for the symmetrized-pure e_1 inequality.
#[pyfunction]
fn check_sym_pure_bound<'py>(py: Python<'py>, d: Vec<i64>) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>, bool)> {
    let c = bounds::check_sym_pure_bound(&sequence(d)?).map_err(py_err)?;
    Ok((fraction(py, &c.lhs)?, fraction(py, &c.rhs)?, c.holds))
}

#[pyfunction]
fn check_lemma_monotonicity(d: Vec<i64>, d_prime: Vec<i64>) -> PyResult<bool> {
    bounds::check_lemma_monotonicity(&sequence(d)?, &sequence(d_prime)?).map_err(py_err)
}

/// Exhaustive check; returns the report as a JSON string.
/// `checks` is any subset of `"prop"`, `"lemma"`, `"conj"`.
#[pyfunction]
#[pyo3(signature = (s_min, s_max, ds_max, checks = vec!["prop".to_string(), "lemma".to_string(), "conj".to_string()], j = 2, max_s = None, max_ds = None))]
#[allow(clippy::too_many_arguments)]
fn fuzz(
    py: Python<'_>,
    s_min: usize,
    s_max: usize,
    ds_max: i64,
    checks: Vec<String>,
    j: usize,
    max_s: Option<usize>,
    max_ds: Option<i64>,
) -> PyResult<String> {
    let checks = checks
        .iter()
        .map(|c| match c.as_str() {
            "prop" => Ok(Check::SymPureBound),
            "lemma" => Ok(Check::Monotonicity),
            "conj" => Ok(Check::EjBound(j)),
            other => Err(PyValueError::new_err(format!("unknown check {other:?}"))),
        })
        .collect::<PyResult<Vec<_>>>()?;
    let defaults = Guardrails::default();
    let mut spec = SearchSpec::new(s_min, s_max, ds_max, Constraint::DominatedByDual).with_checks(checks);
    spec.guardrails = Guardrails { max_s: max_s.unwrap_or(defaults.max_s), max_ds: max_ds.unwrap_or(defaults.max_ds) };
    let report = py.detach(|| explorer::fuzz(&spec)).map_err(py_err)?;
    Ok(report.to_json_value().to_string())
}

#[pyfunction]
fn nu<'py>(py: Python<'py>, m: usize, s: usize, l: usize) -> PyResult<Bound<'py, PyAny>> {
    int(py, &arith::nu(m, s, l))
}

#[pyfunction]
fn complete_homogeneous<'py>(py: Python<'py>, r: usize, values: Vec<i64>) -> PyResult<Bound<'py, PyAny>> {
    int(py, &arith::complete_homogeneous(r, &values))
}

#[pyfunction]
fn vandermonde<'py>(py: Python<'py>, t: usize, values: Vec<i64>) -> PyResult<Bound<'py, PyAny>> {
    int(py, &arith::vandermonde(t, &values).map_err(py_err)?)
}

#[pyfunction]
fn f_l<'py>(py: Python<'py>, y: Vec<i64>, l: usize) -> PyResult<Bound<'py, PyAny>> {
    int(py, &hilbert::f_l(&y, l))
}

#[pymodule(name = "bettikit")]
fn bettikit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBettiTable>()?;
    m.add_function(wrap_pyfunction!(pure_betti, m)?)?;
    m.add_function(wrap_pyfunction!(symmetrized_pure, m)?)?;
    m.add_function(wrap_pyfunction!(koszul_table, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(coefficient_nu, m)?)?;
    m.add_function(wrap_pyfunction!(multiplicity_ps, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(symmetric_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(bound_e0, m)?)?;
    m.add_function(wrap_pyfunction!(bound_e1, m)?)?;
    m.add_function(wrap_pyfunction!(bound_ej, m)?)?;
    m.add_function(wrap_pyfunction!(check_sym_pure_bound, m)?)?;
    m.add_function(wrap_pyfunction!(check_lemma_monotonicity, m)?)?;
    m.add_function(wrap_pyfunction!(fuzz, m)?)?;
    m.add_function(wrap_pyfunction!(nu, m)?)?;
    m.add_function(wrap_pyfunction!(complete_homogeneous, m)?)?;
    m.add_function(wrap_pyfunction!(vandermonde, m)?)?;
    m.add_function(wrap_pyfunction!(f_l, m)?)?;
    Ok(())
}
