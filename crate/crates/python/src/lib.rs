//! Python bindings for `zagier-core`.
//!
//! Exact values come back as `fractions.Fraction`. Evaluation points may be
//! given as `Fraction`, `int`, `float` or a string such as `"1/3"`.

use std::str::FromStr;

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyString;

use zagier_core::exact;
use zagier_core::formulas::{self, ConvergenceSeries, Point};
use zagier_core::series::{self, SeriesConfig};
use zagier_core::verify::{run_suite, Identity, VerifyOptions};
use zagier_core::{BigRational, Error};

create_exception!(zagier_kit, NonConvergenceError, PyRuntimeError, "A series or integral missed its tolerance.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::NonConvergence { .. } | Error::Quadrature { .. } => NonConvergenceError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, q: &BigRational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((q.numer().clone(), q.denom().clone()))
}

/// Reads a Python number or string as a point. Strings follow the CLI
/// rules: `p/q` and integers are exact, decimals snap to nearby small-denominator
/// rationals. Floats are kept as doubles.
fn point(obj: &Bound<'_, PyAny>) -> PyResult<Point> {
    if let Ok(s) = obj.cast::<PyString>() {
        let p = Point::from_str(s.to_str()?).map_err(py_err)?;
        return Ok(p.snap().0);
    }
    if let Ok(v) = obj.extract::<BigInt>() {
        return Ok(Point::Rational(BigRational::from_integer(v)));
    }
    if let (Ok(num), Ok(den)) = (obj.getattr("numerator"), obj.getattr("denominator")) {
        if let (Ok(num), Ok(den)) = (num.extract::<BigInt>(), den.extract::<BigInt>()) {
            if den == BigInt::from(0) {
                return Err(PyValueError::new_err("zero denominator"));
            }
            return Ok(Point::Rational(BigRational::new(num, den)));
        }
    }
    let v: f64 = obj.extract()?;
    if !v.is_finite() {
        return Err(PyValueError::new_err(format!("{v} is not finite")));
    }
    Ok(Point::Float(v))
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<BigRational> {
    point(obj)?.rational().map_err(py_err)
}

fn config(tol: f64, max_terms: usize) -> PyResult<SeriesConfig> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(PyValueError::new_err(format!("tol must lie in (0, 1), got {tol}")));
    }
    if max_terms == 0 {
        return Err(PyValueError::new_err("max_terms must be positive"));
    }
    Ok(SeriesConfig { tol, max_terms, ..SeriesConfig::default() })
}

#[pyfunction]
fn bernoulli_number(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &exact::bernoulli_number(n))
}

/// `B*_n`, the modified Bernoulli number.
#[pyfunction]
fn modified_bernoulli(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &exact::modified_bernoulli(n))
}

/// `B*_n(x)` in exact arithmetic.
#[pyfunction]
fn zagier_eval<'py>(py: Python<'py>, n: usize, x: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &exact::zagier_eval(n, &rational(x)?))
}

/// Coefficients of `B*_n(x)`, constant term first.
#[pyfunction]
fn zagier_polynomial(py: Python<'_>, n: usize) -> PyResult<Vec<Bound<'_, PyAny>>> {
    exact::zagier_polynomial(n).coeffs().iter().map(|c| fraction(py, c)).collect()
}

#[pyfunction]
fn bernoulli_polynomial(py: Python<'_>, n: usize) -> PyResult<Vec<Bound<'_, PyAny>>> {
    exact::bernoulli_polynomial(n).coeffs().iter().map(|c| fraction(py, c)).collect()
}

#[pyfunction]
fn jacobi_symbol(a: i64, n: i64) -> PyResult<i8> {
    exact::jacobi_symbol(a, n).map_err(py_err)
}

/// `B*_{2n+1}` from its closed form.
#[pyfunction]
fn odd_modified_closed_form(py: Python<'_>, n: u64) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &exact::odd_modified_closed_form(n))
}

#[pyfunction]
fn two_adic_valuation_prediction(n: u64) -> PyResult<i64> {
    exact::two_adic_valuation_prediction(n).map_err(py_err)
}

/// Outcome of one numeric formula compared with its exact value.
#[pyclass(frozen, skip_from_py_object, module = "zagier_kit")]
struct EvalReport {
    #[pyo3(get)]
    label: &'static str,
    #[pyo3(get)]
    n: usize,
    #[pyo3(get)]
    x: Option<String>,
    exact: Option<BigRational>,
    #[pyo3(get)]
    reference: f64,
    #[pyo3(get)]
    formula_value: f64,
    #[pyo3(get)]
    abs_error: f64,
    #[pyo3(get)]
    rel_error: f64,
    #[pyo3(get)]
    terms_used: usize,
    #[pyo3(get)]
    tail_bound: f64,
}

#[pymethods]
impl EvalReport {
    #[getter]
    fn exact<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        self.exact.as_ref().map(|q| fraction(py, q)).transpose()
    }

    fn __repr__(&self) -> String {
        format!(
            "EvalReport(label={:?}, n={}, x={:?}, formula_value={:e}, abs_error={:e})",
            self.label, self.n, self.x, self.formula_value, self.abs_error
        )
    }
}

impl From<formulas::EvalReport> for EvalReport {
    fn from(r: formulas::EvalReport) -> Self {
        Self {
            label: r.label,
            n: r.n,
            x: r.x.as_ref().map(ToString::to_string),
            terms_used: r.terms_used(),
            tail_bound: r.tail_bound(),
            exact: r.exact,
            reference: r.reference,
            formula_value: r.formula_value,
            abs_error: r.abs_error,
            rel_error: r.rel_error,
        }
    }
}

/// `B*_{2n}(x)` from its Bessel–Chebyshev formula.
#[pyfunction]
#[pyo3(signature = (n, x, tol = 1e-9, max_terms = 20_000))]
fn zagier_even_formula(n: usize, x: &Bound<'_, PyAny>, tol: f64, max_terms: usize) -> PyResult<EvalReport> {
    let (x, cfg) = (point(x)?, config(tol, max_terms)?);
    formulas::zagier_even_formula(n, &x, &cfg).map(Into::into).map_err(py_err)
}

/// `B*_{2n+1}(x)` from its Bessel–Chebyshev formula.
#[pyfunction]
#[pyo3(signature = (n, x, tol = 1e-9, max_terms = 20_000))]
fn zagier_odd_formula(n: usize, x: &Bound<'_, PyAny>, tol: f64, max_terms: usize) -> PyResult<EvalReport> {
    let (x, cfg) = (point(x)?, config(tol, max_terms)?);
    formulas::zagier_odd_formula(n, &x, &cfg).map(Into::into).map_err(py_err)
}

/// `B*_{2n}` from its Bessel series.
#[pyfunction]
#[pyo3(signature = (n, tol = 1e-9, max_terms = 20_000))]
fn zagier_number_formula(n: usize, tol: f64, max_terms: usize) -> PyResult<EvalReport> {
    formulas::zagier_number_formula(n, &config(tol, max_terms)?).map(Into::into).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (n, tol = 1e-9, max_terms = 20_000))]
fn zagier_type_sum(n: usize, tol: f64, max_terms: usize) -> PyResult<EvalReport> {
    formulas::zagier_type_sum(n, &config(tol, max_terms)?).map(Into::into).map_err(py_err)
}

#[pyfunction]
fn even_asymptotic(n: usize, x: f64) -> f64 {
    formulas::even_asymptotic(n, x)
}

#[pyfunction]
fn odd_asymptotic(n: usize, x: f64) -> f64 {
    formulas::odd_asymptotic(n, x)
}

#[pyclass(frozen, skip_from_py_object, module = "zagier_kit")]
#[derive(Clone)]
struct SeriesResult {
    #[pyo3(get)]
    value: f64,
    #[pyo3(get)]
    terms_used: usize,
    #[pyo3(get)]
    tail_bound: f64,
    #[pyo3(get)]
    accelerated: bool,
}

#[pymethods]
impl SeriesResult {
    fn __repr__(&self) -> String {
        format!(
            "SeriesResult(value={:e}, terms_used={}, tail_bound={:e}, accelerated={})",
            self.value,
            self.terms_used,
            self.tail_bound,
            if self.accelerated { "True" } else { "False" }
        )
    }
}

impl From<series::SeriesResult> for SeriesResult {
    fn from(r: series::SeriesResult) -> Self {
        Self { value: r.value, terms_used: r.terms_used, tail_bound: r.tail_bound, accelerated: r.accelerated }
    }
}

/// `sum_m (-1)^n pi Y_{2n}(4 pi m) cos(2 pi m x)`.
#[pyfunction]
#[pyo3(signature = (n, x, tol = 1e-9, max_terms = 20_000))]
fn bessel_cos_series(n: usize, x: f64, tol: f64, max_terms: usize) -> PyResult<SeriesResult> {
    series::bessel_cos_series(n, x, &config(tol, max_terms)?).map(Into::into).map_err(py_err)
}

/// `sum_m (-1)^n pi Y_{2n+1}(4 pi m) sin(2 pi m x)`.
#[pyfunction]
#[pyo3(signature = (n, x, tol = 1e-9, max_terms = 20_000))]
fn bessel_sin_series(n: usize, x: f64, tol: f64, max_terms: usize) -> PyResult<SeriesResult> {
    series::bessel_sin_series(n, x, &config(tol, max_terms)?).map(Into::into).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (tol = 1e-12))]
fn telescope_sum(tol: f64) -> PyResult<SeriesResult> {
    series::telescope_sum(tol).map(Into::into).map_err(py_err)
}

/// Returns `(cos_sum_half, sin_sum_half, higher)` where `higher` maps `k` to the
/// cosine and sine sums with exponent `k/2`.
#[pyfunction]
fn trig_power_sums(x: f64) -> PyResult<(f64, f64, std::collections::BTreeMap<u32, (f64, f64)>)> {
    let t = series::trig_power_sums(x).map_err(py_err)?;
    Ok((t.cos_sum_half, t.sin_sum_half, t.higher))
}

#[pyclass(frozen, get_all, skip_from_py_object, module = "zagier_kit")]
#[derive(Clone)]
struct CheckCase {
    case: String,
    value: f64,
    reference: f64,
    error: f64,
    tolerance: f64,
    passed: bool,
    detail: Option<String>,
}

#[pymethods]
impl CheckCase {
    fn __repr__(&self) -> String {
        format!("CheckCase(case={:?}, error={:e}, passed={})", self.case, self.error, self.passed)
    }
}

#[pyclass(frozen, get_all, skip_from_py_object, module = "zagier_kit")]
struct SuiteReport {
    identity: &'static str,
    passed: bool,
    cases: Vec<CheckCase>,
}

#[pymethods]
impl SuiteReport {
    fn __repr__(&self) -> String {
        format!("SuiteReport(identity={:?}, passed={}, cases={})", self.identity, self.passed, self.cases.len())
    }
}

/// Names accepted by [`verify`].
#[pyfunction]
fn identities() -> Vec<&'static str> {
    Identity::ALL.iter().map(|i| i.name()).collect()
}

/// Runs one identity suite, or every suite for `"all"`.
#[pyfunction]
#[pyo3(signature = (identity, n_max = 60, tol = 1e-9))]
fn verify(py: Python<'_>, identity: &str, n_max: usize, tol: f64) -> PyResult<Vec<SuiteReport>> {
    let ids = if identity == "all" {
        Identity::ALL.to_vec()
    } else {
        vec![identity.parse::<Identity>().map_err(py_err)?]
    };
    let opts = VerifyOptions { series: config(tol, 20_000)?, n_max, ..VerifyOptions::default() };
    let reports = py.detach(|| ids.iter().map(|&id| run_suite(id, &opts)).collect::<Vec<_>>());
    Ok(reports
        .into_iter()
        .map(|r| SuiteReport {
            identity: r.identity.name(),
            passed: r.passed(),
            cases: r
                .cases
                .into_iter()
                .map(|c| CheckCase {
                    case: c.case,
                    value: c.value,
                    reference: c.reference,
                    error: c.error,
                    tolerance: c.tolerance,
                    passed: c.passed,
                    detail: c.detail,
                })
                .collect(),
        })
        .collect())
}

/// Plain against accelerated partial sums. Each row is a dict with keys
/// `terms`, `naive`, `naive_error`, `accelerated`, `accelerated_error`,
/// `tail_bound` and `target`.
#[pyfunction]
#[pyo3(signature = (series, n, x, terms, tail_order = 2))]
fn convergence_study(
    py: Python<'_>,
    series: &str,
    n: usize,
    x: &Bound<'_, PyAny>,
    terms: Vec<usize>,
    tail_order: usize,
) -> PyResult<Vec<std::collections::BTreeMap<&'static str, f64>>> {
    let series = ConvergenceSeries::from_str(series).map_err(py_err)?;
    let x = point(x)?;
    let cfg = SeriesConfig { tail_order, ..SeriesConfig::default() };
    let rows = py.detach(|| formulas::convergence_study(series, n, &x, &terms, &cfg)).map_err(py_err)?;
    Ok(rows
        .into_iter()
        .map(|r| {
            [
                ("terms", r.terms as f64),
                ("naive", r.naive),
                ("naive_error", r.naive_error),
                ("accelerated", r.accelerated),
                ("accelerated_error", r.accelerated_error),
                ("tail_bound", r.tail_bound),
                ("target", r.target),
            ]
            .into_iter()
            .collect()
        })
        .collect())
}

#[pymodule]
fn zagier_kit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("NonConvergenceError", m.py().get_type::<NonConvergenceError>())?;
    m.add_class::<EvalReport>()?;
    m.add_class::<SeriesResult>()?;
    m.add_class::<CheckCase>()?;
    m.add_class::<SuiteReport>()?;
    m.add_function(wrap_pyfunction!(bernoulli_number, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(modified_bernoulli, m)?)?;
    m.add_function(wrap_pyfunction!(zagier_eval, m)?)?;
    m.add_function(wrap_pyfunction!(zagier_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(jacobi_symbol, m)?)?;
    m.add_function(wrap_pyfunction!(odd_modified_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(two_adic_valuation_prediction, m)?)?;
    m.add_function(wrap_pyfunction!(zagier_even_formula, m)?)?;
    m.add_function(wrap_pyfunction!(zagier_odd_formula, m)?)?;
    m.add_function(wrap_pyfunction!(zagier_number_formula, m)?)?;
    m.add_function(wrap_pyfunction!(zagier_type_sum, m)?)?;
    m.add_function(wrap_pyfunction!(even_asymptotic, m)?)?;
    m.add_function(wrap_pyfunction!(odd_asymptotic, m)?)?;
    m.add_function(wrap_pyfunction!(bessel_cos_series, m)?)?;
    m.add_function(wrap_pyfunction!(bessel_sin_series, m)?)?;
    m.add_function(wrap_pyfunction!(telescope_sum, m)?)?;
    m.add_function(wrap_pyfunction!(trig_power_sums, m)?)?;
    m.add_function(wrap_pyfunction!(identities, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(convergence_study, m)?)?;
    Ok(())
}
