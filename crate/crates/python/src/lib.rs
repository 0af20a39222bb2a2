//! Python bindings. Partitions and weights are passed as lists or tuples of
//! integers; symmetric polynomials come back as `SymPoly` objects whose terms
//! map partition tuples to Python ints.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use schurtrunc::lorentzian::normalized_truncation;
use schurtrunc::partition::SkewShape;
use schurtrunc::sweep::{Suite, SweepConfig};
use schurtrunc::symfunc::{h_to_schur, to_monomial, Basis};
use schurtrunc::{jt, kostant, lorentzian, sweep, tableau, Partition, SymPoly, Weight};

fn value_error(e: schurtrunc::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(value_error)
}

fn parse_basis(name: &str) -> PyResult<Basis> {
    match name {
        "m" | "monomial" => Ok(Basis::Monomial),
        "h" | "complete" => Ok(Basis::Complete),
        "s" | "schur" => Ok(Basis::Schur),
        _ => Err(PyValueError::new_err(format!("unknown basis `{name}`"))),
    }
}

fn basis_name(b: Basis) -> &'static str {
    match b {
        Basis::Monomial => "monomial",
        Basis::Complete => "complete",
        Basis::Schur => "schur",
    }
}

fn from_json<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (value.to_string(),))
}

fn rank(n: Option<usize>, mu: &Partition, nu: &Partition) -> usize {
    n.unwrap_or_else(|| mu.len().max(nu.len() + 1))
}

/// A symmetric polynomial in `n` variables in the monomial, complete or Schur basis.
#[pyclass(name = "SymPoly", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySymPoly(SymPoly);

#[pymethods]
impl PySymPoly {
    #[new]
    #[pyo3(signature = (basis, n, terms=None))]
    fn new(basis: &str, n: usize, terms: Option<HashMap<Vec<u32>, BigInt>>) -> PyResult<Self> {
        let mut p = SymPoly::zero(parse_basis(basis)?, n);
        for (key, c) in terms.unwrap_or_default() {
            p.add_term(partition(key)?, c);
        }
        Ok(PySymPoly(p))
    }

    #[getter]
    fn basis(&self) -> &'static str {
        basis_name(self.0.basis())
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    /// `{partition tuple: coefficient}`.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (key, c) in self.0.terms() {
            d.set_item(PyTuple::new(py, key.parts())?, c.clone())?;
        }
        Ok(d)
    }

    fn coeff(&self, key: Vec<u32>) -> PyResult<BigInt> {
        Ok(self.0.coeff(&partition(key)?))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_nonnegative(&self) -> bool {
        self.0.is_nonnegative()
    }

    fn to_monomial(&self) -> PyResult<Self> {
        to_monomial(&self.0).map(PySymPoly).map_err(value_error)
    }

    /// Schur expansion of a complete-basis polynomial.
    fn to_schur(&self) -> PyResult<Self> {
        match self.0.basis() {
            Basis::Schur => Ok(self.clone()),
            _ => h_to_schur(&self.0).map(PySymPoly).map_err(value_error),
        }
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(PySymPoly).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.add(&other.0).map(PySymPoly).map_err(value_error)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.sub(&other.0).map(PySymPoly).map_err(value_error)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.mul(&other.0).map(PySymPoly).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("SymPoly({}, n={})", self.0, self.0.n())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyfunction]
fn schur(lam: Vec<u32>, n: usize) -> PyResult<PySymPoly> {
    Ok(PySymPoly(SymPoly::term(Basis::Schur, n, partition(lam)?, BigInt::from(1))))
}

/// `h_τ`; zero if any entry is negative.
#[pyfunction]
fn complete(tau: Vec<i64>, n: usize) -> PySymPoly {
    PySymPoly(schurtrunc::symfunc::h_of_vector(&Weight::new(tau), n))
}

#[pyfunction]
fn kostant_p(v: Vec<i64>) -> BigUint {
    kostant::kostant_p(&Weight::new(v))
}

/// `K_{λ,τ}` with rank `len(tau)`.
#[pyfunction]
fn kostka(lam: Vec<u32>, tau: Vec<i64>) -> PyResult<BigUint> {
    kostant::kostka(&partition(lam)?, &Weight::new(tau)).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (outer, content, inner=vec![]))]
fn count_ssyt(outer: Vec<u32>, content: Vec<i64>, inner: Vec<u32>) -> PyResult<BigUint> {
    let shape = SkewShape::new(partition(outer)?, partition(inner)?).map_err(value_error)?;
    Ok(tableau::count_ssyt(&shape, &Weight::new(content)))
}

/// Weight multiplicity of `τ` in the image of the `k`-th BGG differential for `L(ν)`.
#[pyfunction]
fn image_weight_mult(nu: Vec<u32>, k: usize, tau: Vec<i64>) -> PyResult<BigInt> {
    kostant::image_weight_mult(&partition(nu)?, k, &Weight::new(tau)).map_err(value_error)
}

/// `(w in one-line notation, ℓ(w), sign, h-vector)`.
type TermTuple = (Vec<usize>, usize, i32, Vec<i64>);

/// One tuple per `w ∈ S_n`.
#[pyfunction]
#[pyo3(signature = (mu, nu=vec![], n=None))]
fn jt_terms(mu: Vec<u32>, nu: Vec<u32>, n: Option<usize>) -> PyResult<Vec<TermTuple>> {
    let (mu, nu) = (partition(mu)?, partition(nu)?);
    let n = rank(n, &mu, &nu);
    let terms = jt::jt_terms(&mu, &nu, n).map_err(value_error)?;
    Ok(terms.into_iter().map(|t| (t.w.one_line(), t.w.length(), t.sign, t.hvector.entries().to_vec())).collect())
}

#[pyfunction]
#[pyo3(signature = (mu, nu=vec![], n=None))]
fn jt_determinant(mu: Vec<u32>, nu: Vec<u32>, n: Option<usize>) -> PyResult<PySymPoly> {
    let (mu, nu) = (partition(mu)?, partition(nu)?);
    let n = rank(n, &mu, &nu);
    jt::jt_determinant(&mu, &nu, n).map(PySymPoly).map_err(value_error)
}

/// The truncation `g^k` in the complete basis.
#[pyfunction]
#[pyo3(signature = (mu, nu=vec![], n=None, k=0))]
fn truncation(mu: Vec<u32>, nu: Vec<u32>, n: Option<usize>, k: usize) -> PyResult<PySymPoly> {
    let (mu, nu) = (partition(mu)?, partition(nu)?);
    let n = rank(n, &mu, &nu);
    jt::truncation(&mu, &nu, n, k).map(PySymPoly).map_err(value_error)
}

/// The truncation `g^k` in the Schur basis.
#[pyfunction]
#[pyo3(signature = (mu, nu=vec![], n=None, k=0))]
fn truncation_schur(mu: Vec<u32>, nu: Vec<u32>, n: Option<usize>, k: usize) -> PyResult<PySymPoly> {
    let (mu, nu) = (partition(mu)?, partition(nu)?);
    let n = rank(n, &mu, &nu);
    jt::truncation_schur(&mu, &nu, n, k).map(PySymPoly).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (mu, nu=vec![], n=None))]
fn positivity_report<'py>(py: Python<'py>, mu: Vec<u32>, nu: Vec<u32>, n: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let (mu, nu) = (partition(mu)?, partition(nu)?);
    let n = rank(n, &mu, &nu);
    let report = jt::positivity_report(&mu, &nu, n).map_err(value_error)?;
    from_json(py, &report.to_json())
}

/// Lorentzian check of the normalized truncation `g^k` of `μ`.
#[pyfunction]
#[pyo3(signature = (mu, k, n=None))]
fn is_lorentzian<'py>(py: Python<'py>, mu: Vec<u32>, k: usize, n: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let mu = partition(mu)?;
    let nu = Partition::empty();
    let n = rank(n, &mu, &nu);
    let f = normalized_truncation(&mu, &nu, n, k).map_err(value_error)?;
    let verdict = lorentzian::is_lorentzian(&f);
    let doc = serde_json::json!({
        "mu": mu.to_string(),
        "k": k,
        "n": n,
        "degree": f.degree(),
        "lorentzian": verdict.lorentzian,
        "failed_condition": verdict.failed_condition,
    });
    from_json(py, &doc)
}

/// Runs verification suites and returns the manifest.
#[pyfunction]
#[pyo3(signature = (max_boxes, n, suites=None))]
fn verify<'py>(py: Python<'py>, max_boxes: u32, n: usize, suites: Option<Vec<String>>) -> PyResult<Bound<'py, PyAny>> {
    let suites = match suites {
        None => Suite::ALL.to_vec(),
        Some(names) => names.iter().map(|s| s.parse()).collect::<Result<_, _>>().map_err(value_error)?,
    };
    let config = SweepConfig::new(max_boxes, n, suites);
    let manifest = py.detach(|| sweep::run(&config)).map_err(value_error)?;
    from_json(py, &manifest.to_json(false))
}

#[pymodule]
#[pyo3(name = "schurtrunc")]
fn schurtrunc_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySymPoly>()?;
    m.add_function(wrap_pyfunction!(schur, m)?)?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(kostant_p, m)?)?;
    m.add_function(wrap_pyfunction!(kostka, m)?)?;
    m.add_function(wrap_pyfunction!(count_ssyt, m)?)?;
    m.add_function(wrap_pyfunction!(image_weight_mult, m)?)?;
    m.add_function(wrap_pyfunction!(jt_terms, m)?)?;
    m.add_function(wrap_pyfunction!(jt_determinant, m)?)?;
    m.add_function(wrap_pyfunction!(truncation, m)?)?;
    m.add_function(wrap_pyfunction!(truncation_schur, m)?)?;
    m.add_function(wrap_pyfunction!(positivity_report, m)?)?;
    m.add_function(wrap_pyfunction!(is_lorentzian, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
