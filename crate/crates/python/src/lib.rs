//! Python bindings: `eval`, `check`, `encode`, `decode` and the `Element` type.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use spinorqc_core::checks::{run_checks, CheckOptions, Selector};
use spinorqc_core::lang::{eval_str, Session, Value};
use spinorqc_core::majorana::SusyMode;
use spinorqc_core::tensor::{decode_state, encode_state};
use spinorqc_core::{Error, Scalar, StateVector, TensorMultivector};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn float_mode(mode: &str) -> PyResult<bool> {
    match mode {
        "exact" => Ok(false),
        "float" => Ok(true),
        other => Err(PyValueError::new_err(format!("mode must be 'exact' or 'float', got {other:?}"))),
    }
}

/// Evaluates an expression and returns its canonical text.
#[pyfunction]
#[pyo3(name = "eval", signature = (expr, mode = "exact"))]
fn eval_expr(expr: &str, mode: &str) -> PyResult<String> {
    if float_mode(mode)? {
        eval_str::<f64>(expr).map(|v| v.to_string()).map_err(err)
    } else {
        eval_str::<Scalar>(expr).map(|v| v.to_string()).map_err(err)
    }
}

/// Runs a verification suite and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (suite = "all", samples = None, seed = 0, a = "1", b = "1", c = "1", theta = 1, mode = "exact"))]
#[allow(clippy::too_many_arguments)]
fn check(suite: &str, samples: Option<usize>, seed: u64, a: &str, b: &str, c: &str, theta: i64, mode: &str) -> PyResult<String> {
    let selector: Selector = suite.parse().map_err(err)?;
    let susy_mode = if float_mode(mode)? { SusyMode::Float } else { SusyMode::ExactIfPossible };
    let opts = CheckOptions {
        samples,
        seed,
        a: a.parse().map_err(err)?,
        b: b.parse().map_err(err)?,
        c: c.parse().map_err(err)?,
        theta,
        susy_mode,
    };
    Ok(run_checks(selector, &opts).to_json())
}

/// Amplitude JSON (`{"n": .., "amps": [[re, im], ..]}`) to the canonical ideal element.
#[pyfunction]
fn encode(amplitudes: &str) -> PyResult<String> {
    let json: serde_json::Value = serde_json::from_str(amplitudes).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let t = encode_state(&StateVector::<Scalar>::from_json(&json).map_err(err)?);
    Ok(t.to_multivector().map_or_else(|| t.to_string(), |m| m.to_string()))
}

/// Ideal element expression to amplitude JSON.
#[pyfunction]
fn decode(expr: &str) -> PyResult<String> {
    let t = match eval_str::<Scalar>(expr).map_err(err)? {
        Value::Mv(m) => TensorMultivector::from_multivector(&m),
        Value::Tensor(t) => t,
        Value::Scalar(_) => return Err(err(Error::NotInIdeal)),
    };
    Ok(decode_state(&t).map_err(err)?.to_json().to_string())
}

/// An exact scalar, multivector or tensor element.
#[pyclass(frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Element {
    value: Value<Scalar>,
}

impl Element {
    fn combine(&self, other: &Element, expr: &str) -> PyResult<Element> {
        let mut session = Session::new();
        session.bind("x", self.value.clone());
        session.bind("y", other.value.clone());
        let value = session.run(expr).map_err(err)?.normalized();
        Ok(Element { value })
    }

    fn apply(&self, expr: &str) -> PyResult<Element> {
        self.combine(self, expr)
    }
}

#[pymethods]
impl Element {
    #[new]
    fn new(expr: &str) -> PyResult<Self> {
        Ok(Element { value: eval_str(expr).map_err(err)?.normalized() })
    }

    /// Number of tensor slots; `None` for a scalar.
    #[getter]
    fn slots(&self) -> Option<usize> {
        self.value.slots()
    }

    fn __str__(&self) -> String {
        self.value.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element('{}')", self.value)
    }

    fn __add__(&self, other: &Element) -> PyResult<Element> {
        self.combine(other, "x + y")
    }

    fn __sub__(&self, other: &Element) -> PyResult<Element> {
        self.combine(other, "x - y")
    }

    fn __mul__(&self, other: &Element) -> PyResult<Element> {
        self.combine(other, "x*y")
    }

    fn __neg__(&self) -> PyResult<Element> {
        self.apply("-x")
    }

    fn __pow__(&self, k: u32, modulo: Option<u32>) -> PyResult<Element> {
        if modulo.is_some() {
            return Err(PyZeroDivisionError::new_err("modular power is not defined"));
        }
        self.apply(&format!("x^{k}"))
    }

    /// Tensor product `self ox other`.
    fn ox(&self, other: &Element) -> PyResult<Element> {
        self.combine(other, "x ox y")
    }

    fn reverse(&self) -> PyResult<Element> {
        self.apply("rev(x)")
    }

    fn adjoint(&self) -> PyResult<Element> {
        self.apply("adj(x)")
    }

    fn grade(&self, k: usize) -> PyResult<Element> {
        self.apply(&format!("grade(x, {k})"))
    }

    /// `N(x) = ⟨x̃x⟩₀` as canonical text.
    fn norm(&self) -> PyResult<String> {
        Ok(self.apply("N(x)")?.value.to_string())
    }

    fn inner(&self, other: &Element) -> PyResult<String> {
        Ok(self.combine(other, "ip(x, y)")?.value.to_string())
    }
}

#[pymodule]
fn spinorqc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(eval_expr, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(encode, m)?)?;
    m.add_function(wrap_pyfunction!(decode, m)?)?;
    m.add_class::<Element>()?;
    Ok(())
}
