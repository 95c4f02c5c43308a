//! Python bindings: instances, solutions, both solvers and verification.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use rbcenter::io::{self, Family};
use rbcenter::{Error, Line, Point};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::NumericFailure(_) | Error::Io(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn points_from(rows: Vec<Vec<f64>>) -> PyResult<Vec<Point>> {
    rows.into_iter().map(|c| Point::new(c).map_err(to_py)).collect()
}

fn rows(points: &[Point]) -> Vec<Vec<f64>> {
    points.iter().map(|p| p.coords().to_vec()).collect()
}

/// A clustering instance. `line` is an optional `(origin, direction)` pair.
#[pyclass(name = "Instance", module = "rbcenter", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyInstance {
    inner: rbcenter::Instance,
}

#[pymethods]
impl PyInstance {
    #[new]
    #[pyo3(signature = (points, p, q, alpha, line = None))]
    fn new(points: Vec<Vec<f64>>, p: usize, q: usize, alpha: f64, line: Option<(Vec<f64>, Vec<f64>)>) -> PyResult<Self> {
        let mut inner = rbcenter::Instance::new(points_from(points)?, p, q, alpha).map_err(to_py)?;
        if let Some((origin, direction)) = line {
            let origin = Point::new(origin).map_err(to_py)?;
            let direction = Point::new(direction).map_err(to_py)?;
            inner = inner.with_line(Line::new(origin, direction).map_err(to_py)?).map_err(to_py)?;
        }
        Ok(PyInstance { inner })
    }

    /// Parses the JSON instance format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::parse_instance(text).map(|inner| PyInstance { inner }).map_err(to_py)
    }

    fn to_json(&self) -> String {
        io::serialize_instance(&self.inner)
    }

    #[getter]
    fn points(&self) -> Vec<Vec<f64>> {
        rows(self.inner.points())
    }

    #[getter]
    fn p(&self) -> usize {
        self.inner.p()
    }

    #[getter]
    fn q(&self) -> usize {
        self.inner.q()
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.inner.alpha()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn line(&self) -> Option<(Vec<f64>, Vec<f64>)> {
        self.inner
            .line()
            .map(|l| (l.origin().coords().to_vec(), l.direction().coords().to_vec()))
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!(
            "Instance(n={}, dim={}, p={}, q={}, alpha={}, line={})",
            self.inner.n(),
            self.inner.dim(),
            self.inner.p(),
            self.inner.q(),
            self.inner.alpha(),
            self.inner.line().is_some()
        )
    }
}

/// Red and blue centers with the covering radius they achieve.
#[pyclass(name = "Solution", module = "rbcenter", frozen, from_py_object)]
#[derive(Clone)]
pub struct PySolution {
    inner: rbcenter::Solution,
}

#[pymethods]
impl PySolution {
    #[new]
    fn new(red: Vec<Vec<f64>>, blue: Vec<Vec<f64>>, radius: f64) -> PyResult<Self> {
        Ok(PySolution {
            inner: rbcenter::Solution {
                red: points_from(red)?,
                blue: points_from(blue)?,
                radius,
            },
        })
    }

    #[getter]
    fn red(&self) -> Vec<Vec<f64>> {
        rows(&self.inner.red)
    }

    #[getter]
    fn blue(&self) -> Vec<Vec<f64>> {
        rows(&self.inner.blue)
    }

    #[getter]
    fn radius(&self) -> f64 {
        self.inner.radius
    }

    fn min_red_blue_separation(&self) -> f64 {
        self.inner.min_red_blue_separation()
    }

    fn __repr__(&self) -> String {
        format!(
            "Solution(red={}, blue={}, radius={})",
            self.inner.red.len(),
            self.inner.blue.len(),
            self.inner.radius
        )
    }
}

/// Bi-criteria approximation: radius within 8x optimal, separation at least 3α/4.
#[pyfunction]
fn solve_approx(instance: &PyInstance) -> PySolution {
    PySolution {
        inner: rbcenter::solve_approx(&instance.inner),
    }
}

/// Exact optimum with every center on the instance's line.
#[pyfunction]
fn solve_constrained(instance: &PyInstance) -> PyResult<PySolution> {
    let line = instance.inner.line().ok_or(Error::MissingLine).map_err(to_py)?;
    let sol = rbcenter::solve_constrained(&instance.inner).map_err(to_py)?;
    Ok(PySolution {
        inner: sol.to_solution(line),
    })
}

/// Sorted candidate radii for the line-constrained problem.
#[pyfunction]
fn candidate_radii(instance: &PyInstance) -> PyResult<Vec<f64>> {
    let frame = rbcenter::to_x_axis(&instance.inner).map_err(to_py)?;
    Ok(rbcenter::candidate_radii(frame.instance().points(), instance.inner.alpha()).values)
}

/// Coverage and separation of `solution` on `instance`, as a dict.
#[pyfunction]
fn verify<'py>(py: Python<'py>, instance: &PyInstance, solution: &PySolution) -> PyResult<Bound<'py, PyDict>> {
    let rep = rbcenter::verify(&instance.inner, &solution.inner);
    let out = PyDict::new(py);
    out.set_item("covered", rep.covered)?;
    out.set_item("min_red_blue_separation", rep.min_red_blue_separation)?;
    out.set_item("covering_radius_actual", rep.covering_radius_actual)?;
    Ok(out)
}

/// Seeded random instance; `family` is `uniform`, `clustered` or `collinear`.
#[pyfunction]
#[pyo3(signature = (seed, n, d, p, q, alpha, family = "uniform"))]
fn generate(seed: u64, n: usize, d: usize, p: usize, q: usize, alpha: f64, family: &str) -> PyResult<PyInstance> {
    let family: Family = family.parse().map_err(to_py)?;
    io::generate(seed, n, d, p, q, alpha, family)
        .map(|inner| PyInstance { inner })
        .map_err(to_py)
}

#[pymodule]
#[pyo3(name = "rbcenter")]
fn rbcenter_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInstance>()?;
    m.add_class::<PySolution>()?;
    m.add_function(wrap_pyfunction!(solve_approx, m)?)?;
    m.add_function(wrap_pyfunction!(solve_constrained, m)?)?;
    m.add_function(wrap_pyfunction!(candidate_radii, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    Ok(())
}
