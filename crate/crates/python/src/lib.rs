//! Python bindings: benchmark evaluation, single runs, minimization of Python
//! callables, summary statistics and the rank-sum test.

use std::path::PathBuf;

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use sso_core::benchmarks::{self, BenchmarkId, DIMENSION};
use sso_core::harness::{self, Algorithm, ExperimentConfig};
use sso_core::{stats, Bounds, Error, ObjectiveSpec, RandomStream};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Io(io) => PyIOError::new_err(io.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Outcome of one optimization run.
#[pyclass(name = "RunRecord", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyRunRecord {
    best_position: Vec<f64>,
    best_fitness: f64,
    best_so_far_trace: Vec<f64>,
    evaluations: u64,
}

#[pymethods]
impl PyRunRecord {
    fn __repr__(&self) -> String {
        format!(
            "RunRecord(best_fitness={:e}, iterations={}, evaluations={})",
            self.best_fitness,
            self.best_so_far_trace.len(),
            self.evaluations
        )
    }
}

impl From<sso_core::RunRecord> for PyRunRecord {
    fn from(r: sso_core::RunRecord) -> Self {
        Self {
            best_position: r.best_position,
            best_fitness: r.best_fitness,
            best_so_far_trace: r.best_so_far_trace,
            evaluations: r.evaluations,
        }
    }
}

fn settings(iterations: usize, population: usize, pf: f64) -> ExperimentConfig {
    ExperimentConfig {
        iterations,
        population,
        pf,
        ..ExperimentConfig::default()
    }
}

/// Benchmark registry as a list of dicts.
#[pyfunction]
fn list_functions(py: Python<'_>) -> PyResult<Vec<Bound<'_, PyDict>>> {
    benchmarks::list_functions()
        .into_iter()
        .map(|e| {
            let d = PyDict::new(py);
            let (lo, hi) = e.id.domain();
            d.set_item("id", e.id.as_str())?;
            d.set_item("name", e.name)?;
            d.set_item("low", lo)?;
            d.set_item("high", hi)?;
            d.set_item("optimum", e.spec.optimum_value)?;
            d.set_item("optimum_testable", e.optimum_testable)?;
            Ok(d)
        })
        .collect()
}

/// Evaluates benchmark `function` at a 30-dimensional `x`. `seed` drives
/// the noise of f7.
#[pyfunction]
#[pyo3(signature = (function, x, seed = 0))]
fn evaluate(function: &str, x: Vec<f64>, seed: u64) -> PyResult<f64> {
    benchmarks::evaluate(function, &x, &mut RandomStream::new(seed)).map_err(to_py)
}

/// Runs `algorithm` ("sso", "pso" or "abc") once on a benchmark function.
#[pyfunction]
#[pyo3(signature = (algorithm, function, iterations = 1000, population = 50, pf = 0.7, seed = 0, dimension = DIMENSION))]
#[allow(clippy::too_many_arguments)]
fn run(
    py: Python<'_>,
    algorithm: &str,
    function: &str,
    iterations: usize,
    population: usize,
    pf: f64,
    seed: u64,
    dimension: usize,
) -> PyResult<PyRunRecord> {
    let algorithm: Algorithm = algorithm.parse().map_err(to_py)?;
    let id: BenchmarkId = function.parse().map_err(to_py)?;
    let cfg = settings(iterations, population, pf);
    cfg.validate().map_err(to_py)?;
    let spec = id.objective(dimension);
    py.detach(|| harness::run_algorithm(algorithm, &spec, &cfg, seed))
        .map(Into::into)
        .map_err(to_py)
}

/// Minimizes a Python callable `func(list[float]) -> float` over the box
/// `[low, high]`.
#[pyfunction]
#[pyo3(signature = (func, low, high, algorithm = "sso", iterations = 1000, population = 50, pf = 0.7, seed = 0))]
#[allow(clippy::too_many_arguments)]
fn minimize(
    func: Py<PyAny>,
    low: Vec<f64>,
    high: Vec<f64>,
    algorithm: &str,
    iterations: usize,
    population: usize,
    pf: f64,
    seed: u64,
) -> PyResult<PyRunRecord> {
    let algorithm: Algorithm = algorithm.parse().map_err(to_py)?;
    let bounds = Bounds::new(low, high).map_err(to_py)?;
    let cfg = settings(iterations, population, pf);
    cfg.validate().map_err(to_py)?;
    let spec = ObjectiveSpec::new("python", bounds, move |x, _| {
        Python::attach(|py| {
            func.call1(py, (x.to_vec(),))
                .and_then(|v| v.extract::<f64>(py))
                .map_err(|e| Error::Evaluation(e.to_string()))
        })
    });
    harness::run_algorithm(algorithm, &spec, &cfg, seed)
        .map(Into::into)
        .map_err(to_py)
}

/// Mean, median and sample standard deviation of final best values.
#[pyfunction]
fn summarize(py: Python<'_>, values: Vec<f64>) -> PyResult<Bound<'_, PyDict>> {
    let s = stats::summarize(&values).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("ab", s.ab)?;
    d.set_item("mb", s.mb)?;
    d.set_item("sd", s.sd)?;
    d.set_item("n_runs", s.n_runs)?;
    Ok(d)
}

/// Two-sided Wilcoxon rank-sum p-value.
#[pyfunction]
fn wilcoxon_ranksum(a: Vec<f64>, b: Vec<f64>) -> PyResult<f64> {
    stats::wilcoxon_ranksum(&a, &b).map_err(to_py)
}

/// Runs a campaign into `out` and returns the summary rows.
#[pyfunction]
#[pyo3(signature = (out, functions = None, algorithms = None, runs = 30, iterations = 1000, population = 50, pf = 0.7, seed = 0))]
#[allow(clippy::too_many_arguments)]
fn run_campaign(
    py: Python<'_>,
    out: PathBuf,
    functions: Option<Vec<String>>,
    algorithms: Option<Vec<String>>,
    runs: u64,
    iterations: usize,
    population: usize,
    pf: f64,
    seed: u64,
) -> PyResult<Vec<Bound<'_, PyDict>>> {
    let args = harness::RunArgs {
        functions: functions.map(|f| f.join(",")),
        algorithms: algorithms.map(|a| a.join(",")),
        runs: Some(runs.to_string()),
        iterations: Some(iterations.to_string()),
        population: Some(population.to_string()),
        pf: Some(pf.to_string()),
        seed: Some(seed.to_string()),
        out: Some(out),
        config: None,
    };
    let cfg = harness::parse_config(None, &args).map_err(to_py)?;
    let table = py.detach(|| harness::run_campaign(&cfg)).map_err(to_py)?;
    table
        .rows
        .iter()
        .map(|((f, a), s)| {
            let d = PyDict::new(py);
            d.set_item("function", f.as_str())?;
            d.set_item("algorithm", a.as_str())?;
            d.set_item("ab", s.ab)?;
            d.set_item("mb", s.mb)?;
            d.set_item("sd", s.sd)?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
fn sso_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRunRecord>()?;
    m.add_function(wrap_pyfunction!(list_functions, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(minimize, m)?)?;
    m.add_function(wrap_pyfunction!(summarize, m)?)?;
    m.add_function(wrap_pyfunction!(wilcoxon_ranksum, m)?)?;
    m.add_function(wrap_pyfunction!(run_campaign, m)?)?;
    Ok(())
}
