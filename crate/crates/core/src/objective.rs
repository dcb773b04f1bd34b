use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::Bounds;
use crate::rng::UniformSource;

/// Evaluation rule of an objective. The noise source is only consumed by
/// stochastic objectives.
pub type EvalFn = dyn Fn(&[f64], &mut dyn UniformSource) -> Result<f64> + Send + Sync;

/// A minimization problem over a box.
#[derive(Clone)]
pub struct ObjectiveSpec {
    pub name: String,
    pub bounds: Bounds,
    pub optimum_value: Option<f64>,
    pub optimum_point: Option<Vec<f64>>,
    eval: Arc<EvalFn>,
}

impl ObjectiveSpec {
    pub fn new<F>(name: impl Into<String>, bounds: Bounds, eval: F) -> Self
    where
        F: Fn(&[f64], &mut dyn UniformSource) -> Result<f64> + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            bounds,
            optimum_value: None,
            optimum_point: None,
            eval: Arc::new(eval),
        }
    }

    /// Wraps a deterministic, infallible function.
    pub fn from_fn<F>(name: impl Into<String>, bounds: Bounds, f: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self::new(name, bounds, move |x, _| Ok(f(x)))
    }

    pub fn with_optimum(mut self, value: f64, point: Option<Vec<f64>>) -> Self {
        self.optimum_value = Some(value);
        self.optimum_point = point;
        self
    }

    pub fn dimension(&self) -> usize {
        self.bounds.dim()
    }

    /// Evaluates `x`, rejecting wrong lengths and non-finite results.
    pub fn evaluate(&self, x: &[f64], noise: &mut dyn UniformSource) -> Result<f64> {
        self.bounds.check_dim(x)?;
        let value = (self.eval)(x, noise)?;
        if value.is_nan() {
            return Err(Error::Evaluation(format!("{} returned NaN", self.name)));
        }
        Ok(value)
    }
}

impl fmt::Debug for ObjectiveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ObjectiveSpec")
            .field("name", &self.name)
            .field("dimension", &self.dimension())
            .field("optimum_value", &self.optimum_value)
            .finish_non_exhaustive()
    }
}

/// Outcome of one optimizer run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    /// Best objective value found up to and including each iteration.
    pub best_so_far_trace: Vec<f64>,
    pub evaluations: u64,
}

/// Running minimum tracker shared by all optimizers.
#[derive(Debug, Clone)]
pub(crate) struct BestSoFar {
    pub position: Vec<f64>,
    pub fitness: f64,
}

impl BestSoFar {
    pub fn new(position: &[f64], fitness: f64) -> Self {
        Self {
            position: position.to_vec(),
            fitness,
        }
    }

    pub fn offer(&mut self, position: &[f64], fitness: f64) {
        if fitness < self.fitness {
            self.fitness = fitness;
            self.position.clear();
            self.position.extend_from_slice(position);
        }
    }

    /// Best of a non-empty set of candidates, lowest index on ties.
    pub fn from_candidates<'a>(mut it: impl Iterator<Item = (&'a [f64], f64)>) -> Self {
        let (p, f) = it.next().expect("at least one candidate");
        let mut best = Self::new(p, f);
        for (p, f) in it {
            best.offer(p, f);
        }
        best
    }
}
