//! Artificial bee colony: half the colony are employed bees each bound to a
//! food source, the other half onlookers that pick sources by
//! fitness-proportional roulette. A source whose trial counter exceeds
//! `limit` is abandoned and re-seeded by a scout.

use crate::error::{Error, Result};
use crate::objective::{BestSoFar, ObjectiveSpec, RunRecord};
use crate::rng::{Purpose, RandomStream, UniformSource};
use crate::sso::roulette_select;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbcParams {
    /// Employed plus onlooker bees; the number of food sources is half.
    pub colony_size: usize,
    pub max_iterations: usize,
    pub limit: u32,
    pub seed: u64,
}

impl Default for AbcParams {
    fn default() -> Self {
        Self {
            colony_size: 50,
            max_iterations: 1000,
            limit: 100,
            seed: 0,
        }
    }
}

impl AbcParams {
    pub fn food_sources(&self) -> usize {
        self.colony_size / 2
    }

    pub fn validate(&self) -> Result<()> {
        if self.food_sources() < 2 {
            return Err(Error::Parameter(format!(
                "colony_size must be at least 4, got {}",
                self.colony_size
            )));
        }
        if self.limit < 1 {
            return Err(Error::Parameter("limit must be at least 1".into()));
        }
        Ok(())
    }
}

/// Quality transform for a minimization objective value.
pub fn abc_fitness(f: f64) -> f64 {
    if f >= 0.0 {
        1.0 / (1.0 + f)
    } else {
        1.0 + f.abs()
    }
}

/// Onlooker selection probabilities: fitness over total fitness.
pub fn onlooker_probabilities(fitness: &[f64]) -> Vec<f64> {
    let total: f64 = fitness.iter().sum();
    fitness.iter().map(|q| q / total).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct FoodSource {
    pub position: Vec<f64>,
    pub value: f64,
    pub fitness: f64,
    pub trials: u32,
}

/// The colony's food sources and the run state around them.
#[derive(Debug)]
pub struct FoodSources<'a> {
    spec: &'a ObjectiveSpec,
    params: AbcParams,
    sources: Vec<FoodSource>,
    best: BestSoFar,
    init: RandomStream,
    ops: RandomStream,
    noise: RandomStream,
    evaluations: u64,
    trace: Vec<f64>,
}

impl<'a> FoodSources<'a> {
    pub fn new(spec: &'a ObjectiveSpec, params: AbcParams) -> Result<Self> {
        params.validate()?;
        let mut colony = Self {
            spec,
            params,
            sources: Vec::with_capacity(params.food_sources()),
            best: BestSoFar::new(&[], f64::INFINITY),
            init: RandomStream::derive(params.seed, Purpose::Initialization),
            ops: RandomStream::derive(params.seed, Purpose::Operators),
            noise: RandomStream::derive(params.seed, Purpose::ObjectiveNoise),
            evaluations: 0,
            trace: Vec::with_capacity(params.max_iterations),
        };
        for _ in 0..params.food_sources() {
            let source = colony.random_source()?;
            colony.sources.push(source);
        }
        Ok(colony)
    }

    pub fn sources(&self) -> &[FoodSource] {
        &self.sources
    }

    pub fn best_fitness(&self) -> f64 {
        self.best.fitness
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    fn evaluate(&mut self, x: &[f64]) -> Result<f64> {
        let f = self.spec.evaluate(x, &mut self.noise)?;
        self.evaluations += 1;
        self.best.offer(x, f);
        Ok(f)
    }

    fn random_source(&mut self) -> Result<FoodSource> {
        let bounds = &self.spec.bounds;
        let position: Vec<f64> = bounds
            .low()
            .iter()
            .zip(bounds.high())
            .map(|(lo, hi)| lo + self.init.uniform() * (hi - lo))
            .collect();
        let value = self.evaluate(&position)?;
        Ok(FoodSource {
            position,
            value,
            fitness: abc_fitness(value),
            trials: 0,
        })
    }

    /// Perturbs one random coordinate of source `i` relative to a random
    /// peer and keeps the candidate only if its fitness is higher.
    /// Returns whether the source improved.
    pub fn explore(&mut self, i: usize) -> Result<bool> {
        let n = self.sources.len();
        let dim = self.spec.dimension();
        let j = self.ops.index(dim);
        let mut k = self.ops.index(n - 1);
        if k >= i {
            k += 1;
        }
        let phi = 2.0 * self.ops.uniform() - 1.0;
        let mut candidate = self.sources[i].position.clone();
        candidate[j] += phi * (candidate[j] - self.sources[k].position[j]);
        self.spec.bounds.clamp_in_place(&mut candidate);
        let value = self.evaluate(&candidate)?;
        Ok(greedy_select(&mut self.sources[i], candidate, value))
    }

    pub fn employed_phase(&mut self) -> Result<()> {
        for i in 0..self.sources.len() {
            self.explore(i)?;
        }
        Ok(())
    }

    pub fn onlooker_phase(&mut self) -> Result<()> {
        for _ in 0..self.sources.len() {
            let fitness: Vec<f64> = self.sources.iter().map(|s| s.fitness).collect();
            let probs = onlooker_probabilities(&fitness);
            let i = roulette_select(&probs, self.ops.uniform());
            self.explore(i)?;
        }
        Ok(())
    }

    /// Re-seeds the most exhausted source if its trial counter exceeds
    /// `limit`. Returns the re-seeded index.
    pub fn scout_phase(&mut self) -> Result<Option<usize>> {
        let (i, trials) = self
            .sources
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.trials))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        if trials > self.params.limit {
            self.sources[i] = self.random_source()?;
            Ok(Some(i))
        } else {
            Ok(None)
        }
    }

    pub fn step(&mut self) -> Result<()> {
        self.employed_phase()?;
        self.onlooker_phase()?;
        self.scout_phase()?;
        self.trace.push(self.best.fitness);
        Ok(())
    }

    pub fn into_record(self) -> RunRecord {
        RunRecord {
            best_position: self.best.position,
            best_fitness: self.best.fitness,
            best_so_far_trace: self.trace,
            evaluations: self.evaluations,
        }
    }

    #[cfg(test)]
    pub(crate) fn sources_mut(&mut self) -> &mut [FoodSource] {
        &mut self.sources
    }
}

/// Replaces `source` by the candidate when the candidate's fitness is
/// strictly higher; otherwise counts a failed trial.
pub fn greedy_select(source: &mut FoodSource, candidate: Vec<f64>, value: f64) -> bool {
    let fitness = abc_fitness(value);
    if fitness > source.fitness {
        *source = FoodSource {
            position: candidate,
            value,
            fitness,
            trials: 0,
        };
        true
    } else {
        source.trials += 1;
        false
    }
}

/// Minimizes `spec` with the artificial bee colony.
pub fn abc_run(spec: &ObjectiveSpec, params: AbcParams) -> Result<RunRecord> {
    let mut colony = FoodSources::new(spec, params)?;
    for _ in 0..params.max_iterations {
        colony.step()?;
    }
    Ok(colony.into_record())
}
