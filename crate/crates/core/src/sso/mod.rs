//! Social spider optimization.
//!
//! The colony is split into females and males that move with different
//! operators, steered by "vibrations" `w * exp(-d^2)` emitted by heavier
//! (better) members. Dominant males mate with nearby females to produce a
//! brood that replaces the worst spider when it is better.
//!
//! One iteration:
//! 1. reweight the colony from current fitness;
//! 2. move every female, then every male, against a snapshot taken in step 1;
//! 3. re-evaluate all moved spiders;
//! 4. let each dominant male (ascending index) mate, replacing immediately.

mod mating;
mod operators;

pub use mating::{
    mate, mating_group, mating_radius, roulette_probabilities, roulette_select, survive_replace,
    worst_index, Brood,
};
pub use operators::{
    assign_weights, classify_males, dominant_male_update, female_count, female_move,
    female_update, find_vibb_source, find_vibc_source, find_vibf_source, initialize_population,
    male_move, median_male_weight, non_dominant_male_update, split_population, vibration,
    weighted_male_mean, Dominance, FemaleBranch, FemaleDraw, FemaleMove, MaleContext,
    WeightScale,
};

use crate::error::{Error, Result};
use crate::objective::{BestSoFar, ObjectiveSpec, RunRecord};
use crate::population::Population;
use crate::rng::{Purpose, RandomStream};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SsoParams {
    pub population_size: usize,
    pub max_iterations: usize,
    /// Probability of the attraction branch in the female operator.
    pub pf: f64,
    pub seed: u64,
}

impl Default for SsoParams {
    fn default() -> Self {
        Self {
            population_size: 50,
            max_iterations: 1000,
            pf: 0.7,
            seed: 0,
        }
    }
}

impl SsoParams {
    pub fn validate(&self) -> Result<()> {
        if self.population_size < 4 {
            return Err(Error::Parameter(format!(
                "population_size must be at least 4, got {}",
                self.population_size
            )));
        }
        if !(0.0..=1.0).contains(&self.pf) {
            return Err(Error::Parameter(format!(
                "pf must lie in [0, 1], got {}",
                self.pf
            )));
        }
        Ok(())
    }
}

/// What happened during one iteration, for instrumentation.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationReport {
    pub attraction_moves: usize,
    pub repulsion_moves: usize,
    pub dominant_males: usize,
    pub broods: usize,
    pub replacements: usize,
    pub worst_before_mating: f64,
    pub worst_after_mating: f64,
}

/// A running colony. [`run`] drives it to completion; stepping manually is
/// useful for inspection.
#[derive(Debug)]
pub struct SsoColony<'a> {
    spec: &'a ObjectiveSpec,
    params: SsoParams,
    pop: Population,
    radius: f64,
    ops: RandomStream,
    noise: RandomStream,
    best: BestSoFar,
    evaluations: u64,
    trace: Vec<f64>,
}

impl<'a> SsoColony<'a> {
    /// Splits, initializes and evaluates the colony.
    pub fn new(spec: &'a ObjectiveSpec, params: SsoParams) -> Result<Self> {
        params.validate()?;
        let mut init = RandomStream::derive(params.seed, Purpose::Initialization);
        let mut noise = RandomStream::derive(params.seed, Purpose::ObjectiveNoise);
        let (n_female, n_male) = split_population(params.population_size, &mut init)?;
        let mut pop = initialize_population(spec, n_female, n_male, &mut init);

        for i in 0..pop.len() {
            let f = spec.evaluate(pop.position(i), &mut noise)?;
            pop.spider_mut(i).fitness = f;
        }
        let weights = assign_weights(&pop.fitnesses());
        pop.set_weights(&weights);

        let best = BestSoFar::from_candidates(
            pop.spiders()
                .iter()
                .map(|s| (s.position.as_slice(), s.fitness)),
        );
        Ok(Self {
            spec,
            params,
            radius: mating_radius(&spec.bounds),
            pop,
            ops: RandomStream::derive(params.seed, Purpose::Operators),
            noise,
            best,
            evaluations: params.population_size as u64,
            trace: Vec::with_capacity(params.max_iterations),
        })
    }

    pub fn population(&self) -> &Population {
        &self.pop
    }

    pub fn best_fitness(&self) -> f64 {
        self.best.fitness
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    fn evaluate(&mut self, x: &[f64]) -> Result<f64> {
        let f = self.spec.evaluate(x, &mut self.noise)?;
        self.evaluations += 1;
        self.best.offer(x, f);
        Ok(f)
    }

    /// Runs one full iteration and appends to the best-so-far trace.
    pub fn step(&mut self) -> Result<IterationReport> {
        let weights = assign_weights(&self.pop.fitnesses());
        self.pop.set_weights(&weights);
        let snapshot = self.pop.clone();
        let males = MaleContext::new(&snapshot, &weights);

        let mut attraction_moves = 0;
        let mut moved = Vec::with_capacity(snapshot.len());
        for i in snapshot.female_indices() {
            let mv = female_move(i, &snapshot, &weights, self.params.pf, &mut self.ops);
            if mv.branch == FemaleBranch::Attraction {
                attraction_moves += 1;
            }
            moved.push(mv.position);
        }
        for i in snapshot.male_indices() {
            moved.push(male_move(i, &snapshot, &weights, &males, &mut self.ops)?);
        }

        for (i, position) in moved.into_iter().enumerate() {
            let f = self.evaluate(&position)?;
            let spider = self.pop.spider_mut(i);
            spider.position = position;
            spider.fitness = f;
        }

        // Mating phase: weights and the brood scale are frozen here.
        let fitnesses = self.pop.fitnesses();
        let scale = WeightScale::from_fitnesses(&fitnesses);
        self.pop.set_weights(&assign_weights(&fitnesses));
        let worst_before_mating = self.pop.worst_fitness();

        let mut broods = 0;
        let mut replacements = 0;
        for &g in &males.dominance.dominant {
            let weights = self.pop.weights();
            let Some(position) = mate(g, &self.pop, &weights, self.radius, &mut self.ops) else {
                continue;
            };
            broods += 1;
            let fitness = self.evaluate(&position)?;
            let brood = Brood {
                position,
                fitness,
                weight: scale.weight(fitness),
            };
            if survive_replace(&mut self.pop, brood).is_some() {
                replacements += 1;
            }
        }

        self.trace.push(self.best.fitness);
        Ok(IterationReport {
            attraction_moves,
            repulsion_moves: snapshot.n_female() - attraction_moves,
            dominant_males: males.dominance.dominant.len(),
            broods,
            replacements,
            worst_before_mating,
            worst_after_mating: self.pop.worst_fitness(),
        })
    }

    pub fn into_record(self) -> RunRecord {
        RunRecord {
            best_position: self.best.position,
            best_fitness: self.best.fitness,
            best_so_far_trace: self.trace,
            evaluations: self.evaluations,
        }
    }
}

/// Minimizes `spec` with social spider optimization.
pub fn run(spec: &ObjectiveSpec, params: SsoParams) -> Result<RunRecord> {
    let mut colony = SsoColony::new(spec, params)?;
    for _ in 0..params.max_iterations {
        colony.step()?;
    }
    Ok(colony.into_record())
}
