//! Population split, weighting, vibrations and the two gendered movement
//! operators.
//!
//! Indices are 0-based positions in the colony; females occupy
//! `0..n_female`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geometry::squared_distance;
use crate::objective::ObjectiveSpec;
use crate::population::Population;
use crate::rng::UniformSource;

/// Female count for a single uniform draw `u` in `[0, 1)`.
pub fn female_count(n_total: usize, u: f64) -> usize {
    ((0.9 - u * 0.25) * n_total as f64).floor() as usize
}

/// Splits `n_total` spiders into `(n_female, n_male)` with 65-90% females.
pub fn split_population(n_total: usize, rng: &mut impl UniformSource) -> Result<(usize, usize)> {
    if n_total < 4 {
        return Err(Error::Parameter(format!(
            "population size must be at least 4, got {n_total}"
        )));
    }
    let n_female = female_count(n_total, rng.uniform());
    Ok((n_female, n_total - n_female))
}

/// Uniform random positions in the objective's box, females first.
/// Fitness is left unset.
pub fn initialize_population(
    spec: &ObjectiveSpec,
    n_female: usize,
    n_male: usize,
    rng: &mut impl UniformSource,
) -> Population {
    let bounds = &spec.bounds;
    let mut draw = || -> Vec<f64> {
        bounds
            .low()
            .iter()
            .zip(bounds.high())
            .map(|(lo, hi)| lo + rng.uniform() * (hi - lo))
            .collect()
    };
    let females = (0..n_female).map(|_| draw()).collect();
    let males = (0..n_male).map(|_| draw()).collect();
    Population::from_positions(females, males, bounds.clone())
}

/// Frozen min-max normalization of objective values into weights.
///
/// `weight(best) = 1`, `weight(worst) = 0`. When every member has the same
/// value the scale degenerates to `1 - (f - best)`, which still gives the
/// whole colony weight 1 while keeping comparisons strictly monotone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightScale {
    pub best: f64,
    pub worst: f64,
}

impl WeightScale {
    pub fn from_fitnesses(fitnesses: &[f64]) -> Self {
        let best = fitnesses.iter().copied().fold(f64::INFINITY, f64::min);
        let worst = fitnesses.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Self { best, worst }
    }

    pub fn is_degenerate(&self) -> bool {
        !matches!(self.worst.partial_cmp(&self.best), Some(Ordering::Greater))
    }

    /// Unclamped weight; values outside `[0, 1]` mean `f` lies outside the
    /// range the scale was built from.
    pub fn weight(&self, f: f64) -> f64 {
        if self.is_degenerate() {
            1.0 - (f - self.best)
        } else {
            (self.worst - f) / (self.worst - self.best)
        }
    }
}

/// Weights for a whole colony: best member 1, worst 0, all in `[0, 1]`.
pub fn assign_weights(fitnesses: &[f64]) -> Vec<f64> {
    let scale = WeightScale::from_fitnesses(fitnesses);
    fitnesses
        .iter()
        .map(|&f| scale.weight(f).clamp(0.0, 1.0))
        .collect()
}

/// Vibration perceived at distance `d` from a source of weight `w_source`.
pub fn vibration(w_source: f64, d: f64) -> f64 {
    w_source * (-d * d).exp()
}

/// Nearest member strictly heavier than `i`; `i` itself when none exists.
pub fn find_vibc_source(i: usize, pop: &Population, weights: &[f64]) -> usize {
    let here = pop.position(i);
    let mut best: Option<(usize, f64)> = None;
    for j in 0..pop.len() {
        if weights[j] <= weights[i] {
            continue;
        }
        let d2 = squared_distance(here, pop.position(j));
        if best.is_none_or(|(_, bd)| d2 < bd) {
            best = Some((j, d2));
        }
    }
    best.map_or(i, |(j, _)| j)
}

/// Index of the heaviest member, lowest index on ties.
pub fn find_vibb_source(weights: &[f64]) -> usize {
    let mut best = 0;
    for (j, &w) in weights.iter().enumerate().skip(1) {
        if w > weights[best] {
            best = j;
        }
    }
    best
}

/// Nearest female to spider `i`.
pub fn find_vibf_source(i: usize, pop: &Population) -> Result<usize> {
    let here = pop.position(i);
    pop.female_indices()
        .map(|j| (j, squared_distance(here, pop.position(j))))
        .fold(None, |acc: Option<(usize, f64)>, (j, d2)| match acc {
            Some((_, bd)) if bd <= d2 => acc,
            _ => Some((j, d2)),
        })
        .map(|(j, _)| j)
        .ok_or_else(|| Error::Structure("colony has no females".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FemaleBranch {
    Attraction,
    Repulsion,
}

/// Random coefficients of one female move.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FemaleDraw {
    pub branch: FemaleBranch,
    pub alpha: f64,
    pub beta: f64,
    pub delta: f64,
}

/// Applies the female update with explicit coefficients. `jitter[j]` is the
/// centred per-dimension perturbation `rand - 1/2`.
pub fn female_update(
    f: &[f64],
    local: (&[f64], f64),
    global: (&[f64], f64),
    draw: &FemaleDraw,
    jitter: &[f64],
) -> Vec<f64> {
    let (s_c, vibc) = local;
    let (s_b, vibb) = global;
    let sign = match draw.branch {
        FemaleBranch::Attraction => 1.0,
        FemaleBranch::Repulsion => -1.0,
    };
    (0..f.len())
        .map(|j| {
            f[j] + sign * draw.alpha * vibc * (s_c[j] - f[j])
                + sign * draw.beta * vibb * (s_b[j] - f[j])
                + draw.delta * jitter[j]
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct FemaleMove {
    pub position: Vec<f64>,
    pub branch: FemaleBranch,
}

/// Moves female `i` relative to the colony snapshot `pop`/`weights`.
/// The result is clamped to the colony bounds.
pub fn female_move(
    i: usize,
    pop: &Population,
    weights: &[f64],
    pf: f64,
    rng: &mut impl UniformSource,
) -> FemaleMove {
    let here = pop.position(i);
    let c = find_vibc_source(i, pop, weights);
    let b = find_vibb_source(weights);
    let vibc = vibration(weights[c], squared_distance(here, pop.position(c)).sqrt());
    let vibb = vibration(weights[b], squared_distance(here, pop.position(b)).sqrt());

    let branch = if rng.uniform() < pf {
        FemaleBranch::Attraction
    } else {
        FemaleBranch::Repulsion
    };
    let draw = FemaleDraw {
        branch,
        alpha: rng.uniform(),
        beta: rng.uniform(),
        delta: rng.uniform(),
    };
    let jitter: Vec<f64> = (0..here.len()).map(|_| rng.uniform() - 0.5).collect();

    let mut position = female_update(
        here,
        (pop.position(c), vibc),
        (pop.position(b), vibb),
        &draw,
        &jitter,
    );
    pop.bounds().clamp_in_place(&mut position);
    FemaleMove { position, branch }
}

/// Lower median of the male weights: sorted decreasingly, the element at
/// 1-based position `ceil((n_male + 1) / 2)`.
pub fn median_male_weight(pop: &Population, weights: &[f64]) -> f64 {
    let mut male: Vec<f64> = weights[pop.male_indices()].to_vec();
    assert!(!male.is_empty(), "colony has no males");
    male.sort_by(|a, b| b.total_cmp(a));
    let pos = (male.len() + 2) / 2; // ceil((n + 1) / 2)
    male[pos - 1]
}

/// Males split by the median weight. Indices are colony indices, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Dominance {
    pub median: f64,
    pub dominant: Vec<usize>,
    pub non_dominant: Vec<usize>,
}

impl Dominance {
    pub fn is_dominant(&self, i: usize) -> bool {
        self.dominant.binary_search(&i).is_ok()
    }
}

/// Dominant males weigh strictly more than the median. If none do, the
/// lowest-index male is promoted so mating stays possible.
pub fn classify_males(pop: &Population, weights: &[f64]) -> Dominance {
    let median = median_male_weight(pop, weights);
    let (mut dominant, mut non_dominant): (Vec<usize>, Vec<usize>) =
        pop.male_indices().partition(|&i| weights[i] > median);
    if dominant.is_empty() {
        dominant.push(non_dominant.remove(0));
    }
    Dominance {
        median,
        dominant,
        non_dominant,
    }
}

/// Weight-averaged male position; plain average when all male weights are 0.
pub fn weighted_male_mean(pop: &Population, weights: &[f64]) -> Vec<f64> {
    let dim = pop.bounds().dim();
    let males = pop.male_indices();
    let total: f64 = weights[males.clone()].iter().sum();
    let mut mean = vec![0.0; dim];
    if total > 0.0 {
        for i in males {
            for (m, x) in mean.iter_mut().zip(pop.position(i)) {
                *m += weights[i] * x;
            }
        }
        mean.iter_mut().for_each(|m| *m /= total);
    } else {
        let n = males.len() as f64;
        for i in males {
            for (m, x) in mean.iter_mut().zip(pop.position(i)) {
                *m += x;
            }
        }
        mean.iter_mut().for_each(|m| *m /= n);
    }
    mean
}

/// Per-iteration male context computed from the colony snapshot.
#[derive(Debug, Clone, PartialEq)]
pub struct MaleContext {
    pub dominance: Dominance,
    pub weighted_mean: Vec<f64>,
}

impl MaleContext {
    pub fn new(pop: &Population, weights: &[f64]) -> Self {
        Self {
            dominance: classify_males(pop, weights),
            weighted_mean: weighted_male_mean(pop, weights),
        }
    }
}

/// Dominant male update: pull toward the nearest female plus jitter.
pub fn dominant_male_update(
    m: &[f64],
    female: (&[f64], f64),
    alpha: f64,
    delta: f64,
    jitter: &[f64],
) -> Vec<f64> {
    let (s_f, vibf) = female;
    (0..m.len())
        .map(|j| m[j] + alpha * vibf * (s_f[j] - m[j]) + delta * jitter[j])
        .collect()
}

/// Non-dominant male update: pull toward the weighted male mean.
pub fn non_dominant_male_update(m: &[f64], mean: &[f64], alpha: f64) -> Vec<f64> {
    m.iter()
        .zip(mean)
        .map(|(x, mu)| x + alpha * (mu - x))
        .collect()
}

/// Moves male `i` relative to the colony snapshot. Clamped to bounds.
pub fn male_move(
    i: usize,
    pop: &Population,
    weights: &[f64],
    ctx: &MaleContext,
    rng: &mut impl UniformSource,
) -> Result<Vec<f64>> {
    let here = pop.position(i);
    let alpha = rng.uniform();
    let delta = rng.uniform();
    let mut position = if ctx.dominance.is_dominant(i) {
        let f = find_vibf_source(i, pop)?;
        let vibf = vibration(weights[f], squared_distance(here, pop.position(f)).sqrt());
        let jitter: Vec<f64> = (0..here.len()).map(|_| rng.uniform() - 0.5).collect();
        dominant_male_update(here, (pop.position(f), vibf), alpha, delta, &jitter)
    } else {
        non_dominant_male_update(here, &ctx.weighted_mean, alpha)
    };
    pop.bounds().clamp_in_place(&mut position);
    Ok(position)
}
