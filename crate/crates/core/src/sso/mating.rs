use crate::geometry::{squared_distance, Bounds};
use crate::population::Population;
use crate::rng::UniformSource;

/// Mating range: half the mean axis width.
pub fn mating_radius(bounds: &Bounds) -> f64 {
    let n = bounds.dim();
    (0..n).map(|j| bounds.width(j)).sum::<f64>() / (2.0 * n as f64)
}

/// Weight-proportional selection probabilities. All-zero weights give a
/// uniform distribution.
pub fn roulette_probabilities(member_weights: &[f64]) -> Vec<f64> {
    let total: f64 = member_weights.iter().sum();
    if total > 0.0 {
        member_weights.iter().map(|w| w / total).collect()
    } else {
        let p = 1.0 / member_weights.len() as f64;
        vec![p; member_weights.len()]
    }
}

/// Index selected by a uniform draw `u` in `[0, 1)` over `probs`.
pub fn roulette_select(probs: &[f64], u: f64) -> usize {
    let mut acc = 0.0;
    for (k, p) in probs.iter().enumerate() {
        acc += p;
        if u < acc {
            return k;
        }
    }
    // rounding left u above the final cumulative sum
    probs.iter().rposition(|&p| p > 0.0).unwrap_or(probs.len() - 1)
}

/// Mating group of dominant male `g`: every female within `radius`, then `g`.
/// `None` when no female is in range.
pub fn mating_group(g: usize, pop: &Population, radius: f64) -> Option<Vec<usize>> {
    let male = pop.position(g);
    let r2 = radius * radius;
    let mut group: Vec<usize> = pop
        .female_indices()
        .filter(|&f| squared_distance(male, pop.position(f)) <= r2)
        .collect();
    if group.is_empty() {
        return None;
    }
    group.push(g);
    Some(group)
}

/// Builds a brood for dominant male `g`. Each coordinate is copied from a
/// member of the mating group chosen by an independent roulette draw.
pub fn mate(
    g: usize,
    pop: &Population,
    weights: &[f64],
    radius: f64,
    rng: &mut impl UniformSource,
) -> Option<Vec<f64>> {
    let group = mating_group(g, pop, radius)?;
    let member_weights: Vec<f64> = group.iter().map(|&k| weights[k]).collect();
    let probs = roulette_probabilities(&member_weights);
    let brood = (0..pop.bounds().dim())
        .map(|j| {
            let k = group[roulette_select(&probs, rng.uniform())];
            pop.position(k)[j]
        })
        .collect();
    Some(brood)
}

/// An evaluated offspring awaiting the survival test.
#[derive(Debug, Clone, PartialEq)]
pub struct Brood {
    pub position: Vec<f64>,
    pub fitness: f64,
    /// Weight on the scale frozen for the mating phase; may exceed 1.
    pub weight: f64,
}

/// Index of the lightest member, lowest index on ties.
pub fn worst_index(pop: &Population) -> usize {
    let mut worst = 0;
    for (i, s) in pop.spiders().iter().enumerate().skip(1) {
        if s.weight < pop.spider(worst).weight {
            worst = i;
        }
    }
    worst
}

/// Overwrites the lightest spider with `brood` when the brood is strictly
/// heavier. The slot keeps its gender and takes the brood's unclamped weight
/// until the next reweighting, so later comparisons in the same mating phase
/// stay consistent with fitness order. Returns the replaced index.
pub fn survive_replace(pop: &mut Population, brood: Brood) -> Option<usize> {
    let wo = worst_index(pop);
    if brood.weight > pop.spider(wo).weight {
        let slot = pop.spider_mut(wo);
        slot.position = brood.position;
        slot.fitness = brood.fitness;
        slot.weight = brood.weight;
        Some(wo)
    } else {
        None
    }
}
