use crate::geometry::Bounds;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gender {
    Female,
    Male,
}

/// A candidate solution of the colony.
#[derive(Debug, Clone, PartialEq)]
pub struct Spider {
    pub position: Vec<f64>,
    pub gender: Gender,
    /// Objective value, lower is better.
    pub fitness: f64,
    /// Normalized quality in `[0, 1]`, 1 for the best member.
    pub weight: f64,
}

/// The colony: females occupy indices `0..n_female`, males the rest.
///
/// The layout is fixed at construction; operators overwrite spiders in place
/// and never reorder them.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    spiders: Vec<Spider>,
    n_female: usize,
    bounds: Bounds,
}

impl Population {
    /// Builds a population from female and male positions. Fitness is set to
    /// `+inf` and weight to 0 until evaluated.
    pub fn from_positions(females: Vec<Vec<f64>>, males: Vec<Vec<f64>>, bounds: Bounds) -> Self {
        let n_female = females.len();
        let spiders = females
            .into_iter()
            .map(|p| (p, Gender::Female))
            .chain(males.into_iter().map(|p| (p, Gender::Male)))
            .map(|(position, gender)| Spider {
                position,
                gender,
                fitness: f64::INFINITY,
                weight: 0.0,
            })
            .collect();
        Self {
            spiders,
            n_female,
            bounds,
        }
    }

    pub fn len(&self) -> usize {
        self.spiders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spiders.is_empty()
    }

    pub fn n_female(&self) -> usize {
        self.n_female
    }

    pub fn n_male(&self) -> usize {
        self.spiders.len() - self.n_female
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn spiders(&self) -> &[Spider] {
        &self.spiders
    }

    pub fn spider(&self, i: usize) -> &Spider {
        &self.spiders[i]
    }

    pub(crate) fn spider_mut(&mut self, i: usize) -> &mut Spider {
        &mut self.spiders[i]
    }

    pub fn position(&self, i: usize) -> &[f64] {
        &self.spiders[i].position
    }

    pub fn female_indices(&self) -> std::ops::Range<usize> {
        0..self.n_female
    }

    pub fn male_indices(&self) -> std::ops::Range<usize> {
        self.n_female..self.spiders.len()
    }

    pub fn fitnesses(&self) -> Vec<f64> {
        self.spiders.iter().map(|s| s.fitness).collect()
    }

    pub fn weights(&self) -> Vec<f64> {
        self.spiders.iter().map(|s| s.weight).collect()
    }

    pub fn set_weights(&mut self, weights: &[f64]) {
        debug_assert_eq!(weights.len(), self.spiders.len());
        for (s, &w) in self.spiders.iter_mut().zip(weights) {
            s.weight = w;
        }
    }

    /// Highest objective value in the colony.
    pub fn worst_fitness(&self) -> f64 {
        self.spiders
            .iter()
            .map(|s| s.fitness)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Checks the gender layout against the stored split.
    pub fn layout_is_consistent(&self) -> bool {
        self.spiders.iter().enumerate().all(|(i, s)| {
            let expected = if i < self.n_female {
                Gender::Female
            } else {
                Gender::Male
            };
            s.gender == expected
        })
    }
}
