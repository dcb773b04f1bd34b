//! Seeded random streams.
//!
//! Every trial owns one root seed. Independent sub-streams are derived from it
//! per purpose (initialization, operators, objective noise) by selecting a
//! distinct ChaCha stream id, so consuming extra draws in one purpose never
//! shifts the sequence seen by another.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Source of uniform draws in `[0, 1)`.
///
/// Operators are written against this trait so tests can script exact draw
/// sequences.
pub trait UniformSource {
    fn uniform(&mut self) -> f64;

    /// Uniform integer in `0..n`. `n` must be positive.
    fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        ((self.uniform() * n as f64) as usize).min(n - 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Purpose {
    Initialization,
    Operators,
    ObjectiveNoise,
}

impl Purpose {
    fn stream_id(self) -> u64 {
        match self {
            Purpose::Initialization => 1,
            Purpose::Operators => 2,
            Purpose::ObjectiveNoise => 3,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RandomStream {
    rng: ChaCha8Rng,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Sub-stream of `seed` dedicated to `purpose`.
    pub fn derive(seed: u64, purpose: Purpose) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(purpose.stream_id());
        Self { rng }
    }
}

impl UniformSource for RandomStream {
    fn uniform(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

/// A source that always returns the same value. Mostly useful to stub out
/// objective noise.
#[derive(Debug, Clone, Copy)]
pub struct ConstantSource(pub f64);

impl UniformSource for ConstantSource {
    fn uniform(&mut self) -> f64 {
        self.0
    }
}

impl<T: UniformSource + ?Sized> UniformSource for &mut T {
    fn uniform(&mut self) -> f64 {
        (**self).uniform()
    }

    fn index(&mut self, n: usize) -> usize {
        (**self).index(n)
    }
}
