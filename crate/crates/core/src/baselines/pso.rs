use crate::error::{Error, Result};
use crate::objective::{BestSoFar, ObjectiveSpec, RunRecord};
use crate::rng::{Purpose, RandomStream, UniformSource};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsoParams {
    pub population_size: usize,
    pub max_iterations: usize,
    pub c1: f64,
    pub c2: f64,
    pub inertia_start: f64,
    pub inertia_end: f64,
    pub seed: u64,
}

impl Default for PsoParams {
    fn default() -> Self {
        Self {
            population_size: 50,
            max_iterations: 1000,
            c1: 2.0,
            c2: 2.0,
            inertia_start: 0.9,
            inertia_end: 0.2,
            seed: 0,
        }
    }
}

impl PsoParams {
    pub fn validate(&self) -> Result<()> {
        if self.population_size < 1 {
            return Err(Error::Parameter("population_size must be positive".into()));
        }
        if !(self.c1 > 0.0 && self.c2 > 0.0) {
            return Err(Error::Parameter(format!(
                "c1 and c2 must be positive, got {} and {}",
                self.c1, self.c2
            )));
        }
        Ok(())
    }

    /// Inertia weight used in iteration `t` (0-based).
    pub fn inertia(&self, t: usize) -> f64 {
        let progress = if self.max_iterations > 1 {
            t as f64 / (self.max_iterations - 1) as f64
        } else {
            0.0
        };
        linear_inertia(self.inertia_start, self.inertia_end, progress)
    }
}

/// Linear interpolation from `start` (progress 0) to `end` (progress 1).
pub fn linear_inertia(start: f64, end: f64, progress: f64) -> f64 {
    start + (end - start) * progress
}

#[derive(Debug, Clone)]
pub struct Particle {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
    pub fitness: f64,
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
}

/// Global-best swarm with synchronous updates: every particle moves against
/// the global best of the previous iteration.
#[derive(Debug)]
pub struct Swarm<'a> {
    spec: &'a ObjectiveSpec,
    params: PsoParams,
    particles: Vec<Particle>,
    global: BestSoFar,
    ops: RandomStream,
    noise: RandomStream,
    iteration: usize,
    evaluations: u64,
    trace: Vec<f64>,
}

impl<'a> Swarm<'a> {
    pub fn new(spec: &'a ObjectiveSpec, params: PsoParams) -> Result<Self> {
        params.validate()?;
        let mut init = RandomStream::derive(params.seed, Purpose::Initialization);
        let mut noise = RandomStream::derive(params.seed, Purpose::ObjectiveNoise);
        let bounds = &spec.bounds;
        let mut particles = Vec::with_capacity(params.population_size);
        for _ in 0..params.population_size {
            let position: Vec<f64> = bounds
                .low()
                .iter()
                .zip(bounds.high())
                .map(|(lo, hi)| lo + init.uniform() * (hi - lo))
                .collect();
            let fitness = spec.evaluate(&position, &mut noise)?;
            particles.push(Particle {
                velocity: vec![0.0; position.len()],
                best_position: position.clone(),
                position,
                fitness,
                best_fitness: fitness,
            });
        }
        let global = BestSoFar::from_candidates(
            particles.iter().map(|p| (p.position.as_slice(), p.fitness)),
        );
        Ok(Self {
            spec,
            params,
            evaluations: particles.len() as u64,
            particles,
            global,
            ops: RandomStream::derive(params.seed, Purpose::Operators),
            noise,
            iteration: 0,
            trace: Vec::with_capacity(params.max_iterations),
        })
    }

    pub fn particles(&self) -> &[Particle] {
        &self.particles
    }

    pub fn best_fitness(&self) -> f64 {
        self.global.fitness
    }

    pub fn step(&mut self) -> Result<()> {
        let w = self.params.inertia(self.iteration);
        let (c1, c2) = (self.params.c1, self.params.c2);
        let bounds = &self.spec.bounds;
        let leader = self.global.position.clone();
        for p in &mut self.particles {
            for (j, lead) in leader.iter().enumerate() {
                let (r1, r2) = (self.ops.uniform(), self.ops.uniform());
                let vmax = bounds.width(j);
                let v = w * p.velocity[j]
                    + c1 * r1 * (p.best_position[j] - p.position[j])
                    + c2 * r2 * (lead - p.position[j]);
                p.velocity[j] = v.clamp(-vmax, vmax);
                p.position[j] += p.velocity[j];
            }
            bounds.clamp_in_place(&mut p.position);
            p.fitness = self.spec.evaluate(&p.position, &mut self.noise)?;
            self.evaluations += 1;
            if p.fitness < p.best_fitness {
                p.best_fitness = p.fitness;
                p.best_position.clone_from(&p.position);
            }
        }
        for p in &self.particles {
            self.global.offer(&p.position, p.fitness);
        }
        self.iteration += 1;
        self.trace.push(self.global.fitness);
        Ok(())
    }

    pub fn into_record(self) -> RunRecord {
        RunRecord {
            best_position: self.global.position,
            best_fitness: self.global.fitness,
            best_so_far_trace: self.trace,
            evaluations: self.evaluations,
        }
    }
}

/// Minimizes `spec` with global-best PSO.
pub fn pso_run(spec: &ObjectiveSpec, params: PsoParams) -> Result<RunRecord> {
    let mut swarm = Swarm::new(spec, params)?;
    for _ in 0..params.max_iterations {
        swarm.step()?;
    }
    Ok(swarm.into_record())
}
