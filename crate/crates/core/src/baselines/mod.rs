//! Reference optimizers used for comparison: global-best particle swarm
//! optimization and the artificial bee colony.

pub mod abc;
pub mod pso;

pub use abc::{abc_run, AbcParams, FoodSources};
pub use pso::{linear_inertia, pso_run, PsoParams, Swarm};
