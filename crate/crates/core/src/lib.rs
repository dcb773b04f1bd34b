//! Social spider optimization (SSO) for continuous box-constrained
//! minimization, together with global-best PSO and ABC reference optimizers,
//! a 19-function benchmark suite, run statistics with a Wilcoxon rank-sum
//! test, and a seeded experiment harness.
//!
//! ```
//! use sso_core::benchmarks::BenchmarkId;
//! use sso_core::sso::{self, SsoParams};
//!
//! let spec = BenchmarkId::F1.objective(5);
//! let params = SsoParams { max_iterations: 50, seed: 7, ..SsoParams::default() };
//! let record = sso::run(&spec, params).unwrap();
//! assert_eq!(record.best_so_far_trace.len(), 50);
//! ```

pub mod baselines;
pub mod benchmarks;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod objective;
pub mod population;
pub mod rng;
pub mod sso;
pub mod stats;

pub use error::{Error, Result};
pub use geometry::{clamp_to_bounds, euclidean_distance, Bounds};
pub use objective::{ObjectiveSpec, RunRecord};
pub use population::{Gender, Population, Spider};
pub use rng::{Purpose, RandomStream, UniformSource};
