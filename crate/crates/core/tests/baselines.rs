use proptest::prelude::*;

use sso_core::baselines::{abc_run, pso_run, AbcParams, FoodSources, PsoParams, Swarm};
use sso_core::benchmarks::BenchmarkId;

fn function() -> impl Strategy<Value = BenchmarkId> {
    prop::sample::select(BenchmarkId::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pso_stays_in_bounds_and_is_monotone(f in function(), seed in any::<u64>()) {
        let spec = f.objective(10);
        let params = PsoParams { population_size: 12, max_iterations: 25, seed, ..PsoParams::default() };
        let mut swarm = Swarm::new(&spec, params).unwrap();
        for _ in 0..params.max_iterations {
            swarm.step().unwrap();
            for p in swarm.particles() {
                prop_assert!(spec.bounds.contains(&p.position));
            }
        }
        let record = swarm.into_record();
        prop_assert!(record.best_so_far_trace.windows(2).all(|w| w[1] <= w[0]));
        prop_assert_eq!(record, pso_run(&spec, params).unwrap());
    }

    #[test]
    fn abc_stays_in_bounds_and_is_monotone(f in function(), seed in any::<u64>()) {
        let spec = f.objective(10);
        let params = AbcParams { colony_size: 12, max_iterations: 25, limit: 5, seed };
        let mut colony = FoodSources::new(&spec, params).unwrap();
        for _ in 0..params.max_iterations {
            colony.step().unwrap();
            for s in colony.sources() {
                prop_assert!(spec.bounds.contains(&s.position));
            }
        }
        let record = colony.into_record();
        prop_assert!(record.best_so_far_trace.windows(2).all(|w| w[1] <= w[0]));
        prop_assert_eq!(record, abc_run(&spec, params).unwrap());
    }
}
