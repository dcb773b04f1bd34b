use proptest::prelude::*;

use sso_core::benchmarks::BenchmarkId;
use sso_core::sso::{assign_weights, roulette_probabilities, SsoColony, SsoParams};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn weights_are_min_max_normalized(fs in prop::collection::vec(-1e6f64..1e6, 1..40)) {
        let w = assign_weights(&fs);
        prop_assert!(w.iter().all(|v| (0.0..=1.0).contains(v)));
        let best = fs.iter().cloned().fold(f64::INFINITY, f64::min);
        for (f, w) in fs.iter().zip(&w) {
            if *f == best {
                prop_assert_eq!(*w, 1.0);
            }
        }
    }

    #[test]
    fn roulette_sums_to_one(ws in prop::collection::vec(0.0f64..=1.0, 1..30)) {
        let p = roulette_probabilities(&ws);
        prop_assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        prop_assert!(p.iter().all(|&v| v >= 0.0));
    }

    #[test]
    fn colony_invariants(
        f in prop::sample::select(BenchmarkId::ALL.to_vec()),
        seed in any::<u64>(),
        n in 4usize..40,
    ) {
        let spec = f.objective(5);
        let params = SsoParams { population_size: n, max_iterations: 10, seed, ..SsoParams::default() };
        let mut colony = SsoColony::new(&spec, params).unwrap();
        let counts = (colony.population().n_female(), colony.population().n_male());
        prop_assert!(counts.0 >= 1 && counts.1 >= 1);
        for _ in 0..params.max_iterations {
            let report = colony.step().unwrap();
            let pop = colony.population();
            prop_assert_eq!((pop.n_female(), pop.n_male()), counts);
            prop_assert!(pop.spiders().iter().all(|s| spec.bounds.contains(&s.position)));
            prop_assert!(report.worst_after_mating <= report.worst_before_mating);
            prop_assert!(report.replacements <= report.broods);
        }
        let record = colony.into_record();
        prop_assert!(record.best_so_far_trace.windows(2).all(|w| w[1] <= w[0]));
        prop_assert_eq!(record.best_so_far_trace.len(), 10);
    }
}
