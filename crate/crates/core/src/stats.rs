//! Summary statistics over repeated runs and the two-sample Wilcoxon
//! rank-sum test.

use statrs::function::erf::erfc;

use crate::error::{Error, Result};

/// Largest pooled sample size handled by exact enumeration.
pub const EXACT_MAX_TOTAL: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunSummary {
    /// Mean of the final best-so-far values.
    pub ab: f64,
    /// Median of the final best-so-far values.
    pub mb: f64,
    /// Sample standard deviation (n - 1 denominator, 0 for one run).
    pub sd: f64,
    pub n_runs: usize,
}

pub fn summarize(final_bests: &[f64]) -> Result<RunSummary> {
    if final_bests.is_empty() {
        return Err(Error::Argument("cannot summarize zero runs".into()));
    }
    let n = final_bests.len();
    let ab = final_bests.iter().sum::<f64>() / n as f64;
    let sd = if n > 1 {
        let ss: f64 = final_bests.iter().map(|v| (v - ab).powi(2)).sum();
        (ss / (n - 1) as f64).sqrt()
    } else {
        0.0
    };
    Ok(RunSummary {
        ab,
        mb: median(final_bests),
        sd,
        n_runs: n,
    })
}

fn median(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}

/// Midranks (1-based) of `values`; tied values share the mean of their ranks.
pub fn midranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        // positions start..end hold ranks start+1..=end
        let rank = (start + 1 + end) as f64 / 2.0;
        for &k in &order[start..end] {
            ranks[k] = rank;
        }
        start = end;
    }
    ranks
}

/// How a rank-sum p-value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankSumMethod {
    Exact,
    Normal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankSumTest {
    /// Sum of the midranks of the first sample in the pooled data.
    pub statistic: f64,
    pub p_value: f64,
    pub method: RankSumMethod,
}

/// Two-sided Wilcoxon rank-sum p-value for independent samples `a` and `b`.
pub fn wilcoxon_ranksum(a: &[f64], b: &[f64]) -> Result<f64> {
    rank_sum_test(a, b).map(|t| t.p_value)
}

/// Full rank-sum test. Exact null distribution when the pooled sample has at
/// most [`EXACT_MAX_TOTAL`] values and no ties; otherwise the normal
/// approximation with tie-corrected variance and continuity correction.
pub fn rank_sum_test(a: &[f64], b: &[f64]) -> Result<RankSumTest> {
    if a.len() < 3 || b.len() < 3 {
        return Err(Error::Argument(format!(
            "rank-sum test needs at least 3 values per sample, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    if a.iter().chain(b).any(|v| v.is_nan()) {
        return Err(Error::Argument("rank-sum test input contains NaN".into()));
    }
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let ranks = midranks(&pooled);
    let statistic: f64 = ranks[..a.len()].iter().sum();
    let has_ties = ranks.iter().any(|r| r.fract() != 0.0) || {
        let mut sorted = pooled.clone();
        sorted.sort_by(f64::total_cmp);
        sorted.windows(2).any(|w| w[0] == w[1])
    };

    let (p, method) = if pooled.len() <= EXACT_MAX_TOTAL && !has_ties {
        (
            exact_p(a.len(), pooled.len(), statistic.round() as usize),
            RankSumMethod::Exact,
        )
    } else {
        (normal_p(a.len(), b.len(), statistic, &ranks), RankSumMethod::Normal)
    };
    Ok(RankSumTest {
        statistic,
        p_value: p.clamp(f64::MIN_POSITIVE, 1.0),
        method,
    })
}

/// Number of `m`-subsets of `{1..n}` for every possible rank sum.
fn rank_sum_counts(m: usize, n: usize) -> Vec<f64> {
    let max_sum = n * (n + 1) / 2;
    // counts[k][s]: subsets of size k with sum s, over the ranks seen so far
    let mut counts = vec![vec![0.0f64; max_sum + 1]; m + 1];
    counts[0][0] = 1.0;
    for rank in 1..=n {
        for k in (1..=m.min(rank)).rev() {
            for s in (rank..=max_sum).rev() {
                counts[k][s] += counts[k - 1][s - rank];
            }
        }
    }
    counts.swap_remove(m)
}

fn exact_p(m: usize, n: usize, observed: usize) -> f64 {
    let counts = rank_sum_counts(m, n);
    let total: f64 = counts.iter().sum();
    let lower: f64 = counts[..=observed].iter().sum();
    let upper: f64 = counts[observed..].iter().sum();
    (2.0 * lower.min(upper) / total).min(1.0)
}

fn normal_p(m: usize, n: usize, statistic: f64, ranks: &[f64]) -> f64 {
    let (mf, nf) = (m as f64, n as f64);
    let total = mf + nf;
    let mean = mf * (total + 1.0) / 2.0;

    // tie correction: sum of (t^3 - t) over tie groups
    let mut sorted = ranks.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let t = (j - i) as f64;
        tie_term += t * t * t - t;
        i = j;
    }
    let variance = mf * nf / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
    if variance <= 0.0 {
        return 1.0;
    }
    let deviation = ((statistic - mean).abs() - 0.5).max(0.0);
    let z = deviation / variance.sqrt();
    // two-sided tail: 2 * (1 - Phi(z)) = erfc(z / sqrt 2)
    erfc(z / std::f64::consts::SQRT_2).min(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    /// Independent oracle: enumerate every split of the pooled data into
    /// groups of sizes |a| and |b|, compute each split's rank sum directly,
    /// and count splits at least as far from the null mean as the observed
    /// one.
    fn brute_force_p(a: &[f64], b: &[f64]) -> f64 {
        let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
        let n = pooled.len();
        let rank_of = |k: usize| -> f64 {
            1.0 + pooled.iter().filter(|&&v| v < pooled[k]).count() as f64
        };
        let ranks: Vec<f64> = (0..n).map(rank_of).collect();
        let observed: f64 = ranks[..a.len()].iter().sum();
        let centre = a.len() as f64 * (n as f64 + 1.0) / 2.0;
        let observed_dev = (observed - centre).abs();
        let (mut extreme, mut total) = (0u64, 0u64);
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != a.len() {
                continue;
            }
            total += 1;
            let s: f64 = (0..n).filter(|k| mask & (1 << k) != 0).map(|k| ranks[k]).sum();
            if (s - centre).abs() >= observed_dev - 1e-9 {
                extreme += 1;
            }
        }
        extreme as f64 / total as f64
    }

    #[test]
    fn summary_examples() {
        let s = summarize(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!((s.ab, s.mb, s.sd, s.n_runs), (2.0, 2.0, 1.0, 3));
        let s = summarize(&[5.0]).unwrap();
        assert_eq!((s.ab, s.mb, s.sd), (5.0, 5.0, 0.0));
        assert_eq!(summarize(&[1.0, 2.0, 3.0, 100.0]).unwrap().mb, 2.5);
        assert!(matches!(summarize(&[]), Err(Error::Argument(_))));
    }

    #[test]
    fn midranks_share_ties() {
        assert_eq!(midranks(&[10.0, 20.0, 10.0, 30.0]), vec![1.5, 3.0, 1.5, 4.0]);
    }

    #[test]
    fn fully_separated_triples() {
        let t = rank_sum_test(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]).unwrap();
        assert_eq!(t.method, RankSumMethod::Exact);
        assert_eq!(t.statistic, 6.0);
        assert_eq!(t.p_value, 0.1);
        assert_eq!(brute_force_p(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]), 0.1);
    }

    #[test]
    fn identical_samples() {
        let a = [1.0, 2.0, 3.0];
        assert_eq!(wilcoxon_ranksum(&a, &a).unwrap(), 1.0);
        let c = [4.0; 5];
        assert_eq!(wilcoxon_ranksum(&c, &c).unwrap(), 1.0);
    }

    #[test]
    fn small_samples_rejected() {
        assert!(wilcoxon_ranksum(&[1.0, 2.0], &[3.0, 4.0, 5.0]).is_err());
        assert!(wilcoxon_ranksum(&[1.0, 2.0, 3.0], &[]).is_err());
    }

    #[test]
    fn well_separated_large_samples() {
        let a: Vec<f64> = (0..30).map(|k| k as f64 * 0.01).collect();
        let b: Vec<f64> = (0..30).map(|k| 10.0 + k as f64 * 0.01).collect();
        let t = rank_sum_test(&a, &b).unwrap();
        assert_eq!(t.method, RankSumMethod::Normal);
        assert!(t.p_value < 0.05);
        assert!(t.p_value > 0.0);
    }

    #[test]
    fn normal_approximation_reference_value() {
        // 7 vs 8 with no overlap: W = 28, mean 56, var 7*8*16/12.
        // z = (28 - 0.5) / sqrt(74.666..) = 3.1825066, p = 0.00146006 (cross-checked
        // against scipy.stats.mannwhitneyu, asymptotic with continuity).
        let a: Vec<f64> = (1..=7).map(f64::from).collect();
        let b: Vec<f64> = (8..=15).map(f64::from).collect();
        let z: f64 = 27.5 / (7.0f64 * 8.0 * 16.0 / 12.0).sqrt();
        assert_relative_eq!(z, 3.182_506_6, epsilon = 1e-6);
        let p = wilcoxon_ranksum(&a, &b).unwrap();
        assert_relative_eq!(p, 0.001_460_06, epsilon = 1e-8);
    }

    #[test]
    fn exact_matches_brute_force_on_grid() {
        for m in 3..=5 {
            for n in 3..=(10 - m) {
                let a: Vec<f64> = (0..m).map(|k| (2 * k) as f64).collect();
                let b: Vec<f64> = (0..n).map(|k| (3 * k) as f64 + 0.5).collect();
                let p = wilcoxon_ranksum(&a, &b).unwrap();
                assert!((p - brute_force_p(&a, &b)).abs() <= 1e-12, "m={m} n={n}");
            }
        }
    }

    proptest! {
        #[test]
        fn symmetric(a in prop::collection::vec(-1e3f64..1e3, 3..20),
                     b in prop::collection::vec(-1e3f64..1e3, 3..20)) {
            let ab = wilcoxon_ranksum(&a, &b).unwrap();
            let ba = wilcoxon_ranksum(&b, &a).unwrap();
            prop_assert!((ab - ba).abs() <= 1e-12);
            prop_assert!(ab > 0.0 && ab <= 1.0);
        }

        #[test]
        fn rank_invariant(a in prop::collection::vec(-1e2f64..1e2, 3..15),
                          b in prop::collection::vec(-1e2f64..1e2, 3..15),
                          shift in -1e2f64..1e2,
                          scale in 0.01f64..100.0) {
            let p = wilcoxon_ranksum(&a, &b).unwrap();
            let pooled_ranks = |x: &[f64], y: &[f64]| {
                midranks(&x.iter().chain(y).copied().collect::<Vec<_>>())
            };
            let original = pooled_ranks(&a, &b);
            for map in [&(|v: f64| v + shift) as &dyn Fn(f64) -> f64, &|v: f64| v * scale] {
                let ma: Vec<f64> = a.iter().map(|&v| map(v)).collect();
                let mb: Vec<f64> = b.iter().map(|&v| map(v)).collect();
                // rounding may merge nearly equal values; the property is
                // about order-preserving maps
                if pooled_ranks(&ma, &mb) == original {
                    prop_assert_eq!(p, wilcoxon_ranksum(&ma, &mb).unwrap());
                }
            }
        }
    }
}
