//! Search-space geometry: per-axis box bounds, distances and projection.

use crate::error::{Error, Result};

/// Axis-aligned box `[low[j], high[j]]` for every coordinate `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    low: Vec<f64>,
    high: Vec<f64>,
}

impl Bounds {
    pub fn new(low: Vec<f64>, high: Vec<f64>) -> Result<Self> {
        if low.is_empty() {
            return Err(Error::Bounds("dimension must be at least 1".into()));
        }
        if low.len() != high.len() {
            return Err(Error::Dimension {
                expected: low.len(),
                found: high.len(),
            });
        }
        for (j, (lo, hi)) in low.iter().zip(&high).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::Bounds(format!(
                    "axis {j}: low {lo} must be finite and strictly below high {hi}"
                )));
            }
        }
        Ok(Self { low, high })
    }

    /// The same interval `[low, high]` on each of `dim` axes.
    pub fn uniform(dim: usize, low: f64, high: f64) -> Result<Self> {
        Self::new(vec![low; dim], vec![high; dim])
    }

    pub fn dim(&self) -> usize {
        self.low.len()
    }

    pub fn low(&self) -> &[f64] {
        &self.low
    }

    pub fn high(&self) -> &[f64] {
        &self.high
    }

    pub fn width(&self, j: usize) -> f64 {
        self.high[j] - self.low[j]
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x
                .iter()
                .zip(self.low.iter().zip(&self.high))
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    pub fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.dim(),
                found: x.len(),
            })
        }
    }

    /// Projects `x` onto the box in place.
    pub fn clamp_in_place(&self, x: &mut [f64]) {
        for ((v, lo), hi) in x.iter_mut().zip(&self.low).zip(&self.high) {
            *v = v.clamp(*lo, *hi);
        }
    }
}

/// Euclidean norm of `a - b`.
pub fn euclidean_distance(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Dimension {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(squared_distance(a, b).sqrt())
}

/// Squared distance without a length check; callers guarantee equal lengths.
pub(crate) fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Returns `x` projected componentwise into `bounds`.
pub fn clamp_to_bounds(x: &[f64], bounds: &Bounds) -> Vec<f64> {
    let mut out = x.to_vec();
    bounds.clamp_in_place(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn distance_examples() {
        assert_eq!(euclidean_distance(&[0.0, 0.0], &[0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(euclidean_distance(&[0.0, 0.0], &[3.0, 4.0]).unwrap(), 5.0);
        // s_4 and s_7 of the worked mating example
        let d = euclidean_distance(&[0.4, 1.0], &[0.9, 0.7]).unwrap();
        assert!((d - 0.34f64.sqrt()).abs() < 1e-12);
        assert!((d - 0.58310).abs() < 1e-5);
    }

    #[test]
    fn distance_length_mismatch() {
        assert!(matches!(
            euclidean_distance(&[0.0], &[0.0, 1.0]),
            Err(Error::Dimension {
                expected: 1,
                found: 2
            })
        ));
    }

    #[test]
    fn clamp_examples() {
        let b = Bounds::uniform(2, -1.0, 1.0).unwrap();
        assert_eq!(clamp_to_bounds(&[0.0, 0.0], &b), vec![0.0, 0.0]);
        assert_eq!(clamp_to_bounds(&[5.0, -5.0], &b), vec![1.0, -1.0]);
        let unit = Bounds::uniform(1, 0.0, 1.0).unwrap();
        assert_eq!(clamp_to_bounds(&[1.0000001], &unit), vec![1.0]);
    }

    #[test]
    fn bounds_validation() {
        assert!(Bounds::new(vec![], vec![]).is_err());
        assert!(Bounds::new(vec![0.0], vec![0.0]).is_err());
        assert!(Bounds::new(vec![1.0], vec![0.0]).is_err());
        assert!(Bounds::new(vec![0.0, 0.0], vec![1.0]).is_err());
        assert!(Bounds::new(vec![f64::NEG_INFINITY], vec![0.0]).is_err());
    }

    proptest! {
        #[test]
        fn clamp_is_idempotent(x in prop::collection::vec(-1e3f64..1e3, 3)) {
            let b = Bounds::new(vec![-1.0, 0.0, -50.0], vec![1.0, 10.0, 50.0]).unwrap();
            let once = clamp_to_bounds(&x, &b);
            prop_assert!(b.contains(&once));
            prop_assert_eq!(clamp_to_bounds(&once, &b), once);
        }

        #[test]
        fn triangle_inequality(
            a in prop::collection::vec(-10f64..10.0, 4),
            b in prop::collection::vec(-10f64..10.0, 4),
            c in prop::collection::vec(-10f64..10.0, 4),
        ) {
            let ab = euclidean_distance(&a, &b).unwrap();
            let bc = euclidean_distance(&b, &c).unwrap();
            let ac = euclidean_distance(&a, &c).unwrap();
            prop_assert!(ac <= ab + bc + 1e-12);
            prop_assert_eq!(ab, euclidean_distance(&b, &a).unwrap());
        }
    }
}
