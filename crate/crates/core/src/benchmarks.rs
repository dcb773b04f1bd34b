//! The 30-dimensional benchmark suite, ids `f1`..`f19`.

use std::f64::consts::{E, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::Bounds;
use crate::objective::ObjectiveSpec;
use crate::rng::UniformSource;

pub const DIMENSION: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BenchmarkId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
    F15,
    F16,
    F17,
    F18,
    F19,
}

impl BenchmarkId {
    pub const ALL: [BenchmarkId; 19] = [
        Self::F1,
        Self::F2,
        Self::F3,
        Self::F4,
        Self::F5,
        Self::F6,
        Self::F7,
        Self::F8,
        Self::F9,
        Self::F10,
        Self::F11,
        Self::F12,
        Self::F13,
        Self::F14,
        Self::F15,
        Self::F16,
        Self::F17,
        Self::F18,
        Self::F19,
    ];

    /// 1-based function number.
    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn as_str(self) -> &'static str {
        const IDS: [&str; 19] = [
            "f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9", "f10", "f11", "f12", "f13",
            "f14", "f15", "f16", "f17", "f18", "f19",
        ];
        IDS[self as usize]
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::F1 => "Sphere",
            Self::F2 => "Schwefel 2.22",
            Self::F3 => "Schwefel 1.2",
            Self::F4 => "F4",
            Self::F5 => "Rosenbrock",
            Self::F6 => "Step",
            Self::F7 => "Quartic",
            Self::F8 => "Dixon & Price",
            Self::F9 => "Levy",
            Self::F10 => "Sum of Squares",
            Self::F11 => "Zakharov",
            Self::F12 => "Penalized",
            Self::F13 => "Penalized 2",
            Self::F14 => "Schwefel",
            Self::F15 => "Rastrigin",
            Self::F16 => "Ackley",
            Self::F17 => "Griewank",
            Self::F18 => "Powell",
            Self::F19 => "Salomon",
        }
    }

    /// Per-axis search interval.
    pub fn domain(self) -> (f64, f64) {
        match self {
            Self::F1 | Self::F3 | Self::F4 | Self::F6 | Self::F19 => (-100.0, 100.0),
            Self::F2 | Self::F8 | Self::F9 | Self::F10 => (-10.0, 10.0),
            Self::F5 => (-30.0, 30.0),
            Self::F7 => (-1.28, 1.28),
            Self::F11 => (-5.0, 10.0),
            Self::F12 | Self::F13 => (-50.0, 50.0),
            Self::F14 => (-500.0, 500.0),
            Self::F15 => (-5.12, 5.12),
            Self::F16 => (-32.0, 32.0),
            Self::F17 => (-600.0, 600.0),
            Self::F18 => (-4.0, 5.0),
        }
    }

    /// Whether the known optimum is asserted to 1e-6.
    pub fn optimum_testable(self) -> bool {
        !matches!(self, Self::F4 | Self::F7 | Self::F8 | Self::F14)
    }

    /// Known optimum `(x*, f(x*))` in dimension `dim`.
    ///
    /// `f4` and `f8` report the tabulated values, which their formulas do not
    /// attain at the tabulated point.
    pub fn optimum(self, dim: usize) -> (Vec<f64>, f64) {
        match self {
            Self::F5 | Self::F9 | Self::F13 => (vec![1.0; dim], 0.0),
            Self::F12 => (vec![-1.0; dim], 0.0),
            Self::F14 => (vec![420.968_746_359_982; dim], -418.9829 * dim as f64),
            _ => (vec![0.0; dim], 0.0),
        }
    }

    pub fn evaluate(self, x: &[f64], rng: &mut dyn UniformSource) -> f64 {
        match self {
            Self::F1 => sphere(x),
            Self::F2 => schwefel_2_22(x),
            Self::F3 => schwefel_1_2(x),
            Self::F4 => f4(x),
            Self::F5 => rosenbrock(x),
            Self::F6 => step(x),
            Self::F7 => quartic(x) + rng.uniform(),
            Self::F8 => dixon_price(x),
            Self::F9 => levy(x),
            Self::F10 => sum_of_squares(x),
            Self::F11 => zakharov(x),
            Self::F12 => penalized(x),
            Self::F13 => penalized_2(x),
            Self::F14 => schwefel(x),
            Self::F15 => rastrigin(x),
            Self::F16 => ackley(x),
            Self::F17 => griewank(x),
            Self::F18 => powell(x),
            Self::F19 => salomon(x),
        }
    }

    /// Objective over `[lo, hi]^dim`.
    pub fn objective(self, dim: usize) -> ObjectiveSpec {
        let (lo, hi) = self.domain();
        let bounds = Bounds::uniform(dim, lo, hi).expect("static domains are valid");
        let (point, value) = self.optimum(dim);
        ObjectiveSpec::new(self.as_str(), bounds, move |x, rng| Ok(self.evaluate(x, rng)))
            .with_optimum(value, Some(point))
    }
}

impl fmt::Display for BenchmarkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BenchmarkId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Self::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFunction(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct BenchmarkEntry {
    pub id: BenchmarkId,
    pub name: &'static str,
    pub spec: ObjectiveSpec,
    pub optimum_testable: bool,
}

/// All nineteen functions in id order, at dimension 30.
pub fn list_functions() -> Vec<BenchmarkEntry> {
    BenchmarkId::ALL
        .into_iter()
        .map(|id| BenchmarkEntry {
            id,
            name: id.name(),
            spec: id.objective(DIMENSION),
            optimum_testable: id.optimum_testable(),
        })
        .collect()
}

/// Evaluates benchmark `id` (e.g. `"f15"`) at a 30-dimensional point.
pub fn evaluate(id: &str, x: &[f64], rng: &mut dyn UniformSource) -> Result<f64> {
    let id: BenchmarkId = id.parse()?;
    if x.len() != DIMENSION {
        return Err(Error::Dimension {
            expected: DIMENSION,
            found: x.len(),
        });
    }
    Ok(id.evaluate(x, rng))
}

/// Boundary penalty `k (|x| - a)^m` outside `[-a, a]`.
pub fn penalty_u(x: f64, a: f64, k: f64, m: f64) -> f64 {
    if x > a {
        k * (x - a).powf(m)
    } else if x < -a {
        k * (-x - a).powf(m)
    } else {
        0.0
    }
}

fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn schwefel_2_22(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let prod: f64 = x.iter().map(|v| v.abs()).product();
    sum + prod
}

fn schwefel_1_2(x: &[f64]) -> f64 {
    x.iter()
        .scan(0.0, |acc, v| {
            *acc += v;
            Some(*acc * *acc)
        })
        .sum()
}

fn f4(x: &[f64]) -> f64 {
    418.9829 * x.len() as f64 + schwefel(x)
}

fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

fn step(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5).floor().powi(2)).sum()
}

fn quartic(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4))
        .sum()
}

fn dixon_price(x: &[f64]) -> f64 {
    let head = (x[0] - 1.0).powi(2);
    head + x
        .windows(2)
        .enumerate()
        .map(|(k, w)| (k + 2) as f64 * (2.0 * w[1] * w[1] - w[0]).powi(2))
        .sum::<f64>()
}

// Levy and Penalized 2 share this bracket; Penalized 2 repeats the last-axis
// term once per axis.
fn levy_bracket(x: &[f64], last_term_repeats: f64) -> f64 {
    let n = x.len();
    let first = (3.0 * PI * x[0]).sin().powi(2);
    let body: f64 = x
        .iter()
        .map(|v| (v - 1.0).powi(2) * (1.0 + (3.0 * PI * v + 1.0).sin().powi(2)))
        .sum();
    let xn = x[n - 1];
    let last = (xn - 1.0).powi(2) * (1.0 + (2.0 * PI * xn).sin().powi(2));
    0.1 * (first + body + last_term_repeats * last)
}

fn levy(x: &[f64]) -> f64 {
    levy_bracket(x, 1.0) + x.iter().map(|&v| penalty_u(v, 5.0, 100.0, 4.0)).sum::<f64>()
}

fn penalized_2(x: &[f64]) -> f64 {
    levy_bracket(x, x.len() as f64) + x.iter().map(|&v| penalty_u(v, 5.0, 100.0, 4.0)).sum::<f64>()
}

fn sum_of_squares(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v * v)
        .sum()
}

fn zakharov(x: &[f64]) -> f64 {
    let sq: f64 = x.iter().map(|v| v * v).sum();
    let lin: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| 0.5 * (i + 1) as f64 * v)
        .sum();
    sq + lin.powi(2) + lin.powi(4)
}

fn penalized(x: &[f64]) -> f64 {
    let n = x.len();
    let y: Vec<f64> = x.iter().map(|v| 1.0 + (v + 1.0) / 4.0).collect();
    let body: f64 = y
        .windows(2)
        .map(|w| (w[0] - 1.0).powi(2) * (1.0 + 10.0 * (PI * w[1]).sin().powi(2)))
        .sum();
    let bracket = 10.0 * (PI * y[0]).sin().powi(2) + body + (y[n - 1] - 1.0).powi(2);
    PI / n as f64 * bracket + x.iter().map(|&v| penalty_u(v, 10.0, 100.0, 4.0)).sum::<f64>()
}

fn schwefel(x: &[f64]) -> f64 {
    x.iter().map(|v| -v * v.abs().sqrt().sin()).sum()
}

fn rastrigin(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq: f64 = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cos: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cos.exp() + 20.0 + E
}

fn griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - prod + 1.0
}

fn powell(x: &[f64]) -> f64 {
    x.chunks_exact(4)
        .map(|c| {
            (c[0] + 10.0 * c[1]).powi(2)
                + 5.0 * (c[2] - c[3]).powi(2)
                + (c[1] - c[2]).powi(4)
                + 10.0 * (c[0] - c[3]).powi(4)
        })
        .sum()
}

fn salomon(x: &[f64]) -> f64 {
    let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    -(2.0 * PI * r).cos() + 0.1 * r + 1.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{ConstantSource, RandomStream};
    use proptest::prelude::*;

    fn eval(id: BenchmarkId, x: &[f64]) -> f64 {
        id.evaluate(x, &mut ConstantSource(0.0))
    }

    #[test]
    fn penalty_examples() {
        assert_eq!(penalty_u(0.0, 5.0, 100.0, 4.0), 0.0);
        assert_eq!(penalty_u(6.0, 5.0, 100.0, 4.0), 100.0);
        assert_eq!(penalty_u(-7.0, 5.0, 100.0, 4.0), 1600.0);
        assert_eq!(penalty_u(5.0, 5.0, 100.0, 4.0), 0.0);
        assert_eq!(penalty_u(-5.0, 5.0, 100.0, 4.0), 0.0);
    }

    #[test]
    fn simple_values() {
        let zero = [0.0; DIMENSION];
        let ones = [1.0; DIMENSION];
        assert_eq!(eval(BenchmarkId::F1, &zero), 0.0);
        assert_eq!(eval(BenchmarkId::F1, &ones), 30.0);
        assert!((eval(BenchmarkId::F15, &ones) - 30.0).abs() < 1e-9);
        assert!(eval(BenchmarkId::F16, &zero).abs() < 1e-12);
        // f4 is offset so its value at the origin is the offset itself
        assert!((eval(BenchmarkId::F4, &zero) - 418.9829 * 30.0).abs() < 1e-9);
        // |x| restored: all-negative input stays positive
        assert_eq!(eval(BenchmarkId::F2, &[-1.0; DIMENSION]), 31.0);
    }

    #[test]
    fn schwefel_at_literature_optimum() {
        let x = [420.9687; DIMENSION];
        let v = eval(BenchmarkId::F14, &x);
        assert!((v - -12569.487).abs() < 1e-3, "{v}");
        assert!((v - -418.9829 * 30.0).abs() < 1e-3);
    }

    #[test]
    fn dixon_price_starts_at_second_axis() {
        // (x1 - 1)^2 + 2 (2 x2^2 - x1)^2 with x = (1, 1, 0, ...) -> 0 + 2 + 3*(0-1)^2
        let mut x = [0.0; DIMENSION];
        x[0] = 1.0;
        x[1] = 1.0;
        assert_eq!(eval(BenchmarkId::F8, &x), 2.0 + 3.0);
    }

    #[test]
    fn powell_ignores_trailing_axes() {
        let mut x = [0.0; DIMENSION];
        x[28] = 3.0;
        x[29] = -2.0;
        assert_eq!(eval(BenchmarkId::F18, &x), 0.0);
        x[27] = 1.0;
        assert!(eval(BenchmarkId::F18, &x) > 0.0);
    }

    #[test]
    fn quartic_adds_one_noise_draw() {
        let zero = [0.0; DIMENSION];
        assert_eq!(BenchmarkId::F7.evaluate(&zero, &mut ConstantSource(0.25)), 0.25);
    }

    #[test]
    fn registry_shape() {
        let all = list_functions();
        assert_eq!(all.len(), 19);
        for (k, e) in all.iter().enumerate() {
            assert_eq!(e.id.as_str(), format!("f{}", k + 1));
            assert_eq!(e.spec.dimension(), 30);
        }
        assert_eq!(all[4].spec.bounds, Bounds::uniform(30, -30.0, 30.0).unwrap());
        assert_eq!(all[10].spec.bounds, Bounds::uniform(30, -5.0, 10.0).unwrap());
        let testable: Vec<&str> = all
            .iter()
            .filter(|e| e.optimum_testable)
            .map(|e| e.id.as_str())
            .collect();
        assert_eq!(
            testable,
            [
                "f1", "f2", "f3", "f5", "f6", "f9", "f10", "f11", "f12", "f13", "f15", "f16",
                "f17", "f18", "f19"
            ]
        );
    }

    #[test]
    fn evaluate_by_id_errors() {
        let mut rng = ConstantSource(0.0);
        assert!(matches!(
            evaluate("f99", &[0.0; 30], &mut rng),
            Err(Error::UnknownFunction(ref s)) if s == "f99"
        ));
        assert!(matches!(
            evaluate("f1", &[0.0; 3], &mut rng),
            Err(Error::Dimension { expected: 30, found: 3 })
        ));
        assert_eq!(evaluate("F1", &[0.0; 30], &mut rng).unwrap(), 0.0);
    }

    #[test]
    fn testable_optima() {
        for e in list_functions().iter().filter(|e| e.optimum_testable) {
            let point = e.spec.optimum_point.as_ref().unwrap();
            let v = e.spec.evaluate(point, &mut ConstantSource(0.0)).unwrap();
            assert!(
                (v - e.spec.optimum_value.unwrap()).abs() <= 1e-6,
                "{}: {v}",
                e.id
            );
        }
    }

    proptest! {
        #[test]
        fn random_probes_are_finite(seed in any::<u64>()) {
            let mut rng = RandomStream::new(seed);
            for id in BenchmarkId::ALL {
                let (lo, hi) = id.domain();
                let x: Vec<f64> = (0..DIMENSION).map(|_| lo + rng.uniform() * (hi - lo)).collect();
                prop_assert!(id.evaluate(&x, &mut rng).is_finite(), "{}", id);
            }
        }

        #[test]
        fn step_is_integer_valued(x in prop::collection::vec(-100f64..100.0, DIMENSION)) {
            let v = eval(BenchmarkId::F6, &x);
            prop_assert_eq!(v, v.round());
        }
    }
}
