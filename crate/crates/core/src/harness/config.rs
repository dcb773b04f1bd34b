use std::fs;
use std::path::PathBuf;

use clap::Args;
use sha2::{Digest, Sha256};

use super::Algorithm;
use crate::benchmarks::BenchmarkId;
use crate::error::{Error, Result};

/// Campaign settings. Defaults follow the published comparison protocol:
/// every function and algorithm, 30 runs of 1000 iterations, 50 agents,
/// PF 0.7.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub functions: Vec<BenchmarkId>,
    pub algorithms: Vec<Algorithm>,
    pub runs: u64,
    pub iterations: usize,
    pub population: usize,
    pub pf: f64,
    pub base_seed: u64,
    pub output_dir: PathBuf,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            functions: BenchmarkId::ALL.to_vec(),
            algorithms: Algorithm::ALL.to_vec(),
            runs: 30,
            iterations: 1000,
            population: 50,
            pf: 0.7,
            base_seed: 0,
            output_dir: PathBuf::from("results"),
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.functions.is_empty() {
            return Err(Error::Config("no functions selected".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::Config("no algorithms selected".into()));
        }
        if self.runs < 1 {
            return Err(Error::Config("runs must be at least 1".into()));
        }
        if self.population < 4 {
            return Err(Error::Config(format!(
                "population must be at least 4, got {}",
                self.population
            )));
        }
        if !(0.0..=1.0).contains(&self.pf) {
            return Err(Error::Config(format!("pf must lie in [0, 1], got {}", self.pf)));
        }
        Ok(())
    }

    /// Canonical text of every setting that influences numeric output.
    pub fn canonical(&self) -> String {
        let join = |v: Vec<&str>| v.join(",");
        format!(
            "functions={};algorithms={};runs={};iterations={};population={};pf={:?};seed={}",
            join(self.functions.iter().map(|f| f.as_str()).collect()),
            join(self.algorithms.iter().map(|a| a.as_str()).collect()),
            self.runs,
            self.iterations,
            self.population,
            self.pf,
            self.base_seed
        )
    }

    /// Short SHA-256 digest of [`canonical`](Self::canonical).
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(self.canonical().as_bytes());
        hex::encode(&hash[..8])
    }
}

/// Flags of the `run` subcommand. A config file uses the same names as keys.
#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// Flat `key = value` file with the same keys as these flags
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Comma-separated function ids (f1..f19) or `all`
    #[arg(long)]
    pub functions: Option<String>,
    /// Comma-separated algorithm ids (sso, pso, abc) or `all`
    #[arg(long)]
    pub algorithms: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub runs: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub iterations: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub population: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub pf: Option<String>,
    /// Base seed; run k uses seed + k
    #[arg(long, allow_hyphen_values = true)]
    pub seed: Option<String>,
    /// Output directory
    #[arg(long)]
    pub out: Option<PathBuf>,
}

const KEYS: [&str; 8] = [
    "functions",
    "algorithms",
    "runs",
    "iterations",
    "population",
    "pf",
    "seed",
    "out",
];

/// Builds a configuration from defaults, then `file_text` (if any), then
/// flags. Later sources win.
pub fn parse_config(file_text: Option<&str>, args: &RunArgs) -> Result<ExperimentConfig> {
    let mut cfg = ExperimentConfig::default();
    if let Some(text) = file_text {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            let key = key.trim();
            if key == "config" || !KEYS.contains(&key) {
                return Err(Error::Config(format!(
                    "line {}: unknown key `{key}`",
                    lineno + 1
                )));
            }
            apply(&mut cfg, key, value.trim())?;
        }
    }
    let flags = [
        ("functions", args.functions.as_deref()),
        ("algorithms", args.algorithms.as_deref()),
        ("runs", args.runs.as_deref()),
        ("iterations", args.iterations.as_deref()),
        ("population", args.population.as_deref()),
        ("pf", args.pf.as_deref()),
        ("seed", args.seed.as_deref()),
    ];
    for (key, value) in flags {
        if let Some(value) = value {
            apply(&mut cfg, key, value)?;
        }
    }
    if let Some(out) = &args.out {
        cfg.output_dir = out.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

impl RunArgs {
    /// Reads the `--config` file, if given, and resolves the configuration.
    pub fn resolve(&self) -> Result<ExperimentConfig> {
        let text = match &self.config {
            Some(path) => Some(fs::read_to_string(path).map_err(|e| {
                Error::Config(format!("cannot read {}: {e}", path.display()))
            })?),
            None => None,
        };
        parse_config(text.as_deref(), self)
    }
}

fn apply(cfg: &mut ExperimentConfig, key: &str, value: &str) -> Result<()> {
    match key {
        "functions" => cfg.functions = parse_list(value, &BenchmarkId::ALL)?,
        "algorithms" => cfg.algorithms = parse_list(value, &Algorithm::ALL)?,
        "runs" => cfg.runs = parse_count(key, value)?,
        "iterations" => cfg.iterations = parse_number(key, value)?,
        "population" => cfg.population = parse_count(key, value)?,
        "pf" => cfg.pf = parse_number(key, value)?,
        "seed" => cfg.base_seed = parse_number(key, value)?,
        "out" => cfg.output_dir = PathBuf::from(value),
        _ => return Err(Error::Config(format!("unknown key `{key}`"))),
    }
    Ok(())
}

fn parse_list<T>(value: &str, all: &[T]) -> Result<Vec<T>>
where
    T: std::str::FromStr<Err = Error> + Copy + PartialEq,
{
    if value.trim().eq_ignore_ascii_case("all") {
        return Ok(all.to_vec());
    }
    let mut out = Vec::new();
    for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let parsed: T = item.parse()?;
        if !out.contains(&parsed) {
            out.push(parsed);
        }
    }
    Ok(out)
}

fn parse_number<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Config(format!("{key}: cannot parse `{value}`")))
}

fn parse_count<T: std::str::FromStr + PartialEq + Default>(key: &str, value: &str) -> Result<T> {
    let n: T = parse_number(key, value)?;
    if n == T::default() {
        return Err(Error::Config(format!("{key} must be positive, got {value}")));
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    #[derive(Parser)]
    struct Cli {
        #[command(flatten)]
        run: RunArgs,
    }

    fn args(argv: &[&str]) -> RunArgs {
        Cli::try_parse_from(std::iter::once("run").chain(argv.iter().copied()))
            .unwrap()
            .run
    }

    #[test]
    fn empty_input_gives_protocol_defaults() {
        let cfg = parse_config(None, &RunArgs::default()).unwrap();
        assert_eq!(cfg.functions.len(), 19);
        assert_eq!(cfg.algorithms, vec![Algorithm::Sso, Algorithm::Pso, Algorithm::Abc]);
        assert_eq!((cfg.runs, cfg.iterations, cfg.population), (30, 1000, 50));
        assert_eq!(cfg.pf, 0.7);
        assert_eq!(parse_config(Some(""), &RunArgs::default()).unwrap(), cfg);
    }

    #[test]
    fn flags_select_a_small_campaign() {
        let cfg = parse_config(
            None,
            &args(&["--functions", "f1,f3", "--algorithms", "sso", "--runs", "5"]),
        )
        .unwrap();
        assert_eq!(cfg.functions, vec![BenchmarkId::F1, BenchmarkId::F3]);
        assert_eq!(cfg.algorithms, vec![Algorithm::Sso]);
        assert_eq!(cfg.runs, 5);
    }

    #[test]
    fn unknown_function_is_named() {
        let err = parse_config(None, &args(&["--functions", "f99"])).unwrap_err();
        assert!(err.to_string().contains("f99"), "{err}");
        let err = parse_config(None, &args(&["--algorithms", "ga"])).unwrap_err();
        assert!(err.to_string().contains("ga"), "{err}");
    }

    #[test]
    fn non_positive_counts_rejected() {
        for argv in [
            &["--runs", "0"][..],
            &["--population", "0"],
            &["--population", "3"],
            &["--runs", "-2"],
            &["--pf", "1.5"],
            &["--iterations", "many"],
        ] {
            assert!(
                matches!(parse_config(None, &args(argv)), Err(Error::Config(_))),
                "{argv:?}"
            );
        }
        // zero iterations is a valid degenerate campaign
        assert_eq!(parse_config(None, &args(&["--iterations", "0"])).unwrap().iterations, 0);
    }

    #[test]
    fn flags_override_file_override_defaults() {
        let file = "# campaign\nfunctions = f2, f4\nruns = 7\npf = 0.5\nout = /tmp/x\n";
        let cfg = parse_config(Some(file), &args(&["--runs", "3"])).unwrap();
        assert_eq!(cfg.functions, vec![BenchmarkId::F2, BenchmarkId::F4]);
        assert_eq!(cfg.runs, 3);
        assert_eq!(cfg.pf, 0.5);
        assert_eq!(cfg.iterations, 1000);
        assert_eq!(cfg.output_dir, PathBuf::from("/tmp/x"));
    }

    #[test]
    fn unknown_file_keys_rejected() {
        let err = parse_config(Some("runs = 3\nmutation = 0.1\n"), &RunArgs::default()).unwrap_err();
        assert!(err.to_string().contains("mutation"));
        assert!(parse_config(Some("runs 3"), &RunArgs::default()).is_err());
    }

    #[test]
    fn digest_ignores_output_dir() {
        let a = ExperimentConfig::default();
        let b = ExperimentConfig {
            output_dir: "elsewhere".into(),
            ..a.clone()
        };
        assert_eq!(a.digest(), b.digest());
        let c = ExperimentConfig {
            base_seed: 1,
            ..a.clone()
        };
        assert_ne!(a.digest(), c.digest());
        assert_eq!(a.digest().len(), 16);
    }
}
