use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::output::{format_number, write_convergence_csv_with_header};
use super::{Algorithm, ExperimentConfig};
use crate::baselines::{abc_run, pso_run, AbcParams, PsoParams};
use crate::benchmarks::{BenchmarkId, DIMENSION};
use crate::error::{Error, Result};
use crate::objective::{ObjectiveSpec, RunRecord};
use crate::sso::{self, SsoParams};
use crate::stats::{summarize, wilcoxon_ranksum, RunSummary};

/// The SSO-versus-baseline comparisons reported per function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pair {
    SsoPso,
    SsoAbc,
}

impl Pair {
    pub const ALL: [Pair; 2] = [Pair::SsoPso, Pair::SsoAbc];

    pub fn baseline(self) -> Algorithm {
        match self {
            Pair::SsoPso => Algorithm::Pso,
            Pair::SsoAbc => Algorithm::Abc,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Pair::SsoPso => "sso-pso",
            Pair::SsoAbc => "sso-abc",
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Aggregated campaign results, ordered by function then algorithm.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ComparisonTable {
    pub rows: BTreeMap<(BenchmarkId, Algorithm), RunSummary>,
    /// Per-run final bests in run order, one vector per row.
    pub final_bests: BTreeMap<(BenchmarkId, Algorithm), Vec<f64>>,
    pub p_values: BTreeMap<(BenchmarkId, Pair), f64>,
}

impl ComparisonTable {
    pub fn summary(&self, function: BenchmarkId, algorithm: Algorithm) -> Option<&RunSummary> {
        self.rows.get(&(function, algorithm))
    }

    pub fn p_value(&self, function: BenchmarkId, pair: Pair) -> Option<f64> {
        self.p_values.get(&(function, pair)).copied()
    }

    /// Functions on which SSO's AB is strictly below the baseline's AB.
    pub fn sso_wins(&self, baseline: Algorithm) -> Vec<BenchmarkId> {
        self.rows
            .iter()
            .filter(|((_, a), _)| *a == Algorithm::Sso)
            .filter_map(|((f, _), s)| {
                let other = self.summary(*f, baseline)?;
                (s.ab < other.ab).then_some(*f)
            })
            .collect()
    }
}

/// Reported once per finished `(function, algorithm, run)` cell.
#[derive(Debug, Clone, Copy)]
pub struct CellProgress {
    pub function: BenchmarkId,
    pub algorithm: Algorithm,
    pub run: u64,
    pub best_fitness: f64,
    pub done: usize,
    pub total: usize,
}

/// Runs one algorithm on `spec` with the campaign's shared settings.
pub fn run_algorithm(
    algorithm: Algorithm,
    spec: &ObjectiveSpec,
    cfg: &ExperimentConfig,
    seed: u64,
) -> Result<RunRecord> {
    match algorithm {
        Algorithm::Sso => sso::run(
            spec,
            SsoParams {
                population_size: cfg.population,
                max_iterations: cfg.iterations,
                pf: cfg.pf,
                seed,
            },
        ),
        Algorithm::Pso => pso_run(
            spec,
            PsoParams {
                population_size: cfg.population,
                max_iterations: cfg.iterations,
                seed,
                ..PsoParams::default()
            },
        ),
        Algorithm::Abc => abc_run(
            spec,
            AbcParams {
                colony_size: cfg.population,
                max_iterations: cfg.iterations,
                seed,
                ..AbcParams::default()
            },
        ),
    }
}

/// [`run_campaign_with`] without progress reporting.
pub fn run_campaign(cfg: &ExperimentConfig) -> Result<ComparisonTable> {
    run_campaign_with(cfg, |_| {})
}

/// Runs every `(function, algorithm, run)` cell, writes `summary.csv`,
/// `pvalues.csv` and `traces/` under `cfg.output_dir`, and returns the
/// aggregated table. Cells run in parallel; results are aggregated in run
/// order so output does not depend on scheduling.
pub fn run_campaign_with<F>(cfg: &ExperimentConfig, progress: F) -> Result<ComparisonTable>
where
    F: Fn(CellProgress) + Sync,
{
    cfg.validate()?;
    let trace_dir = cfg.output_dir.join("traces");
    fs::create_dir_all(&trace_dir)?;
    let header = provenance(cfg);

    let specs: BTreeMap<BenchmarkId, ObjectiveSpec> = cfg
        .functions
        .iter()
        .map(|f| (*f, f.objective(DIMENSION)))
        .collect();
    let mut cells = Vec::new();
    for &f in specs.keys() {
        let mut algorithms = cfg.algorithms.clone();
        algorithms.sort();
        for a in algorithms {
            for k in 0..cfg.runs {
                cells.push((f, a, k));
            }
        }
    }
    let total = cells.len();
    let done = std::sync::atomic::AtomicUsize::new(0);

    let outcomes: Vec<Result<f64>> = cells
        .par_iter()
        .map(|&(f, a, k)| {
            let seed = cfg.base_seed.wrapping_add(k);
            let tag = |source: Error| Error::Cell {
                function: f.to_string(),
                algorithm: a.to_string(),
                run: k,
                source: Box::new(source),
            };
            let record = run_algorithm(a, &specs[&f], cfg, seed).map_err(tag)?;
            let path = trace_path(&trace_dir, f, a, k);
            let h = format!("{header} function={f} algorithm={a} run={k} seed={seed}");
            write_convergence_csv_with_header(&record, Some(&h), &path).map_err(tag)?;
            progress(CellProgress {
                function: f,
                algorithm: a,
                run: k,
                best_fitness: record.best_fitness,
                done: done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1,
                total,
            });
            Ok(record.best_fitness)
        })
        .collect();

    let mut table = ComparisonTable::default();
    for (&(f, a, _), outcome) in cells.iter().zip(outcomes) {
        table.final_bests.entry((f, a)).or_default().push(outcome?);
    }
    for (key, bests) in &table.final_bests {
        table.rows.insert(*key, summarize(bests)?);
    }
    if cfg.runs >= 3 {
        for &f in specs.keys() {
            let Some(sso_bests) = table.final_bests.get(&(f, Algorithm::Sso)) else {
                continue;
            };
            for pair in Pair::ALL {
                if let Some(other) = table.final_bests.get(&(f, pair.baseline())) {
                    let p = wilcoxon_ranksum(sso_bests, other)?;
                    table.p_values.insert((f, pair), p);
                }
            }
        }
    }

    write_summary(&table, &header, &cfg.output_dir.join("summary.csv"))?;
    write_pvalues(&table, &header, &cfg.output_dir.join("pvalues.csv"))?;
    Ok(table)
}

/// Location of the trace for one cell.
pub fn trace_path(dir: &Path, function: BenchmarkId, algorithm: Algorithm, run: u64) -> PathBuf {
    dir.join(format!("{function}_{algorithm}_{run}.csv"))
}

fn provenance(cfg: &ExperimentConfig) -> String {
    format!("config={} base_seed={}", cfg.digest(), cfg.base_seed)
}

fn write_summary(table: &ComparisonTable, header: &str, path: &Path) -> Result<()> {
    let mut out = BufWriter::new(fs::File::create(path)?);
    writeln!(out, "# {header}")?;
    writeln!(out, "function,algorithm,ab,mb,sd")?;
    for ((f, a), s) in &table.rows {
        writeln!(
            out,
            "{f},{a},{},{},{}",
            format_number(s.ab),
            format_number(s.mb),
            format_number(s.sd)
        )?;
    }
    out.flush()?;
    Ok(())
}

fn write_pvalues(table: &ComparisonTable, header: &str, path: &Path) -> Result<()> {
    let mut out = BufWriter::new(fs::File::create(path)?);
    writeln!(out, "# {header}")?;
    writeln!(out, "function,pair,p")?;
    for ((f, pair), p) in &table.p_values {
        writeln!(out, "{f},{pair},{}", format_number(*p))?;
    }
    out.flush()?;
    Ok(())
}
