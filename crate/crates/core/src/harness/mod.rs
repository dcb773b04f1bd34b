//! Experiment harness: configuration, multi-seed campaigns over
//! functions x algorithms, and CSV output.

mod campaign;
mod config;
mod output;

pub use campaign::{
    run_algorithm, run_campaign, run_campaign_with, trace_path, CellProgress, ComparisonTable, Pair,
};
pub use config::{parse_config, ExperimentConfig, RunArgs};
pub use output::{format_number, read_trace_csv, write_convergence_csv, write_trace};

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Optimizers the harness can run. The ids are the CLI identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    Sso,
    Pso,
    Abc,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Sso, Algorithm::Pso, Algorithm::Abc];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Sso => "sso",
            Algorithm::Pso => "pso",
            Algorithm::Abc => "abc",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        Self::ALL
            .into_iter()
            .find(|a| a.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}
