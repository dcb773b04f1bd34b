use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid bounds: {0}")]
    Bounds(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("population structure: {0}")]
    Structure(String),

    #[error("unknown benchmark function `{0}`")]
    UnknownFunction(String),

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("objective evaluation failed: {0}")]
    Evaluation(String),

    #[error("{function}/{algorithm} run {run}: {source}")]
    Cell {
        function: String,
        algorithm: String,
        run: u64,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] io::Error),
}
