//! Crate-wide error type.

use thiserror::Error;

use crate::mrp::MrpViolation;

/// Errors produced by catalog construction, solving, decomposition and IO.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {rank} out of range 1..={k}")]
    RankOutOfRange { rank: usize, k: usize },

    #[error("dimension mismatch: {context} (expected {expected}, found {found})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("k={k} exceeds item count n={n}")]
    KExceedsN { k: usize, n: usize },

    #[error("invalid catalog: {0}")]
    InvalidCatalog(String),

    #[error("merit of item {index} is {merit}; merits must lie in (0, 1]")]
    MeritOutOfRange { index: usize, merit: f64 },

    #[error("invalid MRP matrix: {} constraint violation(s), first: {}", .0.len(), .0[0])]
    InvalidMrp(Vec<MrpViolation>),

    #[error("row {row} sums to {sum}, above 1 beyond tolerance; cannot extend")]
    RowSumExceedsOne { row: usize, sum: f64 },

    #[error("invalid ranking: {0}")]
    InvalidRanking(String),

    #[error("invalid policy: {0}")]
    InvalidPolicy(String),

    #[error("no perfect matching found: decomposition stuck (numeric corruption?)")]
    DecompositionStuck,

    #[error("decomposition exceeded {limit} iterations without terminating")]
    IterationGuard { limit: usize },

    #[error("LP solver failed after {iterations} iterations: {message}")]
    Solver { message: String, iterations: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("CSV error at line {line}: {message}")]
    Csv { line: u64, message: String },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
