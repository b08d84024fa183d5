//! The position-based exposure model.
//!
//! Under the position-based model the attention an item collects depends only
//! on its rank: `v(j) = 1 / log_b(1 + j)`. The log base is not standardized
//! anywhere; we default to base 2 (the DCG convention, giving `v(1) = 1`) and
//! keep it configurable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Position-bias vector `v(1) >= v(2) >= ... >= v(k) > 0` for the top-k ranks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExposureModel {
    biases: Vec<f64>,
}

impl ExposureModel {
    /// Logarithmic position bias `v(j) = 1/log2(1+j)` for ranks `1..=k`.
    pub fn new(k: usize) -> Result<Self> {
        Self::with_log_base(k, 2.0)
    }

    /// Logarithmic position bias with a custom log base `b > 1`.
    pub fn with_log_base(k: usize, base: f64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be >= 1".into()));
        }
        if !(base > 1.0) || !base.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "log base must be a finite value > 1, got {base}"
            )));
        }
        let ln_base = base.ln();
        let biases = (1..=k)
            .map(|j| ln_base / (1.0 + j as f64).ln())
            .collect();
        Ok(Self { biases })
    }

    /// Builds a model from explicit biases; they must be strictly positive
    /// and non-increasing.
    pub fn from_biases(biases: Vec<f64>) -> Result<Self> {
        if biases.is_empty() {
            return Err(Error::EmptyInput("exposure biases"));
        }
        for (idx, window) in biases.windows(2).enumerate() {
            if window[1] > window[0] {
                return Err(Error::InvalidParameter(format!(
                    "biases must be non-increasing; v({}) < v({})",
                    idx + 1,
                    idx + 2
                )));
            }
        }
        if biases.iter().any(|&v| !(v > 0.0) || !v.is_finite()) {
            return Err(Error::InvalidParameter(
                "biases must be strictly positive and finite".into(),
            ));
        }
        Ok(Self { biases })
    }

    /// Number of ranks `k` the model covers.
    pub fn k(&self) -> usize {
        self.biases.len()
    }

    pub fn biases(&self) -> &[f64] {
        &self.biases
    }

    /// Exposure at 1-based rank `j`.
    pub fn position_bias(&self, rank: usize) -> Result<f64> {
        if rank == 0 || rank > self.biases.len() {
            return Err(Error::RankOutOfRange {
                rank,
                k: self.biases.len(),
            });
        }
        Ok(self.biases[rank - 1])
    }

    /// Total exposure spent on a ranking: `sum_j v(j)`.
    pub fn total_exposure(&self) -> f64 {
        self.biases.iter().sum()
    }
}

/// Free-function form of [`ExposureModel::position_bias`].
pub fn position_bias(rank: usize, model: &ExposureModel) -> Result<f64> {
    model.position_bias(rank)
}
