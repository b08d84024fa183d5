//! Marginal rank probability (MRP) matrices.
//!
//! `P[i][j]` is the probability that item `i` is placed at rank `j + 1`. A
//! valid top-k matrix is column-stochastic with row sums at most 1; in the
//! square case `k = n` it is doubly stochastic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exposure::ExposureModel;
use crate::DEFAULT_TOLERANCE;

/// An `n x k` marginal rank probability matrix, stored row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MrpMatrix {
    n: usize,
    k: usize,
    entries: Vec<f64>,
}

/// A single violated stochasticity constraint, reported as data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum MrpViolation {
    /// `P[row][col]` outside `[0, 1]` by `residual`.
    EntryRange { row: usize, col: usize, residual: f64 },
    /// Column `col` sums to `1 + residual` (signed).
    ColumnSum { col: usize, residual: f64 },
    /// Row `row` sums to more than 1 by `residual`.
    RowSumAboveOne { row: usize, residual: f64 },
    /// In the square case, row `row` sums to `1 + residual` (signed).
    RowSumNotOne { row: usize, residual: f64 },
}

impl fmt::Display for MrpViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EntryRange { row, col, residual } => {
                write!(f, "entry ({row},{col}) outside [0,1] by {residual:e}")
            }
            Self::ColumnSum { col, residual } => {
                write!(f, "column {col} sum deviates from 1 by {residual:e}")
            }
            Self::RowSumAboveOne { row, residual } => {
                write!(f, "row {row} sum exceeds 1 by {residual:e}")
            }
            Self::RowSumNotOne { row, residual } => {
                write!(f, "row {row} sum deviates from 1 by {residual:e}")
            }
        }
    }
}

impl MrpMatrix {
    /// Wraps row-major entries as an `n x k` matrix. Only the shape is
    /// checked here; stochasticity is the business of [`MrpMatrix::validate`].
    pub fn new(n: usize, k: usize, entries: Vec<f64>) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidParameter(
                "matrix dimensions must be positive".into(),
            ));
        }
        if k > n {
            return Err(Error::KExceedsN { k, n });
        }
        if entries.len() != n * k {
            return Err(Error::DimensionMismatch {
                context: "MRP entry count",
                expected: n * k,
                found: entries.len(),
            });
        }
        if entries.iter().any(|value| !value.is_finite()) {
            return Err(Error::InvalidParameter(
                "MRP entries must be finite".into(),
            ));
        }
        Ok(Self { n, k, entries })
    }

    /// Builds the matrix from nested rows.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let k = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidParameter("ragged MRP rows".into()));
        }
        Self::new(n, k, rows.concat())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.k + col]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.k..(row + 1) * self.k]
    }

    /// Entries as nested rows (for serialization).
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Checks all stochasticity invariants with the default tolerance,
    /// returning every violation found (empty means valid).
    pub fn validate(&self) -> Vec<MrpViolation> {
        self.validate_with_tolerance(DEFAULT_TOLERANCE)
    }

    /// [`MrpMatrix::validate`] with an explicit tolerance.
    pub fn validate_with_tolerance(&self, tol: f64) -> Vec<MrpViolation> {
        let mut violations = Vec::new();
        for row in 0..self.n {
            for col in 0..self.k {
                let value = self.get(row, col);
                let residual = if value < 0.0 {
                    value
                } else if value > 1.0 {
                    value - 1.0
                } else {
                    0.0
                };
                if residual.abs() > tol {
                    violations.push(MrpViolation::EntryRange { row, col, residual });
                }
            }
        }
        for col in 0..self.k {
            let sum: f64 = (0..self.n).map(|row| self.get(row, col)).sum();
            if (sum - 1.0).abs() > tol {
                violations.push(MrpViolation::ColumnSum {
                    col,
                    residual: sum - 1.0,
                });
            }
        }
        let square = self.k == self.n;
        for row in 0..self.n {
            let sum: f64 = self.row(row).iter().sum();
            if square {
                if (sum - 1.0).abs() > tol {
                    violations.push(MrpViolation::RowSumNotOne {
                        row,
                        residual: sum - 1.0,
                    });
                }
            } else if sum > 1.0 + tol {
                violations.push(MrpViolation::RowSumAboveOne {
                    row,
                    residual: sum - 1.0,
                });
            }
        }
        violations
    }

    /// Errors with the violation report unless the matrix is valid.
    pub fn ensure_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidMrp(violations))
        }
    }

    /// Expected exposure per item under the position-based model:
    /// `eps[i] = sum_j P[i][j] * v(j)`. Items never placed in the top-k get 0.
    pub fn expected_exposure(&self, model: &ExposureModel) -> Result<Vec<f64>> {
        if model.k() != self.k {
            return Err(Error::DimensionMismatch {
                context: "exposure model rank count",
                expected: self.k,
                found: model.k(),
            });
        }
        let biases = model.biases();
        Ok((0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(biases)
                    .map(|(p, v)| p * v)
                    .sum()
            })
            .collect())
    }
}

/// Free-function form of [`MrpMatrix::validate`].
pub fn validate_mrp(matrix: &MrpMatrix) -> Vec<MrpViolation> {
    matrix.validate()
}

/// Free-function form of [`MrpMatrix::expected_exposure`].
pub fn expected_exposure_from_mrp(
    matrix: &MrpMatrix,
    model: &ExposureModel,
) -> Result<Vec<f64>> {
    matrix.expected_exposure(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn doubly_stochastic_matrix_is_valid() {
        let m = MrpMatrix::from_rows(&[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        assert!(m.validate().is_empty());
    }

    #[test]
    fn column_sum_violation_is_reported_with_residual() {
        let m = MrpMatrix::from_rows(&[vec![0.6, 0.5], vec![0.5, 0.5]]).unwrap();
        let violations = m.validate();
        assert!(violations.iter().any(|v| matches!(
            v,
            MrpViolation::ColumnSum { col: 0, residual } if (residual - 0.1).abs() < 1e-12
        )));
    }

    #[test]
    fn top_one_column_is_valid() {
        let third = 1.0 / 3.0;
        let m = MrpMatrix::from_rows(&[vec![third], vec![third], vec![third]]).unwrap();
        assert!(m.validate().is_empty());
    }

    #[test]
    fn square_matrix_requires_row_sums_of_one() {
        let m = MrpMatrix::from_rows(&[vec![0.5, 0.4], vec![0.5, 0.6]]).unwrap();
        let violations = m.validate();
        assert!(violations
            .iter()
            .any(|v| matches!(v, MrpViolation::RowSumNotOne { row: 0, .. })));
    }

    #[test]
    fn exposure_of_identity_placement_is_the_bias_vector() {
        let m = MrpMatrix::from_rows(&[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let model = ExposureModel::new(2).unwrap();
        let eps = m.expected_exposure(&model).unwrap();
        assert_abs_diff_eq!(eps[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(eps[1], 0.6309297535714574, epsilon = 1e-12);
    }

    #[test]
    fn exposure_of_uniform_two_by_two() {
        let m = MrpMatrix::from_rows(&[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        let model = ExposureModel::new(2).unwrap();
        let eps = m.expected_exposure(&model).unwrap();
        let expected = 0.5 * (1.0 + 0.6309297535714574);
        assert_abs_diff_eq!(eps[0], expected, epsilon = 1e-12);
        assert_abs_diff_eq!(eps[1], expected, epsilon = 1e-12);
    }

    #[test]
    fn exposure_of_top_one_thirds() {
        let third = 1.0 / 3.0;
        let m = MrpMatrix::from_rows(&[vec![third], vec![third], vec![third]]).unwrap();
        let model = ExposureModel::new(1).unwrap();
        let eps = m.expected_exposure(&model).unwrap();
        for value in eps {
            assert_abs_diff_eq!(value, third, epsilon = 1e-12);
        }
    }

    #[test]
    fn exposure_requires_matching_dimensions() {
        let m = MrpMatrix::from_rows(&[vec![1.0], vec![0.0]]).unwrap();
        let model = ExposureModel::new(2).unwrap();
        assert!(m.expected_exposure(&model).is_err());
    }

    #[test]
    fn k_may_not_exceed_n() {
        assert!(MrpMatrix::new(1, 2, vec![0.5, 0.5]).is_err());
    }
}
