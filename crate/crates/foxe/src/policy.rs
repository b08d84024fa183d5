//! Executable stochastic ranking policies.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mrp::MrpMatrix;
use crate::ranking::Ranking;
use crate::DEFAULT_TOLERANCE;

/// One policy entry: a ranking and the probability of showing it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolicyEntry {
    pub prob: f64,
    pub ranking: Ranking,
}

/// A probability distribution over rankings.
///
/// Entries are canonicalized at construction: duplicate rankings are merged,
/// zero-weight entries dropped, and the list is sorted by ranking so equal
/// policies compare equal regardless of how they were assembled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StochasticPolicy {
    n: usize,
    k: usize,
    entries: Vec<PolicyEntry>,
}

impl StochasticPolicy {
    /// Builds a policy from `(prob, ranking)` pairs over a catalog of `n`
    /// items; probabilities must be non-negative and sum to 1 within the
    /// default tolerance.
    pub fn new(n: usize, k: usize, pairs: Vec<(f64, Ranking)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidPolicy("policy has no entries".into()));
        }
        let mut merged: BTreeMap<Ranking, f64> = BTreeMap::new();
        for (prob, ranking) in pairs {
            if !prob.is_finite() || prob < 0.0 {
                return Err(Error::InvalidPolicy(format!(
                    "entry probability {prob} is not a finite non-negative value"
                )));
            }
            if ranking.k() != k {
                return Err(Error::InvalidPolicy(format!(
                    "ranking has {} positions, policy expects {k}",
                    ranking.k()
                )));
            }
            if ranking.doc_indices().iter().any(|&idx| idx >= n) {
                return Err(Error::InvalidPolicy(format!(
                    "ranking references an item outside 0..{n}"
                )));
            }
            *merged.entry(ranking).or_insert(0.0) += prob;
        }
        let entries: Vec<PolicyEntry> = merged
            .into_iter()
            .filter(|&(_, prob)| prob > 0.0)
            .map(|(ranking, prob)| PolicyEntry { prob, ranking })
            .collect();
        if entries.is_empty() {
            return Err(Error::InvalidPolicy("all entries have zero weight".into()));
        }
        let total: f64 = entries.iter().map(|e| e.prob).sum();
        if (total - 1.0).abs() > DEFAULT_TOLERANCE {
            return Err(Error::InvalidPolicy(format!(
                "entry probabilities sum to {total}, expected 1"
            )));
        }
        Ok(Self { n, k, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[PolicyEntry] {
        &self.entries
    }

    /// The marginal rank probability matrix realized by this policy:
    /// `P[i][j] = sum of probs of entries ranking item i at rank j+1`.
    pub fn marginal_matrix(&self) -> MrpMatrix {
        let mut entries = vec![0.0; self.n * self.k];
        for entry in &self.entries {
            for (pos, &item) in entry.ranking.doc_indices().iter().enumerate() {
                entries[item * self.k + pos] += entry.prob;
            }
        }
        MrpMatrix::new(self.n, self.k, entries)
            .expect("policy dimensions are validated at construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn ranking(indices: &[usize], n: usize) -> Ranking {
        Ranking::new(indices.to_vec(), n).unwrap()
    }

    #[test]
    fn duplicate_rankings_are_merged() {
        let policy = StochasticPolicy::new(
            2,
            2,
            vec![
                (0.25, ranking(&[0, 1], 2)),
                (0.25, ranking(&[0, 1], 2)),
                (0.5, ranking(&[1, 0], 2)),
            ],
        )
        .unwrap();
        assert_eq!(policy.entries().len(), 2);
        assert_abs_diff_eq!(policy.entries()[0].prob, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn zero_weight_entries_are_dropped() {
        let policy = StochasticPolicy::new(
            2,
            2,
            vec![(1.0, ranking(&[0, 1], 2)), (0.0, ranking(&[1, 0], 2))],
        )
        .unwrap();
        assert_eq!(policy.entries().len(), 1);
    }

    #[test]
    fn probabilities_must_sum_to_one() {
        let result = StochasticPolicy::new(2, 2, vec![(0.7, ranking(&[0, 1], 2))]);
        assert!(result.is_err());
    }

    #[test]
    fn marginals_of_a_fifty_fifty_policy_are_uniform() {
        let policy = StochasticPolicy::new(
            2,
            2,
            vec![(0.5, ranking(&[0, 1], 2)), (0.5, ranking(&[1, 0], 2))],
        )
        .unwrap();
        let matrix = policy.marginal_matrix();
        for value in matrix.entries() {
            assert_abs_diff_eq!(*value, 0.5, epsilon = 1e-15);
        }
    }
}
