//! Concrete top-k rankings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An injective assignment of `k` distinct items to ranks `1..=k`:
/// `ranked_doc_indices[j]` is the catalog index of the item at rank `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Ranking {
    ranked_doc_indices: Vec<usize>,
}

impl Ranking {
    /// Builds a ranking over a catalog of `n` items, checking that indices
    /// are distinct and in range.
    pub fn new(ranked_doc_indices: Vec<usize>, n: usize) -> Result<Self> {
        if ranked_doc_indices.is_empty() {
            return Err(Error::InvalidRanking("ranking has no positions".into()));
        }
        if ranked_doc_indices.len() > n {
            return Err(Error::InvalidRanking(format!(
                "ranking has {} positions but only {} items exist",
                ranked_doc_indices.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &idx in &ranked_doc_indices {
            if idx >= n {
                return Err(Error::InvalidRanking(format!(
                    "item index {idx} out of range 0..{n}"
                )));
            }
            if seen[idx] {
                return Err(Error::InvalidRanking(format!(
                    "item index {idx} appears twice"
                )));
            }
            seen[idx] = true;
        }
        Ok(Self { ranked_doc_indices })
    }

    /// Item indices by rank (position `j` holds the item at rank `j + 1`).
    pub fn doc_indices(&self) -> &[usize] {
        &self.ranked_doc_indices
    }

    /// Number of ranked positions `k`.
    pub fn k(&self) -> usize {
        self.ranked_doc_indices.len()
    }

    /// 1-based rank of `item`, or `None` if it is outside the top-k.
    pub fn rank_of(&self, item: usize) -> Option<usize> {
        self.ranked_doc_indices
            .iter()
            .position(|&idx| idx == item)
            .map(|pos| pos + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_out_of_range() {
        assert!(Ranking::new(vec![0, 0], 3).is_err());
        assert!(Ranking::new(vec![0, 3], 3).is_err());
        assert!(Ranking::new(vec![], 3).is_err());
        assert!(Ranking::new(vec![2, 0], 3).is_ok());
    }

    #[test]
    fn rank_lookup_is_one_based() {
        let r = Ranking::new(vec![2, 0, 1], 3).unwrap();
        assert_eq!(r.rank_of(2), Some(1));
        assert_eq!(r.rank_of(1), Some(3));
        let top1 = Ranking::new(vec![1], 3).unwrap();
        assert_eq!(top1.rank_of(0), None);
    }
}
