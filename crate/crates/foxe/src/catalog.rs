//! Candidate sets: per-query items with merits and an outlier feature.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::DEFAULT_MERIT_FLOOR;

/// One ranked candidate: an opaque id, its merit (relevance-derived
/// deservedness of exposure) and the visible feature used for outlier
/// detection (e.g. a citation count).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Item {
    pub doc_id: String,
    pub merit: f64,
    pub feature: f64,
}

/// The candidate set for a single query.
///
/// Merits may arrive on an arbitrary scale; [`ItemCatalog::normalize_merits`]
/// rescales them into `[merit_floor, 1]` so every item keeps a non-zero
/// probability of being ranked.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ItemCatalog {
    query_id: String,
    items: Vec<Item>,
}

impl ItemCatalog {
    /// Builds a catalog, checking that it is non-empty, that doc ids are
    /// distinct and that merits and features are finite.
    pub fn new(query_id: impl Into<String>, items: Vec<Item>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::InvalidCatalog("catalog has no items".into()));
        }
        let mut seen = HashSet::with_capacity(items.len());
        for item in &items {
            if !seen.insert(item.doc_id.as_str()) {
                return Err(Error::InvalidCatalog(format!(
                    "duplicate doc_id {:?}",
                    item.doc_id
                )));
            }
            if !item.merit.is_finite() || !item.feature.is_finite() {
                return Err(Error::InvalidCatalog(format!(
                    "non-finite merit or feature for doc_id {:?}",
                    item.doc_id
                )));
            }
        }
        Ok(Self {
            query_id: query_id.into(),
            items,
        })
    }

    pub fn query_id(&self) -> &str {
        &self.query_id
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    /// Number of candidate items `n`.
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 1 is enforced at construction
    }

    /// Merits in catalog order.
    pub fn merits(&self) -> Vec<f64> {
        self.items.iter().map(|item| item.merit).collect()
    }

    /// Outlier features in catalog order.
    pub fn features(&self) -> Vec<f64> {
        self.items.iter().map(|item| item.feature).collect()
    }

    /// Affinely rescales merits into `[floor, 1]`; a constant merit profile
    /// maps to all ones. Features are left untouched.
    pub fn normalize_merits(&self, floor: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&floor) || floor == 0.0 {
            return Err(Error::InvalidParameter(format!(
                "merit floor must lie in (0, 1), got {floor}"
            )));
        }
        let lo = self.items.iter().map(|i| i.merit).fold(f64::INFINITY, f64::min);
        let hi = self
            .items
            .iter()
            .map(|i| i.merit)
            .fold(f64::NEG_INFINITY, f64::max);
        let span = hi - lo;
        let items = self
            .items
            .iter()
            .map(|item| {
                let merit = if span <= 0.0 {
                    1.0
                } else {
                    floor + (item.merit - lo) / span * (1.0 - floor)
                };
                Item {
                    doc_id: item.doc_id.clone(),
                    merit,
                    feature: item.feature,
                }
            })
            .collect();
        Ok(Self {
            query_id: self.query_id.clone(),
            items,
        })
    }

    /// [`ItemCatalog::normalize_merits`] with the default floor of `1e-4`.
    pub fn normalized(&self) -> Result<Self> {
        self.normalize_merits(DEFAULT_MERIT_FLOOR)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn item(id: &str, merit: f64, feature: f64) -> Item {
        Item {
            doc_id: id.into(),
            merit,
            feature,
        }
    }

    #[test]
    fn rejects_empty_and_duplicate_ids() {
        assert!(ItemCatalog::new("q", vec![]).is_err());
        let dup = vec![item("a", 0.5, 0.0), item("a", 0.2, 0.0)];
        assert!(ItemCatalog::new("q", dup).is_err());
    }

    #[test]
    fn normalization_maps_extremes_to_floor_and_one() {
        let cat = ItemCatalog::new("q", vec![item("a", 3.0, 0.0), item("b", -1.0, 0.0)]).unwrap();
        let norm = cat.normalized().unwrap();
        assert_eq!(norm.items()[0].merit, 1.0);
        assert_eq!(norm.items()[1].merit, 1e-4);
    }

    #[test]
    fn normalization_of_constant_profile_is_all_ones() {
        let cat = ItemCatalog::new("q", vec![item("a", 0.7, 1.0), item("b", 0.7, 2.0)]).unwrap();
        let norm = cat.normalized().unwrap();
        assert!(norm.merits().iter().all(|&m| m == 1.0));
    }

    #[test]
    fn normalization_keeps_order_and_range() {
        let cat = ItemCatalog::new(
            "q",
            vec![item("a", 0.9, 0.0), item("b", 0.1, 0.0), item("c", 0.4, 0.0)],
        )
        .unwrap();
        let merits = cat.normalized().unwrap().merits();
        assert!(merits[0] > merits[2] && merits[2] > merits[1]);
        assert!(merits.iter().all(|&m| (1e-4..=1.0).contains(&m)));
    }
}
