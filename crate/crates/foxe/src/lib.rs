//! Fair stochastic ranking policies for top-k retrieval.
//!
//! The pipeline implemented here turns a set of scored candidates into an
//! executable ranking distribution whose expected exposure is proportional to
//! item merit:
//!
//! 1. [`lp`] builds and solves the fairness-constrained linear program whose
//!    solution is a marginal rank probability (MRP) matrix.
//! 2. [`bvn`] decomposes the MRP matrix into a convex combination of concrete
//!    top-k rankings (a generalized Birkhoff-von Neumann decomposition driven
//!    by a capacity-adjusted Hopcroft-Karp matcher).
//! 3. [`felix`] iteratively re-samples that decomposition to push probability
//!    mass away from rankings whose exposure distribution is unknown (e.g.
//!    rankings containing a visual outlier), without changing the marginals.
//! 4. [`eval`] scores policies (EE-L, NDCG, P(unknown), outlierness, utility)
//!    and [`sim`] generates synthetic workloads and sensitivity sweeps.
//!
//! All types are immutable after construction and all operations are pure;
//! anything seeded takes an explicit seed and is deterministic for it.

pub mod bvn;
pub mod catalog;
pub mod error;
pub mod eval;
pub mod exposure;
pub mod felix;
pub mod io;
pub mod lp;
pub mod mrp;
pub mod policy;
pub mod ranking;
pub mod sim;

mod seeding;

pub use catalog::{Item, ItemCatalog};
pub use error::Error;
pub use exposure::ExposureModel;
pub use mrp::{MrpMatrix, MrpViolation};
pub use policy::{PolicyEntry, StochasticPolicy};
pub use ranking::Ranking;

/// Default numeric tolerance for stochasticity checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Default lower bound merits are kept away from zero.
pub const DEFAULT_MERIT_FLOOR: f64 = 1e-4;

/// Entries below this threshold are treated as zero during decomposition.
pub const ZERO_THRESHOLD: f64 = 1e-12;
