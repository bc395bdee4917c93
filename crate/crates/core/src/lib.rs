//! Solvers for the Longest Filled Common Subsequence (LFCS) problem.
//!
//! Given strings `A`, `B` and a multiset `M`, LFCS asks for the longest
//! common subsequence of `A` and some string obtained by inserting symbols
//! of `M` into `B`. Equivalently, choose positions of `A` to match with
//! symbols of `M` and maximize their number plus the LCS of what is left
//! of `A` with `B`; every solver here works in that deletion form.
//!
//! - [`exact`]: exhaustive enumeration and an integer-program export.
//! - [`heuristics`]: uniform sampling and sliding-window local search.
//! - [`analysis`]: search-space size and bounds.
//! - [`generator`]: reproducible random instances.

pub mod analysis;
pub mod error;
pub mod exact;
pub mod generator;
pub mod heuristics;
pub mod lcs;
pub mod rng;
pub mod sequence;
pub mod solution;

pub use analysis::{bounds, match_capacity, normalize_to_maximal, search_space_size, Bounds, MatchCapacity};
pub use error::{LfcsError, Result};
pub use sequence::{Instance, Sequence, Symbol, SymbolMultiset};
pub use solution::{evaluate_solution, DeletionSolution, ScoredSolution};

/// Exact size of a search space; these overflow `u64` on realistic inputs.
pub type SpaceSize = num_bigint::BigUint;
