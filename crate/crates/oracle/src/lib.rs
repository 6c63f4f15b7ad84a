//! Ground truth at desk scale.
//!
//! This crate answers "what is the longest simple path between two vertices of
//! the m-by-n grid" by exhaustive enumeration of self-avoiding walks, plus the
//! structural validators used to check candidate paths and cycles produced by
//! the real solvers. It deliberately depends on nothing else in the workspace
//! and speaks plain `(x, y)` tuples, so its verdicts cannot be contaminated by
//! the code under test.
//!
//! Coordinates are 1-based with `(1, 1)` in the upper-left corner.

mod search;
mod validate;

pub use search::{brute_is_hamiltonian, brute_longest, OracleError, SearchBudget};
pub use validate::{validate_cycle, validate_path};
