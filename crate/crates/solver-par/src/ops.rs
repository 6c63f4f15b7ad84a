//! Work accounting for the simulated fine-grained solver.
//!
//! The solver assigns one processor per vertex and runs a fixed sequence of
//! phases. Within a phase every processor executes the same predicated,
//! loop-free decision code; only the branch outcomes differ per cell. The
//! counter therefore charges a documented flat cost per phase instead of
//! metering individual arithmetic: the flat cost is an upper tally of the
//! straight-line instruction count of that phase, and it is identical for
//! every processor by construction. This is what makes the whole-solve cost
//! per processor independent of the grid size.

/// Monotone operation counter attached to one simulated processor.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    total: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        OpCounter { total: 0 }
    }

    /// Record `n` operations. Counts only go up.
    pub fn charge(&mut self, n: u64) {
        self.total += n;
    }

    /// Operations recorded since construction or the last reset.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Clear the counter at a phase boundary.
    pub fn reset(&mut self) {
        self.total = 0;
    }
}

/// Flat per-phase charges, in abstract register operations.
///
/// Tallies are conservative upper counts of the predicated straight-line
/// code for each phase:
///
/// * `PLAN`: endpoint canonicalization (8), closed-form bound and deficit
///   (70), frame peeling with clamps (30), degenerate-core widening (40),
///   family dispatch including strip-chain group layout, crossing rows and
///   deficit split (80), band orientation solve and stitch designations (52).
/// * `REGION`: five interval comparisons against the peel offsets.
/// * `TRISECT`: the two split-column case expressions plus guards.
/// * `SUCCESSOR`: one family-specific successor evaluation; the widest
///   family (three-lane strip inside a chained group) bounds the tally.
/// * `COMBINE`: membership tests against at most five designated edge
///   rewrites plus the rewrite itself.
pub mod charge {
    pub const PLAN: u64 = 280;
    pub const REGION: u64 = 8;
    pub const TRISECT: u64 = 14;
    pub const SUCCESSOR: u64 = 110;
    pub const COMBINE: u64 = 50;

    /// Sum of all phases: the fixed whole-solve cost per processor.
    pub const TOTAL: u64 = PLAN + REGION + TRISECT + SUCCESSOR + COMBINE;
}
