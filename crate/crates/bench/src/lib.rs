//! Shared setup helpers for the criterion benches.

pub use genuslab::{Curve, FieldCtx};

/// The standard small test matrix used by the benches.
pub fn bench_pairs() -> Vec<(u64, u32)> {
    vec![(3, 1), (3, 2), (3, 3), (5, 1)]
}
