//! Shared inputs for the benchmarks.

use alladi_core::enumeration::{enumerate, EnumerationQuery};
use alladi_core::{ClassKind, Partition};

/// Every Schur partition with sum at most `max_n`.
pub fn schur_inputs(max_n: u32) -> Vec<Partition> {
    (0..=max_n)
        .flat_map(|n| enumerate(&EnumerationQuery::new(ClassKind::Schur, n)))
        .collect()
}

/// Every Alladi partition with sum at most `max_n`.
pub fn alladi_inputs(max_n: u32) -> Vec<Partition> {
    (0..=max_n)
        .flat_map(|n| enumerate(&EnumerationQuery::new(ClassKind::Alladi, n)))
        .collect()
}
