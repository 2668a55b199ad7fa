//! Brute-force combinatorics: partitions and bipartitions with distinct odd
//! parts, their statistics, and the bivariate generating functions those
//! statistics must match.
//!
//! Counting ([`pod2_count`]) and listing ([`enum_pod_bipartitions`]) are
//! separate code paths. Listing is exponential and meant for weights up to
//! the mid thirties.

mod gf;
mod partition;
mod stats;

pub use gf::{bivar_gf_from_products, largest_part_parity_gfs};
pub use partition::{enum_pod_bipartitions, enum_pod_partitions, Bipartition, Partition};
pub use stats::{
    birank_b, birank_c, pod2_count, pod2_counts, pod_counts, rank_d, residue_counts, stat_table, StatRow,
    StatTable, Statistic,
};

/// Largest weight the enumeration-backed checks visit by default.
pub const ENUMERATION_CAP: usize = 32;
