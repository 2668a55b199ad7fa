//! Verifiers for the pod_{-2} identities and congruences.
//!
//! Identity checks run in exact arithmetic. Congruence scans reduce the
//! generating function modulo 2, 3 or 5 so that long orders stay cheap.

mod birank;
mod checks;
mod divisors;
mod family;

pub use birank::{equidistribution_check, rank_parity_checks, theorem_5_1_check};
pub use checks::{
    congruence_3n1_check, corollary_2_2_scan, descent_relation_checks, pod2_3n2_product, pod2_odd_product,
    t2_bridge_check, t2_divisor_check, theorem_2_1_check, two_squares_check,
};
pub use divisors::{divisor_class_count, factorize, t2, two_squares_criterion};
pub use family::{family_members, family_scan, scan_progression, Family, FamilySpec};
