//! Inputs shared by the benchmarks in `benches/`.

use podq_core::qproducts::{pod2_spec, expand_product};
use podq_core::Series;

/// A dense exact series with growing coefficients: the pod_{-2} expansion.
pub fn dense(order: usize) -> Series {
    expand_product(&pod2_spec(), order)
}

/// A dense series with unit constant term and small coefficients, so
/// inversion stays cheap per term.
pub fn unit_dense(order: usize) -> Series {
    let coeffs: Vec<i64> = (0..=order as i64).map(|n| if n == 0 { 1 } else { (n * 7919) % 11 - 5 }).collect();
    Series::from_i64s(&coeffs)
}
