use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::stats::Statistic;
use crate::error::{Error, Result};
use crate::pseries::{BivariateSeries, Series};

/// Odd exponents `start, start + 2, ... <= order`.
fn stepped(start: usize, order: usize) -> impl Iterator<Item = usize> {
    (start..=order).step_by(2)
}

/// `(-q^r z^a; q^2)_inf` applied in place.
fn times_distinct(mut s: BivariateSeries, r: usize, a: i64) -> BivariateSeries {
    let order = s.order();
    for k in stepped(r, order) {
        s = s.times_binomial(1, a, k);
    }
    s
}

/// `1 / (q^2 z^a; q^2)_inf` applied in place.
fn over_unrestricted_even(mut s: BivariateSeries, a: i64) -> BivariateSeries {
    let order = s.order();
    for k in stepped(2, order) {
        s = s.divided_by_binomial(-1, a, k);
    }
    s
}

/// Bivariate generating function `sum R(m, n) z^m q^n` of a statistic,
/// expanded from its infinite product:
///
/// - b: `(-qz;q^2)(-q/z;q^2) / ((q^2 z;q^2)(q^2/z;q^2))`
/// - c: `(1+q/z)(1+qz) (-q^3 z^2;q^2)(-q^3/z^2;q^2) / ((q^2 z^2;q^2)(q^2/z^2;q^2))`
/// - d: `(-qz;q^2)/(q^2 z;q^2) * (-q;q^2)/(q^2;q^2)`
pub fn bivar_gf_from_products(stat: Statistic, order: usize) -> BivariateSeries {
    let one = BivariateSeries::one(order);
    match stat {
        Statistic::B => {
            let s = times_distinct(times_distinct(one, 1, 1), 1, -1);
            over_unrestricted_even(over_unrestricted_even(s, 1), -1)
        }
        Statistic::C => {
            let s = one.times_binomial(1, -1, 1).times_binomial(1, 1, 1);
            let s = times_distinct(times_distinct(s, 3, 2), 3, -2);
            over_unrestricted_even(over_unrestricted_even(s, 2), -2)
        }
        Statistic::D => {
            let s = times_distinct(times_distinct(one, 1, 1), 1, 0);
            over_unrestricted_even(over_unrestricted_even(s, 1), 0)
        }
    }
}

/// `(-q;q^2)_m / (q^2;q^2)_m` truncated at `order`.
fn finite_pod_ratio(m: usize, order: usize) -> Series {
    let mut s = Series::one(order);
    for j in 0..m {
        s = s.times_binomial(1, 2 * j + 1);
    }
    for j in 1..=m {
        s = s.divided_by_binomial(-1, 2 * j);
    }
    s
}

/// `sum_m (zq)^{2m + shift} (-q;q^2)_m / (q^2;q^2)_m`
fn largest_part_sum(order: usize, shift: usize) -> Result<BivariateSeries> {
    let mut entries: BTreeMap<(i64, usize), BigInt> = BTreeMap::new();
    let mut m = 0;
    while 2 * m + shift <= order {
        let lead = 2 * m + shift;
        let ratio = finite_pod_ratio(m, order - lead);
        for (n, c) in ratio.coeffs().into_iter().enumerate() {
            *entries.entry((lead as i64, n + lead)).or_default() += c;
        }
        m += 1;
    }
    BivariateSeries::from_entries(order, &entries)
}

/// Generating functions of partitions with distinct odd parts by largest
/// part, split by its parity: `A(z,q)` (largest part even, including the
/// empty partition) and `B(z,q)` (largest part odd), with `z` marking the
/// largest part.
///
/// Both are computed as explicit sums over the largest part and as the
/// closed products `A = (-q^3 z^2;q^2)/(q^2 z^2;q^2)` and `B = qz A`; the
/// product forms are returned once the two agree.
pub fn largest_part_parity_gfs(order: usize) -> Result<(BivariateSeries, BivariateSeries)> {
    let a_sum = largest_part_sum(order, 0)?;
    let b_sum = largest_part_sum(order, 1)?;
    let a_prod = over_unrestricted_even(times_distinct(BivariateSeries::one(order), 3, 2), 2);
    let b_prod = a_prod.shift(1, 1);
    if a_sum != a_prod {
        return Err(Error::Inconsistent("A(z,q): sum and product forms differ".into()));
    }
    if b_sum != b_prod {
        return Err(Error::Inconsistent("B(z,q): sum and product forms differ".into()));
    }
    Ok((a_prod, b_prod))
}
