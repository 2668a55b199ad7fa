//! Dissection identities for psi(q) and 1/psi(-q), checked as truncated
//! series equalities.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{a_series, expand_product, psi, theta_f, Factor, ProductSpec, ThetaArg};
use crate::error::Result;
use crate::pseries::Series;
use crate::report::{with_wall_time, CheckReport};

pub const LEMMA_CHECK_NAMES: [&str; 7] = [
    "inv_psi_neg_2dissection",
    "inv_psi_neg_3dissection",
    "psi_3dissection",
    "psi_cube_mod3",
    "psi_fifth_mod5",
    "psi_5dissection",
    "psi_times_psi_neg",
];

type LemmaFn = fn(usize) -> Result<CheckReport>;

/// Runs the seven dissection identities at `order`, in the fixed order of
/// [`LEMMA_CHECK_NAMES`].
pub fn dissection_lemma_checks(order: usize) -> Result<Vec<CheckReport>> {
    let checks: [LemmaFn; 7] = [
        inv_psi_neg_2dissection,
        inv_psi_neg_3dissection,
        psi_3dissection,
        |n| psi_power_congruence(3, n, Some(3)),
        |n| psi_power_congruence(5, n, Some(5)),
        psi_5dissection,
        psi_times_psi_neg,
    ];
    checks.par_iter().map(|f| with_wall_time(|| f(order))).collect()
}

fn psi_neg(order: usize) -> Series {
    psi(order).negate_q()
}

/// `1/psi(-q) = (f(q^6,q^10) + q f(q^2,q^14)) / ((q^2;q^2)(q^4;q^4))`
fn inv_psi_neg_2dissection(order: usize) -> Result<CheckReport> {
    let lhs = psi_neg(order).invert()?;
    let num = theta_f(ThetaArg::q(6), ThetaArg::q(10), order)
        + theta_f(ThetaArg::q(2), ThetaArg::q(14), order).shift(1);
    let den = expand_product(&ProductSpec::new(vec![Factor::euler(2, 1), Factor::euler(4, 1)]), order);
    let rhs = num.checked_div(&den)?;
    CheckReport::compare(LEMMA_CHECK_NAMES[0], &lhs, &rhs)
}

/// `1/psi(-q) = psi(-q^9)/psi(-q^3)^4 (A(-q^3)^2 + q A(-q^3) psi(-q^9) + q^2 psi(-q^9)^2)`
fn inv_psi_neg_3dissection(order: usize) -> Result<CheckReport> {
    let lhs = psi_neg(order).invert()?;
    let a3 = a_series(order).negate_q().substitute_power(3);
    let p9 = psi_neg(order).substitute_power(9);
    let p3 = psi_neg(order).substitute_power(3);
    let inner = &(&a3 * &a3) + &(&(&a3 * &p9).shift(1) + &(&p9 * &p9).shift(2));
    let rhs = (&p9 * &inner).checked_div(&p3.pow(4))?;
    CheckReport::compare(LEMMA_CHECK_NAMES[1], &lhs, &rhs)
}

/// `psi(q) = f(q^3, q^6) + q psi(q^9)`
fn psi_3dissection(order: usize) -> Result<CheckReport> {
    let rhs = theta_f(ThetaArg::q(3), ThetaArg::q(6), order) + psi(order).substitute_power(9).shift(1);
    CheckReport::compare(LEMMA_CHECK_NAMES[2], &psi(order), &rhs)
}

/// `psi(q^p)` against `psi(q)^p`, optionally reduced modulo `modulus`.
///
/// Only the reduced form is an identity (for p = 3 and 5 modulo p); the
/// exact comparison is expected to fail.
pub fn psi_power_congruence(p: u32, order: usize, modulus: Option<u64>) -> Result<CheckReport> {
    let base = match modulus {
        Some(m) => psi(order).reduce_mod(m)?,
        None => psi(order),
    };
    let name = match (p, modulus) {
        (3, Some(3)) => LEMMA_CHECK_NAMES[3].to_string(),
        (5, Some(5)) => LEMMA_CHECK_NAMES[4].to_string(),
        (p, Some(m)) => format!("psi_power{p}_mod{m}"),
        (p, None) => format!("psi_power{p}_exact"),
    };
    CheckReport::compare(name, &base.pow(p), &base.substitute_power(p as usize))
}

/// `q psi(q) psi(q^5) = psi(q^5) (q f(q^10,q^15) + q^2 f(q^5,q^20) + q^4 psi(q^25))`
fn psi_5dissection(order: usize) -> Result<CheckReport> {
    let p5 = psi(order).substitute_power(5);
    let lhs = (&psi(order) * &p5).shift(1);
    let inner = theta_f(ThetaArg::q(10), ThetaArg::q(15), order).shift(1)
        + theta_f(ThetaArg::q(5), ThetaArg::q(20), order).shift(2)
        + psi(order).substitute_power(25).shift(4);
    CheckReport::compare(LEMMA_CHECK_NAMES[5], &lhs, &(&p5 * &inner))
}

/// `psi(q) psi(-q) = (q^2;q^2)(q^4;q^4)`
fn psi_times_psi_neg(order: usize) -> Result<CheckReport> {
    let lhs = &psi(order) * &psi_neg(order);
    let rhs = expand_product(&ProductSpec::new(vec![Factor::euler(2, 1), Factor::euler(4, 1)]), order);
    CheckReport::compare(LEMMA_CHECK_NAMES[6], &lhs, &rhs)
}

/// `sum_{n>=0} w(5n+r) q^{5n+r} / (1 - q^{10n+2r})`, expanded by unrolling
/// each geometric series.
fn lambert_sum(r: usize, order: usize, weight: impl Fn(usize) -> i64) -> Series {
    let mut coeffs = vec![0i64; order + 1];
    let mut base = r;
    while base <= order {
        let w = weight(base);
        let mut e = base;
        while e <= order {
            coeffs[e] += w;
            e += 2 * base;
        }
        base += 5;
    }
    Series::from_coeffs(coeffs.into_iter().map(BigInt::from).collect())
}

/// The degree-5 modular equation in Lambert form:
///
/// ```text
/// q psi(q)^3 psi(q^5) - 5 q^2 psi(q) psi(q^5)^3
///   = sum_{r=1..4} s_r sum_n (5n+r) q^{5n+r} / (1 - q^{10n+2r})
/// ```
///
/// with signs `s = (+, -, -, +)`.
pub fn modular_equation_check(order: usize) -> Result<CheckReport> {
    let p = psi(order);
    let p5 = p.substitute_power(5);
    let lhs = (&p.pow(3) * &p5).shift(1) - (&p * &p5.pow(3)).scale(5).shift(2);
    let signs = [1i64, -1, -1, 1];
    let rhs = (1..=4).fold(Series::zero(order), |acc, r| {
        acc + lambert_sum(r, order, |b| signs[r - 1] * b as i64)
    });
    CheckReport::compare("modular_equation_deg5", &lhs, &rhs)
}

/// For `1 <= r <= 4`, the `q^{5n}` part of `sum q^{5n+r}/(1 - q^{10n+2r})`
/// reproduces the same series in `q`.
pub fn lambert_quintic_lemma_check(order: usize) -> Result<CheckReport> {
    for r in 1..=4 {
        let a = lambert_sum(r, order, |_| 1);
        let lhs = a.dissect(5, 0)?;
        let rhs = lambert_sum(r, lhs.order(), |_| 1);
        let report = CheckReport::compare("lambert_quintic_lemma", &lhs, &rhs)?;
        if !report.pass {
            return Ok(CheckReport { order, ..report });
        }
    }
    Ok(CheckReport::new("lambert_quintic_lemma", order, None))
}
