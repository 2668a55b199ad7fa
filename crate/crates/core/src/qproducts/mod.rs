//! Pochhammer products and theta functions, plus the named generating
//! functions built from them.

mod lemmas;
mod spec;
mod theta;

pub use lemmas::{
    dissection_lemma_checks, lambert_quintic_lemma_check, modular_equation_check,
    psi_power_congruence, LEMMA_CHECK_NAMES,
};
pub use spec::{Factor, ProductSpec, Sign};
pub use theta::{jacobi_triple_product_check, jacobi_triple_product_spec, theta_f, ThetaArg};

use crate::error::Result;
use crate::pseries::Series;

/// `(sign q^r; q^m)_inf` truncated at `order`.
pub fn pochhammer(sign: Sign, r: usize, m: usize, order: usize) -> Series {
    let f = Factor::new(sign, r, m, 1).expect("pochhammer needs r, m >= 1");
    expand_product(&ProductSpec::new(vec![f]), order)
}

/// Exponents `r, r + m, r + 2m, ... <= order` of the binomials in a factor.
fn factor_exponents(f: &Factor, order: usize) -> impl Iterator<Item = usize> {
    (f.offset..=order).step_by(f.step)
}

fn apply_factor(mut acc: Series, f: &Factor) -> Series {
    if f.exponent == 0 {
        return acc;
    }
    let order = acc.order();
    let c = -f.sign.as_i64();
    let reps = f.exponent.unsigned_abs();
    let binomials = factor_exponents(f, order).count();

    // Repeated powers: expand the factor once and reuse it when it is
    // sparse enough that a sparse product beats replaying every binomial.
    if reps > 1 {
        let base = factor_exponents(f, order).fold(
            Series::one_in(order, acc.modulus()).expect("modulus already validated"),
            |s, k| s.times_binomial(c, k),
        );
        let nnz = base.support().len() as u64;
        if binomials as u64 + reps * nnz < reps * binomials as u64 {
            for _ in 0..reps {
                acc = if f.exponent > 0 {
                    &acc * &base
                } else {
                    acc.checked_div(&base).expect("constant term is 1")
                };
            }
            return acc;
        }
    }
    for _ in 0..reps {
        for k in factor_exponents(f, order) {
            acc = if f.exponent > 0 {
                acc.times_binomial(c, k)
            } else {
                acc.divided_by_binomial(c, k)
            };
        }
    }
    acc
}

/// Expands a product of Pochhammer factors with exact integer coefficients.
pub fn expand_product(spec: &ProductSpec, order: usize) -> Series {
    spec.factors
        .iter()
        .fold(Series::one(order), apply_factor)
}

/// Expands a product directly in modular arithmetic.
pub fn expand_product_mod(spec: &ProductSpec, order: usize, modulus: u64) -> Result<Series> {
    let one = Series::one_in(order, Some(modulus))?;
    Ok(spec.factors.iter().fold(one, apply_factor))
}

fn spec_of(factors: &[(i64, usize, usize, i64)]) -> ProductSpec {
    ProductSpec::new(
        factors
            .iter()
            .map(|&(s, r, m, e)| Factor::new(Sign::from_i64(s), r, m, e).expect("static spec"))
            .collect(),
    )
}

/// `(-q;q^2)^2 / (q^2;q^2)^2`, the generating function of pod_{-2}(n).
pub fn pod2_spec() -> ProductSpec {
    spec_of(&[(-1, 1, 2, 2), (1, 2, 2, -2)])
}

/// `(-q;q^2) / (q^2;q^2)`, partitions with distinct odd parts.
pub fn pod_spec() -> ProductSpec {
    spec_of(&[(-1, 1, 2, 1), (1, 2, 2, -1)])
}

/// `(q^2;q^2)^2 / (q;q)`, the product form of psi(q).
pub fn psi_spec() -> ProductSpec {
    spec_of(&[(1, 2, 2, 2), (1, 1, 1, -1)])
}

/// `(-q;q^2)^2 (q^2;q^2)`, the product form of phi(q).
pub fn phi_spec() -> ProductSpec {
    spec_of(&[(-1, 1, 2, 2), (1, 2, 2, 1)])
}

/// `(q^2;q^2)(q^3;q^3)^2 / ((q;q)(q^6;q^6))`.
pub fn a_spec() -> ProductSpec {
    spec_of(&[(1, 2, 2, 1), (1, 3, 3, 2), (1, 1, 1, -1), (1, 6, 6, -1)])
}

/// `psi(q) = sum_{n>=0} q^{n(n+1)/2}`.
pub fn psi(order: usize) -> Series {
    let mut v = vec![0i64; order + 1];
    let mut k = 0usize;
    while k * (k + 1) / 2 <= order {
        v[k * (k + 1) / 2] = 1;
        k += 1;
    }
    Series::from_i64s(&v)
}

/// `phi(q) = sum_{n in Z} q^{n^2}`.
pub fn phi(order: usize) -> Series {
    let mut v = vec![0i64; order + 1];
    v[0] = 1;
    let mut k = 1usize;
    while k * k <= order {
        v[k * k] = 2;
        k += 1;
    }
    Series::from_i64s(&v)
}

pub fn a_series(order: usize) -> Series {
    expand_product(&a_spec(), order)
}

/// `sum pod(n) q^n = 1 / psi(-q)`, in exact or modular mode.
pub fn pod_gf(order: usize, modulus: Option<u64>) -> Result<Series> {
    psi_neg_in(order, modulus)?.invert()
}

/// `sum pod_{-2}(n) q^n = 1 / psi(-q)^2`, in exact or modular mode.
///
/// Dividing twice by the sparse series psi(-q) costs O(N^1.5), which keeps
/// long modular scans cheap.
pub fn pod2_gf(order: usize, modulus: Option<u64>) -> Result<Series> {
    let p = psi_neg_in(order, modulus)?;
    p.invert()?.checked_div(&p)
}

fn psi_neg_in(order: usize, modulus: Option<u64>) -> Result<Series> {
    let p = psi(order).negate_q();
    match modulus {
        None => Ok(p),
        Some(m) => p.reduce_mod(m),
    }
}

#[cfg(test)]
mod tests;
