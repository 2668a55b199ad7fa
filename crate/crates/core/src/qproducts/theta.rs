use num_bigint::BigInt;

use super::{expand_product, Factor, ProductSpec, Sign};
use crate::error::{usage, Result};
use crate::pseries::Series;

/// A monomial `sign * q^exponent` used as an argument of `f(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaArg {
    pub sign: Sign,
    pub exponent: usize,
}

impl ThetaArg {
    pub fn new(sign: Sign, exponent: usize) -> Result<Self> {
        if exponent == 0 {
            return usage("theta argument needs a positive q-exponent");
        }
        Ok(ThetaArg { sign, exponent })
    }

    /// `q^k`
    pub fn q(k: usize) -> Self {
        Self::new(Sign::Plus, k).expect("k >= 1")
    }

    /// `-q^k`
    pub fn neg_q(k: usize) -> Self {
        Self::new(Sign::Minus, k).expect("k >= 1")
    }
}

fn sign_pow(s: Sign, e: i128) -> i64 {
    if s == Sign::Minus && e % 2 != 0 {
        -1
    } else {
        1
    }
}

/// Ramanujan's `f(a, b) = sum_{n in Z} a^{n(n-1)/2} b^{n(n+1)/2}` for
/// monomial arguments, truncated at `order`.
///
/// The q-exponent `ea n(n-1)/2 + eb n(n+1)/2` is a convex quadratic with its
/// vertex in `(-1/2, 1/2)`, so it is nondecreasing walking outward from 0 in
/// either direction; each walk stops at the first term past `order`.
pub fn theta_f(a: ThetaArg, b: ThetaArg, order: usize) -> Series {
    let (ea, eb) = (a.exponent as i128, b.exponent as i128);
    let mut coeffs = vec![0i64; order + 1];
    let mut walk = |dir: i128| {
        let mut n: i128 = if dir > 0 { 0 } else { -1 };
        loop {
            let (ta, tb) = (n * (n - 1) / 2, n * (n + 1) / 2);
            let e = ea * ta + eb * tb;
            if e > order as i128 {
                break;
            }
            coeffs[e as usize] += sign_pow(a.sign, ta) * sign_pow(b.sign, tb);
            n += dir;
        }
    };
    walk(1);
    walk(-1);
    Series::from_coeffs(coeffs.into_iter().map(BigInt::from).collect())
}

/// Factors of `(x q^r; y q^m)_inf` where the base may carry a sign.
///
/// With a negative base the even and odd steps split:
/// `(x; -Q)_inf = (x; Q^2)_inf (-x Q; Q^2)_inf`.
fn signed_base_factors(x: Sign, r: usize, base: Sign, m: usize) -> Vec<Factor> {
    match base {
        Sign::Plus => vec![Factor::new(x, r, m, 1).expect("positive exponents")],
        Sign::Minus => vec![
            Factor::new(x, r, 2 * m, 1).expect("positive exponents"),
            Factor::new(x * Sign::Minus, r + m, 2 * m, 1).expect("positive exponents"),
        ],
    }
}

/// The product side of the triple product identity:
/// `(-a; ab)_inf (-b; ab)_inf (ab; ab)_inf`.
pub fn jacobi_triple_product_spec(a: ThetaArg, b: ThetaArg) -> ProductSpec {
    let ab_sign = a.sign * b.sign;
    let ab = a.exponent + b.exponent;
    let mut factors = signed_base_factors(a.sign * Sign::Minus, a.exponent, ab_sign, ab);
    factors.extend(signed_base_factors(b.sign * Sign::Minus, b.exponent, ab_sign, ab));
    factors.extend(signed_base_factors(ab_sign, ab, ab_sign, ab));
    ProductSpec::new(factors)
}

/// True iff the bilateral sum `f(a, b)` equals its triple product
/// expansion to `order`.
pub fn jacobi_triple_product_check(a: ThetaArg, b: ThetaArg, order: usize) -> bool {
    theta_f(a, b, order) == expand_product(&jacobi_triple_product_spec(a, b), order)
}
