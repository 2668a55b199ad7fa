use crate::error::{usage, Result};

/// Number of positive divisors `d` of `n` with `d = j (mod k)`, by trial
/// division.
pub fn divisor_class_count(n: u64, j: u64, k: u64) -> Result<u64> {
    if n == 0 {
        return usage("divisor counts need n >= 1");
    }
    if k == 0 {
        return usage("divisor class modulus must be positive");
    }
    let j = j % k;
    let mut count = 0;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            if d % k == j {
                count += 1;
            }
            let e = n / d;
            if e != d && e % k == j {
                count += 1;
            }
        }
        d += 1;
    }
    Ok(count)
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// True iff some prime `p = 3 (mod 4)` divides `n` to an odd power, which
/// is exactly when `n` is not a sum of two squares and
/// `d_{1,4}(n) = d_{3,4}(n)`.
pub fn two_squares_criterion(n: u64) -> Result<bool> {
    if n == 0 {
        return usage("two-squares criterion needs n >= 1");
    }
    Ok(factorize(n).iter().any(|&(p, e)| p % 4 == 3 && e % 2 == 1))
}

/// Coefficient of `q^n` in `psi(q)^2`, read off as the number of ordered
/// pairs of triangular numbers summing to `n`.
pub(crate) fn psi_squared_coeff(n: u64) -> u64 {
    let mut count = 0;
    let mut i = 0u64;
    while i * (i + 1) / 2 <= n {
        let rest = n - i * (i + 1) / 2;
        if is_triangular(rest) {
            count += 1;
        }
        i += 1;
    }
    count
}

fn is_triangular(t: u64) -> bool {
    // t = k(k+1)/2 iff 8t + 1 is a perfect square
    let s = 8 * t + 1;
    let r = s.isqrt();
    r * r == s
}

/// `t_2(n) = d_{1,4}(4n+1) - d_{3,4}(4n+1)`: ordered representations of `n`
/// as a sum of two triangular numbers.
///
/// Both the direct count and the divisor formula are evaluated; they must
/// agree.
pub fn t2(n: u64) -> u64 {
    let direct = psi_squared_coeff(n);
    let s = 4 * n + 1;
    let d1 = divisor_class_count(s, 1, 4).expect("4n+1 >= 1");
    let d3 = divisor_class_count(s, 3, 4).expect("4n+1 >= 1");
    assert_eq!(
        direct as i64,
        d1 as i64 - d3 as i64,
        "t2({n}): triangular count and divisor formula disagree"
    );
    direct
}
