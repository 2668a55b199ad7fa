//! The pod_{-2} dissection identities, the direct congruence scans and the
//! index-descent relations.

use crate::error::{usage, Result};
use crate::pseries::Series;
use crate::qproducts::{expand_product, pod2_gf, psi, Factor, ProductSpec};
use crate::report::{series_counterexample, CheckReport, Counterexample};

use super::divisors::{divisor_class_count, psi_squared_coeff, t2, two_squares_criterion};
use super::family::{scan_progression, Family, FamilySpec};

fn euler_product(factors: &[(usize, i64)]) -> ProductSpec {
    ProductSpec::new(factors.iter().map(|&(k, e)| Factor::euler(k, e)).collect())
}

/// `2 (q^8;q^8)^2 / ((q;q)^3 (q^4;q^4))`
pub fn pod2_odd_product(order: usize) -> Series {
    expand_product(&euler_product(&[(8, 2), (1, -3), (4, -1)]), order).scale(2)
}

/// `3 (q^2;q^2)^4 (q^6;q^6)^6 / ((q;q)^6 (q^4;q^4)^6)`
pub fn pod2_3n2_product(order: usize) -> Series {
    expand_product(&euler_product(&[(2, 4), (6, 6), (1, -6), (4, -6)]), order).scale(3)
}

/// Both dissection identities for the pod_{-2} generating function, in
/// exact arithmetic to `order`: the `2n+1` and `3n+2` extractions.
pub fn theorem_2_1_check(order: usize) -> Result<(CheckReport, CheckReport)> {
    if order < 20 {
        return usage("dissection identities need order >= 20");
    }
    let odd = CheckReport::timed("thm2.1a", order, || {
        let lhs = pod2_gf(2 * order + 1, None)?.dissect(2, 1)?;
        series_counterexample(&lhs, &pod2_odd_product(order))
    })?;
    let third = CheckReport::timed("thm2.1b", order, || {
        let lhs = pod2_gf(3 * order + 2, None)?.dissect(3, 2)?;
        series_counterexample(&lhs, &pod2_3n2_product(order))
    })?;
    Ok((odd, third))
}

/// `pod_{-2}(2n+1) = 0 (mod 2)` and `pod_{-2}(3n+2) = 0 (mod 3)` for every
/// index up to `order`.
pub fn corollary_2_2_scan(order: usize) -> Result<(CheckReport, CheckReport)> {
    let two = CheckReport::timed("cor2.2a", order, || {
        Ok(scan_progression(&pod2_gf(order, Some(2))?, 2, 1))
    })?;
    let three = CheckReport::timed("cor2.2b", order, || {
        Ok(scan_progression(&pod2_gf(order, Some(3))?, 3, 2))
    })?;
    Ok((two, three))
}

/// `pod_{-2}(3n+1) = (-1)^{n+1} t_2(n) (mod 3)` for `3n+1 <= order`.
pub fn congruence_3n1_check(order: usize) -> Result<CheckReport> {
    if order < 1 {
        return usage("3n+1 check needs order >= 1");
    }
    CheckReport::timed("cong3n1", order, || {
        let lhs = pod2_gf(order, Some(3))?.dissect(3, 1)?;
        let m = lhs.order();
        // sum (-1)^{n+1} t_2(n) q^n = -psi(-q)^2
        let rhs = psi(m).pow(2).negate_q().scale(-1).reduce_mod(3)?;
        series_counterexample(&lhs, &rhs)
    })
}

/// `pod_{-2}(27n+7) = pod_{-2}(3n+1) (mod 3)` and
/// `pod_{-2}(25n+19) = -pod_{-2}(5n+4) (mod 5)`, for indices up to `order`.
pub fn descent_relation_checks(order: usize) -> Result<(CheckReport, CheckReport)> {
    if order < 19 {
        return usage("descent relations need order >= 19");
    }
    let three = CheckReport::timed("descent27n7", order, || {
        let p = pod2_gf(order, Some(3))?;
        series_counterexample(&p.dissect(27, 7)?, &p.dissect(3, 1)?)
    })?;
    let five = CheckReport::timed("descent25n19", order, || {
        let p = pod2_gf(order, Some(5))?;
        series_counterexample(&p.dissect(25, 19)?, &p.dissect(5, 4)?.scale(-1))
    })?;
    Ok((three, five))
}

/// `psi(q)^2` coefficients against `d_{1,4}(4n+1) - d_{3,4}(4n+1)` for
/// `n <= max_n`.
pub fn t2_divisor_check(max_n: u64) -> Result<CheckReport> {
    CheckReport::timed("t2_divisor_formula", max_n as usize, || {
        for n in 0..=max_n {
            let direct = psi_squared_coeff(n) as i64;
            let s = 4 * n + 1;
            let formula = divisor_class_count(s, 1, 4)? as i64 - divisor_class_count(s, 3, 4)? as i64;
            if direct != formula {
                return Ok(Some(Counterexample {
                    n,
                    expected: formula.to_string(),
                    actual: direct.to_string(),
                }));
            }
        }
        Ok(None)
    })
}

/// The criterion agrees with `d_{1,4}(n) = d_{3,4}(n)` for `1 <= n <= max_n`.
pub fn two_squares_check(max_n: u64) -> Result<CheckReport> {
    CheckReport::timed("two_squares_criterion", max_n as usize, || {
        for n in 1..=max_n {
            let crit = two_squares_criterion(n)?;
            let balanced = divisor_class_count(n, 1, 4)? == divisor_class_count(n, 3, 4)?;
            if crit != balanced {
                return Ok(Some(Counterexample {
                    n,
                    expected: balanced.to_string(),
                    actual: crit.to_string(),
                }));
            }
        }
        Ok(None)
    })
}

/// Structural reason behind the mod 3 family: for `alpha >= 1` every index
/// `i` is `1 (mod 3)`, and with `n = (i-1)/3` the number `4n+1` is a multiple
/// of 3 but not of 9. So `t_2(n) = 0` and `pod_{-2}(i) = 0 (mod 3)` follows
/// from the `3n+1` congruence. Checked for every such `i <= max_index`.
pub fn t2_bridge_check(max_index: u64) -> Result<CheckReport> {
    CheckReport::timed("t2_bridge_thm3.1", max_index as usize, || {
        let mut alpha = 1;
        loop {
            let spec = FamilySpec::new(Family::Thm31, alpha)?;
            if spec.offset > max_index {
                return Ok(None);
            }
            for i in spec.indices(max_index) {
                let fail = |what: &str| Counterexample {
                    n: i,
                    expected: "t2((i-1)/3) = 0".into(),
                    actual: what.into(),
                };
                if i % 3 != 1 {
                    return Ok(Some(fail("index not 1 mod 3")));
                }
                let n = (i - 1) / 3;
                let s = 4 * n + 1;
                if s % 3 != 0 || s % 9 == 0 {
                    return Ok(Some(fail(&format!("4n+1 = {s}"))));
                }
                if !two_squares_criterion(s)? {
                    return Ok(Some(fail(&format!("{s} is a sum of two squares"))));
                }
                let t = t2(n);
                if t != 0 {
                    return Ok(Some(fail(&format!("t2 = {t}"))));
                }
            }
            alpha += 1;
        }
    })
}
