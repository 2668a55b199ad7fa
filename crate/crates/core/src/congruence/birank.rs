//! Residue-class identities for the statistics b, c and d. Root-of-unity
//! evaluations are replaced by integer weight combinations of the bivariate
//! generating function, after the symmetries that make them valid are
//! checked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::enumeration::{bivar_gf_from_products, pod2_count, stat_table, Statistic, ENUMERATION_CAP};
use crate::error::{usage, Result};
use crate::pseries::Series;
use crate::qproducts::{expand_product, phi, pod_gf, psi, Factor, ProductSpec, Sign};
use crate::report::{series_counterexample, CheckReport, Counterexample};

/// First nonzero coefficient of `s`, reported against an expected zero.
fn nonzero_at(s: &Series, what: &str) -> Option<Counterexample> {
    s.support().first().map(|&n| Counterexample {
        n: n as u64,
        expected: format!("{what} = 0"),
        actual: s.coeff(n).to_string(),
    })
}

/// Halves every coefficient, or returns the first odd one.
fn halve(s: &Series) -> std::result::Result<Series, Counterexample> {
    let mut out = Vec::with_capacity(s.order() + 1);
    for (n, c) in s.coeffs().into_iter().enumerate() {
        let (q, r) = c.div_rem(&BigInt::from(2));
        if !r.is_zero() {
            return Err(Counterexample {
                n: n as u64,
                expected: "even".into(),
                actual: c.to_string(),
            });
        }
        out.push(q);
    }
    Ok(Series::from_coeffs(out))
}

/// The three residue-difference generating functions of the birank b,
/// against theta quotients:
///
/// - `sum (R(0,2,n) - R(1,2,n)) q^n = phi(-q) / psi(q^2)`
/// - `sum (R(0,3,n) - R(1,3,n)) q^n = psi(-q) / psi(-q^3)`
/// - `sum (R(0,4,n) - R(2,4,n)) q^n = phi(q^2) / psi(q^2)`
///
/// The mod 3 and mod 4 forms are only valid when `R(1,3,n) = R(2,3,n)` and
/// `R(1,4,n) = R(3,4,n)`; a broken symmetry fails the corresponding check.
pub fn theorem_5_1_check(order: usize) -> Result<[CheckReport; 3]> {
    let gf = bivar_gf_from_products(Statistic::B, order);
    let psi_q2 = psi(order).substitute_power(2);

    let two = CheckReport::timed("thm5.1a", order, || {
        let lhs = gf.residue_combine(2, &[1, -1])?;
        let rhs = phi(order).negate_q().checked_div(&psi_q2)?;
        series_counterexample(&lhs, &rhs)
    })?;

    let three = CheckReport::timed("thm5.1b", order, || {
        if let Some(cx) = nonzero_at(&gf.residue_combine(3, &[0, 1, -1])?, "R(1,3,n) - R(2,3,n)") {
            return Ok(Some(cx));
        }
        let lhs = match halve(&gf.residue_combine(3, &[2, -1, -1])?) {
            Ok(s) => s,
            Err(cx) => return Ok(Some(cx)),
        };
        let psi_neg = psi(order).negate_q();
        let rhs = psi_neg.checked_div(&psi_neg.substitute_power(3))?;
        series_counterexample(&lhs, &rhs)
    })?;

    let four = CheckReport::timed("thm5.1c", order, || {
        if let Some(cx) = nonzero_at(&gf.residue_combine(4, &[0, 1, 0, -1])?, "R(1,4,n) - R(3,4,n)") {
            return Ok(Some(cx));
        }
        let lhs = gf.residue_combine(4, &[1, 0, -1, 0])?;
        let rhs = phi(order).substitute_power(2).checked_div(&psi_q2)?;
        series_counterexample(&lhs, &rhs)
    })?;

    Ok([two, three, four])
}

fn check_name(prefix: &str, stat: Statistic) -> String {
    format!("{prefix}_{stat}")
}

/// For every `3n+2 <= max_weight`, the statistic's three residue classes
/// mod 3 each hold exactly `pod_{-2}(3n+2)/3` bipartitions, counted by
/// enumeration.
pub fn equidistribution_check(stat: Statistic, max_weight: usize) -> Result<CheckReport> {
    if stat == Statistic::D {
        return usage("equidistribution holds for b and c only");
    }
    if max_weight > ENUMERATION_CAP {
        return usage(format!("max weight {max_weight} exceeds the enumeration cap {ENUMERATION_CAP}"));
    }
    CheckReport::timed(check_name("equidist", stat), max_weight, || {
        let table = stat_table(stat, max_weight);
        let mut w = 2;
        while w <= max_weight {
            let counts = table.residue_counts(3, w)?;
            let share = pod2_count(w) / 3u32;
            let share = u64::try_from(share).expect("enumeration-sized count");
            if counts.iter().any(|&c| c != share) {
                return Ok(Some(Counterexample {
                    n: w as u64,
                    expected: format!("{share},{share},{share}"),
                    actual: counts.iter().map(u64::to_string).collect::<Vec<_>>().join(","),
                }));
            }
            w += 3;
        }
        Ok(None)
    })
}

/// Parity of the rank d.
///
/// - `rank_parity_odd`: `R_3(0,2,n) = R_3(1,2,n)` for every odd
///   `n <= max_weight`, by enumeration.
/// - `rank_parity_series`: `sum (R_3(0,2,n) - R_3(1,2,n)) q^n` equals
///   `(q^2;q^4) / (q^4;q^4)` to `order`, and its even part with `q -> -q`
///   equals `(-q;q^2) / (q^2;q^2)`.
pub fn rank_parity_checks(order: usize, max_weight: usize) -> Result<(CheckReport, CheckReport)> {
    if max_weight > ENUMERATION_CAP {
        return usage(format!("max weight {max_weight} exceeds the enumeration cap {ENUMERATION_CAP}"));
    }
    let odd = CheckReport::timed("rank_parity_odd", max_weight, || {
        let table = stat_table(Statistic::D, max_weight);
        for n in (1..=max_weight).step_by(2) {
            let r = table.residue_counts(2, n)?;
            if r[0] != r[1] {
                return Ok(Some(Counterexample {
                    n: n as u64,
                    expected: r[1].to_string(),
                    actual: r[0].to_string(),
                }));
            }
        }
        Ok(None)
    })?;
    let series = CheckReport::timed("rank_parity_series", order, || {
        let lhs = bivar_gf_from_products(Statistic::D, order).residue_combine(2, &[1, -1])?;
        let spec = ProductSpec::new(vec![Factor::new(Sign::Plus, 2, 4, 1)?, Factor::euler(4, -1)]);
        if let Some(cx) = series_counterexample(&lhs, &expand_product(&spec, order))? {
            return Ok(Some(cx));
        }
        let even = lhs.dissect(2, 0)?.negate_q();
        series_counterexample(&even, &pod_gf(even.order(), None)?)
    })?;
    Ok((odd, series))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_5_1_small() {
        for r in theorem_5_1_check(120).unwrap() {
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn mod3_difference_vanishes_at_two() {
        let gf = bivar_gf_from_products(Statistic::B, 10);
        let s = halve(&gf.residue_combine(3, &[2, -1, -1]).unwrap()).unwrap();
        assert_eq!(s.coeff(2), BigInt::from(0));
        assert_eq!(gf.residue_combine(2, &[1, -1]).unwrap().coeff(0), BigInt::from(1));
    }

    #[test]
    fn halve_reports_odd() {
        let cx = halve(&Series::from_i64s(&[2, 4, 3])).unwrap_err();
        assert_eq!(cx.n, 2);
    }

    #[test]
    fn equidistribution_small() {
        assert!(equidistribution_check(Statistic::B, 14).unwrap().pass);
        assert!(equidistribution_check(Statistic::C, 14).unwrap().pass);
        assert!(equidistribution_check(Statistic::D, 14).is_err());
        assert!(equidistribution_check(Statistic::B, 40).is_err());
        let t = stat_table(Statistic::B, 5);
        assert_eq!(t.residue_counts(3, 5).unwrap(), vec![6, 6, 6]);
        let t = stat_table(Statistic::C, 2);
        assert_eq!(t.residue_counts(3, 2).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn equidistribution_fails_off_progression() {
        // weight 4 is not 2 mod 3, and its classes are unequal
        let t = stat_table(Statistic::B, 4);
        let r = t.residue_counts(3, 4).unwrap();
        assert!(r[0] != r[1]);
    }

    #[test]
    fn rank_parity_small() {
        let (a, b) = rank_parity_checks(120, 15).unwrap();
        assert!(a.pass && b.pass, "{a:?} {b:?}");
        let t = stat_table(Statistic::D, 1);
        assert_eq!(t.residue_counts(2, 1).unwrap(), vec![1, 1]);
    }

    #[test]
    fn even_extraction_leading_terms() {
        let lhs = bivar_gf_from_products(Statistic::D, 12).residue_combine(2, &[1, -1]).unwrap();
        let even = lhs.dissect(2, 0).unwrap().negate_q();
        assert_eq!(even, Series::from_i64s(&[1, 1, 1, 2, 3, 4, 5]));
    }
}
