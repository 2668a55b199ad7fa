//! Every series-side claim is checked against exhaustive enumeration on the
//! overlap n <= 30.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use podq_core::congruence::t2;
use podq_core::enumeration::{bivar_gf_from_products, enum_pod_bipartitions, stat_table};
use podq_core::qproducts::{phi, pod2_gf, psi};
use podq_core::{Series, Statistic};

const N: usize = 30;

fn listed_counts() -> Vec<u64> {
    (0..=N).map(|n| enum_pod_bipartitions(n).len() as u64).collect()
}

fn as_i64(s: &Series, n: usize) -> i64 {
    s.coeff(n).to_i64().unwrap()
}

#[test]
fn generating_function_counts_bipartitions() {
    let gf = pod2_gf(N, None).unwrap();
    for (n, c) in listed_counts().into_iter().enumerate() {
        assert_eq!(gf.coeff(n), BigInt::from(c), "n = {n}");
    }
}

#[test]
fn direct_congruences_by_enumeration() {
    let counts = listed_counts();
    for (n, &count) in counts.iter().enumerate() {
        if n % 2 == 1 {
            assert_eq!(count % 2, 0, "n = {n}");
        }
        if n % 3 == 2 {
            assert_eq!(count % 3, 0, "n = {n}");
        }
        if n % 3 == 1 {
            let k = (n - 1) / 3;
            let sign = if k % 2 == 0 { -1 } else { 1 };
            assert_eq!((count as i64 - sign * t2(k as u64) as i64).rem_euclid(3), 0, "n = {n}");
        }
    }
    assert_eq!((counts[7] as i64 - counts[1] as i64) % 3, 0);
    assert_eq!((counts[19] as i64 + counts[4] as i64) % 5, 0);
    assert_eq!(counts[14] % 5, 0);
    assert_eq!(counts[24] % 5, 0);
    assert_eq!(counts[16] % 3, 0);
    assert_eq!(counts[25] % 3, 0);
}

#[test]
fn residue_differences_by_enumeration() {
    let table = stat_table(Statistic::B, N);
    let psi_q2 = psi(N).substitute_power(2);
    let two = phi(N).negate_q().checked_div(&psi_q2).unwrap();
    let psi_neg = psi(N).negate_q();
    let three = psi_neg.checked_div(&psi_neg.substitute_power(3)).unwrap();
    let four = phi(N).substitute_power(2).checked_div(&psi_q2).unwrap();
    for n in 0..=N {
        let r2 = table.residue_counts(2, n).unwrap();
        let r3 = table.residue_counts(3, n).unwrap();
        let r4 = table.residue_counts(4, n).unwrap();
        assert_eq!(r3[1], r3[2]);
        assert_eq!(r4[1], r4[3]);
        assert_eq!(r2[0] as i64 - r2[1] as i64, as_i64(&two, n), "mod 2, n = {n}");
        assert_eq!(r3[0] as i64 - r3[1] as i64, as_i64(&three, n), "mod 3, n = {n}");
        assert_eq!(r4[0] as i64 - r4[2] as i64, as_i64(&four, n), "mod 4, n = {n}");
    }
}

#[test]
fn tables_match_bivariate_products() {
    for stat in [Statistic::B, Statistic::C, Statistic::D] {
        assert_eq!(stat_table(stat, N).to_bivariate(), bivar_gf_from_products(stat, N), "{stat}");
    }
}

#[test]
fn rank_parity_by_enumeration() {
    let table = stat_table(Statistic::D, N);
    let series = bivar_gf_from_products(Statistic::D, N).residue_combine(2, &[1, -1]).unwrap();
    for n in 0..=N {
        let r = table.residue_counts(2, n).unwrap();
        let diff = r[0] as i64 - r[1] as i64;
        assert_eq!(diff, as_i64(&series, n), "n = {n}");
        if n % 2 == 1 {
            assert_eq!(diff, 0, "n = {n}");
        }
    }
}
