use super::*;
use proptest::prelude::*;

fn s(v: &[i64]) -> Series {
    Series::from_i64s(v)
}

fn triangular_indicator(order: usize) -> Series {
    let mut v = vec![0i64; order + 1];
    let mut k = 0;
    while k * (k + 1) / 2 <= order {
        v[k * (k + 1) / 2] = 1;
        k += 1;
    }
    s(&v)
}

#[test]
fn add_cancels_and_truncates() {
    assert_eq!(&s(&[1, 1]) + &s(&[1, -1]), s(&[2, 0]));
    let a = s(&[3, -1, 4, 1, -5, 9]);
    assert_eq!(&a + &Series::zero(5), a);
    let long = triangular_indicator(6);
    let short = Series::zero(3);
    let sum = &long + &short;
    assert_eq!(sum.order(), 3);
    assert_eq!(sum, long.truncate(3));
}

#[test]
fn modulus_mismatch_is_an_error() {
    let a = s(&[1, 2, 3]).reduce_mod(3).unwrap();
    let b = s(&[1, 2, 3]).reduce_mod(5).unwrap();
    let e = a.checked_add(&b).unwrap_err();
    assert_eq!(e, Error::ModulusMismatch { left: Some(3), right: Some(5) });
    assert!(a.checked_mul(&s(&[1, 1, 1])).is_err());
    assert!(e.to_string().contains("modulus mismatch"));
}

#[test]
fn telescoping_product() {
    let geometric = s(&[1; 8]);
    assert_eq!(&s(&[1, -1, 0, 0, 0, 0, 0, 0]) * &geometric, Series::one(7));
}

#[test]
fn psi_squared_by_convolution() {
    // Oracle: count ordered pairs of triangular numbers summing to n.
    let tri: Vec<usize> = (0..10).map(|k| k * (k + 1) / 2).collect();
    let oracle: Vec<i64> = (0..=5)
        .map(|n| {
            tri.iter()
                .flat_map(|a| tri.iter().map(move |b| a + b))
                .filter(|&x| x == n)
                .count() as i64
        })
        .collect();
    assert_eq!(oracle, vec![1, 2, 1, 2, 2, 0]);
    let psi = triangular_indicator(5);
    assert_eq!(&psi * &psi, s(&oracle));
}

#[test]
fn invert_geometric() {
    let inv = s(&[1, -1, 0, 0, 0, 0]).invert().unwrap();
    assert_eq!(inv, s(&[1; 6]));
    let e = s(&[2, 1]).invert().unwrap_err();
    assert!(e.to_string().contains("non-invertible"));
    assert!(matches!(s(&[0, 1]).invert(), Err(Error::NonInvertible(_))));
}

#[test]
fn invert_modular_unit() {
    // 2 is a unit mod 5: (2 + q)^{-1} mod 5
    let a = s(&[2, 1, 0, 0]).reduce_mod(5).unwrap();
    let inv = a.invert().unwrap();
    assert_eq!(&a * &inv, Series::one_in(3, Some(5)).unwrap());
    assert!(s(&[3, 1]).reduce_mod(3).unwrap().invert().is_err());
}

#[test]
fn dissect_examples() {
    let geom = s(&[1; 11]);
    let d = geom.dissect(2, 1).unwrap();
    assert_eq!(d, s(&[1; 5]));
    assert_eq!(d.order(), (10 - 1) / 2);
    assert!(geom.dissect(3, 3).is_err());
    assert!(geom.dissect(0, 0).is_err());

    let a = s(&[5, -4, 3, -2, 1, 0, 7, 8, 9, 10]);
    for m in 1..=4 {
        let parts: Vec<Series> = (0..m).map(|r| a.dissect(m, r).unwrap()).collect();
        assert_eq!(Series::interleave(&parts).unwrap(), a);
    }
}

#[test]
fn substitute_and_negate() {
    assert_eq!(s(&[1, 1, 0, 0]).substitute_power(3), s(&[1, 0, 0, 1]));
    let x = s(&[1, 2, 3, 4, 5, 6, 7]);
    assert_eq!(x.substitute_power(5).dissect(5, 0).unwrap(), x.truncate(1));
    assert_eq!(s(&[1; 5]).negate_q(), s(&[1, -1, 1, -1, 1]));
    let psi_neg = triangular_indicator(10).negate_q();
    assert_eq!(psi_neg, s(&[1, -1, 0, -1, 0, 0, 1, 0, 0, 0, 1]));
}

#[test]
fn negate_q_modular_is_canonical() {
    let a = s(&[1, 1, 1]).reduce_mod(3).unwrap().negate_q();
    assert_eq!(a.coeffs(), vec![1.into(), 2.into(), 1.into()]);
}

#[test]
fn reduce_mod_examples() {
    let three_psi = triangular_indicator(12).scale(3);
    assert!(three_psi.reduce_mod(3).unwrap().is_zero());
    let r = s(&[-1, 7, 3]).reduce_mod(3).unwrap();
    assert_eq!(r.coeffs(), vec![2.into(), 1.into(), 0.into()]);
    assert_eq!(r.modulus(), Some(3));
    assert!(s(&[1]).reduce_mod(1).is_err());
    let six = s(&[5, 4, 3]).reduce_mod(6).unwrap();
    assert_eq!(six.reduce_mod(3).unwrap(), s(&[5, 4, 3]).reduce_mod(3).unwrap());
    assert!(six.reduce_mod(4).is_err());
}

#[test]
fn json_round_trip_uses_decimal_strings() {
    let big: BigInt = "123456789012345678901234567890".parse().unwrap();
    let a = Series::from_coeffs(vec![BigInt::from(1), -big.clone(), BigInt::zero()]);
    let json = serde_json::to_string(&a).unwrap();
    assert_eq!(
        json,
        r#"{"order":2,"modulus":null,"coeffs":["1","-123456789012345678901234567890","0"]}"#
    );
    let back: Series = serde_json::from_str(&json).unwrap();
    assert_eq!(back, a);
    let m = s(&[4, 5]).reduce_mod(3).unwrap();
    let json = serde_json::to_string(&m).unwrap();
    assert_eq!(json, r#"{"order":1,"modulus":3,"coeffs":["1","2"]}"#);
    assert_eq!(serde_json::from_str::<Series>(&json).unwrap(), m);
    assert!(serde_json::from_str::<Series>(r#"{"order":2,"modulus":null,"coeffs":["1"]}"#).is_err());
    assert!(serde_json::from_str::<Series>(r#"{"order":0,"modulus":3,"coeffs":["4"]}"#).is_err());
}

#[test]
fn display_form() {
    assert_eq!(s(&[1, -1, 0, 2]).to_string(), "1 - q + 2q^3 + O(q^4)");
    assert_eq!(Series::zero(2).to_string(), "0 + O(q^3)");
}

#[test]
fn first_difference_reports_smallest_index() {
    let a = s(&[1, 2, 3, 4]);
    let b = s(&[1, 2, 0, 0, 9]);
    assert_eq!(a.first_difference(&b).unwrap(), Some(2));
    assert_eq!(a.first_difference(&a).unwrap(), None);
}

fn arb_series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-99i64..=99, order + 1).prop_map(|v| Series::from_i64s(&v))
}

fn arb_triple() -> impl Strategy<Value = (Series, Series, Series)> {
    (0usize..=64).prop_flat_map(|n| (arb_series(n), arb_series(n), arb_series(n)))
}

fn arb_unit() -> impl Strategy<Value = Series> {
    (0usize..=64, prop::bool::ANY).prop_flat_map(|(n, neg)| {
        prop::collection::vec(-99i64..=99, n).prop_map(move |tail| {
            let mut v = vec![if neg { -1 } else { 1 }];
            v.extend(tail);
            Series::from_i64s(&v)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms((a, b, c) in arb_triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Series::one(a.order()), a.clone());
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn invert_is_two_sided(a in arb_unit()) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(&a * &inv, Series::one(a.order()));
        prop_assert_eq!(&inv * &a, Series::one(a.order()));
        prop_assert_eq!(inv.invert().unwrap(), a);
    }

    #[test]
    fn dissect_interleave_round_trip(a in arb_series(40), m in 1usize..=7) {
        let parts: Vec<Series> = (0..m).map(|r| a.dissect(m, r).unwrap()).collect();
        prop_assert_eq!(Series::interleave(&parts).unwrap(), a);
    }

    #[test]
    fn substitute_then_dissect_is_identity(a in arb_series(30), k in 1usize..=6) {
        let back = a.substitute_power(k).dissect(k, 0).unwrap();
        prop_assert_eq!(back.clone(), a.truncate(back.order()));
        prop_assert_eq!(a.negate_q().negate_q(), a);
    }

    #[test]
    fn reduce_mod_is_a_ring_map((a, b, _c) in arb_triple(), m in 2u64..=12) {
        let (ra, rb) = (a.reduce_mod(m).unwrap(), b.reduce_mod(m).unwrap());
        prop_assert_eq!((&a * &b).reduce_mod(m).unwrap(), &ra * &rb);
        prop_assert_eq!((&a + &b).reduce_mod(m).unwrap(), &ra + &rb);
        prop_assert_eq!(a.negate_q().reduce_mod(m).unwrap(), ra.negate_q());
    }

    #[test]
    fn binomial_updates_match_general_mul(a in arb_series(30), c in -5i64..=5, k in 1usize..=8) {
        let mut factor = vec![0i64; 31];
        factor[0] = 1;
        factor[k] = c;
        let f = Series::from_i64s(&factor);
        prop_assert_eq!(a.clone().times_binomial(c, k), &a * &f);
        prop_assert_eq!(a.clone().divided_by_binomial(c, k), a.checked_div(&f).unwrap());
    }
}
