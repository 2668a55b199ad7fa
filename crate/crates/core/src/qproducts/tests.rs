use super::*;
use proptest::prelude::*;

/// Oracle: prod (1 - s q^k) over the given binomials, by plain polynomial
/// multiplication on i64 vectors.
fn naive_product(binomials: &[(i64, usize)], order: usize) -> Vec<i64> {
    let mut acc = vec![0i64; order + 1];
    acc[0] = 1;
    for &(s, k) in binomials {
        if k > order {
            continue;
        }
        let mut next = acc.clone();
        for i in 0..=order - k {
            next[i + k] -= s * acc[i];
        }
        acc = next;
    }
    acc
}

fn ints(s: &Series) -> Vec<i64> {
    s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
}

#[test]
fn euler_product_order_7() {
    let oracle = naive_product(&(1..=7).map(|k| (1, k)).collect::<Vec<_>>(), 7);
    assert_eq!(oracle, vec![1, -1, -1, 0, 0, 1, 0, 1]);
    assert_eq!(ints(&pochhammer(Sign::Plus, 1, 1, 7)), oracle);
}

#[test]
fn distinct_odd_parts_product() {
    // Oracle: subsets of {1, 3, 5, ...} by sum.
    let odds = [1usize, 3, 5];
    let mut counts = [0i64; 6];
    for mask in 0u32..8 {
        let sum: usize = (0..3).filter(|i| mask >> i & 1 == 1).map(|i| odds[i]).sum();
        if sum <= 5 {
            counts[sum] += 1;
        }
    }
    assert_eq!(counts, [1, 1, 0, 1, 1, 1]);
    assert_eq!(ints(&pochhammer(Sign::Minus, 1, 2, 5)), counts.to_vec());
}

#[test]
fn factors_past_truncation_vanish() {
    assert_eq!(pochhammer(Sign::Plus, 11, 1, 10), Series::one(10));
    assert_eq!(expand_product(&ProductSpec::default(), 6), Series::one(6));
}

#[test]
fn pod_generating_functions() {
    let pod2 = expand_product(&pod2_spec(), 4);
    assert_eq!(ints(&pod2), vec![1, 2, 3, 6, 11]);
    let pod = expand_product(&pod_spec(), 5);
    assert_eq!(ints(&pod), vec![1, 1, 1, 2, 3, 4]);
    let parsed: ProductSpec = "(-q^1;q^2)^2 * (q^2;q^2)^-2".parse().unwrap();
    assert_eq!(parsed, pod2_spec());
}

#[test]
fn fast_pod_gfs_match_products() {
    let n = 400;
    assert_eq!(pod2_gf(n, None).unwrap(), expand_product(&pod2_spec(), n));
    assert_eq!(pod_gf(n, None).unwrap(), expand_product(&pod_spec(), n));
    for m in [2, 3, 5, 6] {
        let want = expand_product_mod(&pod2_spec(), n, m).unwrap();
        assert_eq!(pod2_gf(n, Some(m)).unwrap(), want);
        assert_eq!(expand_product(&pod2_spec(), n).reduce_mod(m).unwrap(), want);
    }
}

#[test]
fn psi_definition_and_product_form() {
    assert_eq!(psi(10).support(), vec![0, 1, 3, 6, 10]);
    assert!(psi(10).coeffs().iter().all(|c| *c <= 1.into()));
    assert_eq!(psi(500), expand_product(&psi_spec(), 500));
    assert_eq!(psi(200).negate_q(), theta_f(ThetaArg::neg_q(1), ThetaArg::neg_q(3), 200));
}

#[test]
fn phi_definition_and_product_form() {
    assert_eq!(ints(&phi(10)), vec![1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0]);
    assert_eq!(phi(500), expand_product(&phi_spec(), 500));
    assert_eq!(phi(20).negate_q().coeff(0), 1.into());
}

#[test]
fn theta_special_cases() {
    let n = 300;
    assert_eq!(theta_f(ThetaArg::q(1), ThetaArg::q(3), n), psi(n));
    assert_eq!(theta_f(ThetaArg::q(1), ThetaArg::q(1), n), phi(n));
    let split = theta_f(ThetaArg::q(6), ThetaArg::q(10), n) + theta_f(ThetaArg::q(2), ThetaArg::q(14), n).shift(1);
    assert_eq!(split, psi(n));
    // f(a, b) = f(b, a)
    assert_eq!(theta_f(ThetaArg::q(2), ThetaArg::neg_q(5), n), theta_f(ThetaArg::neg_q(5), ThetaArg::q(2), n));
}

#[test]
fn triple_product_named_cases() {
    assert!(jacobi_triple_product_check(ThetaArg::q(1), ThetaArg::q(3), 300));
    assert!(jacobi_triple_product_check(ThetaArg::neg_q(1), ThetaArg::neg_q(3), 300));
    assert!(jacobi_triple_product_check(ThetaArg::q(1), ThetaArg::q(1), 300));
    // psi(-q) = (q^2;q^2) / (-q;q^2)
    let quotient: ProductSpec = "(q^2;q^2) * (-q;q^2)^-1".parse().unwrap();
    assert_eq!(expand_product(&quotient, 300), psi(300).negate_q());
}

#[test]
fn triple_product_all_small_arguments() {
    for ea in 1..=4 {
        for eb in 1..=4 {
            for sa in [Sign::Plus, Sign::Minus] {
                for sb in [Sign::Plus, Sign::Minus] {
                    let (a, b) = (ThetaArg::new(sa, ea).unwrap(), ThetaArg::new(sb, eb).unwrap());
                    assert!(jacobi_triple_product_check(a, b, 300), "{a:?} {b:?}");
                }
            }
        }
    }
}

#[test]
fn theta_arg_rejects_zero_exponent() {
    assert!(ThetaArg::new(Sign::Plus, 0).is_err());
}

#[test]
fn a_series_regression() {
    let a = a_series(8);
    assert_eq!(a.coeff(0), 1.into());
    // frozen from the first expansion; an independent i64 expansion agrees
    assert_eq!(ints(&a), vec![1, 1, 1, 0, 0, 1, 0, 1, 0]);
    let a3 = a_series(60).negate_q().substitute_power(3);
    assert_eq!(a3.order(), 60);
    assert!(a3.support().iter().all(|e| e % 3 == 0));
    assert_eq!(a3.coeff(3), (-1).into());
}

#[test]
fn psi_times_psi_negated() {
    let lhs = &psi(100) * &psi(100).negate_q();
    let rhs = expand_product(&"(q^2;q^2) * (q^4;q^4)".parse().unwrap(), 100);
    assert_eq!(lhs, rhs);
}

#[test]
fn psi_3dissection_via_dissect() {
    // q psi(q^9) is the q^{3n+1} part of psi(q)
    let p = psi(300);
    let third = p.dissect(3, 1).unwrap();
    assert_eq!(third, psi(99).substitute_power(3));
    let reinflated = third.substitute_power(3).shift(1);
    assert_eq!(reinflated, psi(99).substitute_power(9).shift(1));
    assert!(p.dissect(3, 2).unwrap().is_zero());
}

#[test]
fn lemma_suite_passes() {
    let reports = dissection_lemma_checks(200).unwrap();
    assert_eq!(reports.len(), 7);
    for (r, name) in reports.iter().zip(LEMMA_CHECK_NAMES) {
        assert_eq!(r.check, name);
        assert!(r.pass, "{r:?}");
    }
    assert!(modular_equation_check(300).unwrap().pass);
    assert!(lambert_quintic_lemma_check(500).unwrap().pass);
}

#[test]
fn cube_congruence_is_not_exact() {
    let r = psi_power_congruence(3, 100, None).unwrap();
    assert!(!r.pass);
    assert_eq!(r.counterexample.unwrap().n, 1);
    assert!(psi_power_congruence(3, 100, Some(3)).unwrap().pass);
}

#[test]
fn perturbation_is_located() {
    let lhs = psi(200);
    let mut coeffs = lhs.coeffs();
    coeffs[137] += 1;
    let perturbed = Series::from_coeffs(coeffs);
    let r = crate::report::CheckReport::compare("psi", &perturbed, &lhs).unwrap();
    assert_eq!(r.counterexample.unwrap().n, 137);
}

fn arb_spec() -> impl Strategy<Value = ProductSpec> {
    prop::collection::vec((prop::bool::ANY, 1usize..6, 1usize..6, -3i64..=3), 0..4).prop_map(|fs| {
        ProductSpec::new(
            fs.into_iter()
                .map(|(neg, r, m, e)| Factor::new(if neg { Sign::Minus } else { Sign::Plus }, r, m, e).unwrap())
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expansion_is_multiplicative(a in arb_spec(), b in arb_spec()) {
        let n = 40;
        prop_assert_eq!(expand_product(&a.concat(&b), n), &expand_product(&a, n) * &expand_product(&b, n));
    }

    #[test]
    fn modular_expansion_commutes_with_reduction(a in arb_spec(), m in 2u64..=7) {
        prop_assert_eq!(expand_product_mod(&a, 40, m).unwrap(), expand_product(&a, 40).reduce_mod(m).unwrap());
    }
}
