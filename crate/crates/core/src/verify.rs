//! Registry of every named check, grouped the way the underlying verifiers
//! compute them.

use rayon::prelude::*;

use crate::congruence::{
    congruence_3n1_check, corollary_2_2_scan, descent_relation_checks, equidistribution_check, family_members,
    family_scan, rank_parity_checks, t2_bridge_check, t2_divisor_check, theorem_2_1_check, theorem_5_1_check,
    two_squares_check, Family,
};
use crate::enumeration::{Statistic, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::qproducts::{
    dissection_lemma_checks, expand_product, jacobi_triple_product_spec, lambert_quintic_lemma_check,
    modular_equation_check, psi_power_congruence, theta_f, Sign, ThetaArg, LEMMA_CHECK_NAMES,
};
use crate::report::{series_counterexample, with_wall_time, CheckReport, Counterexample};

/// Largest `alpha` scanned for each family unless asked otherwise.
pub const DEFAULT_ALPHA_MAX: u32 = 2;

/// Largest odd weight visited by the rank parity enumeration.
pub const RANK_PARITY_CAP: usize = 31;

type GroupFn = fn(usize) -> Result<Vec<CheckReport>>;

/// A verifier that yields one or more reports.
pub struct CheckGroup {
    pub name: &'static str,
    /// Report names; empty for families, whose reports are named per alpha.
    pub reports: &'static [&'static str],
    run: GroupFn,
}

impl CheckGroup {
    pub fn run(&self, order: usize) -> Result<Vec<CheckReport>> {
        (self.run)(order)
    }

    /// True if `name` selects this group or one of its reports.
    pub fn selects(&self, name: &str) -> bool {
        self.name == name || self.reports.contains(&name)
    }
}

fn pair(p: Result<(CheckReport, CheckReport)>) -> Result<Vec<CheckReport>> {
    p.map(|(a, b)| vec![a, b])
}

fn one(r: Result<CheckReport>) -> Result<Vec<CheckReport>> {
    r.map(|r| vec![r])
}

/// Every argument pair `f(+-q^i, +-q^j)` with `1 <= i, j <= 4`, bilateral sum
/// against triple product.
pub fn jacobi_triple_product_suite(order: usize) -> Result<CheckReport> {
    CheckReport::timed("jacobi_triple_product", order, || {
        for i in 1..=4 {
            for j in 1..=4 {
                for sa in [Sign::Plus, Sign::Minus] {
                    for sb in [Sign::Plus, Sign::Minus] {
                        let a = ThetaArg::new(sa, i)?;
                        let b = ThetaArg::new(sb, j)?;
                        let sum = theta_f(a, b, order);
                        let prod = expand_product(&jacobi_triple_product_spec(a, b), order);
                        if let Some(cx) = series_counterexample(&sum, &prod)? {
                            let tag = |s: Sign, k| if s == Sign::Minus { format!("-q^{k}") } else { format!("q^{k}") };
                            return Ok(Some(Counterexample {
                                actual: format!("f({},{}): {}", tag(sa, i), tag(sb, j), cx.actual),
                                ..cx
                            }));
                        }
                    }
                }
            }
        }
        Ok(None)
    })
}

fn families(family: Family, order: usize) -> Result<Vec<CheckReport>> {
    family_members(family, DEFAULT_ALPHA_MAX, order)?
        .par_iter()
        .map(|spec| family_scan(spec, order))
        .collect()
}

/// All groups, in report order.
pub const GROUPS: &[CheckGroup] = &[
    CheckGroup {
        name: "lemmas",
        reports: &LEMMA_CHECK_NAMES,
        run: dissection_lemma_checks,
    },
    CheckGroup {
        name: "modular_equation_deg5",
        reports: &["modular_equation_deg5"],
        run: |n| one(with_wall_time(|| modular_equation_check(n))),
    },
    CheckGroup {
        name: "lambert_quintic_lemma",
        reports: &["lambert_quintic_lemma"],
        run: |n| one(with_wall_time(|| lambert_quintic_lemma_check(n))),
    },
    CheckGroup {
        name: "jacobi_triple_product",
        reports: &["jacobi_triple_product"],
        run: |n| one(jacobi_triple_product_suite(n)),
    },
    CheckGroup {
        name: "thm2.1",
        reports: &["thm2.1a", "thm2.1b"],
        run: |n| pair(theorem_2_1_check(n)),
    },
    CheckGroup {
        name: "cor2.2",
        reports: &["cor2.2a", "cor2.2b"],
        run: |n| pair(corollary_2_2_scan(n)),
    },
    CheckGroup {
        name: "cong3n1",
        reports: &["cong3n1"],
        run: |n| one(congruence_3n1_check(n)),
    },
    CheckGroup {
        name: "descent",
        reports: &["descent27n7", "descent25n19"],
        run: |n| pair(descent_relation_checks(n)),
    },
    CheckGroup {
        name: "t2_divisor_formula",
        reports: &["t2_divisor_formula"],
        run: |n| one(t2_divisor_check(n as u64)),
    },
    CheckGroup {
        name: "two_squares_criterion",
        reports: &["two_squares_criterion"],
        run: |n| one(two_squares_check(n.max(1) as u64)),
    },
    CheckGroup {
        name: "t2_bridge_thm3.1",
        reports: &["t2_bridge_thm3.1"],
        run: |n| one(t2_bridge_check(n as u64)),
    },
    CheckGroup {
        name: "thm3.1",
        reports: &[],
        run: |n| families(Family::Thm31, n),
    },
    CheckGroup {
        name: "thm3.2a",
        reports: &[],
        run: |n| families(Family::Thm32a, n),
    },
    CheckGroup {
        name: "thm3.2b",
        reports: &[],
        run: |n| families(Family::Thm32b, n),
    },
    CheckGroup {
        name: "thm4.1a",
        reports: &[],
        run: |n| families(Family::Thm41a, n),
    },
    CheckGroup {
        name: "thm4.1b",
        reports: &[],
        run: |n| families(Family::Thm41b, n),
    },
    CheckGroup {
        name: "thm5.1",
        reports: &["thm5.1a", "thm5.1b", "thm5.1c"],
        run: |n| theorem_5_1_check(n).map(Vec::from),
    },
    CheckGroup {
        name: "equidist",
        reports: &["equidist_b", "equidist_c"],
        run: |n| {
            let w = n.min(ENUMERATION_CAP);
            Ok(vec![
                equidistribution_check(Statistic::B, w)?,
                equidistribution_check(Statistic::C, w)?,
            ])
        },
    },
    CheckGroup {
        name: "rank_parity",
        reports: &["rank_parity_odd", "rank_parity_series"],
        run: |n| pair(rank_parity_checks(n, n.min(RANK_PARITY_CAP))),
    },
];

/// Comparisons that are expected to fail: the psi power congruences taken
/// over the integers. Selectable by name, never part of the suite.
pub const CONTROLS: &[CheckGroup] = &[
    CheckGroup {
        name: "psi_cube_exact",
        reports: &["psi_power3_exact"],
        run: |n| one(psi_power_congruence(3, n, None)),
    },
    CheckGroup {
        name: "psi_fifth_exact",
        reports: &["psi_power5_exact"],
        run: |n| one(psi_power_congruence(5, n, None)),
    },
];

fn all_groups() -> impl Iterator<Item = &'static CheckGroup> {
    GROUPS.iter().chain(CONTROLS)
}

/// Every selectable name: group names followed by report names.
pub fn identity_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = all_groups().map(|g| g.name).collect();
    for g in all_groups() {
        for r in g.reports {
            if !names.contains(r) {
                names.push(r);
            }
        }
    }
    names
}

/// Runs the group containing `name`; when `name` is a single report, only
/// that report is returned.
pub fn run_identity(name: &str, order: usize) -> Result<Vec<CheckReport>> {
    let group = all_groups()
        .find(|g| g.selects(name))
        .ok_or_else(|| Error::Usage(format!("unknown identity '{name}'")))?;
    let reports = group.run(order)?;
    if group.name == name {
        return Ok(reports);
    }
    Ok(reports.into_iter().filter(|r| r.check == name).collect())
}

/// Runs every group concurrently; reports come back in declaration order.
pub fn run_all(order: usize) -> Result<Vec<CheckReport>> {
    let groups: Vec<Vec<CheckReport>> = GROUPS.par_iter().map(|g| g.run(order)).collect::<Result<_>>()?;
    Ok(groups.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_and_keeps_order() {
        let reports = run_all(60).unwrap();
        assert!(reports.iter().all(|r| r.pass), "{reports:?}");
        assert_eq!(reports[0].check, LEMMA_CHECK_NAMES[0]);
        assert_eq!(reports.last().unwrap().check, "rank_parity_series");
        let again: Vec<_> = run_all(60).unwrap().into_iter().map(|r| r.check).collect();
        assert_eq!(again, reports.iter().map(|r| r.check.clone()).collect::<Vec<_>>());
    }

    #[test]
    fn single_report_selection() {
        let r = run_identity("thm2.1a", 40).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].check, "thm2.1a");
        assert_eq!(run_identity("descent", 100).unwrap().len(), 2);
        assert!(run_identity("nope", 10).is_err());
        let control = run_identity("psi_cube_exact", 20).unwrap();
        assert!(!control[0].pass);
        assert_eq!(control[0].counterexample.as_ref().unwrap().n, 1);
    }

    #[test]
    fn family_groups_bound_alpha_by_order() {
        let r = run_identity("thm3.1", 300).unwrap();
        let names: Vec<_> = r.iter().map(|r| r.check.as_str()).collect();
        assert_eq!(names, ["thm3.1:alpha=0", "thm3.1:alpha=1", "thm3.1:alpha=2"]);
        assert_eq!(run_identity("thm4.1b", 100).unwrap().len(), 1);
    }

    #[test]
    fn names_are_unique() {
        let names = identity_names();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
    }
}
