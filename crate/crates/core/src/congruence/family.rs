use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{usage, Error, Result};
use crate::pseries::Series;
use crate::qproducts::pod2_gf;
use crate::report::{CheckReport, Counterexample};

/// The five infinite congruence families `pod_{-2}(A n + B) = 0 (mod p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// mod 3: `A = 3^{2a+1}`, `B = (23 * 3^{2a} - 7) / 8`, `a >= 0`
    Thm31,
    /// mod 3: `A = 3^{2a+1}`, `B = (7 * 3^{2a} + 1) / 4`, `a >= 1`
    Thm32a,
    /// mod 3: `A = 3^{2a+1}`, `B = (11 * 3^{2a} + 1) / 4`, `a >= 1`
    Thm32b,
    /// mod 5: `A = 5^{a+1}`, `B = (11 * 5^a + 1) / 4`, `a >= 1`
    Thm41a,
    /// mod 5: `A = 5^{a+1}`, `B = (19 * 5^a + 1) / 4`, `a >= 1`
    Thm41b,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Thm31,
        Family::Thm32a,
        Family::Thm32b,
        Family::Thm41a,
        Family::Thm41b,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Thm31 => "thm3.1",
            Family::Thm32a => "thm3.2a",
            Family::Thm32b => "thm3.2b",
            Family::Thm41a => "thm4.1a",
            Family::Thm41b => "thm4.1b",
        }
    }

    pub fn modulus(self) -> u64 {
        match self {
            Family::Thm31 | Family::Thm32a | Family::Thm32b => 3,
            Family::Thm41a | Family::Thm41b => 5,
        }
    }

    pub fn min_alpha(self) -> u32 {
        match self {
            Family::Thm31 => 0,
            _ => 1,
        }
    }

    /// `(multiplier, addend, divisor)` in `B = (multiplier * base^k + addend) / divisor`.
    fn offset_formula(self) -> (u128, i128, u128) {
        match self {
            Family::Thm31 => (23, -7, 8),
            Family::Thm32a => (7, 1, 4),
            Family::Thm32b => (11, 1, 4),
            Family::Thm41a => (11, 1, 4),
            Family::Thm41b => (19, 1, 4),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Usage(format!("unknown family '{s}'")))
    }
}

/// One member of a family: the progression `step * n + offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub alpha: u32,
    pub modulus: u64,
    pub step: u64,
    pub offset: u64,
}

impl FamilySpec {
    /// Computes the progression with exact integer arithmetic; the offset
    /// numerator must be divisible, never floored.
    pub fn new(family: Family, alpha: u32) -> Result<Self> {
        if alpha < family.min_alpha() {
            return usage(format!("{family} needs alpha >= {}", family.min_alpha()));
        }
        let overflow = || Error::Usage(format!("{family} with alpha = {alpha} overflows"));
        let (base, step_exp, offset_exp): (u128, u32, u32) = match family.modulus() {
            3 => (3, 2 * alpha + 1, 2 * alpha),
            _ => (5, alpha + 1, alpha),
        };
        let step = base.checked_pow(step_exp).ok_or_else(overflow)?;
        let (mult, add, div) = family.offset_formula();
        let num = mult
            .checked_mul(base.checked_pow(offset_exp).ok_or_else(overflow)?)
            .ok_or_else(overflow)?
            .checked_add_signed(add)
            .ok_or_else(overflow)?;
        if num % div != 0 {
            return usage(format!("{family}, alpha = {alpha}: {num} is not divisible by {div}"));
        }
        let to_u64 = |v: u128| u64::try_from(v).map_err(|_| overflow());
        Ok(FamilySpec {
            family,
            alpha,
            modulus: family.modulus(),
            step: to_u64(step)?,
            offset: to_u64(num / div)?,
        })
    }

    pub fn name(&self) -> String {
        format!("{}:alpha={}", self.family, self.alpha)
    }

    /// Indices `step * n + offset <= max_index`.
    pub fn indices(&self, max_index: u64) -> impl Iterator<Item = u64> + '_ {
        (0..)
            .map(move |n| self.step * n + self.offset)
            .take_while(move |&i| i <= max_index)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}n+{} (mod {})", self.step, self.offset, self.modulus)
    }
}

/// First index `step * n + offset <= series order` whose coefficient is
/// nonzero.
pub fn scan_progression(series: &Series, step: u64, offset: u64) -> Option<Counterexample> {
    let order = series.order() as u64;
    (0..)
        .map(|n| step * n + offset)
        .take_while(|&i| i <= order)
        .find_map(|i| {
            let c = series.coeff(i as usize);
            (!c.is_zero()).then(|| Counterexample {
                n: i,
                expected: "0".into(),
                actual: c.to_string(),
            })
        })
}

/// Checks `pod_{-2}(step n + offset) = 0 (mod p)` for every index up to
/// `order`, using modular coefficients.
pub fn family_scan(spec: &FamilySpec, order: usize) -> Result<CheckReport> {
    if spec.offset > order as u64 {
        return usage(format!(
            "{}: first index {} exceeds order {order}",
            spec.name(),
            spec.offset
        ));
    }
    CheckReport::timed(spec.name(), order, || {
        let pod = pod2_gf(order, Some(spec.modulus))?;
        Ok(scan_progression(&pod, spec.step, spec.offset))
    })
}

/// Every member of `family` with `alpha` in `min_alpha..=alpha_max` whose
/// first index fits below `order`.
pub fn family_members(family: Family, alpha_max: u32, order: usize) -> Result<Vec<FamilySpec>> {
    let mut out = Vec::new();
    for alpha in family.min_alpha()..=alpha_max {
        let spec = FamilySpec::new(family, alpha)?;
        if spec.offset > order as u64 {
            break;
        }
        out.push(spec);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prog(f: Family, a: u32) -> (u64, u64) {
        let s = FamilySpec::new(f, a).unwrap();
        (s.step, s.offset)
    }

    #[test]
    fn progression_constants() {
        assert_eq!(prog(Family::Thm31, 0), (3, 2));
        assert_eq!(prog(Family::Thm31, 1), (27, 25));
        assert_eq!(prog(Family::Thm31, 2), (243, 232));
        assert_eq!(prog(Family::Thm32a, 1), (27, 16));
        assert_eq!(prog(Family::Thm32b, 1), (27, 25));
        assert_eq!(prog(Family::Thm32a, 2), (243, 142));
        assert_eq!(prog(Family::Thm32b, 2), (243, 223));
        assert_eq!(prog(Family::Thm41a, 1), (25, 14));
        assert_eq!(prog(Family::Thm41b, 1), (25, 24));
        assert_eq!(prog(Family::Thm41a, 2), (125, 69));
        assert_eq!(prog(Family::Thm41b, 2), (125, 119));
    }

    #[test]
    fn offsets_are_exact_for_small_alpha() {
        for f in Family::ALL {
            for a in f.min_alpha()..=6 {
                assert!(FamilySpec::new(f, a).is_ok(), "{f} alpha {a}");
            }
        }
    }

    #[test]
    fn malformed_alpha_rejected() {
        assert!(FamilySpec::new(Family::Thm32a, 0).is_err());
        assert!(FamilySpec::new(Family::Thm41b, 0).is_err());
        assert!(FamilySpec::new(Family::Thm31, 200).is_err());
        assert!("thm9".parse::<Family>().is_err());
        assert_eq!("thm4.1b".parse::<Family>().unwrap(), Family::Thm41b);
    }

    #[test]
    fn scan_needs_room() {
        let s = FamilySpec::new(Family::Thm31, 2).unwrap();
        assert!(family_scan(&s, 100).is_err());
        assert!(family_scan(&s, 1000).unwrap().pass);
    }

    #[test]
    fn alpha_zero_is_the_3n2_progression() {
        let s = FamilySpec::new(Family::Thm31, 0).unwrap();
        assert_eq!(s.indices(14).collect::<Vec<_>>(), vec![2, 5, 8, 11, 14]);
        assert!(family_scan(&s, 50).unwrap().pass);
    }

    #[test]
    fn scan_reports_smallest_failure() {
        let pod = pod2_gf(40, Some(3)).unwrap();
        // pod_{-2}(1) = 2 is not divisible by 3
        let cx = scan_progression(&pod, 3, 1).unwrap();
        assert_eq!((cx.n, cx.actual.as_str()), (1, "2"));
    }
}
