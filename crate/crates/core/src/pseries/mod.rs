//! Truncated formal power series in `q` with exact coefficients.
//!
//! A [`Series`] of order `N` knows its coefficients for `q^0 ..= q^N` and
//! nothing beyond. Binary operations truncate to the smaller operand order;
//! nothing is ever zero-extended. Coefficients are either arbitrary-precision
//! integers or canonical residues modulo a machine-word modulus.

mod bivariate;
mod ring;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{usage, Error, Result};
use ring::{IntRing, ModRing, Ring};

pub use bivariate::BivariateSeries;

/// Largest modulus accepted by modular mode.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

#[derive(Clone, PartialEq, Eq, Debug)]
enum Coeffs {
    Integer(Vec<BigInt>),
    Modular { modulus: u64, residues: Vec<u64> },
}

/// A truncated power series `c_0 + c_1 q + ... + c_N q^N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Coeffs,
}

fn check_modulus(m: u64) -> Result<()> {
    if !(2..=MAX_MODULUS).contains(&m) {
        return usage(format!("modulus must lie in [2, {MAX_MODULUS}], got {m}"));
    }
    Ok(())
}

impl Series {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series holds at least the constant term");
        Series {
            coeffs: Coeffs::Integer(coeffs),
        }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a modular series; entries are reduced into `[0, modulus)`.
    pub fn from_residues(modulus: u64, residues: Vec<u64>) -> Result<Self> {
        check_modulus(modulus)?;
        assert!(!residues.is_empty(), "a series holds at least the constant term");
        let residues = residues.into_iter().map(|r| r % modulus).collect();
        Ok(Series {
            coeffs: Coeffs::Modular { modulus, residues },
        })
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(vec![BigInt::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c q^k`, truncated (so the zero series if `k > order`).
    pub fn monomial(c: i64, k: usize, order: usize) -> Self {
        let mut v = vec![BigInt::zero(); order + 1];
        if k <= order {
            v[k] = BigInt::from(c);
        }
        Self::from_coeffs(v)
    }

    /// Zero series in the given coefficient mode.
    pub fn zero_in(order: usize, modulus: Option<u64>) -> Result<Self> {
        match modulus {
            None => Ok(Self::zero(order)),
            Some(m) => Self::from_residues(m, vec![0; order + 1]),
        }
    }

    pub fn one_in(order: usize, modulus: Option<u64>) -> Result<Self> {
        match modulus {
            None => Ok(Self::one(order)),
            Some(m) => {
                let mut v = vec![0; order + 1];
                v[0] = 1;
                Self::from_residues(m, v)
            }
        }
    }

    pub fn order(&self) -> usize {
        self.len() - 1
    }

    fn len(&self) -> usize {
        match &self.coeffs {
            Coeffs::Integer(v) => v.len(),
            Coeffs::Modular { residues, .. } => residues.len(),
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match &self.coeffs {
            Coeffs::Integer(_) => None,
            Coeffs::Modular { modulus, .. } => Some(*modulus),
        }
    }

    /// Coefficient of `q^n` (the canonical residue in modular mode).
    ///
    /// Panics if `n` exceeds the order: that coefficient is unknown.
    pub fn coeff(&self, n: usize) -> BigInt {
        assert!(n <= self.order(), "coefficient q^{n} beyond order {}", self.order());
        match &self.coeffs {
            Coeffs::Integer(v) => v[n].clone(),
            Coeffs::Modular { residues, .. } => BigInt::from(residues[n]),
        }
    }

    pub fn coeffs(&self) -> Vec<BigInt> {
        (0..=self.order()).map(|n| self.coeff(n)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.coeffs {
            Coeffs::Integer(v) => v.iter().all(Zero::is_zero),
            Coeffs::Modular { residues, .. } => residues.iter().all(|&r| r == 0),
        }
    }

    /// Exponents with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        match &self.coeffs {
            Coeffs::Integer(v) => (0..v.len()).filter(|&i| !v[i].is_zero()).collect(),
            Coeffs::Modular { residues, .. } => {
                (0..residues.len()).filter(|&i| residues[i] != 0).collect()
            }
        }
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        match &self.coeffs {
            Coeffs::Integer(v) => v.iter().map(|c| c.to_string()).collect(),
            Coeffs::Modular { residues, .. } => residues.iter().map(|r| r.to_string()).collect(),
        }
    }

    /// Keeps `q^0 ..= q^order`; `order` may not exceed the current order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncate cannot extend a series");
        self.map_vec(|v| v[..=order].to_vec(), |v| v[..=order].to_vec())
    }

    fn map_vec(
        &self,
        fi: impl FnOnce(&[BigInt]) -> Vec<BigInt>,
        fm: impl FnOnce(&[u64]) -> Vec<u64>,
    ) -> Self {
        let coeffs = match &self.coeffs {
            Coeffs::Integer(v) => Coeffs::Integer(fi(v)),
            Coeffs::Modular { modulus, residues } => Coeffs::Modular {
                modulus: *modulus,
                residues: fm(residues),
            },
        };
        Series { coeffs }
    }

    fn mismatch(&self, other: &Series) -> Error {
        Error::ModulusMismatch {
            left: self.modulus(),
            right: other.modulus(),
        }
    }

    pub fn checked_add(&self, other: &Series) -> Result<Series> {
        let len = self.len().min(other.len());
        let coeffs = match (&self.coeffs, &other.coeffs) {
            (Coeffs::Integer(a), Coeffs::Integer(b)) => Coeffs::Integer(ring::add(&IntRing, a, b, len)),
            (
                Coeffs::Modular { modulus, residues: a },
                Coeffs::Modular { modulus: m2, residues: b },
            ) if modulus == m2 => Coeffs::Modular {
                modulus: *modulus,
                residues: ring::add(&ModRing(*modulus), a, b, len),
            },
            _ => return Err(self.mismatch(other)),
        };
        Ok(Series { coeffs })
    }

    pub fn checked_sub(&self, other: &Series) -> Result<Series> {
        let len = self.len().min(other.len());
        let coeffs = match (&self.coeffs, &other.coeffs) {
            (Coeffs::Integer(a), Coeffs::Integer(b)) => Coeffs::Integer(ring::sub(&IntRing, a, b, len)),
            (
                Coeffs::Modular { modulus, residues: a },
                Coeffs::Modular { modulus: m2, residues: b },
            ) if modulus == m2 => Coeffs::Modular {
                modulus: *modulus,
                residues: ring::sub(&ModRing(*modulus), a, b, len),
            },
            _ => return Err(self.mismatch(other)),
        };
        Ok(Series { coeffs })
    }

    pub fn checked_mul(&self, other: &Series) -> Result<Series> {
        let len = self.len().min(other.len());
        let coeffs = match (&self.coeffs, &other.coeffs) {
            (Coeffs::Integer(a), Coeffs::Integer(b)) => Coeffs::Integer(ring::mul(&IntRing, a, b, len)),
            (
                Coeffs::Modular { modulus, residues: a },
                Coeffs::Modular { modulus: m2, residues: b },
            ) if modulus == m2 => Coeffs::Modular {
                modulus: *modulus,
                residues: ring::mul(&ModRing(*modulus), a, b, len),
            },
            _ => return Err(self.mismatch(other)),
        };
        Ok(Series { coeffs })
    }

    /// `self / other`, truncated to the smaller order. The divisor needs a
    /// unit constant term.
    pub fn checked_div(&self, other: &Series) -> Result<Series> {
        let len = self.len().min(other.len());
        let non_unit = || Error::NonInvertible(other.coeff(0).to_string());
        let coeffs = match (&self.coeffs, &other.coeffs) {
            (Coeffs::Integer(a), Coeffs::Integer(b)) => {
                Coeffs::Integer(ring::div(&IntRing, a, b, len).ok_or_else(non_unit)?)
            }
            (
                Coeffs::Modular { modulus, residues: a },
                Coeffs::Modular { modulus: m2, residues: b },
            ) if modulus == m2 => Coeffs::Modular {
                modulus: *modulus,
                residues: ring::div(&ModRing(*modulus), a, b, len).ok_or_else(non_unit)?,
            },
            _ => return Err(self.mismatch(other)),
        };
        Ok(Series { coeffs })
    }

    /// Multiplicative inverse to the same order.
    pub fn invert(&self) -> Result<Series> {
        let one = Series::one_in(self.order(), self.modulus())?;
        one.checked_div(self)
    }

    pub fn pow(&self, e: u32) -> Series {
        let mut acc = Series::one_in(self.order(), self.modulus()).expect("modulus already validated");
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Signed power; negative exponents go through [`Series::invert`].
    pub fn powi(&self, e: i64) -> Result<Series> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.invert()
        } else {
            Ok(p)
        }
    }

    pub fn scale(&self, c: i64) -> Series {
        self.map_vec(
            |v| v.iter().map(|x| x * c).collect(),
            |v| {
                let r = ModRing(self.modulus().unwrap());
                let c = r.embed(c);
                v.iter().map(|x| r.mul(x, &c)).collect()
            },
        )
    }

    /// Multiplication by `q^k`; the order is kept and the top `k` terms fall off.
    pub fn shift(&self, k: usize) -> Series {
        let len = self.len();
        self.map_vec(
            |v| {
                let mut out = vec![BigInt::zero(); len];
                if k < len {
                    out[k..].clone_from_slice(&v[..len - k]);
                }
                out
            },
            |v| {
                let mut out = vec![0; len];
                if k < len {
                    out[k..].copy_from_slice(&v[..len - k]);
                }
                out
            },
        )
    }

    /// Extracts the terms `q^{mn+r}` as a series in `q^n`.
    ///
    /// Result order is `floor((N - r) / m)`; errors if `r >= m` or `r > N`.
    pub fn dissect(&self, m: usize, r: usize) -> Result<Series> {
        if m == 0 || r >= m {
            return usage(format!("dissection needs 0 <= r < m, got m = {m}, r = {r}"));
        }
        if r > self.order() {
            return usage(format!(
                "residue {r} exceeds series order {}",
                self.order()
            ));
        }
        Ok(self.map_vec(
            |v| v.iter().skip(r).step_by(m).cloned().collect(),
            |v| v.iter().skip(r).step_by(m).cloned().collect(),
        ))
    }

    /// Inverse of dissection: `parts[r]` holds the `q^{mn+r}` coefficients.
    ///
    /// The result has the largest order for which every coefficient is known.
    pub fn interleave(parts: &[Series]) -> Result<Series> {
        let m = parts.len();
        if m == 0 {
            return usage("interleave needs at least one part");
        }
        let modulus = parts[0].modulus();
        if let Some(p) = parts.iter().find(|p| p.modulus() != modulus) {
            return Err(parts[0].mismatch(p));
        }
        // exponent m*n + r is known iff n <= parts[r].order()
        let order = (0..m)
            .map(|r| m * (parts[r].order() + 1) + r)
            .min()
            .unwrap()
            - 1;
        let mut out = Series::zero_in(order, modulus)?;
        for n in 0..=order {
            let c = parts[n % m].coeff(n / m);
            out.set(n, &c);
        }
        Ok(out)
    }

    fn set(&mut self, n: usize, c: &BigInt) {
        match &mut self.coeffs {
            Coeffs::Integer(v) => v[n] = c.clone(),
            Coeffs::Modular { modulus, residues } => residues[n] = ModRing(*modulus).reduce_big(c),
        }
    }

    /// Substitutes `q -> q^k`. The order is kept; coefficients pushed past it
    /// are dropped.
    pub fn substitute_power(&self, k: usize) -> Series {
        assert!(k >= 1, "substitution power must be positive");
        let len = self.len();
        self.map_vec(
            |v| {
                let mut out = vec![BigInt::zero(); len];
                for (i, c) in v.iter().enumerate().take_while(|(i, _)| i * k < len) {
                    out[i * k] = c.clone();
                }
                out
            },
            |v| {
                let mut out = vec![0; len];
                for (i, c) in v.iter().enumerate().take_while(|(i, _)| i * k < len) {
                    out[i * k] = *c;
                }
                out
            },
        )
    }

    /// Substitutes `q -> -q`.
    pub fn negate_q(&self) -> Series {
        let m = self.modulus();
        self.map_vec(
            |v| {
                v.iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                    .collect()
            },
            |v| {
                let r = ModRing(m.unwrap());
                v.iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == 1 { r.neg(c) } else { *c })
                    .collect()
            },
        )
    }

    /// Reduces every coefficient modulo `m`. A modular series may only be
    /// reduced further by a divisor of its modulus.
    pub fn reduce_mod(&self, m: u64) -> Result<Series> {
        check_modulus(m)?;
        let r = ModRing(m);
        let residues = match &self.coeffs {
            Coeffs::Integer(v) => v.iter().map(|c| r.reduce_big(c)).collect(),
            Coeffs::Modular { modulus, residues } => {
                if modulus % m != 0 {
                    return usage(format!("cannot reduce a mod-{modulus} series modulo {m}"));
                }
                residues.iter().map(|c| c % m).collect()
            }
        };
        Ok(Series {
            coeffs: Coeffs::Modular {
                modulus: m,
                residues,
            },
        })
    }

    /// Multiplies by `1 + c q^k` in place.
    pub fn times_binomial(mut self, c: i64, k: usize) -> Series {
        match &mut self.coeffs {
            Coeffs::Integer(v) => ring::times_binomial(&IntRing, v, &BigInt::from(c), k),
            Coeffs::Modular { modulus, residues } => {
                let r = ModRing(*modulus);
                ring::times_binomial(&r, residues, &r.embed(c), k)
            }
        }
        self
    }

    /// Divides by `1 + c q^k` (`k >= 1`) in place.
    pub fn divided_by_binomial(mut self, c: i64, k: usize) -> Series {
        assert!(k >= 1, "binomial divisor needs a unit constant term");
        match &mut self.coeffs {
            Coeffs::Integer(v) => ring::divided_by_binomial(&IntRing, v, &BigInt::from(c), k),
            Coeffs::Modular { modulus, residues } => {
                let r = ModRing(*modulus);
                ring::divided_by_binomial(&r, residues, &r.embed(c), k)
            }
        }
        self
    }

    /// Smallest exponent, up to the common order, where the two series
    /// differ. Comparing different coefficient modes is an error.
    pub fn first_difference(&self, other: &Series) -> Result<Option<usize>> {
        if self.modulus() != other.modulus() {
            return Err(self.mismatch(other));
        }
        let len = self.len().min(other.len());
        let found = match (&self.coeffs, &other.coeffs) {
            (Coeffs::Integer(a), Coeffs::Integer(b)) => (0..len).find(|&i| a[i] != b[i]),
            (Coeffs::Modular { residues: a, .. }, Coeffs::Modular { residues: b, .. }) => {
                (0..len).find(|&i| a[i] != b[i])
            }
            _ => unreachable!(),
        };
        Ok(found)
    }
}

impl fmt::Display for Series {
    /// Human-readable polynomial form, e.g. `1 - q^2 + O(q^5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero() && self.modulus().is_none();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == BigInt::from(1);
            match (n, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)?;
        if let Some(m) = self.modulus() {
            write!(f, " (mod {m})")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Series> for &Series {
            type Output = Series;

            /// Panics on a modulus mismatch; use the `checked_*` form to recover.
            fn $method(self, rhs: &Series) -> Series {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<Series> for Series {
            type Output = Series;

            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        self.scale(-1)
    }
}

impl Neg for Series {
    type Output = Series;

    fn neg(self) -> Series {
        self.scale(-1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    modulus: Option<u64>,
    coeffs: Vec<String>,
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order(),
            modulus: self.modulus(),
            coeffs: self.to_decimal_strings(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SeriesRepr::deserialize(d)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, got {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            )));
        }
        let parsed = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        match repr.modulus {
            None => Ok(Series::from_coeffs(parsed)),
            Some(m) => {
                let residues = parsed
                    .iter()
                    .map(|c| {
                        u64::try_from(c)
                            .ok()
                            .filter(|&r| r < m)
                            .ok_or_else(|| D::Error::custom(format!("{c} is not a residue mod {m}")))
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                Series::from_residues(m, residues).map_err(D::Error::custom)
            }
        }
    }
}

#[cfg(test)]
mod tests;
