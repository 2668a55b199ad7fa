use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::Series;
use crate::error::{usage, Result};

/// Series in `q` whose coefficients are Laurent polynomials in `z`, with the
/// support bound `|m| <= n` on every term `z^m q^n`.
///
/// Row `n` stores the coefficients of `z^{-n} ..= z^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariateSeries {
    rows: Vec<Vec<BigInt>>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries {
            rows: (0..=order).map(|n| vec![BigInt::zero(); 2 * n + 1]).collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.rows[0][0] = BigInt::from(1);
        s
    }

    /// Builds from sparse `(m, n) -> c` entries. Entries with `n > order`
    /// are dropped; entries with `|m| > n` are rejected.
    pub fn from_entries(order: usize, entries: &BTreeMap<(i64, usize), BigInt>) -> Result<Self> {
        let mut s = Self::zero(order);
        for (&(m, n), c) in entries {
            if n > order {
                continue;
            }
            if m.unsigned_abs() as usize > n {
                return usage(format!("term z^{m} q^{n} violates |m| <= n"));
            }
            s.rows[n][(m + n as i64) as usize] = c.clone();
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// Coefficient of `z^m q^n`; zero outside the support bound.
    pub fn coeff(&self, m: i64, n: usize) -> BigInt {
        assert!(n <= self.order(), "coefficient q^{n} beyond order {}", self.order());
        if m.unsigned_abs() as usize > n {
            BigInt::zero()
        } else {
            self.rows[n][(m + n as i64) as usize].clone()
        }
    }

    /// Nonzero `(m, coefficient)` pairs of row `n`.
    pub fn row(&self, n: usize) -> Vec<(i64, BigInt)> {
        self.rows[n]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 - n as i64, c.clone()))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncate cannot extend a series");
        BivariateSeries {
            rows: self.rows[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        BivariateSeries {
            rows: (0..=order)
                .map(|n| {
                    self.rows[n]
                        .iter()
                        .zip(&other.rows[n])
                        .map(|(a, b)| a + b)
                        .collect()
                })
                .collect(),
        }
    }

    /// Convolution in both variables, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for n1 in 0..=order {
            for (i1, a) in self.rows[n1].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let m1 = i1 as i64 - n1 as i64;
                for n2 in 0..=(order - n1) {
                    let n = n1 + n2;
                    for (i2, b) in other.rows[n2].iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        let m = m1 + i2 as i64 - n2 as i64;
                        out.rows[n][(m + n as i64) as usize] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Multiplies by `1 + c z^a q^k` in place (`|a| <= k`).
    pub fn times_binomial(mut self, c: i64, a: i64, k: usize) -> Self {
        assert!(a.unsigned_abs() as usize <= k, "factor z^{a} q^{k} breaks the support bound");
        if k == 0 {
            for row in &mut self.rows {
                for x in row.iter_mut() {
                    *x *= 1 + c;
                }
            }
            return self;
        }
        let c = BigInt::from(c);
        for n in (k..self.rows.len()).rev() {
            let (lo, hi) = self.rows.split_at_mut(n);
            shifted_axpy(&mut hi[0], n, &lo[n - k], n - k, &c, a);
        }
        self
    }

    /// Divides by `1 + c z^a q^k` in place (`k >= 1`, `|a| <= k`).
    pub fn divided_by_binomial(mut self, c: i64, a: i64, k: usize) -> Self {
        assert!(k >= 1, "binomial divisor needs a unit constant term");
        assert!(a.unsigned_abs() as usize <= k, "factor z^{a} q^{k} breaks the support bound");
        let negc = BigInt::from(-c);
        for n in k..self.rows.len() {
            let (lo, hi) = self.rows.split_at_mut(n);
            shifted_axpy(&mut hi[0], n, &lo[n - k], n - k, &negc, a);
        }
        self
    }

    /// Substitutes `z -> 1/z`.
    pub fn reflect_z(&self) -> Self {
        BivariateSeries {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().rev().cloned().collect())
                .collect(),
        }
    }

    /// Multiplication by the monomial `z^a q^k` (`|a| <= k`); order is kept.
    pub fn shift(&self, a: i64, k: usize) -> Self {
        assert!(a.unsigned_abs() as usize <= k, "monomial z^{a} q^{k} breaks the support bound");
        let mut out = Self::zero(self.order());
        for n in k..self.rows.len() {
            let src = &self.rows[n - k];
            shifted_axpy(&mut out.rows[n], n, src, n - k, &BigInt::from(1), a);
        }
        out
    }

    /// Specializes `z = 1`.
    pub fn collapse(&self) -> Series {
        Series::from_coeffs(
            self.rows
                .iter()
                .map(|r| r.iter().sum::<BigInt>())
                .collect(),
        )
    }

    /// `sum_n (sum_m weights[m mod t] c(m, n)) q^n`.
    ///
    /// Integer residue weights stand in for root-of-unity substitutions:
    /// `t = 2, [1, -1]` is `z = -1`, and `t = 3, [2, -1, -1]` is twice the
    /// real part of `z = e^{2 pi i / 3}`.
    pub fn residue_combine(&self, t: u64, weights: &[i64]) -> Result<Series> {
        if t == 0 {
            return usage("residue modulus must be positive");
        }
        if weights.len() as u64 != t {
            return usage(format!(
                "need one weight per residue class mod {t}, got {}",
                weights.len()
            ));
        }
        let coeffs = self
            .rows
            .iter()
            .enumerate()
            .map(|(n, row)| {
                let mut acc = BigInt::zero();
                for (i, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let m = i as i64 - n as i64;
                    let w = weights[m.rem_euclid(t as i64) as usize];
                    if w != 0 {
                        acc += c * w;
                    }
                }
                acc
            })
            .collect();
        Ok(Series::from_coeffs(coeffs))
    }
}

/// `dst(m + a) += c * src(m)` between rows of weight `dst_n` and `src_n`.
fn shifted_axpy(dst: &mut [BigInt], dst_n: usize, src: &[BigInt], src_n: usize, c: &BigInt, a: i64) {
    let one = BigInt::from(1);
    let minus_one = BigInt::from(-1);
    for (i, s) in src.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        let m = i as i64 - src_n as i64 + a;
        let j = (m + dst_n as i64) as usize;
        if *c == one {
            dst[j] += s;
        } else if *c == minus_one {
            dst[j] -= s;
        } else {
            dst[j] += c * s;
        }
    }
}
