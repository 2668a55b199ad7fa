//! Coefficient rings and the dense kernels shared by both coefficient modes.
//!
//! Kernels take plain slices and an explicit output length; truncation policy
//! lives in [`Series`](super::Series), not here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) trait Ring {
    type Elem: Clone + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn embed(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem);
    fn sub_assign(&self, acc: &mut Self::Elem, b: &Self::Elem);
    /// `acc += a * b`
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem);
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// `Some(true)` for +1, `Some(false)` for -1.
    fn sign_unit(&self, a: &Self::Elem) -> Option<bool>;
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct IntRing;

impl Ring for IntRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn embed(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn add_assign(&self, acc: &mut BigInt, b: &BigInt) {
        *acc += b;
    }

    fn sub_assign(&self, acc: &mut BigInt, b: &BigInt) {
        *acc -= b;
    }

    fn mul_add_assign(&self, acc: &mut BigInt, a: &BigInt, b: &BigInt) {
        match self.sign_unit(a) {
            Some(true) => *acc += b,
            Some(false) => *acc -= b,
            None => *acc += a * b,
        }
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn unit_inverse(&self, a: &BigInt) -> Option<BigInt> {
        if a.abs().is_one() {
            Some(a.clone())
        } else {
            None
        }
    }

    fn sign_unit(&self, a: &BigInt) -> Option<bool> {
        if a.is_one() {
            Some(true)
        } else if (-a).is_one() {
            Some(false)
        } else {
            None
        }
    }
}

/// Residues in `[0, m)` with `m < 2^32`, so a product of two residues plus
/// one more residue never overflows a `u64`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ModRing(pub u64);

impl ModRing {
    pub(crate) fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    pub(crate) fn reduce_big(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.0);
        let r = v.mod_floor(&m);
        u64::try_from(r).expect("residue below a u64 modulus")
    }
}

impl Ring for ModRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn embed(&self, v: i64) -> u64 {
        self.reduce_i64(v)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add_assign(&self, acc: &mut u64, b: &u64) {
        *acc += *b;
        if *acc >= self.0 {
            *acc -= self.0;
        }
    }

    fn sub_assign(&self, acc: &mut u64, b: &u64) {
        *acc = if *acc >= *b { *acc - *b } else { *acc + self.0 - *b };
    }

    fn mul_add_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + *a * *b) % self.0;
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (*a * *b) % self.0
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.0 - *a
        }
    }

    fn unit_inverse(&self, a: &u64) -> Option<u64> {
        let (g, x, _) = ext_gcd(*a as i64, self.0 as i64);
        if g == 1 {
            Some(self.reduce_i64(x))
        } else {
            None
        }
    }

    fn sign_unit(&self, a: &u64) -> Option<bool> {
        if *a == 1 % self.0 {
            Some(true)
        } else if *a == self.0 - 1 {
            Some(false)
        } else {
            None
        }
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn nonzero_terms<R: Ring>(ring: &R, a: &[R::Elem], len: usize) -> Vec<(usize, R::Elem)> {
    a.iter()
        .take(len)
        .enumerate()
        .filter(|(_, c)| !ring.is_zero(c))
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub(crate) fn add<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem], len: usize) -> Vec<R::Elem> {
    a[..len]
        .iter()
        .zip(&b[..len])
        .map(|(x, y)| {
            let mut s = x.clone();
            ring.add_assign(&mut s, y);
            s
        })
        .collect()
}

pub(crate) fn sub<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem], len: usize) -> Vec<R::Elem> {
    a[..len]
        .iter()
        .zip(&b[..len])
        .map(|(x, y)| {
            let mut s = x.clone();
            ring.sub_assign(&mut s, y);
            s
        })
        .collect()
}

/// Schoolbook Cauchy product truncated to `len` terms. The loop runs over
/// the nonzero terms of the sparser operand, which makes products with theta
/// series (support of size O(sqrt N)) nearly linear.
pub(crate) fn mul<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem], len: usize) -> Vec<R::Elem> {
    let nz_a = nonzero_terms(ring, a, len);
    let nz_b = nonzero_terms(ring, b, len);
    let (sparse, dense) = if nz_a.len() <= nz_b.len() {
        (nz_a, b)
    } else {
        (nz_b, a)
    };
    let mut out = vec![ring.zero(); len];
    for (i, c) in &sparse {
        for (slot, d) in out[*i..].iter_mut().zip(dense) {
            ring.mul_add_assign(slot, c, d);
        }
    }
    out
}

/// `num / den` truncated to `len` terms, by forward substitution over the
/// nonzero terms of `den`. Returns `None` if the constant term of `den` is
/// not a unit.
pub(crate) fn div<R: Ring>(
    ring: &R,
    num: &[R::Elem],
    den: &[R::Elem],
    len: usize,
) -> Option<Vec<R::Elem>> {
    let inv0 = ring.unit_inverse(&den[0])?;
    let tail: Vec<(usize, R::Elem)> = nonzero_terms(ring, den, len)
        .into_iter()
        .filter(|(i, _)| *i > 0)
        .collect();
    let unit_sign = ring.sign_unit(&inv0);
    let mut out: Vec<R::Elem> = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = num[n].clone();
        for (k, c) in &tail {
            if *k > n {
                break;
            }
            let prev = ring.mul(c, &out[n - k]);
            ring.sub_assign(&mut acc, &prev);
        }
        let v = match unit_sign {
            Some(true) => acc,
            Some(false) => ring.neg(&acc),
            None => ring.mul(&inv0, &acc),
        };
        out.push(v);
    }
    Some(out)
}

/// In-place multiplication by `1 + c q^k`.
pub(crate) fn times_binomial<R: Ring>(ring: &R, a: &mut [R::Elem], c: &R::Elem, k: usize) {
    if k == 0 {
        let factor = {
            let mut one = ring.embed(1);
            ring.add_assign(&mut one, c);
            one
        };
        for x in a.iter_mut() {
            *x = ring.mul(&factor, x);
        }
        return;
    }
    for n in (k..a.len()).rev() {
        let (lo, hi) = a.split_at_mut(n);
        if !ring.is_zero(&lo[n - k]) {
            ring.mul_add_assign(&mut hi[0], c, &lo[n - k]);
        }
    }
}

/// In-place division by `1 + c q^k` with `k >= 1`.
pub(crate) fn divided_by_binomial<R: Ring>(ring: &R, a: &mut [R::Elem], c: &R::Elem, k: usize) {
    debug_assert!(k >= 1);
    let negc = ring.neg(c);
    for n in k..a.len() {
        let (lo, hi) = a.split_at_mut(n);
        if !ring.is_zero(&lo[n - k]) {
            ring.mul_add_assign(&mut hi[0], &negc, &lo[n - k]);
        }
    }
}
