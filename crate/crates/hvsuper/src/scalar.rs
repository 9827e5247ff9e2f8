//! Exact scalar arithmetic: arbitrary-precision rationals, half-integer
//! indices and Laurent polynomials in the formal unit `λ`.
//!
//! Every coefficient in the engine lives in the ring `ℚ[λ, λ⁻¹]`. Keeping
//! `λ` formal means all identities we check are polynomial identities in
//! `λ`, so exact rational arithmetic suffices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Arbitrary-precision rational. `BigRational` keeps the canonical form we
/// need (positive denominator, reduced, zero as 0/1).
pub type Rat = BigRational;

/// Build a rational from an integer pair.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Build a rational from an integer.
pub fn rint(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

/// `(numer, denom)` as machine integers when both fit, for the fast paths
/// below. `BigRational` keeps denominators positive, so `d > 0`.
fn small_parts(r: &Rat) -> Option<(i64, i64)> {
    use num_traits::ToPrimitive;
    Some((r.numer().to_i64()?, r.denom().to_i64()?))
}

/// Reduced rational from an exact `i128` fraction (`d > 0`).
fn rat_from_i128(n: i128, d: i128) -> Rat {
    if n == 0 {
        return Rat::zero();
    }
    let g = num_integer::Integer::gcd(&n, &d);
    Rat::new_raw(BigInt::from(n / g), BigInt::from(d / g))
}

/// `a·b` with a machine-word shortcut: cross-reduction and gcd run on
/// hardware integers when the operands fit, avoiding the big-integer gcd
/// that dominates profile time. Falls back to `BigRational` arithmetic.
pub(crate) fn rat_mul(a: &Rat, b: &Rat) -> Rat {
    if let (Some((an, ad)), Some((bn, bd))) = (small_parts(a), small_parts(b)) {
        let g1 = num_integer::Integer::gcd(&an, &bd).max(1);
        let g2 = num_integer::Integer::gcd(&bn, &ad).max(1);
        let n = (an / g1) as i128 * (bn / g2) as i128;
        let d = (ad / g2) as i128 * (bd / g1) as i128;
        return rat_from_i128(n, d);
    }
    a * b
}

/// `a + b` with the same machine-word shortcut as [`rat_mul`].
pub(crate) fn rat_add(a: &Rat, b: &Rat) -> Rat {
    if let (Some((an, ad)), Some((bn, bd))) = (small_parts(a), small_parts(b)) {
        let n = an as i128 * bd as i128 + bn as i128 * ad as i128;
        let d = ad as i128 * bd as i128;
        return rat_from_i128(n, d);
    }
    a + b
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("cannot evaluate at λ = 0 (λ ranges over nonzero values)")]
    ZeroLambda,
    #[error("scalar is not invertible in ℚ[λ, λ⁻¹]: {0}")]
    NotAUnit(String),
}

/// Exact half-integer, stored as its doubled value. `L`/`H` indices are
/// integers (even doubled value), `G`/`Q` indices are strict half-integers
/// (odd doubled value).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    doubled: BigInt,
}

impl HalfInt {
    pub fn from_doubled(doubled: impl Into<BigInt>) -> Self {
        HalfInt {
            doubled: doubled.into(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt {
            doubled: BigInt::from(2 * n),
        }
    }

    pub fn zero() -> Self {
        HalfInt::from_doubled(0)
    }

    pub fn doubled(&self) -> &BigInt {
        &self.doubled
    }

    pub fn is_integer(&self) -> bool {
        (&self.doubled % 2i32).is_zero()
    }

    pub fn is_strict_half(&self) -> bool {
        !self.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.is_zero()
    }

    /// The value as an exact rational (doubled / 2).
    pub fn to_rat(&self) -> Rat {
        BigRational::new(self.doubled.clone(), BigInt::from(2))
    }

    /// The value as an integer; `None` for strict half-integers.
    pub fn to_int(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(&self.doubled / 2i32)
        } else {
            None
        }
    }
}

impl Add for &HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: &HalfInt) -> HalfInt {
        HalfInt {
            doubled: &self.doubled + &rhs.doubled,
        }
    }
}

impl Neg for &HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt {
            doubled: -&self.doubled,
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.to_int() {
            write!(f, "{}", n)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

/// Laurent polynomial in the formal unit `λ` with rational coefficients.
/// Canonical form: no zero coefficients stored; the empty map is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Scalar {
    terms: BTreeMap<BigInt, Rat>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(BigInt::zero(), r);
        }
        Scalar { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rat(rint(n))
    }

    /// `c · λ^k`.
    pub fn monomial(k: impl Into<BigInt>, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k.into(), c);
        }
        Scalar { terms }
    }

    /// `λ^k`.
    pub fn lambda_pow(k: impl Into<BigInt>) -> Self {
        Scalar::monomial(k, Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&BigInt::zero())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// True when the scalar is λ-free (a plain rational, possibly zero).
    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|k| k.is_zero())
    }

    /// The λ-free value, if this scalar is a plain rational.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_rational() {
            self.terms.get(&BigInt::zero()).cloned()
        } else {
            None
        }
    }

    /// Iterate (λ-exponent, coefficient) pairs in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&BigInt, &Rat)> {
        self.terms.iter()
    }

    /// In-place sum, consuming the right-hand side.
    pub(crate) fn add_owned(&mut self, rhs: Scalar) {
        for (k, c) in rhs.terms {
            self.insert(k, c);
        }
    }

    /// In-place `self += f·src` without building an intermediate scalar.
    pub(crate) fn add_scaled(&mut self, src: &Scalar, f: &Rat) {
        for (k, c) in &src.terms {
            self.insert(k.clone(), rat_mul(c, f));
        }
    }

    /// In-place `self += a·b` without building the intermediate product.
    pub(crate) fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                self.insert(ka + kb, rat_mul(ca, cb));
            }
        }
    }

    fn insert(&mut self, k: BigInt, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = rat_add(e.get(), &c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), rat_mul(v, c)))
                .collect(),
        }
    }

    /// Multiply by `λ^k`.
    pub fn shift_lambda(&self, k: &BigInt) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Substitute `λ := lam` and sum. Fails on `lam = 0` since negative
    /// powers of λ may appear.
    pub fn eval(&self, lam: &Rat) -> Result<Rat, ScalarError> {
        if lam.is_zero() {
            return Err(ScalarError::ZeroLambda);
        }
        let mut acc = Rat::zero();
        for (k, c) in &self.terms {
            acc += c * rat_pow(lam, k);
        }
        Ok(acc)
    }

    /// Inverse of a unit of `ℚ[λ, λ⁻¹]` (a single term `c·λ^k`).
    pub fn invert(&self) -> Result<Scalar, ScalarError> {
        if self.terms.len() != 1 {
            return Err(ScalarError::NotAUnit(format!("{:?}", self.terms)));
        }
        let (k, c) = self.terms.iter().next().unwrap();
        Ok(Scalar::monomial(-k, c.recip()))
    }
}

/// `base^exp` for a nonzero rational base and arbitrary integer exponent.
fn rat_pow(base: &Rat, exp: &BigInt) -> Rat {
    let mut e = exp.magnitude().clone();
    let mut b = if exp.is_negative() {
        base.recip()
    } else {
        base.clone()
    };
    let mut acc = Rat::one();
    while !e.is_zero() {
        if e.bit(0) {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert(k.clone(), c.clone());
        }
        out
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (k, c) in &rhs.terms {
            self.insert(k.clone(), c.clone());
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert(k.clone(), -c);
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // Multiplying by a monomial c·λ^k re-keys the map without collisions,
        // so skip the accumulating insert (and the rational product when c=1).
        if rhs.terms.len() == 1 {
            let (k, c) = rhs.terms.iter().next().unwrap();
            if c.is_one() {
                return self.shift_lambda(k);
            }
            return Scalar {
                terms: self
                    .terms
                    .iter()
                    .map(|(e, a)| (e + k, rat_mul(a, c)))
                    .collect(),
            };
        }
        if self.terms.len() == 1 {
            return rhs * self;
        }
        let mut out = Scalar::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out.insert(ka + kb, rat_mul(ca, cb));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_inverse() {
        let a = Scalar::lambda_pow(2);
        let b = Scalar::lambda_pow(-2);
        assert_eq!(&a * &b, Scalar::one());
    }

    #[test]
    fn half_times_two_lambda() {
        let a = Scalar::monomial(1, rat(1, 2));
        let b = Scalar::monomial(1, rint(2));
        assert_eq!(&a * &b, Scalar::lambda_pow(2));
    }

    #[test]
    fn difference_of_squares() {
        let lp1 = &Scalar::lambda_pow(1) + &Scalar::one();
        let lm1 = &Scalar::lambda_pow(1) - &Scalar::one();
        let expect = &Scalar::lambda_pow(2) - &Scalar::one();
        assert_eq!(&lp1 * &lm1, expect);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Scalar::lambda_pow(2).eval(&rint(2)).unwrap(), rint(4));
        assert_eq!(Scalar::lambda_pow(-1).eval(&rint(2)).unwrap(), rat(1, 2));
        assert_eq!(Scalar::zero().eval(&rint(5)).unwrap(), rint(0));
        assert_eq!(
            Scalar::one().eval(&rint(0)),
            Err(ScalarError::ZeroLambda)
        );
    }

    #[test]
    fn halfint_add() {
        let half = HalfInt::from_doubled(1);
        assert_eq!(&half + &half, HalfInt::from_int(1));
        assert_eq!(
            &HalfInt::from_int(2) + &HalfInt::from_int(-3),
            HalfInt::from_int(-1)
        );
        assert_eq!(
            &half + &HalfInt::from_int(1),
            HalfInt::from_doubled(3)
        );
        assert!(HalfInt::from_doubled(3).is_strict_half());
    }
}
