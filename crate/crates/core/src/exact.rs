//! Arbitrary-precision integers and exact rationals, plus the small
//! combinatorial kernel (binomials, rising factorials, backward
//! differences) the rest of the crate is built on.
//!
//! `ExactInt` and `ExactRat` wrap `num-bigint` / `num-rational` values.
//! Rationals are always in lowest terms with a positive denominator;
//! integer division is only available as [`ExactInt::div_exact`], which
//! fails instead of truncating.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Division between incompatible exact values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisionError {
    #[error("{numerator} is not divisible by {denominator}")]
    NotDivisible {
        numerator: String,
        denominator: String,
    },
    #[error("division by zero")]
    DivisionByZero,
}

/// Arbitrary-precision signed integer.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactInt(BigInt);

impl ExactInt {
    pub fn zero() -> Self {
        ExactInt(BigInt::zero())
    }

    pub fn one() -> Self {
        ExactInt(BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn pow(&self, exp: u32) -> ExactInt {
        ExactInt(self.0.pow(exp))
    }

    /// Exact quotient. Fails when the divisor does not divide `self`;
    /// never truncates.
    pub fn div_exact(&self, divisor: &ExactInt) -> Result<ExactInt, DivisionError> {
        if divisor.is_zero() {
            return Err(DivisionError::DivisionByZero);
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        if r.is_zero() {
            Ok(ExactInt(q))
        } else {
            Err(DivisionError::NotDivisible {
                numerator: self.to_string(),
                denominator: divisor.to_string(),
            })
        }
    }

    /// Floored quotient and remainder (Euclidean pair from `div_rem`).
    /// Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &ExactInt) -> (ExactInt, ExactInt) {
        let (q, r) = self.0.div_rem(&divisor.0);
        (ExactInt(q), ExactInt(r))
    }
}

impl fmt::Display for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for ExactInt {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(ExactInt(BigInt::from_str(s)?))
    }
}

macro_rules! int_from_primitive {
    ($($t:ty),*) => {$(
        impl From<$t> for ExactInt {
            fn from(v: $t) -> Self {
                ExactInt(BigInt::from(v))
            }
        }
    )*};
}

int_from_primitive!(i32, i64, u32, u64, usize);

macro_rules! int_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: ExactInt) -> ExactInt {
                ExactInt(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactInt> for ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: &ExactInt) -> ExactInt {
                ExactInt(self.0.$method(&rhs.0))
            }
        }
        impl $trait<ExactInt> for &ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: ExactInt) -> ExactInt {
                ExactInt((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&ExactInt> for &ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: &ExactInt) -> ExactInt {
                ExactInt((&self.0).$method(&rhs.0))
            }
        }
    };
}

int_binop!(Add, add);
int_binop!(Sub, sub);
int_binop!(Mul, mul);

impl Neg for ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        ExactInt(-self.0)
    }
}

impl Neg for &ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        ExactInt(-&self.0)
    }
}

impl AddAssign<&ExactInt> for ExactInt {
    fn add_assign(&mut self, rhs: &ExactInt) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for ExactInt {
    fn add_assign(&mut self, rhs: ExactInt) {
        self.0 += rhs.0;
    }
}

impl MulAssign<&ExactInt> for ExactInt {
    fn mul_assign(&mut self, rhs: &ExactInt) {
        self.0 *= &rhs.0;
    }
}

impl Sum for ExactInt {
    fn sum<I: Iterator<Item = ExactInt>>(iter: I) -> ExactInt {
        iter.fold(ExactInt::zero(), |acc, x| acc + x)
    }
}

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Exact rational, always reduced, denominator always positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRat(BigRational);

impl ExactRat {
    pub fn zero() -> Self {
        ExactRat(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRat(BigRational::one())
    }

    /// Reduced rational `numerator / denominator`.
    pub fn new(numerator: ExactInt, denominator: ExactInt) -> Result<Self, DivisionError> {
        if denominator.is_zero() {
            return Err(DivisionError::DivisionByZero);
        }
        Ok(ExactRat(BigRational::new(numerator.0, denominator.0)))
    }

    /// Shorthand for small literal ratios.
    pub fn ratio(numerator: i64, denominator: i64) -> Self {
        ExactRat::new(numerator.into(), denominator.into())
            .expect("literal denominator must be nonzero")
    }

    pub fn numerator(&self) -> ExactInt {
        ExactInt(self.0.numer().clone())
    }

    pub fn denominator(&self) -> ExactInt {
        ExactInt(self.0.denom().clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value of a rational with denominator one.
    pub fn to_integer(&self) -> Result<ExactInt, DivisionError> {
        self.numerator().div_exact(&self.denominator())
    }

    pub fn pow(&self, exp: i32) -> ExactRat {
        ExactRat(self.0.pow(exp))
    }
}

impl fmt::Display for ExactRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for ExactRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Parses `p/q` or a plain integer.
impl FromStr for ExactRat {
    type Err = DivisionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || DivisionError::NotDivisible {
            numerator: s.to_string(),
            denominator: "1".to_string(),
        };
        match s.split_once('/') {
            Some((num, den)) => {
                let num: ExactInt = num.trim().parse().map_err(|_| bad())?;
                let den: ExactInt = den.trim().parse().map_err(|_| bad())?;
                ExactRat::new(num, den)
            }
            None => {
                let num: ExactInt = s.trim().parse().map_err(|_| bad())?;
                Ok(ExactRat::from(num))
            }
        }
    }
}

impl From<ExactInt> for ExactRat {
    fn from(v: ExactInt) -> Self {
        ExactRat(BigRational::from_integer(v.0))
    }
}

impl From<i64> for ExactRat {
    fn from(v: i64) -> Self {
        ExactRat(BigRational::from_integer(BigInt::from(v)))
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRat {
            type Output = ExactRat;
            fn $method(self, rhs: ExactRat) -> ExactRat {
                ExactRat(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactRat> for ExactRat {
            type Output = ExactRat;
            fn $method(self, rhs: &ExactRat) -> ExactRat {
                ExactRat(self.0.$method(&rhs.0))
            }
        }
        impl $trait<ExactRat> for &ExactRat {
            type Output = ExactRat;
            fn $method(self, rhs: ExactRat) -> ExactRat {
                ExactRat((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&ExactRat> for &ExactRat {
            type Output = ExactRat;
            fn $method(self, rhs: &ExactRat) -> ExactRat {
                ExactRat((&self.0).$method(&rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);

/// Panics on a zero divisor, like primitive division.
impl Div for ExactRat {
    type Output = ExactRat;
    fn div(self, rhs: ExactRat) -> ExactRat {
        assert!(!rhs.is_zero(), "division by zero");
        ExactRat(self.0 / rhs.0)
    }
}

impl Div<&ExactRat> for &ExactRat {
    type Output = ExactRat;
    fn div(self, rhs: &ExactRat) -> ExactRat {
        assert!(!rhs.is_zero(), "division by zero");
        ExactRat(&self.0 / &rhs.0)
    }
}

impl Neg for ExactRat {
    type Output = ExactRat;
    fn neg(self) -> ExactRat {
        ExactRat(-self.0)
    }
}

impl AddAssign<&ExactRat> for ExactRat {
    fn add_assign(&mut self, rhs: &ExactRat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for ExactRat {
    fn add_assign(&mut self, rhs: ExactRat) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&ExactRat> for ExactRat {
    fn sub_assign(&mut self, rhs: &ExactRat) {
        self.0 -= &rhs.0;
    }
}

impl Sum for ExactRat {
    fn sum<I: Iterator<Item = ExactRat>>(iter: I) -> ExactRat {
        iter.fold(ExactRat::zero(), |acc, x| acc + x)
    }
}

impl Serialize for ExactRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Binomial coefficient C(n, k). Zero outside `0 <= k <= n`, so
/// alternating sums may run past the support without special-casing.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return ExactInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc is C(n, i) here, so the division is exact at every step
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    ExactInt(acc)
}

/// Rising factorial n(n+1)...(n+j-1); the empty product (j = 0) is 1.
pub fn rising_factorial(n: u64, j: u32) -> ExactInt {
    let mut acc = BigInt::one();
    for i in 0..j as u64 {
        acc *= BigInt::from(n + i);
    }
    ExactInt(acc)
}

/// d! as an exact integer.
pub fn factorial(d: u32) -> ExactInt {
    rising_factorial(1, d)
}

/// Backward difference of the given order with an arbitrary positive
/// step: sum over h of (-1)^h C(order, h) f(x - h*step).
///
/// The operator is a pure linear combination; it never clamps its
/// argument. Functions that vanish below their natural domain (like the
/// corner-simplex volume) must do so themselves.
pub fn backward_difference<F>(f: F, order: u32, x: &ExactRat, step: &ExactRat) -> ExactRat
where
    F: Fn(&ExactRat) -> ExactRat,
{
    assert!(step.is_positive(), "backward difference needs a positive step");
    let mut acc = ExactRat::zero();
    let mut point = x.clone();
    for h in 0..=order {
        let term = ExactRat::from(binomial(order as u64, h as i64)) * f(&point);
        if h % 2 == 0 {
            acc += term;
        } else {
            acc -= &term;
        }
        point -= step;
    }
    acc
}
