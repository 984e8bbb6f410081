//! Exact rational scalars and their extension by `±inf`.
//!
//! [`ExactScalar`] wraps an arbitrary-precision rational. All arithmetic is
//! exact: associativity, commutativity, and distributivity hold bit-for-bit,
//! which makes the type the right carrier for the clamped classes, where any
//! failure of a law must come from the clamp and never from rounding.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar(BigRational::one())
    }

    /// `p / q` in lowest terms. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        ExactScalar(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        ExactScalar(BigRational::from_integer(n))
    }

    /// Exact value of a finite float (every finite `f64` is rational).
    /// Returns `None` for NaN or infinities.
    pub fn from_f64_exact(value: f64) -> Option<Self> {
        BigRational::from_float(value).map(ExactScalar)
    }

    /// Nearest `f64`; overflows to `±inf` for values outside float range.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            if self.0.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        ExactScalar(self.0.abs())
    }

    /// Largest integer `<= self`.
    pub fn floor_bigint(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Integer value; panics unless `is_integer()`.
    pub fn to_bigint(&self) -> BigInt {
        assert!(self.is_integer(), "not an integer: {self}");
        self.0.to_integer()
    }

    pub fn pow(&self, exp: u32) -> Self {
        ExactScalar(self.0.pow(exp as i32))
    }

    pub fn min(self, other: Self) -> Self {
        std::cmp::min(self, other)
    }

    pub fn max(self, other: Self) -> Self {
        std::cmp::max(self, other)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar(BigRational::from_integer(BigInt::from(n)))
    }
}

macro_rules! exact_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar((self.0).$method(rhs.0))
            }
        }
        impl $trait for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar((self.0).$method(&rhs.0))
            }
        }
        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(rhs.0))
            }
        }
    };
}

exact_binop!(Add, add);
exact_binop!(Sub, sub);
exact_binop!(Mul, mul);
exact_binop!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-&self.0)
    }
}

impl Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> ExactScalar {
        iter.fold(ExactScalar::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Accepts integers (`7`, `-3`), rationals (`p/q` with integer parts), and
/// finite decimals (`2.5`, `-0.125`). Decimals convert exactly.
impl FromStr for ExactScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_exact(s, 0)
    }
}

/// Parses with offsets reported relative to `base` (for error positions
/// inside larger inputs).
pub(crate) fn parse_exact(s: &str, base: usize) -> Result<ExactScalar> {
    let err = |offset: usize, expected: &str, found: &str| Error::Parse {
        offset: base + offset,
        expected: expected.to_string(),
        found: found.to_string(),
    };
    let s = s.trim();
    if s.is_empty() {
        return Err(err(0, "number", "end of input"));
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = p.trim();
        let q = q.trim();
        let numer: BigInt = p
            .parse()
            .map_err(|_| err(0, "integer numerator", p))?;
        let denom: BigInt = q
            .parse()
            .map_err(|_| err(s.find('/').unwrap() + 1, "integer denominator", q))?;
        if denom.is_zero() {
            return Err(err(s.find('/').unwrap() + 1, "nonzero denominator", q));
        }
        return Ok(ExactScalar(BigRational::new(numer, denom)));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let (sign, digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        let valid = |d: &str| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit());
        if !valid(digits) || !valid(frac_part) {
            return Err(err(0, "decimal number", s));
        }
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let numer = digits.parse::<BigInt>().unwrap() * &scale
            + frac_part.parse::<BigInt>().unwrap();
        return Ok(ExactScalar(BigRational::new(numer * sign, scale)));
    }
    let n: BigInt = s.parse().map_err(|_| err(0, "number", s))?;
    Ok(ExactScalar(BigRational::from_integer(n)))
}

/// Exact rational extended by the two infinities. Used as the input type of
/// the coprojectors, which must accept limits of divergent series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendedRational {
    NegInf,
    Finite(ExactScalar),
    PosInf,
}

impl ExtendedRational {
    pub fn is_negative(&self) -> bool {
        match self {
            ExtendedRational::NegInf => true,
            ExtendedRational::Finite(v) => v.is_negative(),
            ExtendedRational::PosInf => false,
        }
    }

    /// `self - rhs` for finite `rhs`; infinities absorb.
    pub fn sub_finite(&self, rhs: &ExactScalar) -> ExtendedRational {
        match self {
            ExtendedRational::NegInf => ExtendedRational::NegInf,
            ExtendedRational::Finite(v) => ExtendedRational::Finite(v - rhs),
            ExtendedRational::PosInf => ExtendedRational::PosInf,
        }
    }

    pub fn as_finite(&self) -> Option<&ExactScalar> {
        match self {
            ExtendedRational::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl From<ExactScalar> for ExtendedRational {
    fn from(v: ExactScalar) -> Self {
        ExtendedRational::Finite(v)
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedRational::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialEq<ExactScalar> for ExtendedRational {
    fn eq(&self, other: &ExactScalar) -> bool {
        matches!(self, ExtendedRational::Finite(v) if v == other)
    }
}

impl PartialOrd<ExactScalar> for ExtendedRational {
    fn partial_cmp(&self, other: &ExactScalar) -> Option<Ordering> {
        Some(match self {
            ExtendedRational::NegInf => Ordering::Less,
            ExtendedRational::Finite(v) => v.cmp(other),
            ExtendedRational::PosInf => Ordering::Greater,
        })
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::NegInf => write!(f, "-inf"),
            ExtendedRational::Finite(v) => write!(f, "{v}"),
            ExtendedRational::PosInf => write!(f, "inf"),
        }
    }
}
