//! Arbitrary-precision scalars.
//!
//! [`Integer`] and [`Rational`] are thin aliases over `dashu`; small values
//! are stored inline, large ones spill to the heap, and no operation can
//! overflow. Rationals are always kept in lowest terms with a positive
//! denominator.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use dashu_base::{DivEuclid, Gcd, RemEuclid, Signed};

use crate::error::{Error, Result};

pub type Integer = dashu_int::IBig;
pub type Rational = dashu_ratio::RBig;

/// The ring operations the dense matrix code needs.
pub trait Scalar:
    Clone + Eq + Hash + Debug + Display + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    /// Division that is known to be exact (Bareiss steps, field division).
    fn exact_div(&self, other: &Self) -> Self;
    /// Parse a decimal string (`"-3"`, or `"p/q"` where the type allows it).
    fn parse_decimal(s: &str) -> Result<Self>;
}

impl Scalar for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn one() -> Self {
        Integer::ONE
    }
    fn is_zero(&self) -> bool {
        *self == Integer::ZERO
    }
    fn from_i64(v: i64) -> Self {
        Integer::from(v)
    }
    fn exact_div(&self, other: &Self) -> Self {
        self / other
    }
    fn parse_decimal(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some((p, q)) = t.split_once('/') {
            // Accept "6/3" as long as it denotes an integer.
            let r = Rational::from_parts_signed(parse_int(p)?, parse_int(q)?);
            return rational_to_integer(&r).ok_or_else(|| Error::Parse(format!("'{s}' is not an integer")));
        }
        parse_int(t)
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn one() -> Self {
        Rational::ONE
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        Rational::from(Integer::from(v))
    }
    fn exact_div(&self, other: &Self) -> Self {
        self / other
    }
    fn parse_decimal(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.split_once('/') {
            Some((p, q)) => {
                let q = parse_int(q)?;
                if q == Integer::ZERO {
                    return Err(Error::Parse(format!("zero denominator in '{s}'")));
                }
                Ok(Rational::from_parts_signed(parse_int(p)?, q))
            }
            None => Ok(Rational::from(parse_int(t)?)),
        }
    }
}

fn parse_int(s: &str) -> Result<Integer> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    t.parse::<Integer>()
        .map_err(|_| Error::Parse(format!("'{s}' is not a decimal integer")))
}

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::from_parts_signed(Integer::from(p), Integer::from(q))
}

pub fn int_vec(v: &[i64]) -> Vec<Integer> {
    v.iter().map(|&x| Integer::from(x)).collect()
}

pub fn to_rational(v: &Integer) -> Rational {
    Rational::from(v.clone())
}

pub fn rational_to_integer(r: &Rational) -> Option<Integer> {
    if r.is_int() {
        Some(r.numerator().clone())
    } else {
        None
    }
}

/// Denominator of a rational as a signed integer.
pub fn denominator(r: &Rational) -> Integer {
    Integer::from(r.denominator().clone())
}

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &Integer, b: &Integer) -> Integer {
    if a.is_zero() {
        return abs(b);
    }
    if b.is_zero() {
        return abs(a);
    }
    Integer::from(a.gcd(b))
}

pub fn lcm(a: &Integer, b: &Integer) -> Integer {
    if a.is_zero() || b.is_zero() {
        return Integer::ZERO;
    }
    let g = gcd(a, b);
    abs(&(a / &g * b))
}

pub fn abs(a: &Integer) -> Integer {
    if a.is_negative() {
        -a.clone()
    } else {
        a.clone()
    }
}

pub fn is_negative(a: &Integer) -> bool {
    a.is_negative()
}

pub fn is_even(a: &Integer) -> bool {
    a.rem_euclid(Integer::from(2u8)) == dashu_int::UBig::ZERO
}

/// Floor division, valid for either sign of the divisor.
pub fn floor_div(a: &Integer, b: &Integer) -> Integer {
    assert!(!b.is_zero(), "division by zero");
    if b.is_negative() {
        (-a.clone()).div_euclid(-b.clone())
    } else {
        a.div_euclid(b)
    }
}

/// Remainder in `[0, |m|)`.
pub fn mod_floor(a: &Integer, m: &Integer) -> Integer {
    Integer::from(a.rem_euclid(m))
}

/// Nearest integer to `a / b`, ties rounded up (`floor(a/b + 1/2)`).
pub fn round_div(a: &Integer, b: &Integer) -> Integer {
    let two = Integer::from(2);
    floor_div(&(&two * a + b), &(&two * b))
}

/// Gcd of a list, always nonnegative; zero for an empty or all-zero list.
pub fn content(v: &[Integer]) -> Integer {
    v.iter().fold(Integer::ZERO, |g, x| gcd(&g, x))
}
