//! Exact rational scalars and vectors.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Canonical arbitrary-precision rational (positive denominator, reduced).
pub type Rational = BigRational;

/// A point of `Q^m`.
pub type RationalVector = Vec<Rational>;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn rvec(coords: &[i64]) -> RationalVector {
    coords.iter().map(|&c| int(c)).collect()
}

/// Parses `"a/b"` or `"a"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational literal: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Always `num/den`, with `den = 1` written out.
pub fn format_rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub fn floor_i64(value: &Rational) -> i64 {
    value
        .floor()
        .to_integer()
        .to_i64()
        .expect("floor fits in i64")
}

pub fn ceil_i64(value: &Rational) -> i64 {
    value.ceil().to_integer().to_i64().expect("ceil fits in i64")
}

/// `ceil(a / b)` for integers with `b > 0`.
pub fn div_ceil_i64(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_ceil(&a, &b)
}

/// A rational or `+∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Extended {
    Finite(Rational),
    Infinite,
}

impl Extended {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Extended::Finite(value) => Some(value),
            Extended::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinite)
    }

    /// `1/x` with `1/0 = +∞` and `1/+∞ = 0`; defined on nonnegative values.
    pub fn recip_nonneg(&self) -> Extended {
        match self {
            Extended::Infinite => Extended::Finite(Rational::zero()),
            Extended::Finite(x) if x.is_zero() => Extended::Infinite,
            Extended::Finite(x) => Extended::Finite(x.recip()),
        }
    }
}

impl PartialOrd for Extended {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Extended {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (Extended::Infinite, Extended::Infinite) => Equal,
            (Extended::Infinite, _) => Greater,
            (_, Extended::Infinite) => Less,
            (Extended::Finite(a), Extended::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(value) => f.write_str(&format_rational(value)),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Extended {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        if text == "inf" {
            return Ok(Extended::Infinite);
        }
        parse_rational(&text)
            .map(Extended::Finite)
            .map_err(serde::de::Error::custom)
    }
}
