//! Field abstraction shared by the exact (rational) and floating-point code paths.

use std::collections::HashMap;
use std::fmt::{self, Debug};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symfunc::jack::{JackExpansion, JackKey};

pub type JackCache<S> = RwLock<HashMap<JackKey, Arc<JackExpansion<S>>>>;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn to_f64(&self) -> f64;
    fn abs_val(&self) -> Self;

    fn powi(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = out * self.clone();
        }
        out
    }

    /// Process-wide cache of monomial expansions of Jack polynomials.
    fn jack_cache() -> &'static JackCache<Self>;
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn powi(&self, k: u32) -> Self {
        f64::powi(*self, k as i32)
    }
    fn jack_cache() -> &'static JackCache<Self> {
        static CACHE: OnceLock<JackCache<f64>> = OnceLock::new();
        CACHE.get_or_init(Default::default)
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn jack_cache() -> &'static JackCache<Self> {
        static CACHE: OnceLock<JackCache<BigRational>> = OnceLock::new();
        CACHE.get_or_init(Default::default)
    }
}

/// Exact rational from a decimal literal such as `2.7`.
pub fn rational_from_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits = format!("{int}{frac}");
    let num: BigInt = digits.parse().ok()?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let r = BigRational::new(num, den);
    Some(if neg { -r } else { r })
}

/// The Jack parameter α, a positive rational.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JackIndex {
    num: u32,
    den: u32,
}

impl JackIndex {
    pub const HALF: JackIndex = JackIndex { num: 1, den: 2 };
    pub const ONE: JackIndex = JackIndex { num: 1, den: 1 };
    pub const TWO: JackIndex = JackIndex { num: 2, den: 1 };

    pub fn new(num: u32, den: u32) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::InvalidArgument(format!("Jack index must be positive, got {num}/{den}")));
        }
        let g = gcd(num, den);
        Ok(JackIndex { num: num / g, den: den / g })
    }

    pub fn numer(self) -> u32 {
        self.num
    }

    pub fn denom(self) -> u32 {
        self.den
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn as_scalar<S: Scalar>(self) -> S {
        S::from_ratio(self.num as i64, self.den as i64)
    }

    /// `1/α`.
    pub fn recip(self) -> JackIndex {
        JackIndex { num: self.den, den: self.num }
    }

    /// `β = 2/α`.
    pub fn beta(self) -> f64 {
        2.0 / self.value()
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for JackIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Debug for JackIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "JackIndex({self})")
    }
}

impl FromStr for JackIndex {
    type Err = Error;

    /// Accepts `p/q`, an integer, or a terminating decimal (`0.5`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse Jack index {s:?}"));
        if let Some((p, q)) = s.split_once('/') {
            let p = p.trim().parse().map_err(|_| bad())?;
            let q = q.trim().parse().map_err(|_| bad())?;
            return JackIndex::new(p, q);
        }
        let r = rational_from_decimal(s).ok_or_else(bad)?;
        let num = r.numer().to_u32().ok_or_else(bad)?;
        let den = r.denom().to_u32().ok_or_else(bad)?;
        JackIndex::new(num, den)
    }
}

impl Serialize for JackIndex {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for JackIndex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Number(f64),
        }
        let text = match Repr::deserialize(d)? {
            Repr::Text(t) => t,
            Repr::Number(x) => x.to_string(),
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_jack_index() {
        assert_eq!("1/2".parse::<JackIndex>().unwrap(), JackIndex::HALF);
        assert_eq!("0.5".parse::<JackIndex>().unwrap(), JackIndex::HALF);
        assert_eq!("2".parse::<JackIndex>().unwrap(), JackIndex::TWO);
        assert_eq!("4/2".parse::<JackIndex>().unwrap(), JackIndex::TWO);
        assert!("0".parse::<JackIndex>().is_err());
        assert!("-1".parse::<JackIndex>().is_err());
        let a: JackIndex = serde_json::from_str("0.5").unwrap();
        assert_eq!(a, JackIndex::HALF);
        assert_eq!(serde_json::to_string(&JackIndex::HALF).unwrap(), "\"1/2\"");
    }

    #[test]
    fn decimal_rationals_are_exact() {
        assert_eq!(rational_from_decimal("2.7").unwrap(), <BigRational as Scalar>::from_ratio(27, 10));
        assert_eq!(rational_from_decimal("-1.5").unwrap(), <BigRational as Scalar>::from_ratio(-3, 2));
    }
}
