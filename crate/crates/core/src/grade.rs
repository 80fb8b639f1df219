//! Exact membership grades in the closed unit interval.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Parse `"n"` or `"n/d"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(num, den))
}

/// Render as `"num/den"`.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Serde adapter for rationals stored as `"num/den"` strings.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// A membership grade: an exact rational `q` with `0 <= q <= 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(BigRational);

impl Grade {
    pub fn new(q: BigRational) -> Result<Self> {
        if q.is_negative() || q > BigRational::one() {
            return Err(Error::OutOfRange(format!("grade {} outside [0,1]", format_rational(&q))));
        }
        Ok(Grade(q))
    }

    /// `num/den`, panicking outside `[0,1]`. Meant for literals and fixtures.
    pub fn ratio(num: i64, den: i64) -> Self {
        Grade::new(BigRational::new(num.into(), den.into())).expect("grade literal outside [0,1]")
    }

    /// Clamp an arbitrary rational into the unit interval.
    pub fn clamped(q: BigRational) -> Self {
        if q.is_negative() {
            Grade::zero()
        } else if q > BigRational::one() {
            Grade::one()
        } else {
            Grade(q)
        }
    }

    pub fn zero() -> Self {
        Grade(BigRational::zero())
    }

    pub fn one() -> Self {
        Grade(BigRational::one())
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn into_inner(self) -> BigRational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_crisp(&self) -> bool {
        self.is_zero() || self.is_one()
    }

    /// Strictly inside the open interval `(0,1)`.
    pub fn is_interior(&self) -> bool {
        !self.is_crisp()
    }

    /// `1 - q`.
    pub fn complement(&self) -> Self {
        Grade(BigRational::one() - &self.0)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Grade {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Grade::new(parse_rational(s)?)
    }
}

impl Serialize for Grade {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Grade {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let g: Grade = "2/4".parse().unwrap();
        assert_eq!(g, Grade::ratio(1, 2));
        assert_eq!(g.to_string(), "1/2");
        assert_eq!("1".parse::<Grade>().unwrap(), Grade::one());
        assert!("3/2".parse::<Grade>().is_err());
        assert!("-1/2".parse::<Grade>().is_err());
        assert!("1/0".parse::<Grade>().is_err());
        assert!("x".parse::<Grade>().is_err());
    }

    #[test]
    fn serde_roundtrip_uses_fraction_strings() {
        let g = Grade::ratio(19, 20);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, "\"19/20\"");
        let back: Grade = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn clamp_and_complement() {
        let q = BigRational::new(3.into(), 2.into());
        assert_eq!(Grade::clamped(q), Grade::one());
        assert_eq!(Grade::clamped(-BigRational::one()), Grade::zero());
        assert_eq!(Grade::ratio(1, 4).complement(), Grade::ratio(3, 4));
        assert!(Grade::ratio(1, 2).is_interior());
        assert!(Grade::one().is_crisp());
    }
}
