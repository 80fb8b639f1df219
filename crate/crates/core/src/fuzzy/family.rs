use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzzy::MembershipFn;
use crate::grade::Grade;

/// Pointwise grade-level operator pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FuzzyFamily {
    MinMax,
    ProductProbSum,
    Lukasiewicz,
}

impl FuzzyFamily {
    pub const ALL: [FuzzyFamily; 3] = [FuzzyFamily::MinMax, FuzzyFamily::ProductProbSum, FuzzyFamily::Lukasiewicz];

    pub fn name(self) -> &'static str {
        match self {
            FuzzyFamily::MinMax => "minmax",
            FuzzyFamily::ProductProbSum => "product",
            FuzzyFamily::Lukasiewicz => "lukasiewicz",
        }
    }

    pub fn meet(self, a: &Grade, b: &Grade) -> Grade {
        let (x, y) = (a.value(), b.value());
        match self {
            FuzzyFamily::MinMax => a.min(b).clone(),
            FuzzyFamily::ProductProbSum => Grade::clamped(x * y),
            FuzzyFamily::Lukasiewicz => Grade::clamped(x + y - BigRational::one()),
        }
    }

    pub fn join(self, a: &Grade, b: &Grade) -> Grade {
        let (x, y) = (a.value(), b.value());
        match self {
            FuzzyFamily::MinMax => a.max(b).clone(),
            FuzzyFamily::ProductProbSum => Grade::clamped(x + y - x * y),
            FuzzyFamily::Lukasiewicz => Grade::clamped(x + y),
        }
    }
}

impl fmt::Display for FuzzyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FuzzyFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "minmax" => Ok(FuzzyFamily::MinMax),
            "product" | "productprobsum" | "probsum" => Ok(FuzzyFamily::ProductProbSum),
            "lukasiewicz" | "bold" => Ok(FuzzyFamily::Lukasiewicz),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// Pointwise meet and join of two functions under a family.
pub fn apply_family(fam: FuzzyFamily, m: &MembershipFn, n: &MembershipFn) -> Result<(MembershipFn, MembershipFn)> {
    let meet = m.zip_with(n, |a, b| fam.meet(a, b))?;
    let join = m.zip_with(n, |a, b| fam.join(a, b))?;
    Ok((meet, join))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_grade_values() {
        let h = Grade::ratio(1, 2);
        assert_eq!(FuzzyFamily::Lukasiewicz.join(&h, &h), Grade::one());
        assert_eq!(FuzzyFamily::Lukasiewicz.meet(&h, &h), Grade::zero());
        assert_eq!(FuzzyFamily::ProductProbSum.join(&h, &h), Grade::ratio(3, 4));
        assert_eq!(FuzzyFamily::ProductProbSum.meet(&h, &h), Grade::ratio(1, 4));
        assert_eq!(FuzzyFamily::MinMax.join(&h, &h), h);
    }

    #[test]
    fn universe_mismatch() {
        let a = MembershipFn::from_ratios(&["x"], &[(1, 2)]).unwrap();
        let b = MembershipFn::from_ratios(&["y"], &[(1, 2)]).unwrap();
        assert_eq!(apply_family(FuzzyFamily::MinMax, &a, &b).unwrap_err(), Error::UniverseMismatch);
    }

    #[test]
    fn names_parse() {
        for f in FuzzyFamily::ALL {
            assert_eq!(f.name().parse::<FuzzyFamily>().unwrap(), f);
        }
    }
}
