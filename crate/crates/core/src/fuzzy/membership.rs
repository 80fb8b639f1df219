use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grade::Grade;

/// A membership function on a finite, ordered universe.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MembershipFn {
    universe: Vec<String>,
    grades: Vec<Grade>,
}

impl MembershipFn {
    pub fn new(universe: Vec<String>, grades: Vec<Grade>) -> Result<Self> {
        if universe.len() != grades.len() {
            return Err(Error::PartialMap { expected: universe.len(), got: grades.len() });
        }
        let mut seen = std::collections::HashSet::new();
        for u in &universe {
            if !seen.insert(u) {
                return Err(Error::DuplicateLabel(u.clone()));
            }
        }
        Ok(MembershipFn { universe, grades })
    }

    /// Convenience constructor from `(num, den)` pairs.
    pub fn from_ratios(universe: &[&str], ratios: &[(i64, i64)]) -> Result<Self> {
        let grades = ratios
            .iter()
            .map(|&(n, d)| Grade::new(num_rational::BigRational::new(n.into(), d.into())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe.iter().map(|s| s.to_string()).collect(), grades)
    }

    pub fn constant(universe: Vec<String>, g: Grade) -> Self {
        let grades = vec![g; universe.len()];
        MembershipFn { universe, grades }
    }

    /// Indicator of the points whose bit is set in `mask`.
    pub fn indicator(universe: Vec<String>, mask: u64) -> Self {
        let grades = (0..universe.len())
            .map(|i| if mask >> i & 1 == 1 { Grade::one() } else { Grade::zero() })
            .collect();
        MembershipFn { universe, grades }
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn grade(&self, i: usize) -> &Grade {
        &self.grades[i]
    }

    pub fn grade_at(&self, point: &str) -> Option<&Grade> {
        self.universe.iter().position(|u| u == point).map(|i| &self.grades[i])
    }

    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    pub fn is_crisp(&self) -> bool {
        self.grades.iter().all(Grade::is_crisp)
    }

    pub fn pointwise_leq(&self, other: &MembershipFn) -> bool {
        self.universe == other.universe && self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b)
    }

    pub fn map(&self, f: impl Fn(&Grade) -> Grade) -> Self {
        MembershipFn { universe: self.universe.clone(), grades: self.grades.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&Grade) -> Result<Grade>) -> Result<Self> {
        let grades = self.grades.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(MembershipFn { universe: self.universe.clone(), grades })
    }

    pub fn zip_with(&self, other: &MembershipFn, f: impl Fn(&Grade, &Grade) -> Grade) -> Result<Self> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        let grades = self.grades.iter().zip(&other.grades).map(|(a, b)| f(a, b)).collect();
        Ok(MembershipFn { universe: self.universe.clone(), grades })
    }

    /// The standard pointwise negation `1 - m`.
    pub fn standard_negation(&self) -> Self {
        self.map(Grade::complement)
    }
}

#[derive(Serialize, Deserialize)]
struct MembershipDoc {
    universe: Vec<String>,
    grades: BTreeMap<String, Grade>,
}

impl Serialize for MembershipFn {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MembershipDoc {
            universe: self.universe.clone(),
            grades: self.universe.iter().cloned().zip(self.grades.iter().cloned()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MembershipFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = MembershipDoc::deserialize(d)?;
        grades_from_map(doc.universe, &doc.grades).map_err(serde::de::Error::custom)
    }
}

/// Assemble a function from a point -> grade map that must cover the universe exactly.
pub fn grades_from_map(universe: Vec<String>, grades: &BTreeMap<String, Grade>) -> Result<MembershipFn> {
    if let Some(extra) = grades.keys().find(|k| !universe.contains(k)) {
        return Err(Error::UnknownLabel(extra.clone()));
    }
    let values = universe
        .iter()
        .map(|u| grades.get(u).cloned().ok_or(Error::PartialMap { expected: universe.len(), got: grades.len() }))
        .collect::<Result<Vec<_>>>()?;
    MembershipFn::new(universe, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip() {
        let m = MembershipFn::from_ratios(&["x1", "x2"], &[(1, 5), (3, 5)]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"universe":["x1","x2"],"grades":{"x1":"1/5","x2":"3/5"}}"#);
        let back: MembershipFn = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        let missing = r#"{"universe":["x1","x2"],"grades":{"x1":"1/5"}}"#;
        assert!(serde_json::from_str::<MembershipFn>(missing).is_err());
    }

    #[test]
    fn crispness_and_order() {
        let u: Vec<String> = vec!["a".into(), "b".into()];
        let i = MembershipFn::indicator(u.clone(), 0b01);
        assert!(i.is_crisp());
        assert!(i.pointwise_leq(&MembershipFn::constant(u.clone(), Grade::one())));
        assert!(!i.pointwise_leq(&MembershipFn::indicator(u, 0b10)));
    }
}
