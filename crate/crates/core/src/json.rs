//! JSON documents: posets and lattices with optional negation, implication
//! and membership data.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyFamily, FuzzyNegation, FuzzyStructure, InducedNegation, MembershipFn};
use crate::implication::{build_implication, Implication, ImplicationKind, Provenance};
use crate::lattice::Lattice;
use crate::negation::{GradeNegation, UnaryMap};
use crate::order::Poset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ImplicationSpec {
    Kind { kind: ImplicationKind },
    /// `table[x][y]` is `x -> y`.
    Table { table: BTreeMap<String, BTreeMap<String, String>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDocument {
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
    /// Label to label.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negation: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub implication: Option<ImplicationSpec>,
    /// One function per element; when present the order comes from the grades.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub membership: Option<BTreeMap<String, MembershipFn>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grade_negation: Option<GradeNegation>,
    /// Pointwise operator family; without it operators are taken from the order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FuzzyFamily>,
}

fn classify(e: serde_json::Error) -> Error {
    match e.classify() {
        serde_json::error::Category::Data => Error::Schema(e.to_string()),
        _ => Error::Parse(e.to_string()),
    }
}

impl StructureDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: StructureDocument = serde_json::from_str(text).map_err(classify)?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Every referenced label must be an element.
    pub fn validate(&self) -> Result<()> {
        let known = |s: &String| self.elements.contains(s);
        let unknown = |s: &String| Error::Schema(format!("unknown element `{s}`"));
        let mut refs: Vec<&String> = self.covers.iter().flat_map(|(a, b)| [a, b]).collect();
        if let Some(neg) = &self.negation {
            refs.extend(neg.iter().flat_map(|(a, b)| [a, b]));
        }
        if let Some(ImplicationSpec::Table { table }) = &self.implication {
            for (x, row) in table {
                refs.push(x);
                refs.extend(row.iter().flat_map(|(a, b)| [a, b]));
            }
        }
        if let Some(m) = &self.membership {
            refs.extend(m.keys());
            if let Some(missing) = self.elements.iter().find(|e| !m.contains_key(*e)) {
                return Err(Error::Schema(format!("no membership function for `{missing}`")));
            }
        }
        match refs.into_iter().find(|s| !known(s)) {
            Some(s) => Err(unknown(s)),
            None => Ok(()),
        }
    }

    pub fn is_fuzzy(&self) -> bool {
        self.membership.is_some()
    }

    /// Membership functions in element order.
    pub fn functions(&self) -> Option<Vec<MembershipFn>> {
        let m = self.membership.as_ref()?;
        Some(self.elements.iter().map(|e| m[e].clone()).collect())
    }

    pub fn poset(&self) -> Result<Poset> {
        match self.functions() {
            Some(fns) => crate::order::pointwise_order_labeled(self.elements.clone(), &fns),
            None => Poset::from_covers(&self.elements, &self.covers),
        }
    }

    pub fn negation_map(&self, l: &Lattice) -> Result<Option<UnaryMap>> {
        self.negation.as_ref().map(|m| UnaryMap::from_pairs(l, &m.iter().collect::<Vec<_>>())).transpose()
    }

    pub fn implication(&self, l: &Lattice, neg: Option<&UnaryMap>) -> Result<Option<Implication>> {
        match &self.implication {
            None => Ok(None),
            Some(ImplicationSpec::Kind { kind }) => {
                let neg = neg.ok_or_else(|| Error::Schema("formula implication needs a negation".into()))?;
                build_implication(l, neg, *kind).map(Some)
            }
            Some(ImplicationSpec::Table { table }) => {
                let n = l.len();
                let mut cells = vec![usize::MAX; n * n];
                for (x, row) in table {
                    for (y, z) in row {
                        cells[l.require(x)? * n + l.require(y)?] = l.require(z)?;
                    }
                }
                let got = cells.iter().filter(|&&c| c != usize::MAX).count();
                if got != n * n {
                    return Err(Error::PartialMap { expected: n * n, got });
                }
                Implication::from_table(l, cells, Provenance::Custom).map(Some)
            }
        }
    }

    /// Negation for the induced constructor.
    pub fn induced_negation(&self) -> Result<InducedNegation> {
        match (&self.negation, &self.grade_negation) {
            (Some(_), Some(_)) => Err(Error::Schema("give either `negation` or `grade_negation`".into())),
            (Some(m), None) => Ok(InducedNegation::Labels(m.iter().map(|(a, b)| (a.clone(), b.clone())).collect())),
            (None, g) => Ok(InducedNegation::Grade(g.clone().unwrap_or(GradeNegation::Standard))),
        }
    }

    /// The pointwise structure under `family`, if the document carries one.
    pub fn family_structure(&self) -> Result<Option<FuzzyStructure>> {
        let (Some(fam), Some(fns)) = (self.family, self.functions()) else {
            return Ok(None);
        };
        let neg = match self.induced_negation()? {
            InducedNegation::Grade(g) => FuzzyNegation::Grade(g),
            InducedNegation::Labels(pairs) => {
                let idx = |s: &str| self.elements.iter().position(|e| e == s).expect("validated");
                let mut map = vec![usize::MAX; self.elements.len()];
                for (a, b) in &pairs {
                    map[idx(a)] = idx(b);
                }
                if map.contains(&usize::MAX) {
                    return Err(Error::PartialMap { expected: map.len(), got: pairs.len() });
                }
                FuzzyNegation::Map(map)
            }
        };
        FuzzyStructure::from_family(self.elements.clone(), fns, fam, neg).map(Some)
    }

    /// Covers-only document for a lattice, optionally with a negation.
    pub fn from_lattice(l: &Lattice, neg: Option<&UnaryMap>) -> Self {
        let p = l.poset();
        let mut covers: Vec<(String, String)> =
            p.covers().into_iter().map(|(a, b)| (p.label(a).to_string(), p.label(b).to_string())).collect();
        covers.sort();
        StructureDocument {
            elements: p.labels().to_vec(),
            covers,
            negation: neg.map(|m| m.to_label_map(l)),
            ..Default::default()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{canonical_perp, named_lattice, NamedLattice};

    #[test]
    fn roundtrip() {
        let l = named_lattice(NamedLattice::O6);
        let neg = canonical_perp(NamedLattice::O6).unwrap();
        let doc = StructureDocument::from_lattice(&l, Some(&neg));
        let back = StructureDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        let l2 = Lattice::from_poset(back.poset().unwrap()).unwrap();
        assert_eq!(back.negation_map(&l2).unwrap().unwrap().to_label_map(&l2), neg.to_label_map(&l));
    }

    #[test]
    fn errors() {
        assert!(matches!(StructureDocument::from_json("{"), Err(Error::Parse(_))));
        assert!(matches!(StructureDocument::from_json(r#"{"elements": 3}"#), Err(Error::Schema(_))));
        let bad = r#"{"elements": ["a"], "covers": [["a", "b"]]}"#;
        assert!(matches!(StructureDocument::from_json(bad), Err(Error::Schema(_))));
    }

    #[test]
    fn implication_kinds() {
        let doc = r#"{"elements": ["0", "1"], "covers": [["0", "1"]], "negation": {"0": "1", "1": "0"},
            "implication": {"kind": "sasaki"}}"#;
        let d = StructureDocument::from_json(doc).unwrap();
        let l = Lattice::from_poset(d.poset().unwrap()).unwrap();
        let neg = d.negation_map(&l).unwrap();
        let imp = d.implication(&l, neg.as_ref()).unwrap().unwrap();
        assert_eq!(imp.get(1, 0), 0);
    }
}
