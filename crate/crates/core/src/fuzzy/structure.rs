use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyFamily, MembershipFn};
use crate::grade::Grade;
use crate::lattice::Lattice;
use crate::negation::{grade_negate, GradeNegation};
use crate::order::pointwise_order_labeled;

/// Default caps on universe points and function-set size.
pub const UNIVERSE_CAP: usize = 12;
pub const FUNCTION_CAP: usize = 64;

/// Where the operators of a structure come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "family")]
pub enum OpSource {
    Family(FuzzyFamily),
    InducedFromOrder,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FuzzyNegation {
    Grade(GradeNegation),
    /// Explicit map by function index.
    Map(Vec<usize>),
}

/// A finite set of membership functions closed under its operators and negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyStructure {
    labels: Vec<String>,
    functions: Vec<MembershipFn>,
    source: OpSource,
    negation: FuzzyNegation,
    meet: Vec<usize>,
    join: Vec<usize>,
    neg: Vec<usize>,
}

pub(crate) fn check_functions(labels: &[String], fns: &[MembershipFn], cap: usize) -> Result<()> {
    if labels.len() != fns.len() {
        return Err(Error::PartialMap { expected: fns.len(), got: labels.len() });
    }
    if fns.len() > cap {
        return Err(Error::SizeCap { n: fns.len(), cap });
    }
    if let Some(first) = fns.first() {
        if first.len() > UNIVERSE_CAP {
            return Err(Error::UniverseTooLarge { size: first.len(), cap: UNIVERSE_CAP });
        }
        if fns.iter().any(|f| f.universe() != first.universe()) {
            return Err(Error::UniverseMismatch);
        }
    }
    let mut seen = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if seen.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

fn lookup(index: &HashMap<&MembershipFn, usize>, f: &MembershipFn) -> Option<usize> {
    index.get(f).copied()
}

impl FuzzyStructure {
    /// Operators evaluated pointwise by `fam`; the set must be closed under them and the negation.
    pub fn from_family(labels: Vec<String>, fns: Vec<MembershipFn>, fam: FuzzyFamily, negation: FuzzyNegation) -> Result<Self> {
        check_functions(&labels, &fns, FUNCTION_CAP)?;
        let index: HashMap<&MembershipFn, usize> = fns.iter().enumerate().map(|(i, f)| (f, i)).collect();
        if index.len() != fns.len() {
            return Err(Error::Schema("membership functions must be pairwise distinct".into()));
        }
        let k = fns.len();
        let mut meet = vec![0; k * k];
        let mut join = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                let m = fns[i].zip_with(&fns[j], |a, b| fam.meet(a, b))?;
                let v = fns[i].zip_with(&fns[j], |a, b| fam.join(a, b))?;
                meet[i * k + j] = lookup(&index, &m)
                    .ok_or_else(|| Error::NotClosed(format!("{} ∧ {} leaves the set", labels[i], labels[j])))?;
                join[i * k + j] = lookup(&index, &v)
                    .ok_or_else(|| Error::NotClosed(format!("{} ∨ {} leaves the set", labels[i], labels[j])))?;
            }
        }
        let neg = negation_table(&labels, &fns, &index, &negation)?;
        Ok(FuzzyStructure { labels, functions: fns, source: OpSource::Family(fam), negation, meet, join, neg })
    }

    /// Operators taken from a lattice on the functions; used by the induced construction.
    pub(crate) fn from_lattice(
        labels: Vec<String>,
        fns: Vec<MembershipFn>,
        lattice: &Lattice,
        negation: FuzzyNegation,
    ) -> Result<Self> {
        let index: HashMap<&MembershipFn, usize> = fns.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let neg = negation_table(&labels, &fns, &index, &negation)?;
        Ok(FuzzyStructure {
            labels,
            functions: fns,
            source: OpSource::InducedFromOrder,
            negation,
            meet: lattice.meet_table().to_vec(),
            join: lattice.join_table().to_vec(),
            neg,
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn functions(&self) -> &[MembershipFn] {
        &self.functions
    }

    pub fn function(&self, i: usize) -> &MembershipFn {
        &self.functions[i]
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    pub fn universe(&self) -> &[String] {
        self.functions.first().map(|f| f.universe()).unwrap_or(&[])
    }

    pub fn source(&self) -> OpSource {
        self.source
    }

    pub fn negation(&self) -> &FuzzyNegation {
        &self.negation
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    pub fn negate(&self, i: usize) -> usize {
        self.neg[i]
    }

    pub fn index_of(&self, f: &MembershipFn) -> Option<usize> {
        self.functions.iter().position(|g| g == f)
    }

    /// The pointwise order on the function set, required to be a lattice.
    pub fn lattice(&self) -> Result<Lattice> {
        Lattice::from_poset(pointwise_order_labeled(self.labels.clone(), &self.functions)?)
    }

    /// `m ∨ m = m` and `m ∧ m = m` for every member.
    pub fn join_idempotent(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.join(i, i) != i)
    }

    pub fn meet_idempotent(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.meet(i, i) != i)
    }

    /// Bounds used by excluded middle and non-contradiction. Family structures
    /// compare against the constant functions; induced ones against the lattice bounds.
    fn bound_functions(&self) -> Result<(MembershipFn, MembershipFn)> {
        match self.source {
            OpSource::Family(_) => {
                let u = self.universe().to_vec();
                Ok((MembershipFn::constant(u.clone(), Grade::zero()), MembershipFn::constant(u, Grade::one())))
            }
            OpSource::InducedFromOrder => {
                let l = self.lattice()?;
                let (b, t) = l.bounds()?;
                Ok((self.functions[b].clone(), self.functions[t].clone()))
            }
        }
    }

    /// First member with `m ∨ ¬m` different from the top.
    pub fn excluded_middle(&self) -> Result<Option<usize>> {
        let (_, top) = self.bound_functions()?;
        Ok((0..self.len()).find(|&i| self.functions[self.join(i, self.negate(i))] != top))
    }

    /// First member with `m ∧ ¬m` different from the bottom.
    pub fn non_contradiction(&self) -> Result<Option<usize>> {
        let (bot, _) = self.bound_functions()?;
        Ok((0..self.len()).find(|&i| self.functions[self.meet(i, self.negate(i))] != bot))
    }

    /// First triple breaking `m ∧ (n ∨ p) = (m ∧ n) ∨ (m ∧ p)`.
    pub fn distributive(&self) -> Option<[usize; 3]> {
        let k = self.len();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }
}

fn negation_table(
    labels: &[String],
    fns: &[MembershipFn],
    index: &HashMap<&MembershipFn, usize>,
    negation: &FuzzyNegation,
) -> Result<Vec<usize>> {
    match negation {
        FuzzyNegation::Grade(g) => fns
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let n = f.try_map(|u| grade_negate(g, u))?;
                lookup(index, &n).ok_or_else(|| Error::NegationNotClosed(labels[i].clone()))
            })
            .collect(),
        FuzzyNegation::Map(m) => {
            if m.len() != fns.len() {
                return Err(Error::PartialMap { expected: fns.len(), got: m.len() });
            }
            if let Some(&bad) = m.iter().find(|&&j| j >= fns.len()) {
                return Err(Error::OutOfRange(format!("negation index {bad}")));
            }
            Ok(m.clone())
        }
    }
}

/// Every indicator function on `universe`, min/max operators and standard negation.
pub fn crisp_logic(universe: &[&str]) -> Result<FuzzyStructure> {
    crisp_logic_with_cap(universe, 6)
}

/// As [`crisp_logic`] with an explicit cap on the number of universe points.
pub fn crisp_logic_with_cap(universe: &[&str], cap: usize) -> Result<FuzzyStructure> {
    if universe.len() > cap || universe.len() > UNIVERSE_CAP {
        return Err(Error::UniverseTooLarge { size: universe.len(), cap: cap.min(UNIVERSE_CAP) });
    }
    let u: Vec<String> = universe.iter().map(|s| s.to_string()).collect();
    let count = 1u64 << u.len();
    let fns: Vec<MembershipFn> = (0..count).map(|mask| MembershipFn::indicator(u.clone(), mask)).collect();
    let labels: Vec<String> = (0..count)
        .map(|mask| {
            let members: Vec<&str> = (0..u.len()).filter(|i| mask >> i & 1 == 1).map(|i| universe[i]).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    let cap = FUNCTION_CAP.max(fns.len());
    check_functions(&labels, &fns, cap)?;
    let index: HashMap<&MembershipFn, usize> = fns.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let k = fns.len();
    // Bitmask arithmetic: meet is AND, join is OR, negation is complement.
    let meet = (0..k * k).map(|x| (x / k) & (x % k)).collect();
    let join = (0..k * k).map(|x| (x / k) | (x % k)).collect();
    let negation = FuzzyNegation::Grade(GradeNegation::Standard);
    let neg = negation_table(&labels, &fns, &index, &negation)?;
    Ok(FuzzyStructure {
        labels,
        functions: fns,
        source: OpSource::Family(FuzzyFamily::MinMax),
        negation,
        meet,
        join,
        neg,
    })
}

/// A disagreement proving that an operator is not pointwise evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollisionWitness {
    /// `"join"` or `"meet"`.
    pub operator: &'static str,
    pub first: (usize, usize, usize),
    pub second: (usize, usize, usize),
    pub input: (Grade, Grade),
    pub outputs: (Grade, Grade),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointwiseResult {
    /// Partial grade tables observed for meet and join.
    Consistent {
        #[serde(serialize_with = "as_triples")]
        meet: BTreeMap<(Grade, Grade), Grade>,
        #[serde(serialize_with = "as_triples")]
        join: BTreeMap<(Grade, Grade), Grade>,
    },
    Collision(Box<CollisionWitness>),
}

fn as_triples<S: serde::Serializer>(t: &BTreeMap<(Grade, Grade), Grade>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(t.iter().map(|((a, b), v)| (a, b, v)))
}

impl PointwiseResult {
    pub fn is_consistent(&self) -> bool {
        matches!(self, PointwiseResult::Consistent { .. })
    }

    pub fn collision(&self) -> Option<&CollisionWitness> {
        match self {
            PointwiseResult::Collision(c) => Some(c),
            _ => None,
        }
    }
}

/// Scan function pairs in index order and universe points in order, join before meet.
/// Witness triples are `(f, g, point)`.
pub fn check_pointwise_consistency(s: &FuzzyStructure) -> PointwiseResult {
    type Seen = BTreeMap<(Grade, Grade), (Grade, (usize, usize, usize))>;
    let mut meet: Seen = BTreeMap::new();
    let mut join: Seen = BTreeMap::new();
    let k = s.len();
    let points = s.universe().len();
    for i in 0..k {
        for j in 0..k {
            let fj = s.function(s.join(i, j));
            let fm = s.function(s.meet(i, j));
            for x in 0..points {
                let input = (s.function(i).grade(x).clone(), s.function(j).grade(x).clone());
                for (name, table, out) in [("join", &mut join, fj.grade(x)), ("meet", &mut meet, fm.grade(x))] {
                    match table.get(&input) {
                        Some((prev, at)) if prev != out => {
                            return PointwiseResult::Collision(Box::new(CollisionWitness {
                                operator: name,
                                first: *at,
                                second: (i, j, x),
                                input,
                                outputs: (prev.clone(), out.clone()),
                            }));
                        }
                        Some(_) => {}
                        None => {
                            table.insert(input.clone(), (out.clone(), (i, j, x)));
                        }
                    }
                }
            }
        }
    }
    let strip = |t: Seen| t.into_iter().map(|(k, (v, _))| (k, v)).collect();
    PointwiseResult::Consistent { meet: strip(meet), join: strip(join) }
}
