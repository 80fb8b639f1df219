use serde::Serialize;

use crate::complement::{classify_ortho, complement_class, ComplementKind, OrthoFlags};
use crate::error::{Error, Result};
use crate::fuzzy::structure::{check_functions, FUNCTION_CAP};
use crate::fuzzy::{check_pointwise_consistency, FuzzyNegation, FuzzyStructure, MembershipFn, PointwiseResult};
use crate::lattice::{is_distributive, is_modular, Lattice};
use crate::negation::{classify_negation, GradeNegation, NegationClass, NegationFlag, UnaryMap};
use crate::order::pointwise_order_labeled;

/// How the negation of an induced structure is supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InducedNegation {
    /// Pointwise grade negation; the result must lie in the set.
    Grade(GradeNegation),
    /// Explicit `label -> label` pairs.
    Labels(Vec<(String, String)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedReport {
    pub modular: bool,
    pub distributive: bool,
    pub complement_kind: ComplementKind,
    pub ortho: Option<OrthoFlags>,
    pub negation: NegationClass,
    pub join_idempotent: bool,
    pub meet_idempotent: bool,
    pub excluded_middle: bool,
    pub non_contradiction: bool,
    pub pointwise: PointwiseResult,
}

impl InducedReport {
    pub fn boolean(&self) -> bool {
        self.ortho.is_some_and(|f| f.boolean)
    }

    pub fn orthocomplemented(&self) -> bool {
        self.ortho.is_some()
    }

    /// Idempotency, excluded middle and non-contradiction.
    pub fn crucial_properties(&self) -> bool {
        self.join_idempotent && self.meet_idempotent && self.excluded_middle && self.non_contradiction
    }

    pub fn class_name(&self) -> &'static str {
        if self.boolean() {
            "Boolean"
        } else if self.ortho.is_some_and(|f| f.modular_ortho) {
            "modular orthocomplemented"
        } else if self.ortho.is_some_and(|f| f.orthomodular) {
            "orthomodular"
        } else if self.orthocomplemented() {
            "orthocomplemented"
        } else {
            "lattice"
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedLogic {
    pub structure: FuzzyStructure,
    pub lattice: Lattice,
    pub report: InducedReport,
}

/// Order the functions pointwise, take meet and join from that order, and classify.
pub fn induced_logic(labels: Vec<String>, fns: Vec<MembershipFn>, negation: InducedNegation) -> Result<InducedLogic> {
    check_functions(&labels, &fns, FUNCTION_CAP)?;
    let poset = pointwise_order_labeled(labels.clone(), &fns)?;
    let lattice = Lattice::from_poset(poset)?;
    let neg = match negation {
        InducedNegation::Grade(g) => FuzzyNegation::Grade(g),
        InducedNegation::Labels(pairs) => FuzzyNegation::Map(UnaryMap::from_pairs(&lattice, &pairs)?.as_slice().to_vec()),
    };
    let structure = FuzzyStructure::from_lattice(labels, fns, &lattice, neg)?;
    let map = UnaryMap::new(&lattice, (0..structure.len()).map(|i| structure.negate(i)).collect())?;
    let negation = classify_negation(&lattice, &map)?;
    let ortho = if negation.has(NegationFlag::Ortho) { Some(classify_ortho(&lattice, &map)?) } else { None };
    let report = InducedReport {
        modular: is_modular(&lattice)?.holds,
        distributive: is_distributive(&lattice)?.holds,
        complement_kind: complement_class(&lattice)?.kind,
        ortho,
        join_idempotent: structure.join_idempotent().is_none(),
        meet_idempotent: structure.meet_idempotent().is_none(),
        excluded_middle: structure.excluded_middle()?.is_none(),
        non_contradiction: structure.non_contradiction()?.is_none(),
        pointwise: check_pointwise_consistency(&structure),
        negation,
    };
    if !(report.join_idempotent && report.meet_idempotent) {
        return Err(Error::InternalDisagreement("induced operators are not idempotent".into()));
    }
    if report.orthocomplemented() && !(report.excluded_middle && report.non_contradiction) {
        return Err(Error::InternalDisagreement("ortho negation lost excluded middle or non-contradiction".into()));
    }
    Ok(InducedLogic { structure, lattice, report })
}
