//! Finite posets and lattices, complements and orthocomplements, negations,
//! implications, and fuzzy subset logics over exact rational grades.

pub mod census;
pub mod complement;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod fuzzy;
pub mod grade;
pub mod implication;
pub mod json;
pub mod lattice;
pub mod negation;
pub mod order;

pub use census::{census, enumerate_lattices, CanonicalLattice, CensusCounts};
pub use complement::{
    check_boolean_identities, classify_ortho, complement_class, complements, find_orthocomplementations,
    ComplementKind, OrthoFlags, OrthoMap,
};
pub use error::{BoundKind, Error, Result};
pub use grade::Grade;
pub use implication::{
    build_implication, builtin, builtin_logic, logic_class, validate_implication, BuiltinLogic, Implication,
    ImplicationKind, ImplicationTable, ImplicationVerdict, LogicClass, LogicStructure,
};
pub use json::StructureDocument;
pub use lattice::{find_sublattice, is_distributive, is_modular, verify_axioms, Lattice, Pattern, Verdict};
pub use negation::{classify_negation, grade_negate, GradeNegation, NegationClass, NegationFlag, UnaryMap};
pub use order::{pointwise_order, Poset};
