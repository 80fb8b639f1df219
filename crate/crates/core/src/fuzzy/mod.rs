//! Membership functions, pointwise operator families, the theorem harnesses
//! and the order-induced construction.

mod family;
pub mod fixtures;
pub mod harness;
mod induced;
mod membership;
mod structure;

pub use family::{apply_family, FuzzyFamily};
pub use harness::{
    brute_force_oracle, verify_idempotency_theorem, verify_minmax_boundary, verify_minmax_theorem,
    verify_negation_idempotency, GradeOps, GridTables, NegationIdempotencyReport, TheoremReport,
};
pub use induced::{induced_logic, InducedLogic, InducedNegation, InducedReport};
pub use membership::{grades_from_map, MembershipFn};
pub use structure::{
    check_pointwise_consistency, crisp_logic, crisp_logic_with_cap, CollisionWitness, FuzzyNegation, FuzzyStructure,
    OpSource, PointwiseResult, FUNCTION_CAP, UNIVERSE_CAP,
};
