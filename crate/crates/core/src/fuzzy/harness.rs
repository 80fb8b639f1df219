//! Grade-table harnesses for the boundary, idempotency and min-max theorems,
//! and the fixed-point harness for negations.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyFamily, FuzzyNegation, FuzzyStructure, OpSource};
use crate::grade::Grade;

/// Grade-level meet and join. `None` means the table is undefined at that input.
pub trait GradeOps {
    fn meet(&self, a: &Grade, b: &Grade) -> Option<Grade>;
    fn join(&self, a: &Grade, b: &Grade) -> Option<Grade>;
}

impl GradeOps for FuzzyFamily {
    fn meet(&self, a: &Grade, b: &Grade) -> Option<Grade> {
        Some(FuzzyFamily::meet(*self, a, b))
    }

    fn join(&self, a: &Grade, b: &Grade) -> Option<Grade> {
        Some(FuzzyFamily::join(*self, a, b))
    }
}

/// Explicit tables on a finite grid, indexed by grid position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridTables {
    pub grid: Vec<Grade>,
    pub meet: Vec<Grade>,
    pub join: Vec<Grade>,
}

impl GridTables {
    pub fn new(grid: Vec<Grade>, meet: Vec<Grade>, join: Vec<Grade>) -> Result<Self> {
        let k = grid.len();
        if meet.len() != k * k || join.len() != k * k {
            return Err(Error::PartialMap { expected: k * k, got: meet.len().min(join.len()) });
        }
        if grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Schema("grid must be strictly increasing".into()));
        }
        Ok(GridTables { grid, meet, join })
    }

    /// Tabulate a family on a grid.
    pub fn from_family(fam: FuzzyFamily, grid: &[Grade]) -> Result<Self> {
        let mut meet = Vec::new();
        let mut join = Vec::new();
        for a in grid {
            for b in grid {
                meet.push(fam.meet(a, b));
                join.push(fam.join(a, b));
            }
        }
        Self::new(grid.to_vec(), meet, join)
    }

    fn pos(&self, g: &Grade) -> Option<usize> {
        self.grid.binary_search(g).ok()
    }
}

impl GradeOps for GridTables {
    fn meet(&self, a: &Grade, b: &Grade) -> Option<Grade> {
        let k = self.grid.len();
        Some(self.meet[self.pos(a)? * k + self.pos(b)?].clone())
    }

    fn join(&self, a: &Grade, b: &Grade) -> Option<Grade> {
        let k = self.grid.len();
        Some(self.join[self.pos(a)? * k + self.pos(b)?].clone())
    }
}

/// A hypothesis or conclusion with its first counterexample on the grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub witness: Option<Vec<Grade>>,
}

impl Clause {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: &'static str,
    pub hypotheses: Vec<Clause>,
    pub conclusions: Vec<Clause>,
}

impl TheoremReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(Clause::holds)
    }

    pub fn conclusions_hold(&self) -> bool {
        self.conclusions.iter().all(Clause::holds)
    }

    /// The implication is never violated.
    pub fn consistent(&self) -> bool {
        !self.hypotheses_hold() || self.conclusions_hold()
    }

    pub fn failing_hypotheses(&self) -> Vec<&'static str> {
        self.hypotheses.iter().filter(|c| !c.holds()).map(|c| c.name).collect()
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.hypotheses.iter().chain(&self.conclusions).find(|c| c.name == name)
    }
}

// An undefined composite counts as a failure of the clause.
fn eq(a: Option<Grade>, b: Option<Grade>) -> bool {
    matches!((a, b), (Some(x), Some(y)) if x == y)
}

fn le(a: Option<Grade>, b: Option<Grade>) -> bool {
    matches!((a, b), (Some(x), Some(y)) if x <= y)
}

fn scan1(grid: &[Grade], bad: impl Fn(&Grade) -> bool) -> Option<Vec<Grade>> {
    grid.iter().find(|m| bad(m)).map(|m| vec![m.clone()])
}

fn scan2(grid: &[Grade], bad: impl Fn(&Grade, &Grade) -> bool) -> Option<Vec<Grade>> {
    for m in grid {
        for n in grid {
            if bad(m, n) {
                return Some(vec![m.clone(), n.clone()]);
            }
        }
    }
    None
}

fn scan3(grid: &[Grade], bad: impl Fn(&Grade, &Grade, &Grade) -> bool) -> Option<Vec<Grade>> {
    for m in grid {
        for n in grid {
            for p in grid {
                if bad(m, n, p) {
                    return Some(vec![m.clone(), n.clone(), p.clone()]);
                }
            }
        }
    }
    None
}

fn pointwise() -> Clause {
    // Grade tables are pointwise by construction.
    Clause { name: "pointwise_evaluated", witness: None }
}

fn identities(ops: &dyn GradeOps, grid: &[Grade]) -> [Clause; 2] {
    let (z, o) = (Grade::zero(), Grade::one());
    [
        Clause {
            name: "disjunctive_identity",
            witness: scan1(grid, |m| !eq(ops.join(m, &z), Some(m.clone())) || !eq(ops.join(&z, m), Some(m.clone()))),
        },
        Clause {
            name: "conjunctive_identity",
            witness: scan1(grid, |m| !eq(ops.meet(m, &o), Some(m.clone())) || !eq(ops.meet(&o, m), Some(m.clone()))),
        },
    ]
}

fn isotone(ops: &dyn GradeOps, grid: &[Grade]) -> [Clause; 2] {
    [
        Clause {
            name: "disjunctive_isotone",
            witness: scan3(grid, |m, n, p| {
                n <= p && (!le(ops.join(m, n), ops.join(m, p)) || !le(ops.join(n, m), ops.join(p, m)))
            }),
        },
        Clause {
            name: "conjunctive_isotone",
            witness: scan3(grid, |m, n, p| {
                n <= p && (!le(ops.meet(m, n), ops.meet(m, p)) || !le(ops.meet(n, m), ops.meet(p, m)))
            }),
        },
    ]
}

fn idempotent(ops: &dyn GradeOps, grid: &[Grade]) -> [Clause; 2] {
    [
        Clause { name: "disjunctive_idempotent", witness: scan1(grid, |m| !eq(ops.join(m, m), Some(m.clone()))) },
        Clause { name: "conjunctive_idempotent", witness: scan1(grid, |m| !eq(ops.meet(m, m), Some(m.clone()))) },
    ]
}

/// Identities plus isotonicity bound the operators by min and max.
pub fn verify_minmax_boundary(ops: &dyn GradeOps, grid: &[Grade]) -> TheoremReport {
    let mut hypotheses = vec![pointwise()];
    hypotheses.extend(identities(ops, grid));
    hypotheses.extend(isotone(ops, grid));
    let conclusions = vec![
        Clause { name: "meet_below_min", witness: scan2(grid, |m, n| !le(ops.meet(m, n), Some(m.min(n).clone()))) },
        Clause { name: "join_above_max", witness: scan2(grid, |m, n| !le(Some(m.max(n).clone()), ops.join(m, n))) },
    ];
    TheoremReport { theorem: "minmax_boundary", hypotheses, conclusions }
}

/// Boundary conditions, identities and both distributive laws force idempotency.
pub fn verify_idempotency_theorem(ops: &dyn GradeOps, grid: &[Grade]) -> TheoremReport {
    let (z, o) = (Grade::zero(), Grade::one());
    let mut hypotheses = vec![
        pointwise(),
        Clause {
            name: "boundary_condition",
            witness: if !eq(ops.meet(&z, &z), Some(z.clone())) {
                Some(vec![z.clone()])
            } else if !eq(ops.join(&o, &o), Some(o.clone())) {
                Some(vec![o.clone()])
            } else {
                None
            },
        },
    ];
    hypotheses.extend(identities(ops, grid));
    let m = |a: &Grade, b: Option<Grade>| b.and_then(|b| ops.meet(a, &b));
    let j = |a: &Grade, b: Option<Grade>| b.and_then(|b| ops.join(a, &b));
    let mo = |a: Option<Grade>, b: Option<Grade>| a.zip(b).and_then(|(a, b)| ops.meet(&a, &b));
    let jo = |a: Option<Grade>, b: Option<Grade>| a.zip(b).and_then(|(a, b)| ops.join(&a, &b));
    hypotheses.push(Clause {
        name: "disjunctive_distributive",
        witness: scan3(grid, |x, y, w| !eq(m(x, ops.join(y, w)), jo(ops.meet(x, y), ops.meet(x, w)))),
    });
    hypotheses.push(Clause {
        name: "conjunctive_distributive",
        witness: scan3(grid, |x, y, w| !eq(j(x, ops.meet(y, w)), mo(ops.join(x, y), ops.join(x, w)))),
    });
    let conclusions = idempotent(ops, grid).to_vec();
    TheoremReport { theorem: "idempotency", hypotheses, conclusions }
}

/// Identities, weak idempotency and isotonicity force the min and max operators.
pub fn verify_minmax_theorem(ops: &dyn GradeOps, grid: &[Grade]) -> TheoremReport {
    let mut hypotheses = vec![pointwise()];
    hypotheses.extend(identities(ops, grid));
    hypotheses.push(Clause {
        name: "weak_idempotent",
        witness: scan1(grid, |m| !le(Some(m.clone()), ops.meet(m, m)) || !le(ops.join(m, m), Some(m.clone()))),
    });
    hypotheses.extend(isotone(ops, grid));
    let conclusions = vec![
        Clause { name: "join_is_max", witness: scan2(grid, |m, n| !eq(ops.join(m, n), Some(m.max(n).clone()))) },
        Clause { name: "meet_is_min", witness: scan2(grid, |m, n| !eq(ops.meet(m, n), Some(m.min(n).clone()))) },
    ];
    TheoremReport { theorem: "minmax", hypotheses, conclusions }
}

/// `{0, 1/2, 1}`.
pub fn three_grid() -> Vec<Grade> {
    vec![Grade::zero(), Grade::ratio(1, 2), Grade::one()]
}

/// `{0, 1/4, 1/2, 3/4, 1}`.
pub fn five_grid() -> Vec<Grade> {
    (0..=4).map(|i| Grade::ratio(i, 4)).collect()
}

/// Every table pair on `{0, 1/2, 1}` with the identity rows and columns fixed
/// (`x ∧ 1 = 1 ∧ x = x`, `x ∨ 0 = 0 ∨ x = x`); the four remaining cells of each
/// table range over the grid.
pub fn brute_force_tables() -> impl Iterator<Item = GridTables> {
    let grid = three_grid();
    let free_cells = |code: usize| -> [usize; 4] { [code % 3, code / 3 % 3, code / 9 % 3, code / 27 % 3] };
    (0..81 * 81).map(move |code| {
        let (mc, jc) = (free_cells(code / 81), free_cells(code % 81));
        let mut meet = vec![0usize; 9];
        let mut join = vec![0usize; 9];
        for a in 0..3 {
            for b in 0..3 {
                meet[a * 3 + b] = if b == 2 {
                    a
                } else if a == 2 {
                    b
                } else {
                    mc[a * 2 + b]
                };
                join[a * 3 + b] = if b == 0 {
                    a
                } else if a == 0 {
                    b
                } else {
                    jc[(a - 1) * 2 + (b - 1)]
                };
            }
        }
        let g = |v: Vec<usize>| v.into_iter().map(|i| grid[i].clone()).collect();
        GridTables::new(grid.clone(), g(meet), g(join)).expect("well formed")
    })
}

/// Outcome of the exhaustive search on the three-grade grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteForceReport {
    pub candidates: usize,
    /// Table pairs satisfying every min-max hypothesis.
    pub minmax_survivors: Vec<GridTables>,
    /// Table pairs satisfying the idempotency hypotheses.
    pub idempotency_hypothesis_count: usize,
    /// Of those, pairs that are not idempotent.
    pub idempotency_violations: usize,
    /// Table pairs satisfying the boundary hypotheses.
    pub boundary_hypothesis_count: usize,
    pub boundary_violations: usize,
}

pub fn brute_force_oracle() -> BruteForceReport {
    let grid = three_grid();
    let mut report = BruteForceReport {
        candidates: 0,
        minmax_survivors: Vec::new(),
        idempotency_hypothesis_count: 0,
        idempotency_violations: 0,
        boundary_hypothesis_count: 0,
        boundary_violations: 0,
    };
    for t in brute_force_tables() {
        report.candidates += 1;
        let mm = verify_minmax_theorem(&t, &grid);
        if mm.hypotheses_hold() {
            report.minmax_survivors.push(t.clone());
        }
        let id = verify_idempotency_theorem(&t, &grid);
        if id.hypotheses_hold() {
            report.idempotency_hypothesis_count += 1;
            if !id.conclusions_hold() {
                report.idempotency_violations += 1;
            }
        }
        let b = verify_minmax_boundary(&t, &grid);
        if b.hypotheses_hold() {
            report.boundary_hypothesis_count += 1;
            if !b.conclusions_hold() {
                report.boundary_violations += 1;
            }
        }
    }
    report
}

/// Outcome of the fixed-point search on a pointwise structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegationIdempotencyReport {
    /// `(function, point)` with `¬m(p) = m(p)` strictly between 0 and 1.
    pub fixed_point: Option<(usize, usize)>,
    pub excluded_middle: bool,
    pub non_contradiction: bool,
    pub join_idempotent: bool,
    pub meet_idempotent: bool,
    /// Human readable chain of equalities leading to the contradiction.
    pub witness_chain: Vec<String>,
}

impl NegationIdempotencyReport {
    /// The fixed point exists together with excluded middle or non-contradiction.
    pub fn applies(&self) -> bool {
        self.fixed_point.is_some() && (self.excluded_middle || self.non_contradiction)
    }

    pub fn consistent(&self) -> bool {
        self.fixed_point.is_none()
            || ((!self.excluded_middle || !self.join_idempotent) && (!self.non_contradiction || !self.meet_idempotent))
    }
}

pub fn verify_negation_idempotency(s: &FuzzyStructure) -> Result<NegationIdempotencyReport> {
    let fam = match s.source() {
        OpSource::Family(f) => f,
        OpSource::InducedFromOrder => {
            return Err(Error::Schema("fixed-point harness needs pointwise operators".into()));
        }
    };
    if let FuzzyNegation::Grade(g) = s.negation() {
        if !g.is_exact() {
            return Err(Error::Schema("fixed-point harness needs an exact negation".into()));
        }
    }
    let mut fixed_point = None;
    'outer: for i in 0..s.len() {
        let n = s.function(s.negate(i));
        for x in 0..s.universe().len() {
            let g = s.function(i).grade(x);
            if g.is_interior() && n.grade(x) == g {
                fixed_point = Some((i, x));
                break 'outer;
            }
        }
    }
    let excluded_middle = s.excluded_middle()?.is_none();
    let non_contradiction = s.non_contradiction()?.is_none();
    let join_idempotent = s.join_idempotent().is_none();
    let meet_idempotent = s.meet_idempotent().is_none();
    let mut witness_chain = Vec::new();
    if let Some((i, x)) = fixed_point {
        let g = s.function(i).grade(x);
        let point = &s.universe()[x];
        let label = &s.labels()[i];
        witness_chain.push(format!("¬{label}({point}) = {label}({point}) = {g}"));
        if excluded_middle {
            let v = fam.join(g, g);
            witness_chain.push(format!("1 = {label}({point}) ∨ ¬{label}({point}) = {g} ∨ {g} = {v} ≠ {g}"));
        }
        if non_contradiction {
            let v = fam.meet(g, g);
            witness_chain.push(format!("0 = {label}({point}) ∧ ¬{label}({point}) = {g} ∧ {g} = {v} ≠ {g}"));
        }
    }
    let report =
        NegationIdempotencyReport { fixed_point, excluded_middle, non_contradiction, join_idempotent, meet_idempotent, witness_chain };
    if !report.consistent() {
        return Err(Error::InternalDisagreement("fixed point with excluded middle yet idempotent".into()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_on_five_grid() {
        let g = five_grid();
        for fam in FuzzyFamily::ALL {
            let r = verify_minmax_boundary(&fam, &g);
            assert!(r.hypotheses_hold() && r.conclusions_hold(), "{fam:?}");
        }
        let r = verify_minmax_theorem(&FuzzyFamily::Lukasiewicz, &g);
        assert!(r.failing_hypotheses().contains(&"weak_idempotent"));
        assert!(verify_minmax_theorem(&FuzzyFamily::MinMax, &g).conclusions_hold());
    }

    #[test]
    fn distributivity_fails_for_non_idempotent_families() {
        let g = three_grid();
        for fam in [FuzzyFamily::Lukasiewicz, FuzzyFamily::ProductProbSum] {
            let r = verify_idempotency_theorem(&fam, &g);
            assert!(!r.conclusions_hold());
            assert!(!r.hypotheses_hold());
            assert!(r.failing_hypotheses().iter().any(|h| h.ends_with("distributive")));
        }
        assert!(verify_idempotency_theorem(&FuzzyFamily::MinMax, &g).conclusions_hold());
    }

    #[test]
    fn brute_force_space_size() {
        assert_eq!(brute_force_tables().count(), 6561);
    }
}
