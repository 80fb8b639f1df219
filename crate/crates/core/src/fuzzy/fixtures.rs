//! Concrete membership functions for the worked constructions.
//!
//! Grades are chosen to realise the stated order shapes and negation pairings;
//! only the shapes and properties are prescribed, the particular values are ours.

use crate::error::Result;
use crate::fuzzy::{FuzzyFamily, FuzzyNegation, FuzzyStructure, MembershipFn};
use crate::grade::Grade;
use crate::negation::GradeNegation;

fn f(universe: &[&str], ratios: &[(i64, i64)]) -> MembershipFn {
    MembershipFn::from_ratios(universe, ratios).expect("fixture grades")
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Four functions on three points forming a diamond; the top is not the
/// constant one, and equal grade pairs at `x1` and `x3` get different joins.
pub fn diamond_functions() -> (Vec<String>, Vec<MembershipFn>) {
    let u = ["x1", "x2", "x3"];
    (
        labels(&["mA", "mB", "m1", "m0"]),
        vec![
            f(&u, &[(1, 5), (7, 10), (1, 5)]),
            f(&u, &[(4, 5), (3, 10), (4, 5)]),
            f(&u, &[(9, 10), (9, 10), (19, 20)]),
            f(&u, &[(1, 10), (1, 10), (1, 20)]),
        ],
    )
}

/// Six functions on two points ordered as a hexagon, closed under `1 - m`.
pub fn hexagon_functions() -> (Vec<String>, Vec<MembershipFn>) {
    let u = ["x1", "x2"];
    (
        labels(&["0", "p", "q", "¬p", "¬q", "1"]),
        vec![
            f(&u, &[(0, 1), (0, 1)]),
            f(&u, &[(1, 5), (3, 5)]),
            f(&u, &[(3, 5), (1, 5)]),
            f(&u, &[(4, 5), (2, 5)]),
            f(&u, &[(2, 5), (4, 5)]),
            f(&u, &[(1, 1), (1, 1)]),
        ],
    )
}

/// Eight functions on three points ordered as a cube, closed under `1 - m`.
pub fn cube_functions() -> (Vec<String>, Vec<MembershipFn>) {
    let u = ["x1", "x2", "x3"];
    (
        labels(&["m0", "a", "b", "c", "¬c", "¬b", "¬a", "m1"]),
        vec![
            f(&u, &[(1, 20), (1, 20), (1, 20)]),
            f(&u, &[(3, 5), (1, 10), (1, 10)]),
            f(&u, &[(1, 10), (3, 5), (1, 10)]),
            f(&u, &[(1, 10), (1, 10), (3, 5)]),
            f(&u, &[(9, 10), (9, 10), (2, 5)]),
            f(&u, &[(9, 10), (2, 5), (9, 10)]),
            f(&u, &[(2, 5), (9, 10), (9, 10)]),
            f(&u, &[(19, 20), (19, 20), (19, 20)]),
        ],
    )
}

/// Every function from `universe` into `grid`, ordered by mixed-radix code.
pub fn grid_functions(universe: &[&str], grid: &[Grade]) -> (Vec<String>, Vec<MembershipFn>) {
    let u: Vec<String> = universe.iter().map(|s| s.to_string()).collect();
    let k = grid.len();
    let total = k.pow(u.len() as u32);
    let mut names = Vec::with_capacity(total);
    let mut fns = Vec::with_capacity(total);
    for code in 0..total {
        let digits: Vec<usize> = (0..u.len()).map(|i| code / k.pow(i as u32) % k).collect();
        let grades: Vec<Grade> = digits.iter().map(|&d| grid[d].clone()).collect();
        names.push(format!("({})", grades.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")));
        fns.push(MembershipFn::new(u.clone(), grades).expect("grid function"));
    }
    (names, fns)
}

/// All functions into `{0, 1/2, 1}` under a family with standard negation.
pub fn half_grid_structure(universe: &[&str], fam: FuzzyFamily) -> Result<FuzzyStructure> {
    let grid = vec![Grade::zero(), Grade::ratio(1, 2), Grade::one()];
    let (names, fns) = grid_functions(universe, &grid);
    FuzzyStructure::from_family(names, fns, fam, FuzzyNegation::Grade(GradeNegation::Standard))
}

/// `{1/4, 3/4}^3` with the constant functions 0 and 1, under min and max.
pub fn lifted_cube_structure() -> Result<FuzzyStructure> {
    let u = ["x", "y", "z"];
    let grid = vec![Grade::ratio(1, 4), Grade::ratio(3, 4)];
    let (mut names, mut fns) = grid_functions(&u, &grid);
    names.insert(0, "0".into());
    fns.insert(0, f(&u, &[(0, 1), (0, 1), (0, 1)]));
    names.push("1".into());
    fns.push(f(&u, &[(1, 1), (1, 1), (1, 1)]));
    FuzzyStructure::from_family(names, fns, FuzzyFamily::MinMax, FuzzyNegation::Grade(GradeNegation::Standard))
}
