//! Named lattices and negation maps used throughout tests, the CLI and the bindings.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::negation::UnaryMap;
use crate::order::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedLattice {
    /// Single element.
    L1,
    /// `0 < 1`.
    L2,
    /// `0 < n < 1`.
    L3,
    /// Four-element diamond `{0, a, b, 1}`.
    M2,
    /// Pentagon `{0, a, b, p, 1}` with `a < b`.
    N5,
    /// Diamond with three atoms `{0, p, q, r, 1}`.
    M3,
    /// Eight-element Boolean lattice on atoms `a, b, c`.
    Cube,
    /// Hexagon `0 < p < q⊥ < 1`, `0 < q < p⊥ < 1`.
    O6,
    /// Hexagon with chains `0 < a < c < 1` and `0 < b < d < 1`.
    O6Chains,
    /// Two three-chains `x < y < z` and `z⊥ < y⊥ < x⊥` sharing only the bounds.
    O8,
    /// Four atoms `a, a⊥, b, b⊥` between the bounds.
    MO2,
    /// Diamond `{0, n, b, 1}`.
    BN4,
    /// `0 < x < {a, b} < y < 1`.
    PaddedDiamond,
    /// `{0, m, n, p, q, 1}` with `m < p`, `n < p`, `n < q`.
    Zigzag,
}

impl NamedLattice {
    pub const ALL: [NamedLattice; 14] = [
        NamedLattice::L1,
        NamedLattice::L2,
        NamedLattice::L3,
        NamedLattice::M2,
        NamedLattice::N5,
        NamedLattice::M3,
        NamedLattice::Cube,
        NamedLattice::O6,
        NamedLattice::O6Chains,
        NamedLattice::O8,
        NamedLattice::MO2,
        NamedLattice::BN4,
        NamedLattice::PaddedDiamond,
        NamedLattice::Zigzag,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedLattice::L1 => "l1",
            NamedLattice::L2 => "l2",
            NamedLattice::L3 => "l3",
            NamedLattice::M2 => "m2",
            NamedLattice::N5 => "n5",
            NamedLattice::M3 => "m3",
            NamedLattice::Cube => "cube",
            NamedLattice::O6 => "o6",
            NamedLattice::O6Chains => "o6-chains",
            NamedLattice::O8 => "o8",
            NamedLattice::MO2 => "mo2",
            NamedLattice::BN4 => "bn4",
            NamedLattice::PaddedDiamond => "padded-diamond",
            NamedLattice::Zigzag => "zigzag",
        }
    }
}

impl FromStr for NamedLattice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        NamedLattice::ALL
            .into_iter()
            .find(|l| l.name() == key)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

fn build(labels: &[&str], covers: &[(&str, &str)]) -> Lattice {
    Lattice::from_covers(labels, covers).expect("fixture lattice")
}

/// A chain on the given labels, bottom first.
pub fn chain(labels: &[&str]) -> Lattice {
    let covers: Vec<(&str, &str)> = labels.windows(2).map(|w| (w[0], w[1])).collect();
    build(labels, &covers)
}

/// The Boolean lattice of subsets of `k` atoms, elements indexed by bitmask.
pub fn boolean_lattice(k: usize) -> Lattice {
    let n = 1usize << k;
    let labels: Vec<String> = (0..n)
        .map(|m| {
            if m == 0 {
                "0".to_string()
            } else {
                (0..k).filter(|b| m >> b & 1 == 1).map(|b| ((b'a' + b as u8) as char).to_string()).collect()
            }
        })
        .collect();
    let poset = Poset::from_fn(labels, |i, j| i & j == i).expect("subset order");
    Lattice::from_poset(poset).expect("subset lattice")
}

pub fn named_lattice(which: NamedLattice) -> Lattice {
    match which {
        NamedLattice::L1 => build(&["0"], &[]),
        NamedLattice::L2 => chain(&["0", "1"]),
        NamedLattice::L3 => chain(&["0", "n", "1"]),
        NamedLattice::M2 => build(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]),
        NamedLattice::N5 => build(
            &["0", "a", "b", "p", "1"],
            &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "p"), ("p", "1")],
        ),
        NamedLattice::M3 => build(
            &["0", "p", "q", "r", "1"],
            &[("0", "p"), ("0", "q"), ("0", "r"), ("p", "1"), ("q", "1"), ("r", "1")],
        ),
        NamedLattice::Cube => build(
            &["0", "a", "b", "c", "d", "e", "f", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("0", "c"),
                ("a", "d"),
                ("b", "d"),
                ("a", "e"),
                ("c", "e"),
                ("b", "f"),
                ("c", "f"),
                ("d", "1"),
                ("e", "1"),
                ("f", "1"),
            ],
        ),
        NamedLattice::O6 => build(
            &["0", "p", "q", "p⊥", "q⊥", "1"],
            &[("0", "p"), ("0", "q"), ("p", "q⊥"), ("q", "p⊥"), ("p⊥", "1"), ("q⊥", "1")],
        ),
        NamedLattice::O6Chains => build(
            &["0", "a", "b", "c", "d", "1"],
            &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "d"), ("d", "1")],
        ),
        NamedLattice::O8 => build(
            &["0", "x", "y", "z", "z⊥", "y⊥", "x⊥", "1"],
            &[
                ("0", "x"),
                ("x", "y"),
                ("y", "z"),
                ("z", "1"),
                ("0", "z⊥"),
                ("z⊥", "y⊥"),
                ("y⊥", "x⊥"),
                ("x⊥", "1"),
            ],
        ),
        NamedLattice::MO2 => build(
            &["0", "a", "a⊥", "b", "b⊥", "1"],
            &[
                ("0", "a"),
                ("0", "a⊥"),
                ("0", "b"),
                ("0", "b⊥"),
                ("a", "1"),
                ("a⊥", "1"),
                ("b", "1"),
                ("b⊥", "1"),
            ],
        ),
        NamedLattice::BN4 => build(&["0", "n", "b", "1"], &[("0", "n"), ("0", "b"), ("n", "1"), ("b", "1")]),
        NamedLattice::PaddedDiamond => build(
            &["0", "x", "a", "b", "y", "1"],
            &[("0", "x"), ("x", "a"), ("x", "b"), ("a", "y"), ("b", "y"), ("y", "1")],
        ),
        NamedLattice::Zigzag => build(
            &["0", "m", "n", "p", "q", "1"],
            &[("0", "m"), ("0", "n"), ("m", "p"), ("n", "p"), ("n", "q"), ("p", "1"), ("q", "1")],
        ),
    }
}

/// A poset where two minimal elements share only an upper bound.
pub fn vee_poset() -> Poset {
    Poset::from_covers(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).expect("fixture poset")
}

/// A bounded poset where `{a, b}` has two incomparable minimal upper bounds `c, d`.
pub fn bowtie_poset() -> Poset {
    Poset::from_covers(
        &["0", "a", "b", "c", "d", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "1"),
            ("d", "1"),
        ],
    )
    .expect("fixture poset")
}

/// The canonical orthocomplement of the named ortho lattices.
pub fn canonical_perp(which: NamedLattice) -> Option<UnaryMap> {
    let l = named_lattice(which);
    let pairs: &[(&str, &str)] = match which {
        NamedLattice::L1 => &[("0", "0")],
        NamedLattice::L2 => &[("0", "1")],
        NamedLattice::M2 => &[("0", "1"), ("a", "b")],
        NamedLattice::Cube => &[("0", "1"), ("a", "f"), ("b", "e"), ("c", "d")],
        NamedLattice::O6 => &[("0", "1"), ("p", "p⊥"), ("q", "q⊥")],
        NamedLattice::O6Chains => &[("0", "1"), ("a", "d"), ("b", "c")],
        NamedLattice::O8 => &[("0", "1"), ("x", "x⊥"), ("y", "y⊥"), ("z", "z⊥")],
        NamedLattice::MO2 => &[("0", "1"), ("a", "a⊥"), ("b", "b⊥")],
        NamedLattice::BN4 => &[("0", "1"), ("n", "b")],
        _ => return None,
    };
    Some(UnaryMap::involution_from_pairs(&l, pairs).expect("fixture map"))
}

/// A lattice together with a unary map, tagged with a short descriptive name.
#[derive(Debug, Clone)]
pub struct NegationFixture {
    pub name: &'static str,
    pub lattice: Lattice,
    pub map: UnaryMap,
}

fn fixture(name: &'static str, lattice: Lattice, pairs: &[(&str, &str)]) -> NegationFixture {
    let map = UnaryMap::from_pairs(&lattice, pairs).expect("fixture map");
    NegationFixture { name, lattice, map }
}

/// Small lattices with candidate negations, including several that fail to be negations.
pub fn negation_fixtures() -> Vec<NegationFixture> {
    let l2 = named_lattice(NamedLattice::L2);
    let l3 = chain(&["0", "a", "1"]);
    let m2 = named_lattice(NamedLattice::M2);
    let bn4 = named_lattice(NamedLattice::BN4);
    let o6 = named_lattice(NamedLattice::O6Chains);
    let padded = named_lattice(NamedLattice::PaddedDiamond);
    let zig = build(
        &["0", "a", "b", "c", "d", "1"],
        &[("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
    );
    let cube = named_lattice(NamedLattice::Cube);
    vec![
        fixture("l3-discrete", l3.clone(), &[("0", "1"), ("a", "0"), ("1", "0")]),
        fixture("l3-dual-discrete", l3.clone(), &[("0", "1"), ("a", "1"), ("1", "0")]),
        fixture("l2-swap", l2, &[("0", "1"), ("1", "0")]),
        fixture("l3-top-fixed", l3.clone(), &[("1", "1"), ("a", "a"), ("0", "1")]),
        fixture("l3-rotate-down", l3.clone(), &[("1", "a"), ("a", "0"), ("0", "1")]),
        fixture("l3-rotate-up", l3.clone(), &[("a", "1"), ("0", "a"), ("1", "0")]),
        fixture(
            "o6-crossed",
            o6.clone(),
            &[("0", "1"), ("1", "0"), ("a", "b"), ("b", "a"), ("c", "d"), ("d", "c")],
        ),
        fixture("l3-collapse", l3.clone(), &[("1", "0"), ("a", "0"), ("0", "a")]),
        fixture("l3-constant", l3.clone(), &[("1", "a"), ("a", "a"), ("0", "a")]),
        fixture("l3-minimal", l3.clone(), &[("1", "a"), ("a", "1"), ("0", "1")]),
        fixture("l3-kleene", l3, &[("0", "1"), ("a", "a"), ("1", "0")]),
        fixture("m2-fuzzy", m2.clone(), &[("1", "0"), ("a", "0"), ("0", "1"), ("b", "b")]),
        fixture("m2-swap", m2, &[("0", "1"), ("1", "0"), ("a", "b"), ("b", "a")]),
        fixture("bn4", bn4, &[("0", "1"), ("1", "0"), ("n", "n"), ("b", "b")]),
        fixture(
            "padded-fixed",
            padded.clone(),
            &[("0", "1"), ("1", "0"), ("x", "y"), ("y", "x"), ("a", "a"), ("b", "b")],
        ),
        fixture(
            "padded-swap",
            padded,
            &[("0", "1"), ("1", "0"), ("x", "y"), ("y", "x"), ("a", "b"), ("b", "a")],
        ),
        fixture(
            "o6-parallel",
            o6.clone(),
            &[("0", "1"), ("1", "0"), ("a", "c"), ("c", "a"), ("b", "d"), ("d", "b")],
        ),
        fixture(
            "o6-ortho",
            o6,
            &[("0", "1"), ("1", "0"), ("a", "d"), ("d", "a"), ("b", "c"), ("c", "b")],
        ),
        fixture(
            "zigzag-swap-pairs",
            zig.clone(),
            &[("0", "1"), ("1", "0"), ("a", "b"), ("b", "a"), ("c", "d"), ("d", "c")],
        ),
        fixture(
            "zigzag-kleene",
            zig,
            &[("0", "1"), ("1", "0"), ("b", "c"), ("c", "b"), ("a", "d"), ("d", "a")],
        ),
        fixture(
            "cube-adjacent",
            cube.clone(),
            &[("0", "1"), ("1", "0"), ("a", "d"), ("d", "a"), ("b", "e"), ("e", "b"), ("c", "f"), ("f", "c")],
        ),
        fixture(
            "cube-complement",
            cube,
            &[("0", "1"), ("1", "0"), ("a", "f"), ("f", "a"), ("b", "e"), ("e", "b"), ("c", "d"), ("d", "c")],
        ),
    ]
}

pub fn negation_fixture(name: &str) -> Result<NegationFixture> {
    negation_fixtures()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_named_lattices_build() {
        for w in NamedLattice::ALL {
            let l = named_lattice(w);
            assert!(l.bounds().is_ok(), "{w:?}");
            assert_eq!(w.name().parse::<NamedLattice>().unwrap(), w);
        }
    }

    #[test]
    fn boolean_lattice_sizes() {
        assert_eq!(boolean_lattice(0).len(), 1);
        assert_eq!(boolean_lattice(3).len(), 8);
        assert_eq!(boolean_lattice(4).len(), 16);
    }

    #[test]
    fn fixture_names_unique() {
        let f = negation_fixtures();
        let mut names: Vec<_> = f.iter().map(|f| f.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), f.len());
    }
}
