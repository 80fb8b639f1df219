//! Lattices with precomputed meet and join tables.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures::{named_lattice, NamedLattice};
use crate::order::Poset;

/// A finite lattice. The empty carrier is allowed and has no bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
}

impl Lattice {
    pub fn from_poset(poset: Poset) -> Result<Self> {
        if let Some((a, b, kind)) = poset.lattice_witness() {
            return Err(Error::NotALattice(poset.label(a).into(), poset.label(b).into(), kind));
        }
        let n = poset.len();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = poset.glb(&[a, b]).expect("checked");
                join[a * n + b] = poset.lub(&[a, b]).expect("checked");
            }
        }
        Ok(Lattice { poset, meet, join })
    }

    pub fn from_covers<S: AsRef<str>, T: AsRef<str>>(labels: &[S], covers: &[(T, T)]) -> Result<Self> {
        Self::from_poset(Poset::from_covers(labels, covers)?)
    }

    /// Assemble from tables without any checking. Only useful for probing
    /// the axiom verifier with corrupted operations.
    pub fn from_parts_unchecked(poset: Poset, meet: Vec<usize>, join: Vec<usize>) -> Self {
        Lattice { poset, meet, join }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        self.poset.label(i)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.poset.index_of(label)
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.poset.require(label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn bottom(&self) -> Option<usize> {
        self.poset.bottom()
    }

    pub fn top(&self) -> Option<usize> {
        self.poset.top()
    }

    /// `(bottom, top)`, or `Unbounded` for the empty lattice.
    pub fn bounds(&self) -> Result<(usize, usize)> {
        match (self.bottom(), self.top()) {
            (Some(b), Some(t)) => Ok((b, t)),
            _ => Err(Error::Unbounded),
        }
    }

    pub fn meet_table(&self) -> &[usize] {
        &self.meet
    }

    pub fn join_table(&self) -> &[usize] {
        &self.join
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        match self.bottom() {
            Some(b) => self.poset.covers().into_iter().filter(|&(x, _)| x == b).map(|(_, y)| y).collect(),
            None => Vec::new(),
        }
    }

    /// Every non-bottom element lies above some atom.
    pub fn is_atomic(&self) -> bool {
        let Some(bot) = self.bottom() else { return true };
        let atoms = self.atoms();
        (0..self.len()).filter(|&x| x != bot).all(|x| atoms.iter().any(|&a| self.leq(a, x)))
    }

    /// The same lattice relabelled through `perm`: new element `i` is old element `perm[i]`.
    pub fn permuted(&self, perm: &[usize], labels: Vec<String>) -> Result<Lattice> {
        let n = self.len();
        if perm.len() != n || labels.len() != n {
            return Err(Error::PartialMap { expected: n, got: perm.len().min(labels.len()) });
        }
        let poset = Poset::from_fn(labels, |i, j| self.leq(perm[i], perm[j]))?;
        Lattice::from_poset(poset)
    }
}

/// A named identity check; `witness` is the first failing tuple in index order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub witness: Option<Vec<usize>>,
}

impl AxiomCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(AxiomCheck::holds)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.holds())
    }
}

pub(crate) fn first_single(n: usize, bad: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    (0..n).find(|&x| bad(x)).map(|x| vec![x])
}

pub(crate) fn first_pair(n: usize, bad: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    for x in 0..n {
        for y in 0..n {
            if bad(x, y) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

pub(crate) fn first_triple(n: usize, bad: impl Fn(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if bad(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

/// Check every lattice identity and inequality against the stored tables and order.
pub fn verify_axioms(l: &Lattice) -> AxiomReport {
    let n = l.len();
    let m = |a, b| l.meet(a, b);
    let j = |a, b| l.join(a, b);
    let le = |a, b| l.leq(a, b);
    let mut checks = vec![
        AxiomCheck { name: "join_idempotent", witness: first_single(n, |x| j(x, x) != x) },
        AxiomCheck { name: "meet_idempotent", witness: first_single(n, |x| m(x, x) != x) },
        AxiomCheck { name: "join_commutative", witness: first_pair(n, |x, y| j(x, y) != j(y, x)) },
        AxiomCheck { name: "meet_commutative", witness: first_pair(n, |x, y| m(x, y) != m(y, x)) },
        AxiomCheck { name: "join_associative", witness: first_triple(n, |x, y, z| j(x, j(y, z)) != j(j(x, y), z)) },
        AxiomCheck { name: "meet_associative", witness: first_triple(n, |x, y, z| m(x, m(y, z)) != m(m(x, y), z)) },
        AxiomCheck { name: "join_absorptive", witness: first_pair(n, |x, y| j(x, m(x, y)) != x) },
        AxiomCheck { name: "meet_absorptive", witness: first_pair(n, |x, y| m(x, j(x, y)) != x) },
        AxiomCheck { name: "join_upper_bound", witness: first_pair(n, |x, y| !le(x, j(x, y)) || !le(y, j(x, y))) },
        AxiomCheck { name: "meet_lower_bound", witness: first_pair(n, |x, y| !le(m(x, y), x) || !le(m(x, y), y)) },
        AxiomCheck { name: "consistency", witness: first_pair(n, |x, y| le(x, y) != (j(x, y) == y) || le(x, y) != (m(x, y) == x)) },
        AxiomCheck {
            name: "monotone",
            witness: first_triple(n, |x, y, z| le(x, y) && (!le(j(x, z), j(y, z)) || !le(m(x, z), m(y, z)))),
        },
        AxiomCheck {
            name: "join_super_distributive",
            witness: first_triple(n, |x, y, z| !le(j(m(x, y), m(x, z)), m(x, j(y, z)))),
        },
        AxiomCheck {
            name: "meet_sub_distributive",
            witness: first_triple(n, |x, y, z| !le(j(x, m(y, z)), m(j(x, y), j(x, z)))),
        },
        AxiomCheck {
            name: "median_inequality",
            witness: first_triple(n, |x, y, z| {
                !le(j(j(m(x, y), m(y, z)), m(z, x)), m(m(j(x, y), j(y, z)), j(z, x)))
            }),
        },
        AxiomCheck {
            name: "modular_inequality",
            witness: first_triple(n, |x, y, z| le(x, z) && !le(j(x, m(y, z)), m(j(x, y), z))),
        },
    ];
    if let (Some(b), Some(t)) = (l.bottom(), l.top()) {
        checks.push(AxiomCheck {
            name: "identities",
            witness: first_single(n, |x| j(x, b) != x || m(x, t) != x),
        });
        checks.push(AxiomCheck {
            name: "absorbing_bounds",
            witness: first_single(n, |x| j(x, t) != t || m(x, b) != b),
        });
    }
    AxiomReport { checks }
}

/// A property verdict with the first counterexample, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    pub fn from_witness(witness: Option<Vec<usize>>) -> Self {
        Verdict { holds: witness.is_none(), witness }
    }
}

/// Sublattice shapes used as forbidden patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    N5,
    M3,
    Cube,
}

impl Pattern {
    pub fn lattice(self) -> Lattice {
        match self {
            Pattern::N5 => named_lattice(NamedLattice::N5),
            Pattern::M3 => named_lattice(NamedLattice::M3),
            Pattern::Cube => named_lattice(NamedLattice::Cube),
        }
    }
}

/// Lexicographically first injective map from `pattern` into `target` preserving
/// meets and joins. `result[i]` is the image of pattern element `i`.
pub fn find_embedding(pattern: &Lattice, target: &Lattice) -> Option<Vec<usize>> {
    let k = pattern.len();
    if k > target.len() {
        return None;
    }
    let mut image = Vec::with_capacity(k);
    let mut used = vec![false; target.len()];
    if extend(pattern, target, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn extend(p: &Lattice, t: &Lattice, image: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = image.len();
    if i == p.len() {
        return true;
    }
    for c in 0..t.len() {
        if used[c] {
            continue;
        }
        let ok = (0..i).all(|a| {
            let ia = image[a];
            let pm = p.meet(a, i);
            let pj = p.join(a, i);
            (pm > i || t.meet(ia, c) == if pm == i { c } else { image[pm] })
                && (pj > i || t.join(ia, c) == if pj == i { c } else { image[pj] })
                && (p.leq(a, i) == t.leq(ia, c))
                && (p.leq(i, a) == t.leq(c, ia))
        });
        if !ok {
            continue;
        }
        image.push(c);
        used[c] = true;
        // Re-check pairs whose meet or join landed on an element mapped only now.
        let consistent = (0..=i).all(|a| {
            (0..=i).all(|b| {
                let pm = p.meet(a, b);
                let pj = p.join(a, b);
                (pm > i || t.meet(image[a], image[b]) == image[pm]) && (pj > i || t.join(image[a], image[b]) == image[pj])
            })
        });
        if consistent && extend(p, t, image, used) {
            return true;
        }
        image.pop();
        used[c] = false;
    }
    false
}

pub fn find_sublattice(l: &Lattice, pattern: Pattern) -> Option<Vec<usize>> {
    find_embedding(&pattern.lattice(), l)
}

/// Modularity by direct scan, cross-checked against the pentagon test.
pub fn is_modular(l: &Lattice) -> Result<Verdict> {
    let n = l.len();
    let witness = first_triple(n, |x, y, a| l.leq(a, y) && l.meet(y, l.join(x, a)) != l.join(l.meet(y, x), a));
    let pentagon = find_sublattice(l, Pattern::N5);
    if witness.is_some() != pentagon.is_some() {
        return Err(Error::InternalDisagreement(format!(
            "modular scan says {}, pentagon search says {}",
            witness.is_none(),
            pentagon.is_none()
        )));
    }
    Ok(Verdict::from_witness(witness))
}

/// Distributivity by direct scan, cross-checked against the dual law,
/// the median law and the forbidden-sublattice test.
pub fn is_distributive(l: &Lattice) -> Result<Verdict> {
    let n = l.len();
    let (m, j) = (|a, b| l.meet(a, b), |a, b| l.join(a, b));
    let witness = first_triple(n, |x, y, z| m(x, j(y, z)) != j(m(x, y), m(x, z)));
    let dual = first_triple(n, |x, y, z| j(x, m(y, z)) != m(j(x, y), j(x, z)));
    let median = first_triple(n, |x, y, z| j(j(m(x, y), m(y, z)), m(z, x)) != m(m(j(x, y), j(y, z)), j(z, x)));
    let forbidden = find_sublattice(l, Pattern::N5).is_some() || find_sublattice(l, Pattern::M3).is_some();
    let verdicts = [witness.is_none(), dual.is_none(), median.is_none(), !forbidden];
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        return Err(Error::InternalDisagreement(format!(
            "distributivity criteria disagree (direct, dual, median, forbidden) = {verdicts:?}"
        )));
    }
    if witness.is_none() && !is_modular(l)?.holds {
        return Err(Error::InternalDisagreement("distributive lattice is not modular".into()));
    }
    Ok(Verdict::from_witness(witness))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_is_not_modular() {
        let n5 = named_lattice(NamedLattice::N5);
        let v = is_modular(&n5).unwrap();
        assert!(!v.holds);
        assert_eq!(find_sublattice(&n5, Pattern::N5), Some(vec![0, 1, 2, 3, 4]));
        assert!(!is_distributive(&n5).unwrap().holds);
    }

    #[test]
    fn diamond_is_modular_not_distributive() {
        let m3 = named_lattice(NamedLattice::M3);
        assert!(is_modular(&m3).unwrap().holds);
        assert!(!is_distributive(&m3).unwrap().holds);
        assert!(find_sublattice(&m3, Pattern::N5).is_none());
    }

    #[test]
    fn corrupted_join_is_caught() {
        let l = named_lattice(NamedLattice::M2);
        let mut join = l.join_table().to_vec();
        join[4 + 2] = 1;
        let bad = Lattice::from_parts_unchecked(l.poset().clone(), l.meet_table().to_vec(), join);
        let r = verify_axioms(&bad);
        assert!(!r.all_pass());
        assert!(!r.get("join_commutative").unwrap().holds());
        assert!(verify_axioms(&l).all_pass());
    }

    #[test]
    fn empty_and_singleton() {
        let empty = Lattice::from_covers(&[] as &[&str], &[] as &[(&str, &str)]).unwrap();
        assert!(empty.bounds().is_err());
        assert!(verify_axioms(&empty).all_pass());
        let one = Lattice::from_covers(&["0"], &[] as &[(&str, &str)]).unwrap();
        assert_eq!(one.bounds().unwrap(), (0, 0));
        assert!(is_distributive(&one).unwrap().holds);
    }
}
