//! Unlabeled lattices on small carriers.
//!
//! A lattice with at least two elements is `0 ⊕ P ⊕ 1` for some poset `P`.
//! Posets are grown one maximal element at a time over every downset and
//! deduplicated by certificate after each step.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complement::{complement_class, find_orthocomplementations, ComplementKind};
use crate::error::{Error, Result};
use crate::lattice::{is_distributive, is_modular, Lattice};
use crate::order::Poset;

pub const CENSUS_CAP: usize = 8;

/// Lexicographically minimal row-major `<=` matrix, first cell most significant.
///
/// The minimum runs over labelings that are linear extensions. Isomorphisms
/// carry linear extensions to linear extensions, so this is still complete.
pub fn certificate(leq: &[bool], n: usize) -> u64 {
    assert!(n <= 8, "certificate packs at most 64 cells");
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extensions(leq, n, &mut perm, &mut used, &mut |p| {
        best = best.min(encode(leq, n, p));
    });
    if n == 0 {
        0
    } else {
        best
    }
}

fn encode(leq: &[bool], n: usize, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..n {
        for j in 0..n {
            code = (code << 1) | leq[perm[i] * n + perm[j]] as u64;
        }
    }
    code
}

fn extensions(leq: &[bool], n: usize, perm: &mut Vec<usize>, used: &mut [bool], visit: &mut dyn FnMut(&[usize])) {
    if perm.len() == n {
        visit(perm);
        return;
    }
    for x in 0..n {
        if used[x] || (0..n).any(|y| y != x && !used[y] && leq[y * n + x]) {
            continue;
        }
        used[x] = true;
        perm.push(x);
        extensions(leq, n, perm, used, visit);
        perm.pop();
        used[x] = false;
    }
}

/// Relabel so the matrix equals the certificate.
fn canonical_matrix(leq: &[bool], n: usize) -> Vec<bool> {
    let cert = certificate(leq, n);
    (0..n * n).map(|k| cert >> (n * n - 1 - k) & 1 == 1).collect()
}

/// Unlabeled posets of size `k`, as canonical matrices in certificate order.
fn posets(k: usize) -> Vec<Vec<bool>> {
    let mut level: BTreeMap<u64, Vec<bool>> = BTreeMap::new();
    level.insert(0, Vec::new());
    for m in 0..k {
        let mut next = BTreeMap::new();
        for leq in level.values() {
            for down in downsets(leq, m) {
                let n = m + 1;
                let mut grown = vec![false; n * n];
                for i in 0..m {
                    for j in 0..m {
                        grown[i * n + j] = leq[i * m + j];
                    }
                    grown[i * n + m] = down[i];
                }
                grown[m * n + m] = true;
                let cert = certificate(&grown, n);
                next.entry(cert).or_insert_with(|| canonical_matrix(&grown, n));
            }
        }
        level = next;
    }
    level.into_values().collect()
}

fn downsets(leq: &[bool], m: usize) -> Vec<Vec<bool>> {
    (0u32..1 << m)
        .map(|mask| (0..m).map(|i| mask >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|set| (0..m).all(|i| !set[i] || (0..m).all(|j| !leq[j * m + i] || set[j])))
        .collect()
}

fn labels(n: usize) -> Vec<String> {
    match n {
        0 => Vec::new(),
        1 => vec!["0".into()],
        _ => std::iter::once("0".to_string())
            .chain((0..n - 2).map(|i| ((b'a' + i as u8) as char).to_string()))
            .chain(std::iter::once("1".to_string()))
            .collect(),
    }
}

/// A lattice in canonical labeling with its isomorphism certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalLattice {
    pub lattice: Lattice,
    pub certificate: u64,
}

impl CanonicalLattice {
    pub fn new(l: &Lattice) -> Result<Self> {
        let n = l.len();
        if n > CENSUS_CAP {
            return Err(Error::SizeCap { n, cap: CENSUS_CAP });
        }
        let leq = canonical_matrix(l.poset().matrix(), n);
        let poset = Poset::from_matrix(labels(n), leq)?;
        let lattice = Lattice::from_poset(poset)?;
        Ok(CanonicalLattice { certificate: certificate(lattice.poset().matrix(), n), lattice })
    }
}

/// One representative per isomorphism class, in certificate order.
pub fn enumerate_lattices(n: usize) -> Result<Vec<CanonicalLattice>> {
    enumerate_lattices_with_cap(n, CENSUS_CAP)
}

pub fn enumerate_lattices_with_cap(n: usize, cap: usize) -> Result<Vec<CanonicalLattice>> {
    if n > cap.min(CENSUS_CAP) {
        return Err(Error::SizeCap { n, cap: cap.min(CENSUS_CAP) });
    }
    if n < 2 {
        let poset = Poset::from_matrix(labels(n), vec![true; n])?;
        let lattice = Lattice::from_poset(poset)?;
        return Ok(vec![CanonicalLattice { certificate: certificate(lattice.poset().matrix(), n), lattice }]);
    }
    let k = n - 2;
    let mut out = BTreeMap::new();
    for inner in posets(k) {
        let leq = (0..n * n)
            .map(|c| {
                let (i, j) = (c / n, c % n);
                i == 0 || j == n - 1 || (i < n - 1 && j > 0 && inner[(i - 1) * k + (j - 1)])
            })
            .collect::<Vec<_>>();
        let poset = Poset::from_matrix(labels(n), leq)?;
        if !poset.is_lattice() {
            continue;
        }
        let c = CanonicalLattice::new(&Lattice::from_poset(poset)?)?;
        out.entry(c.certificate).or_insert(c);
    }
    Ok(out.into_values().collect())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CensusCounts {
    pub n: usize,
    pub lattices: usize,
    pub modular: usize,
    pub distributive: usize,
    pub uniquely_complemented: usize,
    pub multiply_complemented: usize,
    pub non_complemented: usize,
    pub orthocomplemented: usize,
}

pub fn census(n: usize) -> Result<CensusCounts> {
    census_of(n, &enumerate_lattices(n)?)
}

pub fn census_of(n: usize, lattices: &[CanonicalLattice]) -> Result<CensusCounts> {
    let mut c = CensusCounts { n, lattices: lattices.len(), ..Default::default() };
    for cl in lattices {
        let l = &cl.lattice;
        c.modular += is_modular(l)?.holds as usize;
        c.distributive += is_distributive(l)?.holds as usize;
        if l.is_empty() {
            continue;
        }
        match complement_class(l)?.kind {
            ComplementKind::UniquelyComplemented => c.uniquely_complemented += 1,
            ComplementKind::MultiplyComplemented => c.multiply_complemented += 1,
            ComplementKind::NonComplemented => c.non_complemented += 1,
        }
        c.orthocomplemented += !find_orthocomplementations(l)?.is_empty() as usize;
    }
    Ok(c)
}
