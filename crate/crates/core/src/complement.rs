//! Complements, orthocomplementations and the Boolean identity checks.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{first_pair, first_single, is_distributive, is_modular, Lattice};
use crate::negation::UnaryMap;

/// All `y` with `x ∧ y = 0` and `x ∨ y = 1`.
pub fn complements(l: &Lattice, x: usize) -> Result<Vec<usize>> {
    let (bot, top) = l.bounds()?;
    Ok((0..l.len()).filter(|&y| l.meet(x, y) == bot && l.join(x, y) == top).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplementKind {
    NonComplemented,
    UniquelyComplemented,
    MultiplyComplemented,
}

impl fmt::Display for ComplementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComplementKind::NonComplemented => "non-complemented",
            ComplementKind::UniquelyComplemented => "uniquely complemented",
            ComplementKind::MultiplyComplemented => "multiply complemented",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementClass {
    pub kind: ComplementKind,
    /// Complement set of every element, by index.
    pub complements: Vec<Vec<usize>>,
}

impl ComplementClass {
    pub fn is_complemented(&self) -> bool {
        self.kind != ComplementKind::NonComplemented
    }
}

pub fn complement_class(l: &Lattice) -> Result<ComplementClass> {
    let sets = (0..l.len()).map(|x| complements(l, x)).collect::<Result<Vec<_>>>()?;
    let kind = if sets.iter().any(Vec::is_empty) {
        ComplementKind::NonComplemented
    } else if sets.iter().all(|s| s.len() == 1) {
        ComplementKind::UniquelyComplemented
    } else {
        ComplementKind::MultiplyComplemented
    };
    Ok(ComplementClass { kind, complements: sets })
}

/// An involutive, antitone complement assignment.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrthoMap(UnaryMap);

impl OrthoMap {
    pub fn new(l: &Lattice, map: UnaryMap) -> Result<Self> {
        if let Some(reason) = ortho_violation(l, &map)? {
            return Err(Error::InvalidOrthoMap(reason));
        }
        Ok(OrthoMap(map))
    }

    pub fn map(&self) -> &UnaryMap {
        &self.0
    }

    pub fn get(&self, x: usize) -> usize {
        self.0.get(x)
    }

    pub fn into_map(self) -> UnaryMap {
        self.0
    }
}

fn ortho_violation(l: &Lattice, map: &UnaryMap) -> Result<Option<String>> {
    if map.len() != l.len() {
        return Err(Error::PartialMap { expected: l.len(), got: map.len() });
    }
    let (bot, _) = l.bounds()?;
    let n = l.len();
    let f = |x| map.get(x);
    if let Some(w) = first_single(n, |x| f(f(x)) != x) {
        return Ok(Some(format!("not an involution at `{}`", l.label(w[0]))));
    }
    if let Some(w) = first_single(n, |x| l.meet(x, f(x)) != bot) {
        return Ok(Some(format!("`{}` meets its image above the bottom", l.label(w[0]))));
    }
    if let Some(w) = first_pair(n, |x, y| l.leq(x, y) && !l.leq(f(y), f(x))) {
        return Ok(Some(format!("not antitone at `{}` <= `{}`", l.label(w[0]), l.label(w[1]))));
    }
    Ok(None)
}

/// Every orthocomplementation, in lexicographic order of the image vector.
pub fn find_orthocomplementations(l: &Lattice) -> Result<Vec<OrthoMap>> {
    let class = complement_class(l)?;
    let n = l.len();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    search(l, &class.complements, 0, &mut image, &mut out);
    Ok(out.into_iter().map(|v| OrthoMap(UnaryMap::new(l, v).expect("total"))).collect())
}

fn search(l: &Lattice, comps: &[Vec<usize>], i: usize, image: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let n = l.len();
    if i == n {
        let antitone = (0..n).all(|x| (0..n).all(|y| !l.leq(x, y) || l.leq(image[y], image[x])));
        if antitone {
            out.push(image.clone());
        }
        return;
    }
    if image[i] != usize::MAX {
        search(l, comps, i + 1, image, out);
        return;
    }
    for &c in &comps[i] {
        if c != i && image[c] != usize::MAX {
            continue;
        }
        image[i] = c;
        image[c] = i;
        // Antitone on the already assigned part.
        let ok = (0..n).filter(|&y| image[y] != usize::MAX).all(|y| {
            (!l.leq(i, y) || l.leq(image[y], c)) && (!l.leq(y, i) || l.leq(c, image[y]))
        });
        if ok {
            search(l, comps, i + 1, image, out);
        }
        image[c] = usize::MAX;
        image[i] = usize::MAX;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrthoFlags {
    pub ortho: bool,
    pub orthomodular: bool,
    pub modular_ortho: bool,
    pub boolean: bool,
}

pub fn classify_ortho(l: &Lattice, perp: &UnaryMap) -> Result<OrthoFlags> {
    let perp = OrthoMap::new(l, perp.clone())?;
    let n = l.len();
    let orthomodular =
        first_pair(n, |x, y| l.leq(x, y) && l.join(x, l.meet(perp.get(x), y)) != y).is_none();
    let modular_ortho = is_modular(l)?.holds;
    let distributive = is_distributive(l)?.holds;
    let complemented = complement_class(l)?.is_complemented();
    if !complemented {
        return Err(Error::InternalDisagreement("orthocomplemented lattice is not complemented".into()));
    }
    let boolean = distributive && complemented;
    let flags = OrthoFlags { ortho: true, orthomodular, modular_ortho, boolean };
    if (boolean && !modular_ortho) || (modular_ortho && !orthomodular) {
        return Err(Error::InternalDisagreement(format!("ortho flags out of order: {flags:?}")));
    }
    Ok(flags)
}

/// Results of the identity checks that single out Boolean lattices among ortholattices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BooleanIdentityReport {
    /// `x' ∨ (x ∧ y) = x' ∨ y`.
    pub sasaki: Option<Vec<usize>>,
    /// `x ∨ (x' ∧ y) = x ∨ y`.
    pub sasaki_dual: Option<Vec<usize>>,
    /// `(x ∧ y')' = y ∨ (x' ∧ y')`.
    pub elkan: Option<Vec<usize>>,
    pub bottom_to_top: bool,
    pub top_to_bottom: bool,
    pub disjunctive_de_morgan: Option<Vec<usize>>,
    pub conjunctive_de_morgan: Option<Vec<usize>>,
    pub excluded_middle: Option<Vec<usize>>,
    pub boolean: bool,
    pub orthomodular: bool,
    pub complement_kind: ComplementKind,
    pub huntington_properties: HuntingtonProperties,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HuntingtonProperties {
    pub modular: bool,
    pub atomic: bool,
    pub orthocomplemented: bool,
    pub finite_width: bool,
    pub de_morgan: bool,
}

impl HuntingtonProperties {
    pub fn any(&self) -> bool {
        self.modular || self.atomic || self.orthocomplemented || self.finite_width || self.de_morgan
    }
}

impl BooleanIdentityReport {
    pub fn sasaki_holds(&self) -> bool {
        self.sasaki.is_none() && self.sasaki_dual.is_none()
    }

    pub fn consequences_hold(&self) -> bool {
        self.bottom_to_top
            && self.top_to_bottom
            && self.disjunctive_de_morgan.is_none()
            && self.conjunctive_de_morgan.is_none()
            && self.excluded_middle.is_none()
    }
}

/// Evaluate the identity checks and assert the implications between them.
pub fn check_boolean_identities(l: &Lattice, perp: &UnaryMap) -> Result<BooleanIdentityReport> {
    let flags = classify_ortho(l, perp)?;
    let (bot, top) = l.bounds()?;
    let n = l.len();
    let f = |x| perp.get(x);
    let (m, j) = (|a, b| l.meet(a, b), |a, b| l.join(a, b));
    let class = complement_class(l)?;
    let modular = is_modular(l)?.holds;
    let distributive = is_distributive(l)?.holds;
    let de_morgan = class.kind == ComplementKind::UniquelyComplemented && {
        let c = |x: usize| class.complements[x][0];
        first_pair(n, |x, y| c(j(x, y)) != m(c(x), c(y)) || c(m(x, y)) != j(c(x), c(y))).is_none()
    };
    let report = BooleanIdentityReport {
        sasaki: first_pair(n, |x, y| j(f(x), m(x, y)) != j(f(x), y)),
        sasaki_dual: first_pair(n, |x, y| j(x, m(f(x), y)) != j(x, y)),
        elkan: first_pair(n, |x, y| f(m(x, f(y))) != j(y, m(f(x), f(y)))),
        bottom_to_top: f(bot) == top,
        top_to_bottom: f(top) == bot,
        disjunctive_de_morgan: first_pair(n, |x, y| f(j(x, y)) != m(f(x), f(y))),
        conjunctive_de_morgan: first_pair(n, |x, y| f(m(x, y)) != j(f(x), f(y))),
        excluded_middle: first_single(n, |x| j(x, f(x)) != top),
        boolean: flags.boolean,
        orthomodular: flags.orthomodular,
        complement_kind: class.kind,
        huntington_properties: HuntingtonProperties {
            modular,
            atomic: l.is_atomic(),
            orthocomplemented: true,
            finite_width: true,
            de_morgan,
        },
    };
    if report.sasaki_holds() != report.boolean {
        return Err(Error::InternalDisagreement("Sasaki identities disagree with the Boolean verdict".into()));
    }
    if report.orthomodular && report.elkan.is_none() && !report.boolean {
        return Err(Error::InternalDisagreement("orthomodular lattice obeys Elkan's law but is not Boolean".into()));
    }
    if !report.consequences_hold() {
        return Err(Error::LemmaViolation("orthocomplement consequences fail".into()));
    }
    check_huntington(l)?;
    if distributive != report.boolean {
        return Err(Error::InternalDisagreement("distributive ortholattice is not Boolean".into()));
    }
    Ok(report)
}

/// Uniquely complemented with a finite carrier forces distributivity, and
/// distributive plus complemented forces unique complements.
pub fn check_huntington(l: &Lattice) -> Result<()> {
    let class = complement_class(l)?;
    let distributive = is_distributive(l)?.holds;
    if class.kind == ComplementKind::UniquelyComplemented && !distributive {
        return Err(Error::InternalDisagreement("uniquely complemented finite lattice is not distributive".into()));
    }
    if distributive && class.is_complemented() && class.kind != ComplementKind::UniquelyComplemented {
        return Err(Error::InternalDisagreement("complemented distributive lattice has several complements".into()));
    }
    Ok(())
}
