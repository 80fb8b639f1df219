//! Implication operators, their contracts, logic classes and the built-in logics.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures::{chain, named_lattice, NamedLattice};
use crate::lattice::{first_pair, is_distributive, Lattice};
use crate::negation::{classify_negation, NegationFlag, UnaryMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ImplicationKind {
    Classical,
    Sasaki,
    Dishkant,
    Kalmbach,
    NonTollens,
    Relevance,
}

impl ImplicationKind {
    pub const ALL: [ImplicationKind; 6] = [
        ImplicationKind::Classical,
        ImplicationKind::Sasaki,
        ImplicationKind::Dishkant,
        ImplicationKind::Kalmbach,
        ImplicationKind::NonTollens,
        ImplicationKind::Relevance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ImplicationKind::Classical => "classical",
            ImplicationKind::Sasaki => "sasaki",
            ImplicationKind::Dishkant => "dishkant",
            ImplicationKind::Kalmbach => "kalmbach",
            ImplicationKind::NonTollens => "non_tollens",
            ImplicationKind::Relevance => "relevance",
        }
    }
}

impl fmt::Display for ImplicationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ImplicationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        ImplicationKind::ALL
            .into_iter()
            .find(|k| k.name() == key || k.name().replace('_', "") == key)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "source", content = "name")]
pub enum Provenance {
    Formula(ImplicationKind),
    Table(BuiltinLogic),
    Custom,
}

/// A total binary map on a lattice carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Implication {
    n: usize,
    table: Vec<usize>,
    provenance: Provenance,
}

impl Implication {
    pub fn from_table(l: &Lattice, table: Vec<usize>, provenance: Provenance) -> Result<Self> {
        let n = l.len();
        if table.len() != n * n {
            return Err(Error::PartialMap { expected: n * n, got: table.len() });
        }
        if table.iter().any(|&v| v >= n) {
            return Err(Error::OutOfRange("implication value outside the carrier".into()));
        }
        Ok(Implication { n, table, provenance })
    }

    /// Rows keyed by antecedent label, values listed in the order of `columns`.
    pub fn from_rows(l: &Lattice, columns: &[&str], rows: &[(&str, &[&str])], provenance: Provenance) -> Result<Self> {
        let n = l.len();
        let mut table = vec![usize::MAX; n * n];
        let cols = columns.iter().map(|c| l.require(c)).collect::<Result<Vec<_>>>()?;
        for (x, vals) in rows {
            let x = l.require(x)?;
            if vals.len() != cols.len() {
                return Err(Error::PartialMap { expected: cols.len(), got: vals.len() });
            }
            for (&y, v) in cols.iter().zip(vals.iter()) {
                table[x * n + y] = l.require(v)?;
            }
        }
        let got = table.iter().filter(|&&v| v != usize::MAX).count();
        if got != n * n {
            return Err(Error::PartialMap { expected: n * n, got });
        }
        Ok(Implication { n, table, provenance })
    }

    pub fn get(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Cells where the two tables disagree.
    pub fn diff(&self, other: &Implication) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n * n).filter(|&k| self.table[k] != other.table[k]).map(|k| (k / n, k % n)).collect()
    }
}

/// Tabulate one of the six formula implications.
pub fn build_implication(l: &Lattice, neg: &UnaryMap, kind: ImplicationKind) -> Result<Implication> {
    let n = l.len();
    if neg.len() != n {
        return Err(Error::PartialMap { expected: n, got: neg.len() });
    }
    let (m, j, f) = (|a, b| l.meet(a, b), |a, b| l.join(a, b), |a| neg.get(a));
    let value = |x: usize, y: usize| match kind {
        ImplicationKind::Classical => j(f(x), y),
        ImplicationKind::Sasaki => j(f(x), m(x, y)),
        ImplicationKind::Dishkant => j(y, m(f(x), f(y))),
        ImplicationKind::Kalmbach => j(j(m(f(x), y), m(f(x), f(y))), m(x, j(f(x), y))),
        ImplicationKind::NonTollens => j(j(m(f(x), y), m(x, y)), m(j(f(x), y), f(y))),
        ImplicationKind::Relevance => j(j(m(f(x), y), m(x, y)), m(f(x), f(y))),
    };
    let table = (0..n * n).map(|k| value(k / n, k % n)).collect();
    Ok(Implication { n, table, provenance: Provenance::Formula(kind) })
}

/// Entailment and modus ponens contracts with their first counterexamples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImplicationVerdict {
    /// `x <= y` implies `x -> y >= x ∨ y`.
    pub weak_entailment: Option<Vec<usize>>,
    /// `x <= y` implies `x -> y = 1`.
    pub strong_entailment: Option<Vec<usize>>,
    /// `x ∧ (x -> y) <= ¬x ∨ y`.
    pub weak_modus_ponens: Option<Vec<usize>>,
    /// `x ∧ (x -> y) <= y`.
    pub strong_modus_ponens: Option<Vec<usize>>,
    /// First pair with `x -> y >= x ∨ y` although `x` is not below `y`.
    pub converse_entailment: Option<Vec<usize>>,
}

impl ImplicationVerdict {
    pub fn is_implication(&self) -> bool {
        self.weak_entailment.is_none() && self.weak_modus_ponens.is_none()
    }

    pub fn has_weak_entailment(&self) -> bool {
        self.weak_entailment.is_none()
    }

    pub fn has_strong_entailment(&self) -> bool {
        self.strong_entailment.is_none()
    }

    pub fn has_weak_modus_ponens(&self) -> bool {
        self.weak_modus_ponens.is_none()
    }

    pub fn has_strong_modus_ponens(&self) -> bool {
        self.strong_modus_ponens.is_none()
    }

    pub fn flags(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.has_strong_entailment() {
            out.push("strong entailment");
        } else if self.has_weak_entailment() {
            out.push("weak entailment");
        }
        if self.has_strong_modus_ponens() {
            out.push("strong modus ponens");
        } else if self.has_weak_modus_ponens() {
            out.push("weak modus ponens");
        }
        out
    }
}

pub fn validate_implication(l: &Lattice, neg: &UnaryMap, imp: &Implication) -> Result<ImplicationVerdict> {
    let (_, top) = l.bounds()?;
    let n = l.len();
    if imp.n != n || neg.len() != n {
        return Err(Error::PartialMap { expected: n, got: imp.n.min(neg.len()) });
    }
    let (m, j, f, i) = (|a, b| l.meet(a, b), |a, b| l.join(a, b), |a| neg.get(a), |a, b| imp.get(a, b));
    let verdict = ImplicationVerdict {
        weak_entailment: first_pair(n, |x, y| l.leq(x, y) && !l.leq(j(x, y), i(x, y))),
        strong_entailment: first_pair(n, |x, y| l.leq(x, y) && i(x, y) != top),
        weak_modus_ponens: first_pair(n, |x, y| !l.leq(m(x, i(x, y)), j(f(x), y))),
        strong_modus_ponens: first_pair(n, |x, y| !l.leq(m(x, i(x, y)), y)),
        converse_entailment: first_pair(n, |x, y| !l.leq(x, y) && l.leq(j(x, y), i(x, y))),
    };
    if (verdict.has_strong_entailment() && !verdict.has_weak_entailment())
        || (verdict.has_strong_modus_ponens() && !verdict.has_weak_modus_ponens())
    {
        return Err(Error::InternalDisagreement("strong contract without its weak form".into()));
    }
    // x -> y >= x ∨ y gives x ∧ (x -> y) = x, so strong modus ponens forces x <= y.
    if verdict.has_strong_modus_ponens() && verdict.converse_entailment.is_some() {
        return Err(Error::InternalDisagreement("entailment converse fails under strong modus ponens".into()));
    }
    Ok(verdict)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LogicClass {
    Boolean,
    Ortho,
    Kleene,
    DeMorgan,
    Intuitionistic,
    Fuzzy,
    /// Minimal negation only.
    Logic,
    /// Not even a minimal negation.
    None,
}

impl fmt::Display for LogicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LogicClass::Boolean => "Boolean",
            LogicClass::Ortho => "ortho",
            LogicClass::Kleene => "Kleene",
            LogicClass::DeMorgan => "de Morgan",
            LogicClass::Intuitionistic => "intuitionistic",
            LogicClass::Fuzzy => "fuzzy",
            LogicClass::Logic => "logic",
            LogicClass::None => "none",
        })
    }
}

/// The strongest logic class supported by the lattice and negation.
pub fn logic_class(l: &Lattice, neg: &UnaryMap) -> Result<LogicClass> {
    let c = classify_negation(l, neg)?;
    Ok(if c.has(NegationFlag::Ortho) && is_distributive(l)?.holds {
        LogicClass::Boolean
    } else if c.has(NegationFlag::Ortho) {
        LogicClass::Ortho
    } else if c.has(NegationFlag::Kleene) {
        LogicClass::Kleene
    } else if c.has(NegationFlag::DeMorgan) {
        LogicClass::DeMorgan
    } else if c.has(NegationFlag::Intuitionistic) {
        LogicClass::Intuitionistic
    } else if c.has(NegationFlag::Fuzzy) {
        LogicClass::Fuzzy
    } else if c.has(NegationFlag::Minimal) {
        LogicClass::Logic
    } else {
        LogicClass::None
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KindReport {
    pub kind: ImplicationKind,
    #[serde(skip)]
    pub implication: Implication,
    pub verdict: ImplicationVerdict,
}

/// All six formula implications with their verdicts. Requires an ortho negation.
pub fn implication_table_report(l: &Lattice, neg: &UnaryMap) -> Result<Vec<KindReport>> {
    if !classify_negation(l, neg)?.has(NegationFlag::Ortho) {
        return Err(Error::NotOrtho);
    }
    ImplicationKind::ALL
        .into_iter()
        .map(|kind| {
            let implication = build_implication(l, neg, kind)?;
            let verdict = validate_implication(l, neg, &implication)?;
            Ok(KindReport { kind, implication, verdict })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BuiltinLogic {
    Classical2,
    Kleene3,
    Lukasiewicz3,
    RM3,
    Heyting3,
    Lukasiewicz5,
    Boolean4,
    BN4,
    SixElement,
}

impl BuiltinLogic {
    pub const ALL: [BuiltinLogic; 9] = [
        BuiltinLogic::Classical2,
        BuiltinLogic::Kleene3,
        BuiltinLogic::Lukasiewicz3,
        BuiltinLogic::RM3,
        BuiltinLogic::Heyting3,
        BuiltinLogic::Lukasiewicz5,
        BuiltinLogic::Boolean4,
        BuiltinLogic::BN4,
        BuiltinLogic::SixElement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinLogic::Classical2 => "classical2",
            BuiltinLogic::Kleene3 => "kleene3",
            BuiltinLogic::Lukasiewicz3 => "lukasiewicz3",
            BuiltinLogic::RM3 => "rm3",
            BuiltinLogic::Heyting3 => "heyting3",
            BuiltinLogic::Lukasiewicz5 => "lukasiewicz5",
            BuiltinLogic::Boolean4 => "boolean4",
            BuiltinLogic::BN4 => "bn4",
            BuiltinLogic::SixElement => "six-element",
        }
    }
}

impl fmt::Display for BuiltinLogic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinLogic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['-', '_', ' '], "");
        BuiltinLogic::ALL
            .into_iter()
            .find(|b| b.name().replace('-', "") == key)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// A lattice with a negation and an implication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicStructure {
    pub name: String,
    pub lattice: Lattice,
    pub negation: UnaryMap,
    pub implication: Implication,
}

impl LogicStructure {
    pub fn class(&self) -> Result<LogicClass> {
        logic_class(&self.lattice, &self.negation)
    }

    pub fn verdict(&self) -> Result<ImplicationVerdict> {
        validate_implication(&self.lattice, &self.negation, &self.implication)
    }
}

pub fn builtin_logic(name: &str) -> Result<LogicStructure> {
    Ok(builtin(name.parse()?))
}

/// Tables are stored as data; they are not regenerated from formulas.
pub fn builtin(which: BuiltinLogic) -> LogicStructure {
    let prov = Provenance::Table(which);
    let three = || chain(&["0", "n", "1"]);
    let kleene_neg = |l: &Lattice| UnaryMap::involution_from_pairs(l, &[("0", "1"), ("n", "n")]).expect("negation");
    let cols3: &[&str] = &["1", "n", "0"];
    let (lattice, negation, implication) = match which {
        BuiltinLogic::Classical2 => {
            let l = named_lattice(NamedLattice::L2);
            let neg = UnaryMap::involution_from_pairs(&l, &[("0", "1")]).expect("negation");
            let imp = Implication::from_rows(&l, &["1", "0"], &[("1", &["1", "0"]), ("0", &["1", "1"])], prov);
            (l, neg, imp)
        }
        BuiltinLogic::Kleene3 => {
            let l = three();
            let neg = kleene_neg(&l);
            let rows: &[(&str, &[&str])] = &[("1", &["1", "n", "0"]), ("n", &["1", "n", "n"]), ("0", &["1", "1", "1"])];
            let imp = Implication::from_rows(&l, cols3, rows, prov);
            (l, neg, imp)
        }
        BuiltinLogic::Lukasiewicz3 => {
            let l = three();
            let neg = kleene_neg(&l);
            let rows: &[(&str, &[&str])] = &[("1", &["1", "n", "0"]), ("n", &["1", "1", "n"]), ("0", &["1", "1", "1"])];
            let imp = Implication::from_rows(&l, cols3, rows, prov);
            (l, neg, imp)
        }
        BuiltinLogic::RM3 => {
            let l = three();
            let neg = kleene_neg(&l);
            let rows: &[(&str, &[&str])] = &[("1", &["1", "0", "0"]), ("n", &["1", "n", "0"]), ("0", &["1", "1", "1"])];
            let imp = Implication::from_rows(&l, cols3, rows, prov);
            (l, neg, imp)
        }
        BuiltinLogic::Heyting3 => {
            let l = three();
            let neg = UnaryMap::from_pairs(&l, &[("0", "1"), ("n", "0"), ("1", "0")]).expect("negation");
            let rows: &[(&str, &[&str])] = &[("1", &["1", "n", "0"]), ("n", &["1", "1", "0"]), ("0", &["1", "1", "1"])];
            let imp = Implication::from_rows(&l, cols3, rows, prov);
            (l, neg, imp)
        }
        BuiltinLogic::Lukasiewicz5 => {
            let l = chain(&["0", "m", "n", "p", "1"]);
            let neg = UnaryMap::involution_from_pairs(&l, &[("0", "1"), ("m", "p"), ("n", "n")]).expect("negation");
            let rows: &[(&str, &[&str])] = &[
                ("1", &["1", "p", "n", "m", "0"]),
                ("p", &["1", "1", "n", "m", "m"]),
                ("n", &["1", "1", "1", "m", "n"]),
                ("m", &["1", "1", "1", "1", "p"]),
                ("0", &["1", "1", "1", "1", "1"]),
            ];
            let imp = Implication::from_rows(&l, &["1", "p", "n", "m", "0"], rows, prov);
            (l, neg, imp)
        }
        BuiltinLogic::Boolean4 => {
            let l = Lattice::from_covers(&["0", "b", "n", "1"], &[("0", "b"), ("0", "n"), ("b", "1"), ("n", "1")])
                .expect("lattice");
            let neg = UnaryMap::involution_from_pairs(&l, &[("0", "1"), ("b", "n")]).expect("negation");
            let rows: &[(&str, &[&str])] = &[
                ("1", &["1", "b", "n", "0"]),
                ("b", &["1", "1", "n", "n"]),
                ("n", &["1", "b", "1", "b"]),
                ("0", &["1", "1", "1", "1"]),
            ];
            let imp = Implication::from_rows(&l, &["1", "b", "n", "0"], rows, prov);
            (l, neg, imp)
        }
        BuiltinLogic::BN4 => {
            let l = named_lattice(NamedLattice::BN4);
            let neg = UnaryMap::involution_from_pairs(&l, &[("0", "1"), ("n", "n"), ("b", "b")]).expect("negation");
            let rows: &[(&str, &[&str])] = &[
                ("1", &["1", "n", "0", "0"]),
                ("n", &["1", "1", "n", "n"]),
                ("b", &["1", "n", "b", "0"]),
                ("0", &["1", "1", "1", "1"]),
            ];
            let imp = Implication::from_rows(&l, &["1", "n", "b", "0"], rows, prov);
            (l, neg, imp)
        }
        BuiltinLogic::SixElement => {
            let l = named_lattice(NamedLattice::Zigzag);
            let neg = UnaryMap::involution_from_pairs(&l, &[("0", "1"), ("p", "n"), ("q", "m")]).expect("negation");
            let rows: &[(&str, &[&str])] = &[
                ("1", &["1", "p", "q", "m", "n", "0"]),
                ("p", &["1", "1", "q", "p", "q", "n"]),
                ("q", &["1", "p", "1", "m", "p", "m"]),
                ("m", &["1", "1", "q", "1", "q", "q"]),
                ("n", &["1", "1", "1", "p", "1", "p"]),
                ("0", &["1", "1", "1", "1", "1", "1"]),
            ];
            let imp = Implication::from_rows(&l, &["1", "p", "q", "m", "n", "0"], rows, prov);
            (l, neg, imp)
        }
    };
    LogicStructure {
        name: which.name().to_string(),
        lattice,
        negation,
        implication: implication.expect("built-in table"),
    }
}

/// A rendered implication table in display order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImplicationTable {
    /// Labels in display order, used for both rows (antecedents) and columns (consequents).
    pub order: Vec<String>,
    pub cells: Vec<Vec<String>>,
    /// Cells differing from the comparison table, when one was given.
    pub marked: Vec<Vec<bool>>,
}

impl ImplicationTable {
    pub fn new(l: &Lattice, imp: &Implication, against: Option<&Implication>) -> Self {
        let order = l.poset().display_order();
        let labels = order.iter().map(|&i| l.label(i).to_string()).collect();
        let cells = order
            .iter()
            .map(|&x| order.iter().map(|&y| l.label(imp.get(x, y)).to_string()).collect())
            .collect();
        let marked = order
            .iter()
            .map(|&x| order.iter().map(|&y| against.is_some_and(|c| c.get(x, y) != imp.get(x, y))).collect())
            .collect();
        ImplicationTable { order: labels, cells, marked }
    }

    pub fn marked_count(&self) -> usize {
        self.marked.iter().flatten().filter(|&&m| m).count()
    }

    /// Aligned text grid; marked cells carry a trailing `*`.
    pub fn render(&self) -> String {
        let width = self
            .order
            .iter()
            .chain(self.cells.iter().flatten())
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1)
            + 1;
        let pad = |s: &str| format!("{s}{}", " ".repeat(width.saturating_sub(s.chars().count())));
        let mut out = String::new();
        out.push_str(&pad("→"));
        out.push('|');
        for c in &self.order {
            out.push(' ');
            out.push_str(&pad(c));
        }
        out.push('\n');
        out.push_str(&"-".repeat(width));
        out.push('+');
        out.push_str(&"-".repeat((width + 1) * self.order.len()));
        out.push('\n');
        for (i, (r, row)) in self.order.iter().zip(&self.cells).enumerate() {
            out.push_str(&pad(r));
            out.push('|');
            for (k, cell) in row.iter().enumerate() {
                out.push(' ');
                let shown = if self.marked[i][k] { format!("{cell}*") } else { cell.clone() };
                out.push_str(&pad(&shown));
            }
            out.push('\n');
        }
        out
    }
}
