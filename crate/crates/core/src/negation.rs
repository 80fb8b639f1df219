//! Unary maps on lattices, the negation hierarchy, and unit-interval negation families.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzzy::MembershipFn;
use crate::grade::{rational_string, Grade};
use crate::lattice::{first_pair, first_single, Lattice};

/// A total self-map on a lattice carrier, by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnaryMap(Vec<usize>);

impl UnaryMap {
    pub fn new(l: &Lattice, image: Vec<usize>) -> Result<Self> {
        if image.len() != l.len() {
            return Err(Error::PartialMap { expected: l.len(), got: image.len() });
        }
        if let Some(&bad) = image.iter().find(|&&v| v >= l.len()) {
            return Err(Error::OutOfRange(format!("image index {bad} on {} elements", l.len())));
        }
        Ok(UnaryMap(image))
    }

    /// Every carrier element must appear exactly once as a source.
    pub fn from_pairs<S: AsRef<str>, T: AsRef<str>>(l: &Lattice, pairs: &[(S, T)]) -> Result<Self> {
        let mut image = vec![usize::MAX; l.len()];
        for (a, b) in pairs {
            let i = l.require(a.as_ref())?;
            let j = l.require(b.as_ref())?;
            if image[i] != usize::MAX && image[i] != j {
                return Err(Error::Schema(format!("`{}` mapped twice", a.as_ref())));
            }
            image[i] = j;
        }
        let got = image.iter().filter(|&&v| v != usize::MAX).count();
        if got != l.len() {
            return Err(Error::PartialMap { expected: l.len(), got });
        }
        Ok(UnaryMap(image))
    }

    /// Pairs are swapped both ways; `(x, x)` marks a fixed point.
    pub fn involution_from_pairs(l: &Lattice, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut all = Vec::with_capacity(pairs.len() * 2);
        for &(a, b) in pairs {
            all.push((a, b));
            all.push((b, a));
        }
        Self::from_pairs(l, &all)
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_label_map(&self, l: &Lattice) -> BTreeMap<String, String> {
        self.0.iter().enumerate().map(|(i, &j)| (l.label(i).to_string(), l.label(j).to_string())).collect()
    }
}

/// Negation classes, listed strongest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NegationFlag {
    Orthomodular,
    Ortho,
    Kleene,
    DeMorgan,
    Intuitionistic,
    Fuzzy,
    Minimal,
    Subminimal,
}

impl NegationFlag {
    pub const ALL: [NegationFlag; 8] = [
        NegationFlag::Orthomodular,
        NegationFlag::Ortho,
        NegationFlag::Kleene,
        NegationFlag::DeMorgan,
        NegationFlag::Intuitionistic,
        NegationFlag::Fuzzy,
        NegationFlag::Minimal,
        NegationFlag::Subminimal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NegationFlag::Orthomodular => "orthomodular",
            NegationFlag::Ortho => "ortho",
            NegationFlag::Kleene => "kleene",
            NegationFlag::DeMorgan => "de morgan",
            NegationFlag::Intuitionistic => "intuitionistic",
            NegationFlag::Fuzzy => "fuzzy",
            NegationFlag::Minimal => "minimal",
            NegationFlag::Subminimal => "subminimal",
        }
    }
}

impl fmt::Display for NegationFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First counterexample for each elementary property, `None` when it holds.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct NegationProperties {
    pub antitone: Option<Vec<usize>>,
    pub weak_double_negation: Option<Vec<usize>>,
    pub non_contradiction: Option<Vec<usize>>,
    pub top_to_bottom: Option<Vec<usize>>,
    pub involution: Option<Vec<usize>>,
    pub kleene: Option<Vec<usize>>,
    pub orthomodular: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegationClass {
    /// Flags that hold, strongest first.
    pub flags: Vec<NegationFlag>,
    pub properties: NegationProperties,
}

impl NegationClass {
    pub fn has(&self, flag: NegationFlag) -> bool {
        self.flags.contains(&flag)
    }

    pub fn strongest(&self) -> Option<NegationFlag> {
        self.flags.first().copied()
    }

    /// The first failing property behind a missing flag.
    pub fn witness(&self, flag: NegationFlag) -> Option<(&'static str, Vec<usize>)> {
        if self.has(flag) {
            return None;
        }
        let p = &self.properties;
        let needed: &[(&'static str, &Option<Vec<usize>>)] = match flag {
            NegationFlag::Subminimal => &[("antitone", &p.antitone)],
            NegationFlag::Minimal => &[("antitone", &p.antitone), ("weak_double_negation", &p.weak_double_negation)],
            NegationFlag::Intuitionistic => &[
                ("antitone", &p.antitone),
                ("weak_double_negation", &p.weak_double_negation),
                ("non_contradiction", &p.non_contradiction),
            ],
            NegationFlag::Fuzzy => &[
                ("antitone", &p.antitone),
                ("weak_double_negation", &p.weak_double_negation),
                ("top_to_bottom", &p.top_to_bottom),
            ],
            NegationFlag::DeMorgan => &[
                ("antitone", &p.antitone),
                ("weak_double_negation", &p.weak_double_negation),
                ("involution", &p.involution),
            ],
            NegationFlag::Kleene => &[
                ("antitone", &p.antitone),
                ("weak_double_negation", &p.weak_double_negation),
                ("involution", &p.involution),
                ("kleene", &p.kleene),
            ],
            NegationFlag::Ortho => &[
                ("antitone", &p.antitone),
                ("weak_double_negation", &p.weak_double_negation),
                ("involution", &p.involution),
                ("non_contradiction", &p.non_contradiction),
            ],
            NegationFlag::Orthomodular => &[
                ("antitone", &p.antitone),
                ("weak_double_negation", &p.weak_double_negation),
                ("involution", &p.involution),
                ("non_contradiction", &p.non_contradiction),
                ("orthomodular", &p.orthomodular),
            ],
        };
        needed.iter().find_map(|(name, w)| w.as_ref().map(|w| (*name, w.clone())))
    }

    /// The implication structure between flags.
    pub fn hierarchy_consistent(&self) -> bool {
        use NegationFlag::*;
        let implied: [(NegationFlag, NegationFlag); 9] = [
            (Orthomodular, Ortho),
            (Ortho, Kleene),
            (Ortho, DeMorgan),
            (Ortho, Intuitionistic),
            (Kleene, DeMorgan),
            (DeMorgan, Minimal),
            (Intuitionistic, Fuzzy),
            (Fuzzy, Minimal),
            (Minimal, Subminimal),
        ];
        implied.iter().all(|&(a, b)| !self.has(a) || self.has(b))
    }
}

/// Classify a unary map along the negation hierarchy.
pub fn classify_negation(l: &Lattice, neg: &UnaryMap) -> Result<NegationClass> {
    if neg.len() != l.len() {
        return Err(Error::PartialMap { expected: l.len(), got: neg.len() });
    }
    let (bot, top) = l.bounds()?;
    let n = l.len();
    let f = |x| neg.get(x);
    let properties = NegationProperties {
        antitone: first_pair(n, |x, y| l.leq(x, y) && !l.leq(f(y), f(x))),
        weak_double_negation: first_single(n, |x| !l.leq(x, f(f(x)))),
        non_contradiction: first_single(n, |x| l.meet(x, f(x)) != bot),
        top_to_bottom: (f(top) != bot).then(|| vec![top]),
        involution: first_single(n, |x| f(f(x)) != x),
        kleene: first_pair(n, |x, y| !l.leq(l.meet(x, f(x)), l.join(y, f(y)))),
        orthomodular: first_pair(n, |x, y| l.leq(x, y) && l.join(x, l.meet(f(x), y)) != y),
    };
    let p = &properties;
    let sub = p.antitone.is_none();
    let min = sub && p.weak_double_negation.is_none();
    let intu = min && p.non_contradiction.is_none();
    let fuzzy = min && p.top_to_bottom.is_none();
    let dm = min && p.involution.is_none();
    let kleene = dm && p.kleene.is_none();
    let ortho = dm && p.non_contradiction.is_none();
    let om = ortho && p.orthomodular.is_none();
    let holds = [om, ortho, kleene, dm, intu, fuzzy, min, sub];
    let flags = NegationFlag::ALL.iter().zip(holds).filter(|(_, h)| *h).map(|(f, _)| *f).collect();
    let class = NegationClass { flags, properties };
    if !class.hierarchy_consistent() {
        return Err(Error::InternalDisagreement(format!("negation flags {:?} break the hierarchy", class.flags)));
    }
    Ok(class)
}

/// Names of the lemma conclusions that were checked.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct LemmaReport {
    pub checked: Vec<&'static str>,
}

/// Verify every derived property whose hypotheses the class satisfies.
pub fn verify_negation_lemmas(l: &Lattice, neg: &UnaryMap, class: &NegationClass) -> Result<LemmaReport> {
    let (bot, top) = l.bounds()?;
    let n = l.len();
    let f = |x| neg.get(x);
    let mut report = LemmaReport::default();
    let mut check = |name: &'static str, witness: Option<Vec<usize>>| -> Result<()> {
        if let Some(w) = witness {
            return Err(Error::LemmaViolation(format!("{name} fails at {w:?}")));
        }
        report.checked.push(name);
        Ok(())
    };
    use NegationFlag::*;
    if class.has(Subminimal) || class.has(Minimal) {
        check("disjunctive_de_morgan_inequality", first_pair(n, |x, y| !l.leq(f(l.join(x, y)), l.meet(f(x), f(y)))))?;
        check("conjunctive_de_morgan_inequality", first_pair(n, |x, y| !l.leq(l.join(f(x), f(y)), f(l.meet(x, y)))))?;
    }
    if class.has(Fuzzy) {
        check("bottom_to_top", (f(bot) != top).then(|| vec![bot]))?;
    }
    if class.has(Intuitionistic) {
        check("top_to_bottom", (f(top) != bot).then(|| vec![top]))?;
        check("bottom_to_top", (f(bot) != top).then(|| vec![bot]))?;
        check("intuitionistic_is_fuzzy", (!class.has(Fuzzy)).then(Vec::new))?;
    }
    if class.has(DeMorgan) {
        check("disjunctive_de_morgan", first_pair(n, |x, y| f(l.join(x, y)) != l.meet(f(x), f(y))))?;
        check("conjunctive_de_morgan", first_pair(n, |x, y| f(l.meet(x, y)) != l.join(f(x), f(y))))?;
    }
    if class.has(Ortho) {
        check("ortho_bottom_to_top", (f(bot) != top).then(|| vec![bot]))?;
        check("ortho_top_to_bottom", (f(top) != bot).then(|| vec![top]))?;
        check("excluded_middle", first_single(n, |x| l.join(x, f(x)) != top))?;
        check("non_contradiction", first_single(n, |x| l.meet(x, f(x)) != bot))?;
        check("kleene_condition", first_pair(n, |x, y| !l.leq(l.meet(x, f(x)), l.join(y, f(y)))))?;
        check("involution", first_single(n, |x| f(f(x)) != x))?;
    }
    Ok(report)
}

/// Negation families on unit-interval grades.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GradeNegation {
    Standard,
    Lambda {
        #[serde(with = "rational_string")]
        lambda: BigRational,
    },
    Yager {
        #[serde(with = "rational_string")]
        p: BigRational,
    },
    Discrete,
    DualDiscrete,
}

/// Default absolute tolerance for approximate evaluation.
pub const YAGER_TOLERANCE: f64 = 1e-12;

impl GradeNegation {
    pub fn lambda(num: i64, den: i64) -> Self {
        GradeNegation::Lambda { lambda: BigRational::new(num.into(), den.into()) }
    }

    pub fn yager(num: i64, den: i64) -> Self {
        GradeNegation::Yager { p: BigRational::new(num.into(), den.into()) }
    }

    /// Whether results are exact rationals for every input.
    pub fn is_exact(&self) -> bool {
        match self {
            GradeNegation::Yager { p } => p.is_one(),
            _ => true,
        }
    }
}

pub fn grade_negate(g: &GradeNegation, u: &Grade) -> Result<Grade> {
    grade_negate_with_tolerance(g, u, YAGER_TOLERANCE)
}

pub fn grade_negate_with_tolerance(g: &GradeNegation, u: &Grade, eps: f64) -> Result<Grade> {
    let one = BigRational::one();
    match g {
        GradeNegation::Standard => Ok(u.complement()),
        GradeNegation::Lambda { lambda } => {
            if *lambda <= -one.clone() {
                return Err(Error::OutOfRange("lambda must exceed -1".into()));
            }
            let q = u.value();
            Grade::new((&one - q) / (&one + lambda * q))
        }
        GradeNegation::Yager { p } => {
            if !p.is_positive() {
                return Err(Error::OutOfRange("Yager exponent must be positive".into()));
            }
            if p.is_one() {
                return Ok(u.complement());
            }
            let eps = tolerance_rational(eps)?;
            // u^p, then (1 - u^p)^(1/p), each to within eps/4.
            let inner = rational_pow_approx(u.value(), p, &(&eps / BigInt::from(4)));
            let v = Grade::clamped(&one - inner).into_inner();
            let out = rational_pow_approx(&v, &p.recip(), &(&eps / BigInt::from(4)));
            Ok(Grade::clamped(out))
        }
        GradeNegation::Discrete => Ok(if u.is_zero() { Grade::one() } else { Grade::zero() }),
        GradeNegation::DualDiscrete => Ok(if u.is_one() { Grade::zero() } else { Grade::one() }),
    }
}

fn tolerance_rational(eps: f64) -> Result<BigRational> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::OutOfRange(format!("tolerance {eps} not in (0,1)")));
    }
    BigRational::from_float(eps).ok_or_else(|| Error::OutOfRange("tolerance".into()))
}

fn pow_int(base: &BigRational, e: &BigInt) -> BigRational {
    let e: u32 = e.try_into().expect("small exponent");
    num_traits::pow(base.clone(), e as usize)
}

/// `x^(a/b)` for `x` in `[0,1]` by bisection on `y^b = x^a`.
fn rational_pow_approx(x: &BigRational, p: &BigRational, eps: &BigRational) -> BigRational {
    let target = pow_int(x, p.numer());
    let b = p.denom();
    let mut lo = BigRational::zero();
    let mut hi = BigRational::one();
    let two = BigRational::from_integer(2.into());
    while &hi - &lo > *eps {
        let mid = (&lo + &hi) / &two;
        let v = pow_int(&mid, b);
        if v == target {
            return mid;
        }
        if v < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / two
}

/// Outcome of lifting a lambda negation pointwise over a sample of functions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaReport {
    /// First `(f, g)` with `f <= g` but `not g <= not f`.
    pub antitone: Option<(usize, usize)>,
    /// First function with `not not f != f`.
    pub involution: Option<usize>,
    /// The constant one maps to the constant zero.
    pub top_to_bottom: bool,
}

impl LambdaReport {
    pub fn de_morgan(&self) -> bool {
        self.antitone.is_none() && self.involution.is_none()
    }

    pub fn fuzzy(&self) -> bool {
        self.de_morgan() && self.top_to_bottom
    }
}

pub fn verify_lambda_demorgan(sample: &[MembershipFn], lambda: &BigRational) -> Result<LambdaReport> {
    let g = GradeNegation::Lambda { lambda: lambda.clone() };
    let negate = |m: &MembershipFn| m.try_map(|u| grade_negate(&g, u));
    let negs = sample.iter().map(negate).collect::<Result<Vec<_>>>()?;
    let mut antitone = None;
    'outer: for i in 0..sample.len() {
        for j in 0..sample.len() {
            if sample[i].pointwise_leq(&sample[j]) && !negs[j].pointwise_leq(&negs[i]) {
                antitone = Some((i, j));
                break 'outer;
            }
        }
    }
    let mut involution = None;
    for (i, m) in negs.iter().enumerate() {
        if negate(m)? != sample[i] {
            involution = Some(i);
            break;
        }
    }
    let universe = sample.first().map(|m| m.universe().to_vec()).unwrap_or_default();
    let one = MembershipFn::constant(universe.clone(), Grade::one());
    let top_to_bottom = negate(&one)? == MembershipFn::constant(universe, Grade::zero());
    Ok(LambdaReport { antitone, involution, top_to_bottom })
}
