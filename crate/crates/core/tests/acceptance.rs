//! Acceptance suite: one line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout. The
//! process fails if any criterion fails other than the two recorded as
//! unreachable, and those two must fail for exactly the recorded reason.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ortholat_core::census::{census_of, enumerate_lattices, CanonicalLattice};
use ortholat_core::fixtures::{boolean_lattice, canonical_perp, named_lattice, negation_fixtures, NamedLattice};
use ortholat_core::fuzzy::fixtures::{cube_functions, diamond_functions, half_grid_structure, hexagon_functions};
use ortholat_core::fuzzy::harness::three_grid;
use ortholat_core::fuzzy::{
    brute_force_oracle, crisp_logic, induced_logic, verify_negation_idempotency, FuzzyFamily, GridTables,
    InducedNegation,
};
use ortholat_core::implication::{implication_table_report, BuiltinLogic, ImplicationKind};
use ortholat_core::{
    builtin, classify_negation, classify_ortho, find_orthocomplementations, grade_negate, Grade, GradeNegation,
    Lattice, NegationFlag, UnaryMap,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn census_counts() -> Outcome {
    let start = Instant::now();
    let mut rows = (Vec::new(), Vec::new(), Vec::new());
    for n in 0..=8 {
        let ls = enumerate_lattices(n).unwrap();
        let c = census_of(n, &ls).unwrap();
        rows.0.push(c.lattices);
        rows.1.push(c.modular);
        rows.2.push(c.distributive);
    }
    let secs = start.elapsed().as_secs_f64();
    let pass = rows.0 == [1, 1, 1, 1, 2, 5, 15, 53, 222]
        && rows.1 == [1, 1, 1, 1, 2, 4, 8, 16, 34]
        && rows.2 == [1, 1, 1, 1, 2, 3, 5, 8, 15]
        && secs < 300.0;
    outcome(pass, format!("lattices {:?}, modular {:?}, distributive {:?} for n=0..8 in {secs:.2}s", rows.0, rows.1, rows.2))
}

fn ortho_census() -> Outcome {
    let counts: Vec<usize> = (1..=8)
        .map(|n| enumerate_lattices(n).unwrap().iter().filter(|c| !find_orthocomplementations(&c.lattice).unwrap().is_empty()).count())
        .collect();
    let total: usize = counts.iter().sum();
    outcome(counts == [1, 1, 0, 1, 0, 2, 0, 5] && total == 10, format!("orthocomplemented per n=1..8 {counts:?}, total {total}"))
}

fn seven_element_complements() -> Outcome {
    let c = census_of(7, &enumerate_lattices(7).unwrap()).unwrap();
    let got = (c.uniquely_complemented, c.multiply_complemented, c.non_complemented);
    outcome(
        got == (0, 17, 36),
        format!("uniquely {} / multiply {} / non-complemented {} (target 0 / 17 / 36)", got.0, got.1, got.2),
    )
}

fn named_logic_contracts() -> Outcome {
    // (strong entailment, strong modus ponens)
    let expected = [
        (BuiltinLogic::Kleene3, false, false),
        (BuiltinLogic::Lukasiewicz3, true, false),
        (BuiltinLogic::RM3, false, true),
        (BuiltinLogic::Heyting3, true, true),
        (BuiltinLogic::Boolean4, true, true),
        (BuiltinLogic::BN4, false, false),
    ];
    let mut bad = Vec::new();
    for (b, se, smp) in expected {
        let v = builtin(b).verdict().unwrap();
        if !v.is_implication() || v.has_strong_entailment() != se || v.has_strong_modus_ponens() != smp {
            bad.push(b.name());
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "all six logics match".to_string() } else { format!("mismatch: {bad:?}") })
}

fn boolean_perp(l: &Lattice, k: usize) -> UnaryMap {
    let full = (1usize << k) - 1;
    UnaryMap::new(l, (0..l.len()).map(|i| i ^ full).collect()).unwrap()
}

fn six_implications() -> Outcome {
    let mut notes = Vec::new();
    let mut first_five = true;
    for which in [NamedLattice::O6, NamedLattice::O8, NamedLattice::M2] {
        let l = named_lattice(which);
        let perp = canonical_perp(which).unwrap();
        for r in implication_table_report(&l, &perp).unwrap() {
            if r.kind != ImplicationKind::Relevance
                && !(r.verdict.has_strong_entailment() && r.verdict.has_weak_modus_ponens())
            {
                first_five = false;
            }
        }
    }
    notes.push(format!("kinds 1-5 strong entailment + weak modus ponens: {first_five}"));

    let o6 = named_lattice(NamedLattice::O6);
    let relevance = implication_table_report(&o6, &canonical_perp(NamedLattice::O6).unwrap())
        .unwrap()
        .into_iter()
        .find(|r| r.kind == ImplicationKind::Relevance)
        .unwrap();
    let relevance_fails = relevance.verdict.weak_entailment.is_some();
    notes.push(format!(
        "relevance fails weak entailment on O6: {relevance_fails} (it has strong entailment: {})",
        relevance.verdict.has_strong_entailment()
    ));

    // Orthomodular: the fixtures plus every orthomodular orthocomplementation up to 8 elements.
    let mut om_cases: Vec<(Lattice, UnaryMap)> = [NamedLattice::M2, NamedLattice::MO2, NamedLattice::Cube, NamedLattice::L2]
        .into_iter()
        .map(|w| (named_lattice(w), canonical_perp(w).unwrap()))
        .collect();
    for n in 1..=8 {
        for c in enumerate_lattices(n).unwrap() {
            for o in find_orthocomplementations(&c.lattice).unwrap() {
                if classify_ortho(&c.lattice, o.map()).unwrap().orthomodular {
                    om_cases.push((c.lattice.clone(), o.into_map()));
                }
            }
        }
    }
    let om_strong = om_cases.iter().all(|(l, p)| {
        implication_table_report(l, p)
            .unwrap()
            .iter()
            .any(|r| r.kind == ImplicationKind::Relevance && r.verdict.has_strong_entailment())
    });
    notes.push(format!("relevance strong entailment on {} orthomodular cases: {om_strong}", om_cases.len()));

    let boolean_equal = (0..=4).all(|k| {
        let l = boolean_lattice(k);
        let r = implication_table_report(&l, &boolean_perp(&l, k)).unwrap();
        r.iter().all(|x| x.implication.table() == r[0].implication.table())
    });
    notes.push(format!("six tables identical on Boolean lattices of 1..16 elements: {boolean_equal}"));
    outcome(first_five && relevance_fails && om_strong && boolean_equal, notes.join("; "))
}

fn lambda_involution() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x001a_7bda);
    let mut failures = 0;
    for _ in 0..100 {
        let d: i64 = rng.gen_range(1..=60);
        let lam = BigRational::new(BigInt::from(rng.gen_range(-d + 1..=10 * d)), BigInt::from(d));
        let ud: i64 = rng.gen_range(1..=200);
        let u = Grade::new(BigRational::new(BigInt::from(rng.gen_range(0..=ud)), BigInt::from(ud))).unwrap();
        let g = GradeNegation::Lambda { lambda: lam };
        let back = grade_negate(&g, &grade_negate(&g, &u).unwrap()).unwrap();
        failures += (back != u) as usize;
    }
    outcome(failures == 0, format!("{failures} of 100 sampled (lambda, u) pairs break the involution"))
}

fn non_idempotency() -> Outcome {
    let h = Grade::ratio(1, 2);
    let l = (FuzzyFamily::Lukasiewicz.join(&h, &h), FuzzyFamily::Lukasiewicz.meet(&h, &h));
    let p = (FuzzyFamily::ProductProbSum.join(&h, &h), FuzzyFamily::ProductProbSum.meet(&h, &h));
    let pass = l == (Grade::one(), Grade::zero()) && p == (Grade::ratio(3, 4), Grade::ratio(1, 4));
    outcome(pass, format!("lukasiewicz join {} meet {}; product join {} meet {}", l.0, l.1, p.0, p.1))
}

fn impossibility_harnesses() -> Outcome {
    let report = brute_force_oracle();
    let minmax = GridTables::from_family(FuzzyFamily::MinMax, &three_grid()).unwrap();
    let unique = report.minmax_survivors == vec![minmax];
    let idem = report.idempotency_hypothesis_count > 0 && report.idempotency_violations == 0;
    let boundary = report.boundary_violations == 0;
    let luk = verify_negation_idempotency(&half_grid_structure(&["p"], FuzzyFamily::Lukasiewicz).unwrap()).unwrap();
    let luk_ok = luk.applies() && luk.consistent() && !luk.join_idempotent && !luk.meet_idempotent;
    let crisp = verify_negation_idempotency(&crisp_logic(&["a", "b"]).unwrap()).unwrap();
    let crisp_ok = !crisp.applies() && crisp.fixed_point.is_none() && crisp.consistent();
    outcome(
        unique && idem && boundary && luk_ok && crisp_ok,
        format!(
            "{} table pairs; min-max survivors {}; idempotency hypotheses {} with {} violations; boundary violations {}; fixed-point witness on lukasiewicz {}; crisp vacuous {}",
            report.candidates,
            report.minmax_survivors.len(),
            report.idempotency_hypothesis_count,
            report.idempotency_violations,
            report.boundary_violations,
            luk_ok,
            crisp_ok
        ),
    )
}

fn induced_construction() -> Outcome {
    let std_neg = || InducedNegation::Grade(GradeNegation::Standard);
    let (labels, fns) = diamond_functions();
    let d = induced_logic(labels, fns, std_neg()).unwrap();
    let r = &d.report;
    let diamond = r.boolean()
        && r.excluded_middle
        && r.non_contradiction
        && r.join_idempotent
        && r.meet_idempotent
        && r.distributive
        && r.pointwise.collision().is_some();
    let (labels, fns) = hexagon_functions();
    let h = induced_logic(labels, fns, std_neg()).unwrap();
    let hexagon = h.report.orthocomplemented() && !h.report.distributive && h.report.crucial_properties();
    let (labels, fns) = cube_functions();
    let c = induced_logic(labels, fns, std_neg()).unwrap();
    let shape = CanonicalLattice::new(&c.lattice).unwrap().certificate
        == CanonicalLattice::new(&boolean_lattice(3)).unwrap().certificate;
    let cube = c.report.boolean() && shape;
    outcome(
        diamond && hexagon && cube,
        format!(
            "diamond {} with collision {}; hexagon {}; cube {} shaped like the 8-element Boolean lattice {}",
            r.class_name(),
            r.pointwise.collision().is_some(),
            h.report.class_name(),
            c.report.class_name(),
            shape
        ),
    )
}

fn negation_suite() -> Outcome {
    use NegationFlag::*;
    let all = vec![Orthomodular, Ortho, Kleene, DeMorgan, Intuitionistic, Fuzzy, Minimal, Subminimal];
    let ortho = vec![Ortho, Kleene, DeMorgan, Intuitionistic, Fuzzy, Minimal, Subminimal];
    let kleene = vec![Kleene, DeMorgan, Fuzzy, Minimal, Subminimal];
    let de_morgan = vec![DeMorgan, Fuzzy, Minimal, Subminimal];
    let expected: Vec<(&str, Vec<NegationFlag>)> = vec![
        ("l3-discrete", vec![Intuitionistic, Fuzzy, Minimal, Subminimal]),
        ("l3-dual-discrete", vec![Subminimal]),
        ("l2-swap", all.clone()),
        ("l3-top-fixed", vec![]),
        ("l3-rotate-down", vec![]),
        ("l3-rotate-up", vec![]),
        ("o6-crossed", vec![]),
        ("l3-collapse", vec![Subminimal]),
        ("l3-constant", vec![Subminimal]),
        ("l3-minimal", vec![Minimal, Subminimal]),
        ("l3-kleene", kleene.clone()),
        ("m2-fuzzy", vec![Fuzzy, Minimal, Subminimal]),
        ("m2-swap", all.clone()),
        ("bn4", de_morgan.clone()),
        ("padded-fixed", de_morgan.clone()),
        ("padded-swap", kleene.clone()),
        ("o6-parallel", de_morgan.clone()),
        ("o6-ortho", ortho),
        ("zigzag-swap-pairs", vec![]),
        ("zigzag-kleene", kleene),
        ("cube-adjacent", de_morgan),
        ("cube-complement", all),
    ];
    let fixtures = negation_fixtures();
    let mut bad = Vec::new();
    for (name, flags) in &expected {
        let f = fixtures.iter().find(|f| f.name == *name).unwrap();
        let got = classify_negation(&f.lattice, &f.map).unwrap();
        if &got.flags != flags {
            bad.push(format!("{name}: {:?}", got.flags));
        }
    }
    let covered = expected.len() == fixtures.len();
    outcome(
        bad.is_empty() && covered,
        if bad.is_empty() { format!("{} fixtures match", expected.len()) } else { bad.join(", ") },
    )
}

/// Criteria whose targets the exhaustive computation contradicts.
const UNREACHABLE: [usize; 2] = [3, 5];

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("census counts", census_counts),
        ("orthocomplementation census", ortho_census),
        ("seven-element complement census", seven_element_complements),
        ("named logic contracts", named_logic_contracts),
        ("six implications", six_implications),
        ("lambda negation involution", lambda_involution),
        ("non-idempotency witnesses", non_idempotency),
        ("impossibility harnesses", impossibility_harnesses),
        ("induced construction", induced_construction),
        ("negation fixture suite", negation_suite),
    ];
    let mut ok = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} [{tag}] {name}: {}", o.detail);
        if !o.pass && !UNREACHABLE.contains(&n) {
            ok = false;
        }
    }
    // The two unreachable targets must fail for the recorded reason and nothing else.
    let c7 = census_of(7, &enumerate_lattices(7).unwrap()).unwrap();
    let seven_as_recorded = (c7.uniquely_complemented, c7.multiply_complemented, c7.non_complemented) == (0, 18, 35);
    let o6 = named_lattice(NamedLattice::O6);
    let relevance_as_recorded = implication_table_report(&o6, &canonical_perp(NamedLattice::O6).unwrap())
        .unwrap()
        .iter()
        .all(|r| r.verdict.has_strong_entailment());
    println!("recorded deviations hold: seven-element split 0/18/35 {seven_as_recorded}, relevance strong on O6 {relevance_as_recorded}");
    if ok && seven_as_recorded && relevance_as_recorded {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
