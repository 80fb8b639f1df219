//! `ortholat`: check, classify, tabulate and draw finite lattices and logics.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ortholat_core::census::{census_of, enumerate_lattices_with_cap, CENSUS_CAP};
use ortholat_core::complement::complement_class;
use ortholat_core::dot::to_dot;
use ortholat_core::fuzzy::fixtures::half_grid_structure;
use ortholat_core::fuzzy::harness::{five_grid, three_grid};
use ortholat_core::fuzzy::{
    brute_force_oracle, induced_logic, verify_idempotency_theorem, verify_minmax_boundary, verify_minmax_theorem,
    verify_negation_idempotency, FuzzyFamily, TheoremReport,
};
use ortholat_core::implication::{implication_table_report, ImplicationTable};
use ortholat_core::{
    build_implication, builtin_logic, classify_negation, classify_ortho, find_orthocomplementations, is_distributive,
    is_modular, logic_class, validate_implication, verify_axioms, Error, Implication, ImplicationKind, ImplicationVerdict, Lattice,
    NegationClass, NegationFlag, Poset, StructureDocument, UnaryMap,
};

const DEFAULT_CARRIER_CAP: usize = 64;

#[derive(Parser)]
#[command(name = "ortholat", version, about = "Finite lattices, negations, implications and fuzzy subset logics")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the order, test the lattice property and the lattice axioms.
    Check { path: PathBuf },
    /// Lattice, complement, ortho, negation and logic classification.
    Classify(Source),
    /// Render an implication table.
    Table {
        #[command(flatten)]
        source: Source,
        /// Formula kind (classical, sasaki, dishkant, kalmbach, non_tollens, relevance) or `all`.
        #[arg(long)]
        kind: Option<String>,
        /// Mark cells that differ from `¬x ∨ y`.
        #[arg(long)]
        diff_classical: bool,
    },
    /// Hasse diagram in DOT.
    Dot { path: PathBuf },
    /// Enumerate unlabeled lattices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        /// Write one JSON document per lattice into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fuzzy subset logic harnesses.
    Fuzzy {
        #[command(subcommand)]
        command: FuzzyCommand,
    },
}

#[derive(Args)]
struct Source {
    /// Structure document.
    path: Option<PathBuf>,
    /// Built-in logic instead of a document.
    #[arg(long, conflicts_with = "path")]
    builtin: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    All,
    Modular,
    Distributive,
    NonModular,
    Complemented,
    UniquelyComplemented,
    Orthocomplemented,
}

#[derive(Subcommand)]
enum FuzzyCommand {
    /// Check one of the operator theorems on a grade grid.
    Verify {
        #[arg(long, value_parser = ["1.24", "1.25", "1.26", "1.28"])]
        theorem: String,
        #[arg(long, default_value = "minmax")]
        family: String,
        /// Grid size, 3 or 5.
        #[arg(long, default_value_t = 5)]
        grid: usize,
        /// Exhaustive search over every monotone table pair on the 3-grade grid.
        #[arg(long)]
        brute_force: bool,
        /// Structure document with membership grades and a family (fixed-point theorem only).
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Build the order-induced logic from membership functions.
    Induce {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 64,
            Error::Schema(_)
            | Error::UnknownLabel(_)
            | Error::DuplicateLabel(_)
            | Error::UnknownName(_)
            | Error::PartialMap { .. }
            | Error::OutOfRange(_)
            | Error::SizeCap { .. }
            | Error::UniverseTooLarge { .. } => 65,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if cli.json {
                println!("{}", json!({ "error": f.message }));
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check { path } => check(path, cli.json),
        Command::Classify(src) => classify(src, cli.json),
        Command::Table { source, kind, diff_classical } => table(source, kind.as_deref(), *diff_classical, cli.json),
        Command::Dot { path } => dot(path),
        Command::Enumerate { n, filter, out } => enumerate(*n, *filter, out.as_deref(), cli.json),
        Command::Fuzzy { command } => match command {
            FuzzyCommand::Verify { theorem, family, grid, brute_force, input } => {
                fuzzy_verify(theorem, family, *grid, *brute_force, input.as_deref(), cli.json)
            }
            FuzzyCommand::Induce { input } => fuzzy_induce(input, cli.json),
        },
    }
}

fn size_cap(default: usize) -> usize {
    std::env::var("ORTHOLAT_SIZE_CAP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(default)
}

fn load(path: &Path) -> Result<StructureDocument, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure { code: 64, message: format!("cannot read {}: {e}", path.display()) })?;
    let doc = StructureDocument::from_json(&text)?;
    let cap = size_cap(DEFAULT_CARRIER_CAP);
    if doc.elements.len() > cap {
        return Err(Error::SizeCap { n: doc.elements.len(), cap }.into());
    }
    Ok(doc)
}

/// A lattice with optional negation and implication, from a document or a built-in logic.
struct Loaded {
    lattice: Lattice,
    negation: Option<UnaryMap>,
    implication: Option<Implication>,
}

fn load_source(src: &Source) -> Result<Loaded, Failure> {
    match (&src.path, &src.builtin) {
        (_, Some(name)) => {
            let s = builtin_logic(name)?;
            Ok(Loaded { lattice: s.lattice, negation: Some(s.negation), implication: Some(s.implication) })
        }
        (Some(path), None) => {
            let doc = load(path)?;
            let lattice = Lattice::from_poset(doc.poset()?)?;
            let negation = doc.negation_map(&lattice)?;
            let implication = doc.implication(&lattice, negation.as_ref())?;
            Ok(Loaded { lattice, negation, implication })
        }
        (None, None) => Err(Failure { code: 64, message: "give a document path or --builtin".into() }),
    }
}

fn labels(l: &Lattice, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| l.label(i).to_string()).collect()
}

fn check(path: &Path, as_json: bool) -> Outcome {
    let doc = load(path)?;
    let poset = match doc.poset() {
        Ok(p) => p,
        Err(e @ (Error::CyclicOrder(_) | Error::InvalidOrder(_))) => {
            if as_json {
                println!("{}", json!({ "poset": false, "lattice": false, "reason": e.to_string() }));
            } else {
                println!("poset: no, {e}");
            }
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };
    if let Some((a, b, kind)) = poset.lattice_witness() {
        let (a, b) = (poset.label(a), poset.label(b));
        if as_json {
            println!(
                "{}",
                json!({ "poset": true, "lattice": false, "bounded": poset.is_bounded(), "witness": [a, b], "missing": kind })
            );
        } else {
            println!("poset: yes");
            println!("lattice: no, {{{a}, {b}}} have no {kind}");
            println!("bounded: {}", yes_no(poset.is_bounded()));
        }
        return Ok(2);
    }
    let lattice = Lattice::from_poset(poset)?;
    let axioms = verify_axioms(&lattice);
    let failures: Vec<&str> = axioms.failures().map(|c| c.name).collect();
    let bounded = lattice.bounds().is_ok();
    if as_json {
        println!(
            "{}",
            json!({ "poset": true, "lattice": true, "bounded": bounded, "axioms": axioms.checks, "elements": lattice.len() })
        );
    } else {
        println!("poset: yes");
        println!("lattice: yes, bounded: {}", yes_no(bounded));
        if failures.is_empty() {
            println!("axioms: all {} hold", axioms.checks.len());
        } else {
            println!("axioms: failing {}", failures.join(", "));
        }
    }
    Ok(if failures.is_empty() { 0 } else { 1 })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classify(src: &Source, as_json: bool) -> Outcome {
    let Loaded { lattice: l, negation, .. } = load_source(src)?;
    let modular = is_modular(&l)?;
    let distributive = is_distributive(&l)?;
    let complements = complement_class(&l)?;
    let ortho_maps = if l.is_empty() { 0 } else { find_orthocomplementations(&l)?.len() };
    let mut summary = Vec::new();
    let mut out = json!({
        "elements": l.len(),
        "modular": modular.holds,
        "modular_witness": modular.witness.as_ref().map(|w| labels(&l, w)),
        "distributive": distributive.holds,
        "distributive_witness": distributive.witness.as_ref().map(|w| labels(&l, w)),
        "complements": complements.kind,
        "orthocomplementations": ortho_maps,
    });
    let mut ortho_summary = None;
    if let Some(neg) = &negation {
        let class = classify_negation(&l, neg)?;
        if class.has(NegationFlag::Ortho) {
            let f = classify_ortho(&l, neg)?;
            out["ortho"] = json!(f);
            ortho_summary = Some(if f.boolean {
                "Boolean".to_string()
            } else if f.modular_ortho {
                "modular orthocomplemented".to_string()
            } else if f.orthomodular {
                "orthomodular".to_string()
            } else {
                "orthocomplemented, non-orthomodular".to_string()
            });
        }
        out["negation"] = json!({
            "flags": class.flags,
            "strongest": class.strongest(),
        });
        out["logic"] = json!(logic_class(&l, neg)?.to_string());
    }
    summary.push(ortho_summary.unwrap_or_else(|| {
        if distributive.holds {
            "distributive".to_string()
        } else if modular.holds {
            "modular, non-distributive".to_string()
        } else {
            "non-modular".to_string()
        }
    }));
    summary.push(complements.kind.to_string());
    let mut line = summary.join(", ");
    if let Some(neg) = &negation {
        let class = classify_negation(&l, neg)?;
        line.push_str(&format!("; negation: {}", negation_names(&class).join(", ")));
        line.push_str(&format!("; logic: {}", logic_class(&l, neg)?));
    }
    if as_json {
        out["summary"] = json!(line);
        println!("{out}");
    } else {
        println!("modular: {}", verdict_text(&l, modular.holds, modular.witness.as_deref()));
        println!("distributive: {}", verdict_text(&l, distributive.holds, distributive.witness.as_deref()));
        println!("complements: {}", complements.kind);
        println!("orthocomplementations: {ortho_maps}");
        if let Some(neg) = &negation {
            let flags: Vec<&str> = classify_negation(&l, neg)?.flags.iter().map(|f| f.name()).collect();
            println!("negation flags: {}", if flags.is_empty() { "none".into() } else { flags.join(", ") });
        }
        println!("{line}");
    }
    Ok(0)
}

/// The strongest class, and fuzzy beside it unless ortho already covers it.
fn negation_names(class: &NegationClass) -> Vec<&'static str> {
    let Some(top) = class.strongest() else {
        return vec!["none"];
    };
    let mut names = vec![top.name()];
    if class.has(NegationFlag::Fuzzy) && !matches!(top, NegationFlag::Orthomodular | NegationFlag::Ortho | NegationFlag::Fuzzy) {
        names.push(NegationFlag::Fuzzy.name());
    }
    names
}

fn verdict_text(l: &Lattice, holds: bool, witness: Option<&[usize]>) -> String {
    match (holds, witness) {
        (true, _) => "yes".into(),
        (false, Some(w)) => format!("no, witness ({})", labels(l, w).join(", ")),
        (false, None) => "no".into(),
    }
}

fn table(src: &Source, kind: Option<&str>, diff: bool, as_json: bool) -> Outcome {
    let loaded = load_source(src)?;
    let l = &loaded.lattice;
    let neg = loaded.negation.as_ref();
    let need_neg = || neg.ok_or(Failure { code: 65, message: "a negation is required".into() });
    let classical = if diff { Some(build_implication(l, need_neg()?, ImplicationKind::Classical)?) } else { None };
    let tables: Vec<(String, Implication)> = match kind {
        Some("all") => implication_table_report(l, need_neg()?)?
            .into_iter()
            .map(|r| (r.kind.to_string(), r.implication))
            .collect(),
        Some(k) => {
            let k: ImplicationKind = k.parse()?;
            let n = need_neg()?;
            if !classify_negation(l, n)?.has(NegationFlag::Ortho) {
                return Err(Error::NotOrtho.into());
            }
            vec![(k.to_string(), build_implication(l, n, k)?)]
        }
        None => match loaded.implication {
            Some(i) => vec![(src.builtin.clone().unwrap_or_else(|| "implication".into()), i)],
            None => return Err(Failure { code: 65, message: "no implication in the input; pass --kind".into() }),
        },
    };
    let mut docs = Vec::new();
    for (name, imp) in &tables {
        let t = ImplicationTable::new(l, imp, classical.as_ref());
        let verdict = match neg {
            Some(n) => Some(validate_implication(l, n, imp)?),
            None => None,
        };
        if as_json {
            docs.push(json!({
                "name": name,
                "order": t.order,
                "cells": t.cells,
                "marked": if diff { json!(t.marked) } else { Value::Null },
                "marked_count": t.marked_count(),
                "verdict": verdict.as_ref().map(|v| verdict_json(l, v)),
            }));
        } else {
            println!("{name}");
            print!("{}", t.render());
            if diff {
                println!("cells differing from classical: {}", t.marked_count());
            }
            if let Some(v) = verdict {
                let flags = v.flags();
                println!("contracts: {}", if flags.is_empty() { "not an implication".into() } else { flags.join(", ") });
            }
        }
    }
    if as_json {
        println!("{}", if docs.len() == 1 { docs.remove(0) } else { Value::Array(docs) });
    }
    Ok(0)
}

fn verdict_json(l: &Lattice, v: &ImplicationVerdict) -> Value {
    let w = |o: &Option<Vec<usize>>| o.as_ref().map(|w| labels(l, w));
    json!({
        "flags": v.flags(),
        "weak_entailment": w(&v.weak_entailment),
        "strong_entailment": w(&v.strong_entailment),
        "weak_modus_ponens": w(&v.weak_modus_ponens),
        "strong_modus_ponens": w(&v.strong_modus_ponens),
        "converse_entailment": w(&v.converse_entailment),
    })
}

fn dot(path: &Path) -> Outcome {
    let doc = load(path)?;
    let p: Poset = match doc.poset() {
        Ok(p) => p,
        Err(e @ (Error::CyclicOrder(_) | Error::InvalidOrder(_))) => {
            return Err(Failure { code: 1, message: e.to_string() });
        }
        Err(e) => return Err(e.into()),
    };
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("poset");
    print!("{}", to_dot(&p, name));
    Ok(0)
}

fn enumerate(n: usize, filter: Filter, out: Option<&Path>, as_json: bool) -> Outcome {
    let cap = size_cap(CENSUS_CAP);
    let all = enumerate_lattices_with_cap(n, cap)?;
    let counts = census_of(n, &all)?;
    let mut kept = Vec::new();
    for c in &all {
        let l = &c.lattice;
        let keep = match filter {
            Filter::All => true,
            Filter::Modular => is_modular(l)?.holds,
            Filter::NonModular => !is_modular(l)?.holds,
            Filter::Distributive => is_distributive(l)?.holds,
            Filter::Complemented => !l.is_empty() && complement_class(l)?.is_complemented(),
            Filter::UniquelyComplemented => {
                !l.is_empty() && complement_class(l)?.kind == ortholat_core::ComplementKind::UniquelyComplemented
            }
            Filter::Orthocomplemented => !l.is_empty() && !find_orthocomplementations(l)?.is_empty(),
        };
        if keep {
            kept.push(c);
        }
    }
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| Failure { code: 1, message: format!("cannot create {}: {e}", dir.display()) })?;
        for (i, c) in kept.iter().enumerate() {
            let file = dir.join(format!("lattice-{n}-{:03}.json", i + 1));
            fs::write(&file, StructureDocument::from_lattice(&c.lattice, None).to_json() + "\n")
                .map_err(|e| Failure { code: 1, message: format!("cannot write {}: {e}", file.display()) })?;
        }
    }
    if as_json {
        let docs: Vec<Value> = kept
            .iter()
            .map(|c| serde_json::to_value(StructureDocument::from_lattice(&c.lattice, None)).expect("serializable"))
            .collect();
        println!("{}", json!({ "counts": counts, "selected": kept.len(), "lattices": docs }));
    } else {
        println!(
            "n={n}: {} lattices, {} modular, {} distributive; complements {} unique / {} multiple / {} none; {} orthocomplemented",
            counts.lattices,
            counts.modular,
            counts.distributive,
            counts.uniquely_complemented,
            counts.multiply_complemented,
            counts.non_complemented,
            counts.orthocomplemented
        );
        println!("selected: {}", kept.len());
        for c in &kept {
            let p = c.lattice.poset();
            let covers: Vec<String> = p.covers().iter().map(|&(a, b)| format!("{}<{}", p.label(a), p.label(b))).collect();
            println!("  {}", covers.join(" "));
        }
    }
    Ok(0)
}

fn theorem_json(r: &TheoremReport) -> Value {
    serde_json::to_value(r).expect("serializable")
}

fn print_theorem(r: &TheoremReport) {
    println!("theorem {}", r.theorem);
    for (group, clauses) in [("hypothesis", &r.hypotheses), ("conclusion", &r.conclusions)] {
        for c in clauses.iter() {
            match &c.witness {
                None => println!("  {group} {}: holds", c.name),
                Some(w) => println!(
                    "  {group} {}: fails at ({})",
                    c.name,
                    w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
                ),
            }
        }
    }
    println!("consistent: {}", yes_no(r.consistent()));
}

fn fuzzy_verify(
    theorem: &str,
    family: &str,
    grid: usize,
    brute: bool,
    input: Option<&Path>,
    as_json: bool,
) -> Outcome {
    if theorem == "1.28" {
        let structure = match input {
            Some(p) => load(p)?
                .family_structure()?
                .ok_or(Failure { code: 65, message: "document needs membership grades and a family".into() })?,
            None => half_grid_structure(&["p"], family.parse::<FuzzyFamily>()?)?,
        };
        let r = verify_negation_idempotency(&structure)?;
        if as_json {
            println!("{}", json!({ "theorem": theorem, "applies": r.applies(), "consistent": r.consistent(), "report": r }));
        } else {
            match r.fixed_point {
                Some((i, x)) => println!("fixed point: {} at {}", structure.labels()[i], structure.universe()[x]),
                None => println!("fixed point: none, the theorem is vacuous here"),
            }
            println!("excluded middle: {}", yes_no(r.excluded_middle));
            println!("non-contradiction: {}", yes_no(r.non_contradiction));
            println!("join idempotent: {}", yes_no(r.join_idempotent));
            println!("meet idempotent: {}", yes_no(r.meet_idempotent));
            for step in &r.witness_chain {
                println!("  {step}");
            }
            println!("consistent: {}", yes_no(r.consistent()));
        }
        return Ok(if r.consistent() { 0 } else { 1 });
    }
    if brute {
        let r = brute_force_oracle();
        let ok = r.minmax_survivors.len() == 1 && r.idempotency_violations == 0 && r.boundary_violations == 0;
        if as_json {
            println!(
                "{}",
                json!({
                    "theorem": theorem,
                    "candidates": r.candidates,
                    "minmax_survivors": r.minmax_survivors.len(),
                    "idempotency_hypothesis_count": r.idempotency_hypothesis_count,
                    "idempotency_violations": r.idempotency_violations,
                    "boundary_hypothesis_count": r.boundary_hypothesis_count,
                    "boundary_violations": r.boundary_violations,
                })
            );
        } else {
            println!("table pairs examined: {}", r.candidates);
            match theorem {
                "1.24" => println!(
                    "boundary hypotheses hold for {}; violations {}",
                    r.boundary_hypothesis_count, r.boundary_violations
                ),
                "1.25" => println!(
                    "idempotency hypotheses hold for {}; violations {}",
                    r.idempotency_hypothesis_count, r.idempotency_violations
                ),
                _ => println!("tables satisfying every min-max hypothesis: {}", r.minmax_survivors.len()),
            }
        }
        return Ok(if ok { 0 } else { 1 });
    }
    let fam: FuzzyFamily = family.parse()?;
    let grades = match grid {
        3 => three_grid(),
        5 => five_grid(),
        other => return Err(Failure { code: 64, message: format!("grid must be 3 or 5, got {other}") }),
    };
    let r = match theorem {
        "1.24" => verify_minmax_boundary(&fam, &grades),
        "1.25" => verify_idempotency_theorem(&fam, &grades),
        _ => verify_minmax_theorem(&fam, &grades),
    };
    if as_json {
        println!("{}", theorem_json(&r));
    } else {
        print_theorem(&r);
    }
    Ok(if r.consistent() { 0 } else { 1 })
}

fn fuzzy_induce(input: &Path, as_json: bool) -> Outcome {
    let doc = load(input)?;
    let fns = doc.functions().ok_or(Failure { code: 65, message: "document has no membership grades".into() })?;
    let logic = induced_logic(doc.elements.clone(), fns, doc.induced_negation()?)?;
    let r = &logic.report;
    if as_json {
        let mut v = serde_json::to_value(r).expect("serializable");
        v["class"] = json!(r.class_name());
        v["boolean"] = json!(r.boolean());
        println!("{v}");
    } else {
        println!("class: {}", r.class_name());
        println!("modular: {}", yes_no(r.modular));
        println!("distributive: {}", yes_no(r.distributive));
        println!("complements: {}", r.complement_kind);
        println!(
            "negation: {}",
            r.negation.flags.iter().map(|f| f.name()).collect::<Vec<_>>().join(", ")
        );
        println!("excluded middle: {}", yes_no(r.excluded_middle));
        println!("non-contradiction: {}", yes_no(r.non_contradiction));
        println!("idempotent: join {}, meet {}", yes_no(r.join_idempotent), yes_no(r.meet_idempotent));
        match r.pointwise.collision() {
            None => println!("pointwise: consistent"),
            Some(w) => {
                let s = &logic.structure;
                let name = |t: (usize, usize, usize)| format!("{}({}, {}) at {}", w.operator, s.labels()[t.0], s.labels()[t.1], s.universe()[t.2]);
                println!(
                    "pointwise: no, grades ({}, {}) give {} for {} but {} for {}",
                    w.input.0,
                    w.input.1,
                    w.outputs.0,
                    name(w.first),
                    w.outputs.1,
                    name(w.second)
                );
            }
        }
    }
    Ok(0)
}
