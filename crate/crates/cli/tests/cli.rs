use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ortholat_core::dot::dot_counts;
use serde_json::Value;
use tempfile::TempDir;

const O6: &str = r#"{"elements": ["0","p","q","r","s","1"],
 "covers": [["0","p"],["p","q"],["q","1"],["0","r"],["r","s"],["s","1"]],
 "negation": {"0":"1","1":"0","p":"s","s":"p","q":"r","r":"q"}}"#;

const BOWTIE: &str = r#"{"elements": ["0","a","b","c","d","1"],
 "covers": [["0","a"],["0","b"],["a","c"],["a","d"],["b","c"],["b","d"],["c","1"],["d","1"]]}"#;

const M3: &str = r#"{"elements": ["0","a","b","c","1"],
 "covers": [["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]}"#;

const SQUARE_SWAP: &str = r#"{"elements": ["0","a","b","1"],
 "covers": [["0","a"],["0","b"],["a","1"],["b","1"]],
 "negation": {"0":"1","1":"0","a":"b","b":"a"}}"#;

struct Run {
    code: i32,
    stdout: String,
}

fn run(args: &[&str]) -> Run {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ortholat"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let Output { status, stdout, .. } = cmd.output().expect("binary runs");
    Run { code: status.code().expect("exit code"), stdout: String::from_utf8(stdout).unwrap() }
}

fn doc(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let o6 = doc(&dir, "o6.json", O6);
    let r = run(&["check", s(&o6)]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("lattice: yes, bounded: yes"));

    let bowtie = doc(&dir, "bowtie.json", BOWTIE);
    let r = run(&["check", s(&bowtie)]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.contains("{a, b} have no least upper bound"), "{}", r.stdout);
    let j: Value = serde_json::from_str(&run(&["check", s(&bowtie), "--json"]).stdout).unwrap();
    assert_eq!(j["witness"], serde_json::json!(["a", "b"]));

    let cyclic = doc(&dir, "cyc.json", r#"{"elements": ["a","b"], "covers": [["a","b"],["b","a"]]}"#);
    assert_eq!(run(&["check", s(&cyclic)]).code, 1);
    assert_eq!(run(&["check", s(&doc(&dir, "bad.json", "{"))]).code, 64);
    assert_eq!(run(&["check", s(&doc(&dir, "schema.json", r#"{"elements": [1]}"#))]).code, 65);
    let unknown = doc(&dir, "unknown.json", r#"{"elements": ["a"], "covers": [["a","z"]]}"#);
    assert_eq!(run(&["check", s(&unknown)]).code, 65);
    assert_eq!(run(&["check", "/nonexistent/doc.json"]).code, 64);
    assert_eq!(run(&["frobnicate"]).code, 64);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn classify_summaries() {
    let dir = TempDir::new().unwrap();
    let o6 = doc(&dir, "o6.json", O6);
    let r = run(&["classify", s(&o6)]);
    assert_eq!(r.code, 0);
    assert!(
        r.stdout.contains("orthocomplemented, non-orthomodular, multiply complemented; negation: ortho; logic: ortho"),
        "{}",
        r.stdout
    );
    let r = run(&["classify", "--builtin", "heyting3"]);
    assert!(r.stdout.contains("negation: intuitionistic, fuzzy; logic: intuitionistic"), "{}", r.stdout);
    let r = run(&["classify", s(&doc(&dir, "sq.json", SQUARE_SWAP))]);
    assert!(r.stdout.contains("Boolean, uniquely complemented") && r.stdout.contains("logic: Boolean"), "{}", r.stdout);
    let j: Value = serde_json::from_str(&run(&["classify", s(&o6), "--json"]).stdout).unwrap();
    assert_eq!(j["modular"], false);
    assert_eq!(j["orthocomplementations"], 1);
}

fn marked(builtin: &str) -> u64 {
    let r = run(&["table", "--builtin", builtin, "--diff-classical", "--json"]);
    assert_eq!(r.code, 0);
    let j: Value = serde_json::from_str(&r.stdout).unwrap();
    j["marked_count"].as_u64().unwrap()
}

#[test]
fn tables() {
    assert_eq!(marked("lukasiewicz3"), 1);
    assert_eq!(marked("rm3"), 2);
    assert_eq!(marked("classical2"), 0);
    let r = run(&["table", "--builtin", "lukasiewicz3", "--diff-classical"]);
    let starred: Vec<&str> = r.stdout.lines().filter(|l| l.contains('*')).collect();
    assert_eq!(starred.len(), 1);
    assert!(starred[0].starts_with("n |"), "{}", r.stdout);

    let j: Value = serde_json::from_str(&run(&["table", "--builtin", "classical2", "--json"]).stdout).unwrap();
    assert_eq!(j["cells"], serde_json::json!([["1", "0"], ["1", "1"]]));

    let dir = TempDir::new().unwrap();
    let o6 = doc(&dir, "o6.json", O6);
    let j: Value = serde_json::from_str(&run(&["table", s(&o6), "--kind", "all", "--json"]).stdout).unwrap();
    let tables = j.as_array().unwrap();
    assert_eq!(tables.len(), 6);
    for t in &tables[..5] {
        assert_eq!(t["verdict"]["flags"], serde_json::json!(["strong entailment", "weak modus ponens"]), "{}", t["name"]);
    }
    assert_eq!(run(&["table", "--builtin", "kleene3", "--kind", "sasaki"]).code, 1);
    assert_eq!(run(&["table", "--builtin", "kleene3", "--kind", "all"]).code, 1);
}

#[test]
fn dot_output() {
    let dir = TempDir::new().unwrap();
    let chain = doc(&dir, "chain.json", r#"{"elements": ["0","1"], "covers": [["0","1"]]}"#);
    let cases = [(chain, (2, 1)), (doc(&dir, "o6.json", O6), (6, 6)), (doc(&dir, "m3.json", M3), (5, 6))];
    for (path, expected) in &cases {
        let r = run(&["dot", s(path)]);
        assert_eq!(r.code, 0);
        assert!(r.stdout.starts_with("digraph"));
        assert_eq!(dot_counts(&r.stdout), *expected, "{}", r.stdout);
        assert_eq!(run(&["dot", s(path)]).stdout, r.stdout);
    }
}

#[test]
fn enumerate_writes_documents() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("lattices");
    let r = run(&["enumerate", "--n", "6", "--filter", "modular", "--out", s(&out)]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("n=6: 15 lattices, 8 modular, 5 distributive"), "{}", r.stdout);
    let mut files: Vec<_> = std::fs::read_dir(&out).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 8);
    for f in &files {
        assert_eq!(run(&["check", s(f)]).code, 0);
    }
    let j: Value = serde_json::from_str(&run(&["enumerate", "--n", "6", "--filter", "orthocomplemented", "--json"]).stdout).unwrap();
    assert_eq!(j["selected"], 2);
    assert_eq!(run(&["enumerate", "--n", "9"]).code, 65);
    assert_eq!(run_env(&["enumerate", "--n", "6"], &[("ORTHOLAT_SIZE_CAP", "5")]).code, 65);
}

#[test]
fn fuzzy_commands() {
    for t in ["1.24", "1.25", "1.26"] {
        for fam in ["minmax", "product_prob_sum", "lukasiewicz"] {
            assert_eq!(run(&["fuzzy", "verify", "--theorem", t, "--family", fam]).code, 0, "{t} {fam}");
        }
    }
    let r = run(&["fuzzy", "verify", "--theorem", "1.26", "--brute-force"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("tables satisfying every min-max hypothesis: 1"));

    let j: Value =
        serde_json::from_str(&run(&["fuzzy", "verify", "--theorem", "1.28", "--family", "lukasiewicz", "--json"]).stdout)
            .unwrap();
    assert_eq!(j["applies"], true);
    assert_eq!(j["report"]["join_idempotent"], false);

    let dir = TempDir::new().unwrap();
    let grades = |x: &str, y: &str| format!(r#"{{"universe": ["x","y"], "grades": {{"x": "{x}", "y": "{y}"}}}}"#);
    let crisp = format!(
        r#"{{"elements": ["0","a","b","1"], "membership": {{"0": {}, "a": {}, "b": {}, "1": {}}}, "family": "min_max"}}"#,
        grades("0", "0"),
        grades("1", "0"),
        grades("0", "1"),
        grades("1", "1")
    );
    let crisp = doc(&dir, "crisp.json", &crisp);
    let r = run(&["fuzzy", "induce", "--in", s(&crisp)]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("class: Boolean"), "{}", r.stdout);
    let j: Value = serde_json::from_str(&run(&["fuzzy", "verify", "--theorem", "1.28", "--in", s(&crisp), "--json"]).stdout)
        .unwrap();
    assert_eq!(j["applies"], false);
    assert_eq!(j["consistent"], true);
}
