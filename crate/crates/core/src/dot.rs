//! Hasse diagrams in DOT.

use std::fmt::Write;

use crate::order::Poset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Bottom-to-top digraph: one node per element, one edge per cover, one rank per height.
pub fn to_dot(p: &Poset, name: &str) -> String {
    let h = p.heights();
    let mut nodes: Vec<&str> = p.labels().iter().map(String::as_str).collect();
    nodes.sort();
    let mut edges: Vec<(&str, &str)> = p.covers().into_iter().map(|(a, b)| (p.label(a), p.label(b))).collect();
    edges.sort();
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for n in &nodes {
        writeln!(out, "  {};", quote(n)).unwrap();
    }
    for (a, b) in &edges {
        writeln!(out, "  {} -> {};", quote(a), quote(b)).unwrap();
    }
    for level in 0..=h.iter().copied().max().unwrap_or(0) {
        let mut same: Vec<&str> = (0..p.len()).filter(|&i| h[i] == level).map(|i| p.label(i)).collect();
        if same.len() < 2 {
            continue;
        }
        same.sort();
        let list = same.iter().map(|s| quote(s)).collect::<Vec<_>>().join("; ");
        writeln!(out, "  {{ rank=same; {list}; }}").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Count node and edge statements, for tests and reports.
pub fn dot_counts(dot: &str) -> (usize, usize) {
    let body = dot.lines().map(str::trim);
    let edges = body.clone().filter(|l| l.contains("->")).count();
    let nodes = body.filter(|l| l.starts_with('"') && !l.contains("->")).count();
    (nodes, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{chain, named_lattice, NamedLattice};

    #[test]
    fn counts() {
        assert_eq!(dot_counts(&to_dot(chain(&["0", "1"]).poset(), "c")), (2, 1));
        assert_eq!(dot_counts(&to_dot(named_lattice(NamedLattice::O6).poset(), "o6")), (6, 6));
        assert_eq!(dot_counts(&to_dot(named_lattice(NamedLattice::M3).poset(), "m3")), (5, 6));
    }

    #[test]
    fn quoting() {
        assert!(to_dot(chain(&["a\"b"]).poset(), "x").contains("\"a\\\"b\";"));
    }
}
