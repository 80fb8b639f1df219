//! Finite partial orders stored as a dense `<=` matrix.

use std::collections::HashMap;

use crate::error::{BoundKind, Error, Result};
use crate::fuzzy::MembershipFn;

/// A finite poset. Elements are addressed by index; labels are kept for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    leq: Vec<bool>,
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

impl Poset {
    /// Build from labels and covering (or any generating) pairs `(lower, upper)`.
    /// The relation is closed reflexively and transitively.
    pub fn from_covers<S: AsRef<str>, T: AsRef<str>>(labels: &[S], pairs: &[(T, T)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let index = index_labels(&labels)?;
        let mut edges = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let a = a.as_ref();
            let b = b.as_ref();
            let i = *index.get(a).ok_or_else(|| Error::UnknownLabel(a.to_string()))?;
            let j = *index.get(b).ok_or_else(|| Error::UnknownLabel(b.to_string()))?;
            edges.push((i, j));
        }
        Self::from_index_pairs(labels, index, &edges)
    }

    /// Build from index pairs `(lower, upper)`.
    pub fn from_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let index = index_labels(&labels)?;
        let n = labels.len();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::OutOfRange(format!("pair ({a},{b}) on {n} elements")));
            }
        }
        Self::from_index_pairs(labels, index, pairs)
    }

    fn from_index_pairs(labels: Vec<String>, index: HashMap<String, usize>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            if a == b {
                continue;
            }
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::CyclicOrder(find_cycle(n, pairs, i, &labels)));
                }
            }
        }
        Ok(Poset { labels, index, leq })
    }

    /// Build from a full relation matrix, which must already be a partial order.
    pub fn from_matrix(labels: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n * n {
            return Err(Error::InvalidOrder(format!("matrix has {} entries, expected {}", leq.len(), n * n)));
        }
        let index = index_labels(&labels)?;
        for i in 0..n {
            if !leq[i * n + i] {
                return Err(Error::InvalidOrder(format!("`{}` is not <= itself", labels[i])));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::CyclicOrder(vec![labels[i].clone(), labels[j].clone()]));
                }
                if leq[i * n + j] {
                    for k in 0..n {
                        if leq[j * n + k] && !leq[i * n + k] {
                            return Err(Error::InvalidOrder(format!(
                                "not transitive at `{}` <= `{}` <= `{}`",
                                labels[i], labels[j], labels[k]
                            )));
                        }
                    }
                }
            }
        }
        Ok(Poset { labels, index, leq })
    }

    /// Build from a predicate; the predicate must describe a partial order.
    pub fn from_fn(labels: Vec<String>, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let leq = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::from_matrix(labels, leq)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Row-major `<=` matrix.
    pub fn matrix(&self) -> &[bool] {
        &self.leq
    }

    /// Same order with new labels.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::PartialMap { expected: self.len(), got: labels.len() });
        }
        let index = index_labels(&labels)?;
        Ok(Poset { labels, index, leq: self.leq.clone() })
    }

    /// Covering pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn upper_bounds(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&u| subset.iter().all(|&s| self.leq(s, u))).collect()
    }

    pub fn lower_bounds(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&l| subset.iter().all(|&s| self.leq(l, s))).collect()
    }

    /// Least element of `candidates`, if any.
    pub fn least_of(&self, candidates: &[usize]) -> Option<usize> {
        candidates.iter().copied().find(|&c| candidates.iter().all(|&d| self.leq(c, d)))
    }

    pub fn greatest_of(&self, candidates: &[usize]) -> Option<usize> {
        candidates.iter().copied().find(|&c| candidates.iter().all(|&d| self.leq(d, c)))
    }

    /// Least upper bound. For the empty subset this is the bottom, if one exists.
    pub fn lub(&self, subset: &[usize]) -> Option<usize> {
        self.least_of(&self.upper_bounds(subset))
    }

    pub fn glb(&self, subset: &[usize]) -> Option<usize> {
        self.greatest_of(&self.lower_bounds(subset))
    }

    pub fn bottom(&self) -> Option<usize> {
        self.glb(&(0..self.len()).collect::<Vec<_>>())
    }

    pub fn top(&self) -> Option<usize> {
        self.lub(&(0..self.len()).collect::<Vec<_>>())
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom().is_some() && self.top().is_some()
    }

    pub fn is_chain(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.comparable(a, b)))
    }

    /// First pair (in index order) lacking a join or a meet.
    pub fn lattice_witness(&self) -> Option<(usize, usize, BoundKind)> {
        let n = self.len();
        for a in 0..n {
            for b in a..n {
                if self.lub(&[a, b]).is_none() {
                    return Some((a, b, BoundKind::Join));
                }
                if self.glb(&[a, b]).is_none() {
                    return Some((a, b, BoundKind::Meet));
                }
            }
        }
        None
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice_witness().is_none()
    }

    /// Length of the longest chain from a minimal element up to each element.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (0..n).filter(|&j| self.lt(j, i)).count());
        let mut h = vec![0usize; n];
        for &i in &order {
            h[i] = (0..n).filter(|&j| self.lt(j, i)).map(|j| h[j] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Indices ordered by descending height, ties broken by label.
    pub fn display_order(&self) -> Vec<usize> {
        let h = self.heights();
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| h[b].cmp(&h[a]).then_with(|| self.labels[a].cmp(&self.labels[b])));
        idx
    }

    /// The opposite order.
    pub fn dual(&self) -> Poset {
        let n = self.len();
        let leq = (0..n * n).map(|k| self.leq(k % n, k / n)).collect();
        Poset { labels: self.labels.clone(), index: self.index.clone(), leq }
    }
}

fn find_cycle(n: usize, pairs: &[(usize, usize)], start: usize, labels: &[String]) -> Vec<String> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in pairs {
        if a != b {
            adj[a].push(b);
        }
    }
    // BFS back to start for a shortest cycle.
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for &s in &adj[start] {
        if prev[s] == usize::MAX {
            prev[s] = start;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        if v == start {
            break;
        }
        for &w in &adj[v] {
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut cycle = vec![labels[start].clone()];
    let mut v = prev[start];
    let mut guard = 0;
    while v != start && v != usize::MAX && guard <= n {
        cycle.push(labels[v].clone());
        v = prev[v];
        guard += 1;
    }
    cycle.reverse();
    cycle.rotate_right(1);
    cycle
}

/// The pointwise order on membership functions, labelled `f0, f1, ...`.
pub fn pointwise_order(fns: &[MembershipFn]) -> Result<Poset> {
    let labels = (0..fns.len()).map(|i| format!("f{i}")).collect();
    pointwise_order_labeled(labels, fns)
}

/// `f <= g` iff `f(x) <= g(x)` at every point. Equal functions are rejected
/// since they would collapse to one element.
pub fn pointwise_order_labeled(labels: Vec<String>, fns: &[MembershipFn]) -> Result<Poset> {
    if labels.len() != fns.len() {
        return Err(Error::PartialMap { expected: fns.len(), got: labels.len() });
    }
    if let Some(first) = fns.first() {
        if fns.iter().any(|f| f.universe() != first.universe()) {
            return Err(Error::UniverseMismatch);
        }
    }
    for i in 0..fns.len() {
        for j in (i + 1)..fns.len() {
            if fns[i] == fns[j] {
                return Err(Error::CyclicOrder(vec![labels[i].clone(), labels[j].clone()]));
            }
        }
    }
    Poset::from_fn(labels, |i, j| fns[i].pointwise_leq(&fns[j]))
}
