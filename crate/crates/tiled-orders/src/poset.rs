//! Finite posets, Hasse quivers, and poset isomorphism.
//!
//! The order is stored as a closed boolean matrix. Hasse quivers follow the
//! drawn convention: an arrow `x -> y` records that `x > y` is a covering
//! relation, so arrows point from larger to smaller elements of the input
//! poset.

use crate::error::{Error, Result};

pub const DEFAULT_HOMOLOGY_BOUND: usize = 14;

/// A finite poset: labels plus a reflexive, antisymmetric, transitive
/// relation stored as a closed matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    /// leq[i * n + j] is true iff element i <= element j.
    leq: Vec<bool>,
}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FinitePoset({:?}, covers {:?})",
            self.labels,
            self.hasse().arrows
        )
    }
}

impl FinitePoset {
    /// Builds a poset from generating relations `a <= b`, taking the
    /// reflexive-transitive closure and rejecting cycles.
    pub fn from_relations<S: AsRef<str>>(labels: Vec<String>, pairs: &[(S, S)]) -> Result<Self> {
        let n = labels.len();
        let mut index = std::collections::HashMap::new();
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in pairs {
            let &ia = index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownLabel(a.as_ref().to_string()))?;
            let &ib = index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownLabel(b.as_ref().to_string()))?;
            leq[ia * n + ib] = true;
        }
        // Warshall closure
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
            for j in i + 1..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::RelationCycle {
                        a: labels[i].clone(),
                        b: labels[j].clone(),
                    });
                }
            }
        }
        Ok(Self { labels, leq })
    }

    /// Wraps an already closed relation matrix, verifying the poset axioms.
    pub fn from_leq_matrix(labels: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n * n {
            return Err(Error::BadVectorLength {
                got: leq.len(),
                expected: n * n,
            });
        }
        {
            let mut seen = std::collections::HashSet::new();
            for label in &labels {
                if !seen.insert(label) {
                    return Err(Error::DuplicateLabel(label.clone()));
                }
            }
        }
        for i in 0..n {
            if !leq[i * n + i] {
                return Err(Error::NotQuasiMetric {
                    detail: format!("relation is not reflexive at {}", labels[i]),
                });
            }
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::RelationCycle {
                        a: labels[i].clone(),
                        b: labels[j].clone(),
                    });
                }
                for k in 0..n {
                    if leq[i * n + j] && leq[j * n + k] && !leq[i * n + k] {
                        return Err(Error::NotQuasiMetric {
                            detail: format!(
                                "relation is not transitive at ({}, {}, {})",
                                labels[i], labels[j], labels[k]
                            ),
                        });
                    }
                }
            }
        }
        Ok(Self { labels, leq })
    }

    pub fn empty() -> Self {
        Self {
            labels: Vec::new(),
            leq: Vec::new(),
        }
    }

    pub fn singleton(label: impl Into<String>) -> Self {
        Self {
            labels: vec![label.into()],
            leq: vec![true],
        }
    }

    /// Chain 0 < 1 < ... < k-1 with labels "0".."k-1".
    pub fn chain(k: usize) -> Self {
        let labels = (0..k).map(|i| i.to_string()).collect();
        let mut leq = vec![false; k * k];
        for i in 0..k {
            for j in i..k {
                leq[i * k + j] = true;
            }
        }
        Self { labels, leq }
    }

    /// Antichain on k elements with labels "0".."k-1".
    pub fn antichain(k: usize) -> Self {
        let labels = (0..k).map(|i| i.to_string()).collect();
        let mut leq = vec![false; k * k];
        for i in 0..k {
            leq[i * k + i] = true;
        }
        Self { labels, leq }
    }

    /// Componentwise product order on pairs, labeled "(a,b)".
    pub fn product(&self, other: &FinitePoset) -> FinitePoset {
        let n1 = self.len();
        let n2 = other.len();
        let n = n1 * n2;
        let mut labels = Vec::with_capacity(n);
        for i in 0..n1 {
            for j in 0..n2 {
                labels.push(format!("({},{})", self.labels[i], other.labels[j]));
            }
        }
        let mut leq = vec![false; n * n];
        for a1 in 0..n1 {
            for a2 in 0..n2 {
                for b1 in 0..n1 {
                    for b2 in 0..n2 {
                        if self.leq(a1, b1) && other.leq(a2, b2) {
                            leq[(a1 * n2 + a2) * n + (b1 * n2 + b2)] = true;
                        }
                    }
                }
            }
        }
        FinitePoset { labels, leq }
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

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn opposite(&self) -> FinitePoset {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq(j, i);
            }
        }
        FinitePoset {
            labels: self.labels.clone(),
            leq,
        }
    }

    /// Covering pairs as arrows from larger to smaller: `x -> y` iff `x > y`
    /// with nothing strictly between.
    pub fn hasse(&self) -> HasseQuiver {
        let n = self.len();
        let mut arrows = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if !self.lt(y, x) {
                    continue;
                }
                let covered = (0..n).any(|z| self.lt(y, z) && self.lt(z, x));
                if !covered {
                    arrows.push((x, y));
                }
            }
        }
        arrows.sort_unstable();
        HasseQuiver {
            labels: self.labels.clone(),
            arrows,
        }
    }

    pub fn extrema(&self) -> Extrema {
        let n = self.len();
        let maxima: Vec<usize> = (0..n).filter(|&x| (0..n).all(|y| !self.lt(x, y))).collect();
        let minima: Vec<usize> = (0..n).filter(|&x| (0..n).all(|y| !self.lt(y, x))).collect();
        // in a finite poset a unique maximal element is the maximum
        let has_maximum = maxima.len() == 1 && n > 0;
        let has_minimum = minima.len() == 1 && n > 0;
        Extrema {
            maxima,
            minima,
            has_maximum,
            has_minimum,
        }
    }

    /// Deterministic linear extension: repeatedly take the minimal element of
    /// least input index. Returns element indices from smallest to largest.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .find(|&x| !placed[x] && (0..n).all(|y| placed[y] || !self.lt(y, x)))
                .expect("acyclic relation always has a minimal element");
            placed[next] = true;
            order.push(next);
        }
        order
    }

    /// Order-preserving bijection with order-preserving inverse, as a map
    /// from self indices to other indices, or `None`.
    pub fn is_isomorphic(&self, other: &FinitePoset) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        relation_isomorphism(self.len(), &self.leq, &other.leq)
    }

    /// Length in edges of the longest chain.
    pub fn longest_chain_edges(&self) -> usize {
        let n = self.len();
        let order = self.linear_extension();
        let mut height = vec![0usize; n];
        let mut best = 0;
        for &x in &order {
            for &y in &order {
                if self.lt(y, x) {
                    height[x] = height[x].max(height[y] + 1);
                }
            }
            best = best.max(height[x]);
        }
        best
    }
}

/// Maximal and minimal elements, with maximum/minimum existence flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extrema {
    pub maxima: Vec<usize>,
    pub minima: Vec<usize>,
    pub has_maximum: bool,
    pub has_minimum: bool,
}

/// Backtracking search for a bijection carrying one relation matrix onto the
/// other, refined by (in-degree, out-degree, height, depth) signatures.
pub(crate) fn relation_isomorphism(n: usize, r1: &[bool], r2: &[bool]) -> Option<Vec<usize>> {
    let signature = |r: &[bool]| -> Vec<(usize, usize)> {
        (0..n)
            .map(|i| {
                let out = (0..n).filter(|&j| j != i && r[i * n + j]).count();
                let inc = (0..n).filter(|&j| j != i && r[j * n + i]).count();
                (out, inc)
            })
            .collect()
    };
    let s1 = signature(r1);
    let s2 = signature(r2);
    {
        let mut a = s1.clone();
        let mut b = s2.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }

    fn extend(
        n: usize,
        r1: &[bool],
        r2: &[bool],
        s1: &[(usize, usize)],
        s2: &[(usize, usize)],
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let i = images.len();
        if i == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || s1[i] != s2[cand] {
                continue;
            }
            let consistent = images.iter().enumerate().all(|(j, &sj)| {
                r2[cand * n + sj] == r1[i * n + j] && r2[sj * n + cand] == r1[j * n + i]
            });
            if !consistent {
                continue;
            }
            images.push(cand);
            used[cand] = true;
            if extend(n, r1, r2, s1, s2, images, used) {
                return true;
            }
            images.pop();
            used[cand] = false;
        }
        false
    }

    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if extend(n, r1, r2, &s1, &s2, &mut images, &mut used) {
        Some(images)
    } else {
        None
    }
}

/// A quiver of covering relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseQuiver {
    labels: Vec<String>,
    arrows: Vec<(usize, usize)>,
}

impl HasseQuiver {
    pub fn new<S: AsRef<str>>(labels: Vec<String>, arrows: &[(S, S)]) -> Result<Self> {
        let mut index = std::collections::HashMap::new();
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut resolved = Vec::with_capacity(arrows.len());
        for (a, b) in arrows {
            let &ia = index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownLabel(a.as_ref().to_string()))?;
            let &ib = index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownLabel(b.as_ref().to_string()))?;
            resolved.push((ia, ib));
        }
        resolved.sort_unstable();
        resolved.dedup();
        Ok(Self {
            labels,
            arrows: resolved,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// True iff the underlying undirected graph is a tree (connected with
    /// exactly `vertices - 1` edges) and exactly one vertex has no outgoing
    /// arrow. The empty quiver is handled separately by callers.
    pub fn is_tree_with_unique_sink(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        if self.arrows.len() != n - 1 {
            return false;
        }
        // connectivity of the underlying graph
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.arrows {
            if a == b {
                return false;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return false;
        }
        let sinks = (0..n)
            .filter(|&v| self.arrows.iter().all(|&(a, _)| a != v))
            .count();
        sinks == 1
    }

    /// Digraph isomorphism witness from self vertices to other vertices.
    pub fn is_isomorphic(&self, other: &HasseQuiver) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if other.vertex_count() != n || self.arrows.len() != other.arrows.len() {
            return None;
        }
        let to_matrix = |q: &HasseQuiver| {
            let mut m = vec![false; n * n];
            for &(a, b) in &q.arrows {
                m[a * n + b] = true;
            }
            m
        };
        relation_isomorphism(n, &to_matrix(self), &to_matrix(other))
    }

    /// Deterministic DOT rendering: vertices in input order, then arrows.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for label in &self.labels {
            out.push_str(&format!("  \"{label}\";\n"));
        }
        for &(a, b) in &self.arrows {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                self.labels[a], self.labels[b]
            ));
        }
        out.push_str("}\n");
        out
    }
}
