//! Simple general hypergraphs and their elementary invariants.
//!
//! Vertices carry arbitrary string labels but every operation works on the
//! dense indices `0..n`. Edge order is the order of construction and fixes
//! the row/column order of every derived matrix.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    labels: Vec<String>,
    edges: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Violation {
    EmptyEdge { edge: usize },
    Singleton { edge: usize },
    VertexOutOfRange { edge: usize, vertex: usize },
    Duplicate { first: usize, second: usize },
    Nested { inner: usize, outer: usize },
    IsolatedVertex { vertex: usize },
}

impl Violation {
    pub fn severity(&self) -> Severity {
        match self {
            Violation::IsolatedVertex { .. } => Severity::Warning,
            _ => Severity::Error,
        }
    }

    /// Edge indices named by this violation, in ascending order.
    pub fn edges(&self) -> Vec<usize> {
        match *self {
            Violation::EmptyEdge { edge }
            | Violation::Singleton { edge }
            | Violation::VertexOutOfRange { edge, .. } => vec![edge],
            Violation::Duplicate { first, second } => vec![first, second],
            Violation::Nested { inner, outer } => {
                let mut v = vec![inner, outer];
                v.sort_unstable();
                v
            }
            Violation::IsolatedVertex { .. } => Vec::new(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyEdge { edge } => write!(f, "edge {edge} is empty"),
            Violation::Singleton { edge } => {
                write!(f, "cardinality-one hyperedge (edge {edge})")
            }
            Violation::VertexOutOfRange { edge, vertex } => {
                write!(f, "edge {edge} references vertex {vertex} out of range")
            }
            Violation::Duplicate { first, second } => {
                write!(f, "edge {second} duplicates edge {first}")
            }
            Violation::Nested { inner, outer } => write!(f, "edge {inner} ⊆ edge {outer}"),
            Violation::IsolatedVertex { vertex } => {
                write!(f, "warning: vertex {vertex} is isolated")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max: usize,
    pub min: usize,
    pub average: f64,
}

impl DegreeProfile {
    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

impl Hypergraph {
    /// Builds a hypergraph without checking the simplicity invariants.
    ///
    /// Each edge is stored as a sorted set of vertex indices; repeated
    /// indices inside one edge collapse. Use [`Hypergraph::validate`] to
    /// inspect the result, or [`Hypergraph::new`] to reject invalid input.
    pub fn from_raw(labels: Vec<String>, edges: Vec<Vec<usize>>) -> Self {
        let edges = edges
            .into_iter()
            .map(|e| {
                let set: BTreeSet<usize> = e.into_iter().collect();
                set.into_iter().collect()
            })
            .collect();
        Hypergraph { labels, edges }
    }

    /// Builds a hypergraph and rejects it if any error-level violation is found.
    /// Isolated vertices are only warnings and are accepted.
    pub fn new(labels: Vec<String>, edges: Vec<Vec<usize>>) -> Result<Self> {
        let h = Self::from_raw(labels, edges);
        let errors: Vec<Violation> = h
            .validate()
            .into_iter()
            .filter(|v| v.severity() == Severity::Error)
            .collect();
        if errors.is_empty() {
            Ok(h)
        } else {
            Err(Error::Invalid(errors))
        }
    }

    /// Builds a hypergraph from edges given as label lists. Labels are
    /// assigned indices in order of first appearance.
    pub fn from_labeled_edges<I, E, S>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut labels = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut out = Vec::new();
        for edge in edges {
            let mut e = Vec::new();
            for label in edge {
                let label = label.as_ref();
                let i = *index.entry(label.to_string()).or_insert_with(|| {
                    labels.push(label.to_string());
                    labels.len() - 1
                });
                e.push(i);
            }
            out.push(e);
        }
        Self::new(labels, out)
    }

    /// Vertices labeled `0..n` by their own index.
    pub fn from_index_edges(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn cardinalities(&self) -> Vec<usize> {
        self.edges.iter().map(Vec::len).collect()
    }

    /// All violations of the simple-hypergraph invariants, errors first by
    /// edge index, followed by isolated-vertex warnings.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            match e.len() {
                0 => out.push(Violation::EmptyEdge { edge: i }),
                1 => out.push(Violation::Singleton { edge: i }),
                _ => {}
            }
            for &v in e {
                if v >= n {
                    out.push(Violation::VertexOutOfRange { edge: i, vertex: v });
                }
            }
        }
        for i in 0..self.edges.len() {
            for j in (i + 1)..self.edges.len() {
                let (a, b) = (&self.edges[i], &self.edges[j]);
                if a == b {
                    out.push(Violation::Duplicate {
                        first: i,
                        second: j,
                    });
                } else if is_subset(a, b) {
                    out.push(Violation::Nested { inner: i, outer: j });
                } else if is_subset(b, a) {
                    out.push(Violation::Nested { inner: j, outer: i });
                }
            }
        }
        let degrees = self.degrees();
        for (v, &d) in degrees.iter().enumerate() {
            if d == 0 {
                out.push(Violation::IsolatedVertex { vertex: v });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate()
            .iter()
            .all(|v| v.severity() == Severity::Warning)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count()];
        for e in &self.edges {
            for &v in e {
                if v < d.len() {
                    d[v] += 1;
                }
            }
        }
        d
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.degrees();
        let max = degrees.iter().copied().max().unwrap_or(0);
        let min = degrees.iter().copied().min().unwrap_or(0);
        let average = if degrees.is_empty() {
            0.0
        } else {
            degrees.iter().sum::<usize>() as f64 / degrees.len() as f64
        };
        DegreeProfile {
            degrees,
            max,
            min,
            average,
        }
    }

    /// `(rank, co-rank)`: the largest and smallest edge cardinality.
    pub fn rank_corank(&self) -> Result<(usize, usize)> {
        let cards = self.edges.iter().map(Vec::len);
        let r = cards.clone().max().ok_or(Error::NoHyperedges)?;
        let s = cards.min().ok_or(Error::NoHyperedges)?;
        Ok((r, s))
    }

    pub fn rank(&self) -> Result<usize> {
        self.rank_corank().map(|(r, _)| r)
    }

    /// `Some(k)` when every edge has cardinality `k`.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    pub fn is_uniform(&self) -> bool {
        self.uniformity().is_some()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.degrees().contains(&0)
    }

    /// Breadth-first search over the bipartite vertex/edge incidence structure.
    /// Isolated vertices make a hypergraph with more than one vertex disconnected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let incident = self.incident_edges();
        let mut seen_v = vec![false; n];
        let mut seen_e = vec![false; self.edge_count()];
        let mut queue = VecDeque::from([0usize]);
        seen_v[0] = true;
        while let Some(v) = queue.pop_front() {
            for &e in &incident[v] {
                if seen_e[e] {
                    continue;
                }
                seen_e[e] = true;
                for &u in &self.edges[e] {
                    if !seen_v[u] {
                        seen_v[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        seen_v.into_iter().all(|s| s)
    }

    /// For every vertex, the ascending list of edges that contain it.
    pub fn incident_edges(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count()];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Sum of squared vertex degrees.
    pub fn zagreb_index(&self) -> usize {
        self.degrees().iter().map(|d| d * d).sum()
    }

    /// Every pair of distinct edges shares at most one vertex.
    pub fn is_linear(&self) -> bool {
        (0..self.edge_count())
            .all(|i| ((i + 1)..self.edge_count()).all(|j| self.intersection_size(i, j) <= 1))
    }

    pub fn intersection_size(&self, i: usize, j: usize) -> usize {
        sorted_intersection_len(&self.edges[i], &self.edges[j])
    }

    /// Sum of vertex degrees over edge `i`.
    pub fn edge_degree_sum(&self, i: usize) -> Result<usize> {
        let e = self.edges.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            size: self.edge_count(),
        })?;
        let d = self.degrees();
        Ok(e.iter().map(|&v| d[v]).sum())
    }

    /// Edge label such as `{1,2,3}` built from vertex labels.
    pub fn edge_label(&self, i: usize) -> String {
        let inner: Vec<&str> = self.edges[i].iter().map(|&v| self.label(v)).collect();
        format!("{{{}}}", inner.join(","))
    }
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() <= b.len() && sorted_intersection_len(a, b) == a.len()
}

pub(crate) fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
