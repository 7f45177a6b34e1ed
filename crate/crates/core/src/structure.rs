//! Regularity predicates and collar recognition/search.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::line::line_multigraph;
use crate::multigraph::two_color;
use crate::spectra::CertificateMinusR;

pub const DEFAULT_SEARCH_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    /// Common vertex degree.
    pub regular: Option<usize>,
    /// Common value of `Σ_{v∈e} d(v)`.
    pub edge_regular: Option<usize>,
    /// Common value of `Σ_{v∈e} (d(v) − 1)`.
    pub skew_edge_regular: Option<usize>,
    pub linear: bool,
}

fn constant<I: IntoIterator<Item = usize>>(values: I) -> Option<usize> {
    let mut it = values.into_iter();
    let first = it.next()?;
    it.all(|x| x == first).then_some(first)
}

pub fn regularity_report(h: &Hypergraph) -> RegularityReport {
    let d = h.degrees();
    let sums: Vec<usize> = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| d[v]).sum())
        .collect();
    RegularityReport {
        regular: constant(d.iter().copied()),
        edge_regular: constant(sums.iter().copied()),
        skew_edge_regular: constant(sums.iter().zip(h.edges()).map(|(s, e)| s - e.len())),
        linear: h.is_linear(),
    }
}

/// Whether "line multigraph is regular" and "hypergraph is skew
/// edge-regular" agree. The first side reads degrees off the constructed
/// multigraph; the second uses only hypergraph degrees.
pub fn skew_iff_line_regular_check(h: &Hypergraph) -> bool {
    let line_regular = line_multigraph(h).graph.regularity().is_some() || h.edge_count() == 0;
    let skew = regularity_report(h).skew_edge_regular.is_some() || h.edge_count() == 0;
    line_regular == skew
}

/// A set of edges together with a proper 2-coloring of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollarWitness {
    /// Ascending edge indices.
    pub edges: Vec<usize>,
    /// Color (1 or 2) of each entry of `edges`.
    pub colors: Vec<u8>,
    /// Whether the collar sub-hypergraph is connected.
    pub connected: bool,
}

impl CollarWitness {
    /// Pairs edges with colors and sorts by edge index. `connected` is
    /// left false until [`CollarWitness::check_against`] style callers set it.
    pub fn new(edges: Vec<usize>, colors: Vec<u8>) -> Self {
        let mut pairs: Vec<(usize, u8)> = edges.into_iter().zip(colors).collect();
        pairs.sort_unstable();
        let (edges, colors) = pairs.into_iter().unzip();
        CollarWitness {
            edges,
            colors,
            connected: false,
        }
    }

    pub fn color(&self, edge: usize) -> Option<u8> {
        self.edges.binary_search(&edge).ok().map(|i| self.colors[i])
    }

    pub fn coloring(&self) -> BTreeMap<usize, u8> {
        self.edges
            .iter()
            .copied()
            .zip(self.colors.iter().copied())
            .collect()
    }

    /// Every covered vertex lies in exactly two chosen edges, and chosen
    /// edges that share a vertex have different colors.
    pub fn check_against(&self, h: &Hypergraph) -> Result<()> {
        let mut count = vec![0usize; h.vertex_count()];
        for &e in &self.edges {
            for &v in h.edge(e) {
                count[v] += 1;
            }
        }
        if let Some((vertex, &c)) = count.iter().enumerate().find(|(_, &c)| c > 2 || c == 1) {
            return Err(Error::NotTwoRegular { vertex, count: c });
        }
        for (a, &ea) in self.edges.iter().enumerate() {
            for (b, &eb) in self.edges.iter().enumerate().skip(a + 1) {
                if self.colors[a] == self.colors[b] && h.intersection_size(ea, eb) > 0 {
                    return Err(Error::ColoringInvalid(ea, eb));
                }
            }
        }
        Ok(())
    }

    /// `{edges, coloring: [{edge, color}], connected}` plus the certificate
    /// vector when given.
    pub fn to_json(&self, certificate: Option<&CertificateMinusR>) -> serde_json::Value {
        let coloring: Vec<serde_json::Value> = self
            .edges
            .iter()
            .zip(&self.colors)
            .map(|(e, c)| json!({"edge": e, "color": c}))
            .collect();
        let mut out = json!({
            "edges": self.edges,
            "coloring": coloring,
            "connected": self.connected,
        });
        if let Some(cert) = certificate {
            out["certificate"] = match cert.vector.to_i64() {
                Some(v) => json!(v),
                None => json!(cert
                    .vector
                    .entries
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()),
            };
        }
        out
    }
}

/// Adjacency (shared vertex) among a subset of edges, indexed by position.
fn subset_adjacency(h: &Hypergraph, edges: &[usize]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); edges.len()];
    for a in 0..edges.len() {
        for b in (a + 1)..edges.len() {
            if h.intersection_size(edges[a], edges[b]) > 0 {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    adj
}

fn subset_connected(adj: &[Vec<usize>]) -> bool {
    if adj.is_empty() {
        return true;
    }
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Witness for `edges` when every covered vertex has degree exactly 2 in
/// the subset and the subset's line graph is bipartite.
fn collar_on(h: &Hypergraph, edges: &[usize]) -> Option<CollarWitness> {
    if edges.is_empty() {
        return None;
    }
    let mut count = vec![0u8; h.vertex_count()];
    for &e in edges {
        for &v in h.edge(e) {
            count[v] += 1;
        }
    }
    if count.iter().any(|&c| c != 0 && c != 2) {
        return None;
    }
    let adj = subset_adjacency(h, edges);
    let colors = two_color(&adj)?;
    Some(CollarWitness {
        edges: edges.to_vec(),
        colors,
        connected: subset_connected(&adj),
    })
}

/// `Some` when the whole hypergraph is 2-regular and its line graph is
/// bipartite. The coloring comes from breadth-first search with each
/// component rooted at its lowest edge, which gets color 1.
pub fn is_collar(h: &Hypergraph) -> Option<CollarWitness> {
    if h.edge_count() == 0 || h.degrees().iter().any(|&d| d != 2) {
        return None;
    }
    let all: Vec<usize> = (0..h.edge_count()).collect();
    collar_on(h, &all)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollarLineReport {
    pub bipartite: bool,
    pub uniform: Option<usize>,
    /// Common line-multigraph degree, if any.
    pub line_regular: Option<u64>,
    pub pass: bool,
}

/// For a collar: the line multigraph is bipartite and, when the collar is
/// `k`-uniform, `k`-regular.
pub fn collar_implies_bipartite_check(h: &Hypergraph) -> Result<CollarLineReport> {
    if is_collar(h).is_none() {
        return Err(Error::NotACollar);
    }
    let l = line_multigraph(h).graph;
    let bipartite = l.is_bipartite();
    let uniform = h.uniformity();
    let line_regular = l.regularity();
    let regular_ok = match uniform {
        Some(k) => line_regular == Some(k as u64),
        None => true,
    };
    Ok(CollarLineReport {
        bipartite,
        uniform,
        line_regular,
        pass: bipartite && regular_ok,
    })
}

/// Lexicographically first edge subset (by ascending index sequence) that
/// forms a collar sub-hypergraph. Subsets are extended only while no vertex
/// lies in more than two chosen edges.
pub fn find_collar_subhypergraph(
    h: &Hypergraph,
    max_edges: usize,
) -> Result<Option<CollarWitness>> {
    let m = h.edge_count();
    if m > max_edges {
        return Err(Error::SearchCapExceeded {
            edges: m,
            cap: max_edges,
        });
    }
    let mut count = vec![0u8; h.vertex_count()];
    let mut chosen = Vec::new();
    Ok(search(h, 0, &mut chosen, &mut count))
}

fn search(
    h: &Hypergraph,
    next: usize,
    chosen: &mut Vec<usize>,
    count: &mut [u8],
) -> Option<CollarWitness> {
    if !chosen.is_empty() && count.iter().all(|&c| c == 0 || c == 2) {
        if let Some(w) = collar_on(h, chosen) {
            return Some(w);
        }
    }
    for e in next..h.edge_count() {
        if h.edge(e).iter().any(|&v| count[v] >= 2) {
            continue;
        }
        for &v in h.edge(e) {
            count[v] += 1;
        }
        chosen.push(e);
        let found = search(h, e + 1, chosen, count);
        chosen.pop();
        for &v in h.edge(e) {
            count[v] -= 1;
        }
        if found.is_some() {
            return found;
        }
    }
    None
}
