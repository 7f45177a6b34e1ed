//! Power hypergraphs: vertex expansion followed by hyperedge padding.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::line::{fresh_label, line_multigraph, scale_multigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PowerParams {
    /// Clones per base vertex.
    pub t: usize,
    /// Target rank.
    pub k: usize,
}

impl PowerParams {
    pub fn new(t: usize, k: usize) -> Self {
        PowerParams { t, k }
    }

    /// Padding count `k − rt` for a base of rank `r`.
    pub fn q(&self, r: usize) -> Result<usize> {
        if self.t == 0 {
            return Err(Error::ZeroExpansion);
        }
        self.k.checked_sub(r * self.t).ok_or(Error::KBelowRt {
            k: self.k,
            r,
            t: self.t,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PaddingMode {
    /// Every edge gains the same `q = k − rt` vertices.
    #[default]
    Literal,
    /// Every edge is filled up to exactly `k` vertices.
    PadToK,
}

pub fn power_hypergraph(base: &Hypergraph, params: PowerParams) -> Result<Hypergraph> {
    power_hypergraph_with(base, params, PaddingMode::Literal)
}

/// Clones of vertex `v` are labeled `<v>#1..#t` (with `t = 1` the base label
/// is kept) and precede all padding vertices, which are labeled
/// `_pow_<edge>_<j>` in edge order.
pub fn power_hypergraph_with(
    base: &Hypergraph,
    params: PowerParams,
    mode: PaddingMode,
) -> Result<Hypergraph> {
    let r = base.rank()?;
    let q = params.q(r)?;
    let t = params.t;
    let n = base.vertex_count();

    let mut taken: HashSet<String> = HashSet::new();
    let mut labels = Vec::with_capacity(t * n);
    for v in 0..n {
        for j in 1..=t {
            let candidate = if t == 1 {
                base.label(v).to_string()
            } else {
                format!("{}#{}", base.label(v), j)
            };
            labels.push(fresh_label(candidate, &mut taken));
        }
    }
    let mut edges: Vec<Vec<usize>> = base
        .edges()
        .iter()
        .map(|e| e.iter().flat_map(|&v| (v * t)..(v * t + t)).collect())
        .collect();
    for (i, e) in edges.iter_mut().enumerate() {
        let pad = match mode {
            PaddingMode::Literal => q,
            PaddingMode::PadToK => params.k - e.len(),
        };
        for j in 1..=pad {
            e.push(labels.len());
            labels.push(fresh_label(format!("_pow_{i}_{j}"), &mut taken));
        }
    }
    Ok(Hypergraph::from_raw(labels, edges))
}

/// Line multigraph of the literal power equals `t` times that of the base.
pub fn power_line_invariance_check(base: &Hypergraph, params: PowerParams) -> Result<bool> {
    let power = power_hypergraph(base, params)?;
    let expected = scale_multigraph(&line_multigraph(base).graph, params.t as u64)?;
    Ok(line_multigraph(&power).graph == expected)
}
