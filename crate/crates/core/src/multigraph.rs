use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

/// Loopless multigraph on vertices `0..order`. Only pairs `i < j` with a
/// positive multiplicity are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multigraph {
    order: usize,
    multiplicities: BTreeMap<(usize, usize), u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedEdge {
    pub u: usize,
    pub v: usize,
    pub multiplicity: u64,
}

impl Multigraph {
    pub fn new(order: usize) -> Self {
        Multigraph {
            order,
            multiplicities: BTreeMap::new(),
        }
    }

    /// Builds from `(u, v, multiplicity)` triples; repeated pairs accumulate.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut g = Self::new(order);
        for (u, v, m) in edges {
            g.add_edges(u, v, m)?;
        }
        Ok(g)
    }

    /// Adds `count` parallel edges between `u` and `v`.
    pub fn add_edges(&mut self, u: usize, v: usize, count: u64) -> Result<()> {
        for x in [u, v] {
            if x >= self.order {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    size: self.order,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if count > 0 {
            *self.multiplicities.entry(ordered(u, v)).or_insert(0) += count;
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        if u == v {
            return 0;
        }
        self.multiplicities
            .get(&ordered(u, v))
            .copied()
            .unwrap_or(0)
    }

    /// Edges with positive multiplicity, ascending by `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = WeightedEdge> + '_ {
        self.multiplicities
            .iter()
            .map(|(&(u, v), &multiplicity)| WeightedEdge { u, v, multiplicity })
    }

    /// Number of edges counted with multiplicity.
    pub fn total_multiplicity(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    pub fn degree(&self, v: usize) -> Result<u64> {
        if v >= self.order {
            return Err(Error::IndexOutOfRange {
                index: v,
                size: self.order,
            });
        }
        Ok(self.degrees()[v])
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut d = vec![0; self.order];
        for (&(u, v), &m) in &self.multiplicities {
            d[u] += m;
            d[v] += m;
        }
        d
    }

    pub fn max_degree(&self) -> u64 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`. The empty multigraph is
    /// regular of degree 0.
    pub fn regularity(&self) -> Option<u64> {
        let d = self.degrees();
        match d.first() {
            None => Some(0),
            Some(&first) => d.iter().all(|&x| x == first).then_some(first),
        }
    }

    /// No pair joined by more than one edge.
    pub fn is_simple(&self) -> bool {
        self.multiplicities.values().all(|&m| m <= 1)
    }

    /// Multiplied multiplicities; `t = 0` is rejected.
    pub fn scale(&self, t: u64) -> Result<Self> {
        if t == 0 {
            return Err(Error::ZeroScale);
        }
        Ok(Multigraph {
            order: self.order,
            multiplicities: self
                .multiplicities
                .iter()
                .map(|(&k, &m)| (k, m * t))
                .collect(),
        })
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in self.multiplicities.keys() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        let adj = self.neighbors();
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.order
    }

    /// Proper 2-coloring of the underlying simple graph, colors `1` and `2`.
    /// Components are rooted at their lowest vertex, which gets color 1.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        two_color(&self.neighbors())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }
}

pub(crate) fn two_color(adj: &[Vec<usize>]) -> Option<Vec<u8>> {
    let n = adj.len();
    let mut color = vec![0u8; n];
    for root in 0..n {
        if color[root] != 0 {
            continue;
        }
        color[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if color[w] == 0 {
                    color[w] = 3 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_and_handshake() {
        let g = Multigraph::from_edges(4, [(0, 1, 1), (0, 2, 1), (1, 2, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![2, 3, 3, 0]);
        assert_eq!(g.degree(3).unwrap(), 0);
        assert_eq!(g.degrees().iter().sum::<u64>(), 2 * g.total_multiplicity());
        assert!(g.degree(4).is_err());
    }

    #[test]
    fn rejects_loops_and_bad_indices() {
        let mut g = Multigraph::new(2);
        assert!(matches!(g.add_edges(1, 1, 1), Err(Error::SelfLoop(1))));
        assert!(g.add_edges(0, 2, 1).is_err());
    }

    #[test]
    fn symmetric_storage() {
        let g = Multigraph::from_edges(3, [(2, 0, 3)]).unwrap();
        assert_eq!(g.multiplicity(0, 2), 3);
        assert_eq!(g.multiplicity(2, 0), 3);
        assert_eq!(g.multiplicity(1, 1), 0);
    }

    #[test]
    fn scaling() {
        let g = Multigraph::from_edges(3, [(0, 1, 1), (0, 2, 1), (1, 2, 2)]).unwrap();
        let g2 = g.scale(2).unwrap();
        assert_eq!(
            g2.edges().map(|e| e.multiplicity).collect::<Vec<_>>(),
            vec![2, 2, 4]
        );
        assert_eq!(g.scale(1).unwrap(), g);
        assert!(matches!(g.scale(0), Err(Error::ZeroScale)));
    }

    #[test]
    fn bipartite_ignores_multiplicity() {
        let square =
            Multigraph::from_edges(4, [(0, 1, 2), (1, 2, 1), (2, 3, 5), (3, 0, 1)]).unwrap();
        assert_eq!(square.two_coloring(), Some(vec![1, 2, 1, 2]));
        let tri = Multigraph::from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert!(!tri.is_bipartite());
    }
}
