//! Line multigraphs and the transformations that leave them unchanged.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::hypergraph::{is_subset, Hypergraph, Severity};
use crate::multigraph::Multigraph;

/// Multigraph whose vertex `i` is hyperedge `e_i` of the source and whose
/// multiplicities are the pairwise intersection sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineMultigraph {
    pub graph: Multigraph,
    /// Source hyperedge of each vertex, e.g. `{1,2,3}`.
    pub edge_labels: Vec<String>,
}

impl LineMultigraph {
    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

pub fn line_multigraph(h: &Hypergraph) -> LineMultigraph {
    let m = h.edge_count();
    let mut graph = Multigraph::new(m);
    for i in 0..m {
        for j in (i + 1)..m {
            let c = h.intersection_size(i, j) as u64;
            if c > 0 {
                graph
                    .add_edges(i, j, c)
                    .expect("indices are below the edge count");
            }
        }
    }
    LineMultigraph {
        graph,
        edge_labels: (0..m).map(|i| h.edge_label(i)).collect(),
    }
}

/// Line degree of edge `i` computed from hypergraph degrees alone:
/// `Σ_{v ∈ e_i} d(v) − |e_i|`.
pub fn line_degree_formula(h: &Hypergraph, i: usize) -> Result<usize> {
    let sum = h.edge_degree_sum(i)?;
    Ok(sum - h.edge(i).len())
}

/// Edge count of the line multigraph from the Zagreb index:
/// `(Z(H) − n·d(H)) / 2`, where `n·d(H)` is the degree sum.
pub fn line_edge_count(h: &Hypergraph) -> u64 {
    let z = h.zagreb_index() as u64;
    let degree_sum: u64 = h.degrees().iter().map(|&d| d as u64).sum();
    let twice = z - degree_sum;
    debug_assert!(twice.is_multiple_of(2));
    twice / 2
}

pub fn scale_multigraph(g: &Multigraph, t: u64) -> Result<Multigraph> {
    g.scale(t)
}

/// Repeatedly deletes a degree-one vertex from an edge of cardinality at
/// least 3, scanning vertices in index order on each pass, until no such
/// vertex remains. A deletion that would make the shrunken edge equal to or
/// contained in another edge is skipped so the result stays simple.
/// Removed vertices leave the vertex set; surviving labels keep their order.
pub fn reduce_core(h: &Hypergraph) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = h.edges().to_vec();
    let mut removed = vec![false; h.vertex_count()];
    loop {
        let mut degree = vec![0usize; h.vertex_count()];
        let mut home = vec![usize::MAX; h.vertex_count()];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                degree[v] += 1;
                home[v] = i;
            }
        }
        let mut changed = false;
        for v in 0..h.vertex_count() {
            if removed[v] || degree[v] != 1 {
                continue;
            }
            let i = home[v];
            if edges[i].len() < 3 {
                continue;
            }
            let shrunk: Vec<usize> = edges[i].iter().copied().filter(|&u| u != v).collect();
            let nests = edges
                .iter()
                .enumerate()
                .any(|(j, f)| j != i && is_subset(&shrunk, f));
            if nests {
                continue;
            }
            edges[i] = shrunk;
            removed[v] = true;
            changed = true;
            break;
        }
        if !changed {
            break;
        }
    }
    // Vertices that were already isolated stay; only deleted ones go.
    let mut remap = vec![usize::MAX; h.vertex_count()];
    let mut labels = Vec::new();
    for v in 0..h.vertex_count() {
        if !removed[v] {
            remap[v] = labels.len();
            labels.push(h.label(v).to_string());
        }
    }
    let edges = edges
        .into_iter()
        .map(|e| e.into_iter().map(|v| remap[v]).collect())
        .collect();
    Hypergraph::from_raw(labels, edges)
}

/// Pads every edge below the rank with fresh degree-one vertices labeled
/// `_pad_<edge>_<counter>`, giving an `r`-uniform hypergraph.
pub fn uniformize(h: &Hypergraph) -> Result<Hypergraph> {
    let r = h.rank()?;
    let mut labels: Vec<String> = h.labels().to_vec();
    let mut taken: HashSet<String> = labels.iter().cloned().collect();
    let mut edges = h.edges().to_vec();
    for (i, e) in edges.iter_mut().enumerate() {
        for c in 0..r.saturating_sub(e.len()) {
            let label = fresh_label(format!("_pad_{i}_{c}"), &mut taken);
            e.push(labels.len());
            labels.push(label);
        }
    }
    Ok(Hypergraph::from_raw(labels, edges))
}

/// Inverse construction: hypergraph vertices are the edge instances of `g`
/// and hyperedge `e_u` collects the instances incident to `u`. Instance
/// labels are `<u>-<v>#<copy>` with `copy` counting from 1.
///
/// Every vertex must have degree at least 2, and the resulting edges must be
/// pairwise non-nested; otherwise the construction is not simple.
pub fn from_multigraph(g: &Multigraph) -> Result<Hypergraph> {
    let degrees = g.degrees();
    for (u, &d) in degrees.iter().enumerate() {
        match d {
            0 => return Err(Error::IsolatedVertex(u)),
            1 => return Err(Error::DegreeBelowTwo(u)),
            _ => {}
        }
    }
    let mut labels = Vec::new();
    let mut edges = vec![Vec::new(); g.order()];
    for e in g.edges() {
        for copy in 1..=e.multiplicity {
            let idx = labels.len();
            labels.push(format!("{}-{}#{}", e.u, e.v, copy));
            edges[e.u].push(idx);
            edges[e.v].push(idx);
        }
    }
    let h = Hypergraph::from_raw(labels, edges);
    let errors: Vec<_> = h
        .validate()
        .into_iter()
        .filter(|v| v.severity() == Severity::Error)
        .collect();
    if errors.is_empty() {
        Ok(h)
    } else {
        Err(Error::NonSimpleConstruction(errors))
    }
}

pub(crate) fn fresh_label(candidate: String, taken: &mut HashSet<String>) -> String {
    let mut label = candidate;
    while taken.contains(&label) {
        label.push('\'');
    }
    taken.insert(label.clone());
    label
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn mults(l: &LineMultigraph) -> Vec<(usize, usize, u64)> {
        l.graph
            .edges()
            .map(|e| (e.u, e.v, e.multiplicity))
            .collect()
    }

    #[test]
    fn small_example_line() {
        let l = line_multigraph(&families::small_example());
        assert_eq!(mults(&l), vec![(0, 1, 1), (0, 2, 1), (1, 2, 2)]);
        assert_eq!(l.graph.degrees(), vec![2, 3, 3]);
        assert_eq!(l.edge_labels[0], "{1,2,3}");
    }

    #[test]
    fn disjoint_and_path() {
        let h = Hypergraph::from_labeled_edges([["1", "2"], ["3", "4"]]).unwrap();
        let l = line_multigraph(&h);
        assert_eq!(l.order(), 2);
        assert_eq!(l.graph.total_multiplicity(), 0);
        let l = line_multigraph(&families::path(4));
        assert_eq!(mults(&l), vec![(0, 1, 1), (1, 2, 1)]);
    }

    #[test]
    fn degree_formula_examples() {
        let h = families::small_example();
        assert_eq!(line_degree_formula(&h, 0).unwrap(), 2);
        assert_eq!(line_degree_formula(&h, 1).unwrap(), 3);
        assert_eq!(line_degree_formula(&families::single_edge(), 0).unwrap(), 0);
        assert!(line_degree_formula(&h, 3).is_err());
    }

    #[test]
    fn edge_count_examples() {
        assert_eq!(line_edge_count(&families::small_example()), 4);
        assert_eq!(line_edge_count(&families::single_edge()), 0);
        assert_eq!(line_edge_count(&families::cycle(4)), 4);
    }

    #[test]
    fn scaled_path() {
        let l = line_multigraph(&families::path(4));
        let s = scale_multigraph(&l.graph, 3).unwrap();
        assert!(s.edges().all(|e| e.multiplicity == 3));
        assert_eq!(s.order(), 3);
    }

    #[test]
    fn reduce_padded_small_example() {
        let h = Hypergraph::from_labeled_edges([
            vec!["1", "2", "3", "6"],
            vec!["1", "4", "5"],
            vec!["3", "4", "5"],
        ])
        .unwrap();
        let reduced = reduce_core(&h);
        assert_eq!(line_multigraph(&reduced).graph, line_multigraph(&h).graph);
        assert_eq!(
            line_multigraph(&reduced).graph,
            line_multigraph(&families::small_example()).graph
        );
        let expected = Hypergraph::from_labeled_edges([
            vec!["1", "3"],
            vec!["1", "4", "5"],
            vec!["3", "4", "5"],
        ])
        .unwrap();
        assert_eq!(reduced, expected);
    }

    #[test]
    fn reduce_small_example_drops_vertex_two() {
        let h = families::small_example();
        let reduced = reduce_core(&h);
        let expected = Hypergraph::from_labeled_edges([
            vec!["1", "3"],
            vec!["1", "4", "5"],
            vec!["3", "4", "5"],
        ])
        .unwrap();
        assert_eq!(reduced, expected);
        assert_eq!(line_multigraph(&reduced).graph, line_multigraph(&h).graph);
    }

    #[test]
    fn reduce_graph_is_identity() {
        let p = families::path(4);
        assert_eq!(reduce_core(&p), p);
    }

    #[test]
    fn reduce_skips_nesting_removal() {
        let h = Hypergraph::from_labeled_edges([["1", "2", "3"], ["1", "2", "4"]]).unwrap();
        let reduced = reduce_core(&h);
        assert!(reduced.is_valid());
        assert_eq!(line_multigraph(&reduced).graph, line_multigraph(&h).graph);
    }

    #[test]
    fn uniformize_examples() {
        let h = Hypergraph::from_labeled_edges([vec!["1", "2"], vec!["2", "3", "4"]]).unwrap();
        let u = uniformize(&h).unwrap();
        assert_eq!(u.labels(), ["1", "2", "3", "4", "_pad_0_0"]);
        assert_eq!(u.edges(), [vec![0, 1, 4], vec![1, 2, 3]]);
        assert_eq!(u.uniformity(), Some(3));

        let f = families::small_example();
        assert_eq!(uniformize(&f).unwrap(), f);

        let back = reduce_core(&u);
        assert_eq!(line_multigraph(&back).graph, line_multigraph(&h).graph);
    }

    #[test]
    fn from_multigraph_doubled_triangle() {
        let g = Multigraph::from_edges(3, [(0, 1, 2), (0, 2, 1), (1, 2, 1)]).unwrap();
        let h = from_multigraph(&g).unwrap();
        assert_eq!(h.cardinalities(), vec![3, 3, 2]);
        assert_eq!(line_multigraph(&h).graph, g);
        assert_eq!(h.rank().unwrap() as u64, g.max_degree());
    }

    #[test]
    fn from_multigraph_cycle_and_small_example() {
        let c4 = line_multigraph(&families::cycle(4)).graph;
        let h = from_multigraph(&c4).unwrap();
        assert_eq!(line_multigraph(&h).graph, c4);

        let l = line_multigraph(&families::small_example()).graph;
        let h = from_multigraph(&l).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.cardinalities(), vec![2, 3, 3]);
        assert_eq!(line_multigraph(&h).graph, l);
    }

    #[test]
    fn from_multigraph_rejections() {
        let g = Multigraph::from_edges(3, [(0, 1, 1), (1, 2, 1)]).unwrap();
        assert!(matches!(from_multigraph(&g), Err(Error::DegreeBelowTwo(0))));
        let g = Multigraph::from_edges(3, [(0, 1, 2)]).unwrap();
        assert!(matches!(from_multigraph(&g), Err(Error::IsolatedVertex(2))));
        // vertex 0 only meets vertex 1, so e_0 ⊆ e_1
        let g = Multigraph::from_edges(4, [(0, 1, 2), (1, 2, 1), (2, 3, 2), (3, 1, 1)]).unwrap();
        assert!(matches!(
            from_multigraph(&g),
            Err(Error::NonSimpleConstruction(_))
        ));
    }
}
