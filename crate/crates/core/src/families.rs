//! Named hypergraphs used by tests, the check harness and the CLI.

use crate::hypergraph::Hypergraph;

fn build(edges: &[&[&str]]) -> Hypergraph {
    Hypergraph::from_labeled_edges(edges.iter().map(|e| e.iter().copied()))
        .expect("named family is a simple hypergraph")
}

/// `{1,2,3}, {1,4,5}, {3,4,5}`: a small three-edge example.
pub fn small_example() -> Hypergraph {
    build(&[&["1", "2", "3"], &["1", "4", "5"], &["3", "4", "5"]])
}

/// The 3-uniform collar on 21 vertices: a spine `{1,2,3}`, three gray
/// triangles hanging off it, six blue links and four gray closers.
/// Edges are listed with the blue (color 1) class first.
pub fn collar_21() -> Hypergraph {
    build(&COLLAR_21_EDGES)
}

/// Color of each edge of [`collar_21`]: 1 = blue, 2 = gray.
pub const COLLAR_21_COLORS: [u8; 14] = [1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2];

const COLLAR_21_EDGES: [&[&str]; 14] = [
    &["1", "2", "3"],
    &["11", "111", "112"],
    &["12", "121", "122"],
    &["21", "211", "212"],
    &["22", "221", "222"],
    &["31", "311", "312"],
    &["32", "321", "322"],
    &["1", "11", "12"],
    &["2", "21", "22"],
    &["3", "31", "32"],
    &["111", "211", "311"],
    &["112", "212", "312"],
    &["121", "221", "321"],
    &["122", "222", "322"],
];

pub fn single_edge() -> Hypergraph {
    build(&[&["1", "2"]])
}

/// Cycle graph `C_n` on vertices `1..=n` as a 2-uniform hypergraph.
pub fn cycle(n: usize) -> Hypergraph {
    assert!(n >= 3);
    let edges: Vec<Vec<String>> = (1..=n)
        .map(|i| vec![i.to_string(), (i % n + 1).to_string()])
        .collect();
    Hypergraph::from_labeled_edges(edges).expect("cycle")
}

/// Path graph `P_n` with `n` vertices and `n - 1` edges.
pub fn path(n: usize) -> Hypergraph {
    assert!(n >= 2);
    let edges: Vec<Vec<String>> = (1..n)
        .map(|i| vec![i.to_string(), (i + 1).to_string()])
        .collect();
    Hypergraph::from_labeled_edges(edges).expect("path")
}

/// All `k`-subsets of `{1..=n}` in lexicographic order; `k = 2` gives `K_n`.
pub fn complete_uniform(n: usize, k: usize) -> Hypergraph {
    assert!(k >= 2 && k <= n);
    let mut edges = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        edges.push(
            combo
                .iter()
                .map(|&i| (i + 1).to_string())
                .collect::<Vec<_>>(),
        );
        let mut i = k;
        loop {
            if i == 0 {
                return Hypergraph::new(
                    (1..=n).map(|i| i.to_string()).collect(),
                    index_edges(&edges),
                )
                .expect("complete uniform");
            }
            i -= 1;
            if combo[i] < n - k + i {
                combo[i] += 1;
                for j in (i + 1)..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn index_edges(edges: &[Vec<String>]) -> Vec<Vec<usize>> {
    edges
        .iter()
        .map(|e| e.iter().map(|l| l.parse::<usize>().unwrap() - 1).collect())
        .collect()
}

/// Complete bipartite graph `K_{a,b}`; sides labeled `a1..` and `b1..`.
pub fn complete_bipartite(a: usize, b: usize) -> Hypergraph {
    let mut edges = Vec::new();
    for i in 1..=a {
        for j in 1..=b {
            edges.push(vec![format!("a{i}"), format!("b{j}")]);
        }
    }
    Hypergraph::from_labeled_edges(edges).expect("complete bipartite")
}

/// The Fano plane: 3-uniform, 3-regular, linear, seven lines.
pub fn fano_plane() -> Hypergraph {
    build(&[
        &["1", "2", "3"],
        &["1", "4", "5"],
        &["1", "6", "7"],
        &["2", "4", "6"],
        &["2", "5", "7"],
        &["3", "4", "7"],
        &["3", "5", "6"],
    ])
}

pub fn petersen() -> Hypergraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push(vec![format!("o{i}"), format!("o{}", (i + 1) % 5)]);
        edges.push(vec![format!("o{i}"), format!("i{i}")]);
        edges.push(vec![format!("i{i}"), format!("i{}", (i + 2) % 5)]);
    }
    Hypergraph::from_labeled_edges(edges).expect("petersen")
}

/// The 3-cube graph `Q_3`.
pub fn cube() -> Hypergraph {
    let mut edges = Vec::new();
    for v in 0u32..8 {
        for bit in 0..3 {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push(vec![format!("{v:03b}"), format!("{w:03b}")]);
            }
        }
    }
    Hypergraph::from_labeled_edges(edges).expect("cube")
}

/// `C_n` plus a pendant edge `{1, n+1}`.
pub fn cycle_with_pendant(n: usize) -> Hypergraph {
    let mut edges: Vec<Vec<String>> = cycle(n)
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| (v + 1).to_string()).collect())
        .collect();
    edges.push(vec!["1".into(), (n + 1).to_string()]);
    Hypergraph::from_labeled_edges(edges).expect("cycle with pendant")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collar_21_shape() {
        let h = collar_21();
        assert_eq!(h.vertex_count(), 21);
        assert_eq!(h.edge_count(), 14);
        assert_eq!(h.uniformity(), Some(3));
        assert!(h.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn complete_uniform_counts() {
        assert_eq!(complete_uniform(4, 3).edge_count(), 4);
        assert_eq!(complete_uniform(5, 2).edge_count(), 10);
        assert_eq!(complete_uniform(6, 4).edge_count(), 15);
    }

    #[test]
    fn named_graphs() {
        assert_eq!(petersen().edge_count(), 15);
        assert!(petersen().degrees().iter().all(|&d| d == 3));
        assert_eq!(cube().edge_count(), 12);
        assert!(fano_plane().is_linear());
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
        assert_eq!(cycle_with_pendant(4).edge_count(), 5);
    }
}
