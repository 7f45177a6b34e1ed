use serde::Serialize;

use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::matrices::{line_adjacency_matrix, signless_laplacian};
use crate::structure::regularity_report;

use super::eigenvalues_symmetric;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerBoundReport {
    pub lambda_min: f64,
    /// `−r`
    pub bound: f64,
    pub rank: usize,
    pub tolerance: f64,
    pub pass: bool,
}

/// Smallest line-adjacency eigenvalue against `−r`.
pub fn check_lower_bound(h: &Hypergraph, tolerance: f64) -> Result<LowerBoundReport> {
    let r = h.rank()?;
    let spec = eigenvalues_symmetric(&line_adjacency_matrix(h), tolerance)?;
    let lambda_min = spec.min().unwrap_or(0.0);
    let bound = -(r as f64);
    Ok(LowerBoundReport {
        lambda_min,
        bound,
        rank: r,
        tolerance,
        pass: lambda_min >= bound - tolerance,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SandwichReport {
    pub rho_signless_laplacian: f64,
    pub rho_line_adjacency: f64,
    pub rank: usize,
    pub corank: usize,
    /// `ρ(A_L) − (ρ(Q) − r)`, non-negative up to rounding.
    pub lower_gap: f64,
    /// `(ρ(Q) − s) − ρ(A_L)`, non-negative up to rounding.
    pub upper_gap: f64,
    pub lower_equality: bool,
    pub upper_equality: bool,
    pub uniform: bool,
    pub connected: bool,
    pub inequalities_hold: bool,
    /// Equality on either side coincides with uniformity. Only asserted for
    /// connected inputs; always true otherwise.
    pub equality_matches_uniformity: bool,
    pub tolerance: f64,
    pub pass: bool,
}

/// `ρ(Q) − r ≤ ρ(A_L) ≤ ρ(Q) − s`, with equality exactly for uniform inputs.
pub fn spectral_radius_sandwich(h: &Hypergraph, tolerance: f64) -> Result<SandwichReport> {
    let (r, s) = h.rank_corank()?;
    let rho_q = eigenvalues_symmetric(&signless_laplacian(h), tolerance)?
        .max()
        .unwrap_or(0.0);
    let rho_l = eigenvalues_symmetric(&line_adjacency_matrix(h), tolerance)?
        .max()
        .unwrap_or(0.0);
    let lower_gap = rho_l - (rho_q - r as f64);
    let upper_gap = (rho_q - s as f64) - rho_l;
    let lower_equality = lower_gap.abs() <= tolerance;
    let upper_equality = upper_gap.abs() <= tolerance;
    let uniform = h.is_uniform();
    let connected = h.is_connected();
    let inequalities_hold = lower_gap >= -tolerance && upper_gap >= -tolerance;
    let equality_matches_uniformity =
        !connected || (lower_equality == uniform && upper_equality == uniform);
    Ok(SandwichReport {
        rho_signless_laplacian: rho_q,
        rho_line_adjacency: rho_l,
        rank: r,
        corank: s,
        lower_gap,
        upper_gap,
        lower_equality,
        upper_equality,
        uniform,
        connected,
        inequalities_hold,
        equality_matches_uniformity,
        tolerance,
        pass: inequalities_hold && equality_matches_uniformity,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeSumReport {
    pub min_degree_sum: usize,
    pub max_degree_sum: usize,
    pub rank: usize,
    pub corank: usize,
    /// `min_e Σ d(v) − (r − s)`
    pub lower_bound: i64,
    /// `max_e Σ d(v) + (r − s)`
    pub upper_bound: i64,
    pub rho_signless_laplacian: f64,
    pub lower_gap: f64,
    pub upper_gap: f64,
    pub lower_equality: bool,
    pub upper_equality: bool,
    pub uniform_and_edge_regular: bool,
    pub connected: bool,
    pub inequalities_hold: bool,
    pub equality_matches_predicate: bool,
    pub tolerance: f64,
    pub pass: bool,
}

/// Bounds on `ρ(Q)` from the extreme per-edge degree sums, shifted by `r − s`.
pub fn degree_sum_bounds(h: &Hypergraph, tolerance: f64) -> Result<DegreeSumReport> {
    let (r, s) = h.rank_corank()?;
    let sums: Vec<usize> = (0..h.edge_count())
        .map(|i| h.edge_degree_sum(i))
        .collect::<Result<_>>()?;
    let min_sum = *sums.iter().min().expect("at least one edge");
    let max_sum = *sums.iter().max().expect("at least one edge");
    let spread = (r - s) as i64;
    let lower_bound = min_sum as i64 - spread;
    let upper_bound = max_sum as i64 + spread;
    let rho_q = eigenvalues_symmetric(&signless_laplacian(h), tolerance)?
        .max()
        .unwrap_or(0.0);
    let lower_gap = rho_q - lower_bound as f64;
    let upper_gap = upper_bound as f64 - rho_q;
    let lower_equality = lower_gap.abs() <= tolerance;
    let upper_equality = upper_gap.abs() <= tolerance;
    let predicate = h.is_uniform() && regularity_report(h).edge_regular.is_some();
    let connected = h.is_connected();
    let inequalities_hold = lower_gap >= -tolerance && upper_gap >= -tolerance;
    let equality_matches_predicate =
        !connected || (lower_equality == predicate && upper_equality == predicate);
    Ok(DegreeSumReport {
        min_degree_sum: min_sum,
        max_degree_sum: max_sum,
        rank: r,
        corank: s,
        lower_bound,
        upper_bound,
        rho_signless_laplacian: rho_q,
        lower_gap,
        upper_gap,
        lower_equality,
        upper_equality,
        uniform_and_edge_regular: predicate,
        connected,
        inequalities_hold,
        equality_matches_predicate,
        tolerance,
        pass: inequalities_hold && equality_matches_predicate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn lower_bound_examples() {
        let rep = check_lower_bound(&families::small_example(), 1e-9).unwrap();
        assert!((rep.lambda_min + 2.0).abs() < 1e-12);
        assert_eq!(rep.bound, -3.0);
        assert!(rep.pass);

        let rep = check_lower_bound(&families::cycle(4), 1e-9).unwrap();
        assert!((rep.lambda_min + 2.0).abs() < 1e-12);
        assert!(rep.pass);

        let rep = check_lower_bound(&families::single_edge(), 1e-9).unwrap();
        assert_eq!(rep.lambda_min, 0.0);
        assert!(rep.pass);
    }

    #[test]
    fn sandwich_small_example() {
        let rep = spectral_radius_sandwich(&families::small_example(), 1e-9).unwrap();
        let r3 = 3f64.sqrt();
        assert!((rep.rho_signless_laplacian - (4.0 + r3)).abs() < 1e-12);
        assert!((rep.rho_line_adjacency - (1.0 + r3)).abs() < 1e-12);
        assert!(rep.lower_equality && rep.upper_equality && rep.uniform && rep.pass);
    }

    #[test]
    fn sandwich_non_uniform_is_strict() {
        let h = Hypergraph::from_labeled_edges([vec!["1", "2"], vec!["2", "3", "4"]]).unwrap();
        let rep = spectral_radius_sandwich(&h, 1e-9).unwrap();
        assert!(rep.lower_gap > 1e-3 && rep.upper_gap > 1e-3);
        assert!(!rep.lower_equality && !rep.upper_equality && rep.pass);
    }

    #[test]
    fn sandwich_single_edge() {
        let rep = spectral_radius_sandwich(&families::single_edge(), 1e-9).unwrap();
        assert!((rep.rho_signless_laplacian - 2.0).abs() < 1e-12);
        assert_eq!(rep.rho_line_adjacency, 0.0);
        assert_eq!((rep.rank, rep.corank), (2, 2));
        assert!(rep.lower_equality && rep.upper_equality);
    }

    #[test]
    fn degree_sum_examples() {
        let rep = degree_sum_bounds(&families::cycle(4), 1e-9).unwrap();
        assert_eq!((rep.lower_bound, rep.upper_bound), (4, 4));
        assert!((rep.rho_signless_laplacian - 4.0).abs() < 1e-12);
        assert!(rep.lower_equality && rep.upper_equality && rep.uniform_and_edge_regular);

        let rep = degree_sum_bounds(&families::small_example(), 1e-9).unwrap();
        assert_eq!(rep.max_degree_sum, 6);
        assert!(rep.upper_gap > 0.2 && !rep.upper_equality && rep.pass);

        let rep = degree_sum_bounds(&families::path(4), 1e-9).unwrap();
        assert_eq!((rep.lower_bound, rep.upper_bound), (3, 4));
        assert!((rep.rho_signless_laplacian - (2.0 + 2f64.sqrt())).abs() < 1e-12);
        assert!(!rep.lower_equality && !rep.upper_equality && rep.pass);
    }
}
