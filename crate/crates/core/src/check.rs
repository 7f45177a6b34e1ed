//! Runs every applicable structural and spectral check on one hypergraph.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::line::{line_degree_formula, line_edge_count, line_multigraph, reduce_core, uniformize};
use crate::matrices::{gram_identity_check, line_adjacency_matrix, signless_laplacian};
use crate::power::{power_hypergraph, power_line_invariance_check, PowerParams};
use crate::spectra::{
    certificate_minus_r, char_poly_exact, check_lower_bound, collar_certificate_vector,
    degree_sum_bounds, eigenvalues_symmetric, minus_r_eigenspace_dimension, power_spectrum_formula,
    spectral_radius_sandwich,
};
use crate::structure::{
    collar_implies_bipartite_check, find_collar_subhypergraph, is_collar, regularity_report,
    skew_iff_line_regular_check, DEFAULT_SEARCH_CAP,
};

/// Largest line-adjacency order for which the characteristic polynomial
/// oracle is run.
pub const ORACLE_MAX_ORDER: usize = 6;

#[derive(Debug, Clone, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub inputs: Value,
    pub values: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub vertices: usize,
    pub edges: usize,
    pub rank: usize,
    pub corank: usize,
    pub connected: bool,
    /// Common edge cardinality, if uniform.
    pub uniform: Option<usize>,
    pub warnings: Vec<String>,
    pub entries: Vec<CheckEntry>,
    pub pass: bool,
}

impl CheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn entry(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("plain data serializes")
    }
}

struct Entries {
    list: Vec<CheckEntry>,
}

impl Entries {
    fn push(
        &mut self,
        name: impl Into<String>,
        inputs: Value,
        values: Value,
        pass: bool,
        tol: Option<f64>,
    ) {
        self.list.push(CheckEntry {
            name: name.into(),
            inputs,
            values,
            pass,
            tolerance: tol,
        });
    }
}

pub fn run_checks(h: &Hypergraph, tol: f64) -> Result<CheckReport> {
    let (r, s) = h.rank_corank()?;
    let m = h.edge_count();
    let connected = h.is_connected();
    let mut warnings = Vec::new();
    if !connected {
        warnings.push(
            "hypergraph is disconnected; the spectral theorems assume connectivity".to_string(),
        );
    }
    let mut out = Entries { list: Vec::new() };
    let line = line_multigraph(h);

    let formula: Vec<usize> = (0..m)
        .map(|i| line_degree_formula(h, i))
        .collect::<Result<_>>()?;
    let actual: Vec<u64> = line.graph.degrees();
    out.push(
        "line degree = Σ d(v) − |e|",
        json!({"edges": m}),
        json!({"formula": formula, "line_multigraph": actual}),
        formula.iter().zip(&actual).all(|(&a, &b)| a as u64 == b),
        None,
    );

    let count = line_edge_count(h);
    out.push(
        "line edge count = (Z − Σd)/2",
        json!({"zagreb": h.zagreb_index()}),
        json!({"formula": count, "line_multigraph": line.graph.total_multiplicity()}),
        count == line.graph.total_multiplicity(),
        None,
    );

    let reg = regularity_report(h);
    out.push(
        "line regular ⇔ skew edge-regular",
        json!({"skew_edge_regular": reg.skew_edge_regular}),
        json!({"line_regular": line.graph.regularity()}),
        skew_iff_line_regular_check(h),
        None,
    );

    out.push(
        "BᵀB = C + A_L",
        json!({"edges": m}),
        json!({}),
        gram_identity_check(h),
        None,
    );

    let reduced = reduce_core(h);
    let uniform = uniformize(h)?;
    out.push(
        "reduce_core preserves line multigraph",
        json!({"vertices_before": h.vertex_count(), "vertices_after": reduced.vertex_count()}),
        json!({}),
        line_multigraph(&reduced).graph == line.graph,
        None,
    );
    out.push(
        "uniformize preserves line multigraph",
        json!({"vertices_after": uniform.vertex_count()}),
        json!({}),
        line_multigraph(&uniform).graph == line.graph,
        None,
    );

    let lb = check_lower_bound(h, tol)?;
    out.push(
        "λ_min(A_L) ≥ −r",
        json!({"rank": r}),
        json!({"lambda_min": lb.lambda_min, "bound": lb.bound}),
        lb.pass,
        Some(tol),
    );

    let line_spec = eigenvalues_symmetric(&line_adjacency_matrix(h), tol)?;
    let cert = certificate_minus_r(h)?;
    let dim = minus_r_eigenspace_dimension(h)?;
    let numeric = line_spec.count_near(-(r as f64), tol);
    let verified = cert.as_ref().is_none_or(|c| c.verify(h));
    out.push(
        "−r certificate ⇔ −r eigenvalue",
        json!({"rank": r}),
        json!({
            "certificate": cert.as_ref().map(|c| c.to_json()),
            "kernel_dimension": dim,
            "numeric_multiplicity": numeric,
        }),
        verified && (cert.is_some() == (numeric > 0)) && dim == numeric,
        Some(tol),
    );

    let sw = spectral_radius_sandwich(h, tol)?;
    out.push(
        "ρ(Q) − r ≤ ρ(A_L) ≤ ρ(Q) − s",
        json!({"rank": r, "corank": s, "uniform": sw.uniform, "connected": connected}),
        serde_json::to_value(&sw).expect("plain data"),
        sw.pass,
        Some(tol),
    );

    let ds = degree_sum_bounds(h, tol)?;
    out.push(
        "degree-sum bounds on ρ(Q)",
        json!({
            "rank": r,
            "corank": s,
            "uniform_and_edge_regular": ds.uniform_and_edge_regular,
            "connected": connected,
        }),
        serde_json::to_value(&ds).expect("plain data"),
        ds.pass,
        Some(tol),
    );

    let params = PowerParams::new(2, 2 * r + 1);
    out.push(
        "L(H^k_t) = t·L(H)",
        json!({"t": params.t, "k": params.k}),
        json!({}),
        power_line_invariance_check(h, params)?,
        None,
    );

    let formula = power_spectrum_formula(h, params.t, params.k, tol)?;
    let power = power_hypergraph(h, params)?;
    let direct = eigenvalues_symmetric(&signless_laplacian(&power), tol)?;
    let deviation = formula.max_deviation(&direct);
    out.push(
        "Q(H^k_t) spectrum formula",
        json!({"t": params.t, "k": params.k, "base_uniform": h.is_uniform()}),
        json!({"formula_len": formula.len(), "direct_len": direct.len(), "max_deviation": deviation}),
        deviation.is_some_and(|d| d <= 10.0 * tol),
        Some(10.0 * tol),
    );

    let a = line_adjacency_matrix(h);
    let p = char_poly_exact(&a)?;
    let scaled = char_poly_exact(&a.scale(2))?;
    out.push(
        "char poly of 2·A_L = 2^m P(λ/2)",
        json!({"order": m}),
        json!({"char_poly": p.to_string()}),
        scaled == p.scaled_argument(2),
        None,
    );
    if m <= ORACLE_MAX_ORDER {
        let roots = p.real_roots(tol * 1e-3);
        let dev = sorted_deviation(&roots, line_spec.eigenvalues());
        out.push(
            "eigenvalues agree with char poly roots",
            json!({"order": m}),
            json!({"roots": roots, "max_deviation": dev}),
            dev.is_some_and(|d| d <= tol),
            Some(tol),
        );
    }

    if is_collar(h).is_some() {
        let rep = collar_implies_bipartite_check(h)?;
        out.push(
            "collar ⇒ bipartite, k-regular line multigraph",
            json!({"uniform": rep.uniform}),
            serde_json::to_value(&rep).expect("plain data"),
            rep.pass,
            None,
        );
    }
    if m <= DEFAULT_SEARCH_CAP {
        if let Some(w) = find_collar_subhypergraph(h, DEFAULT_SEARCH_CAP)? {
            if w.edges.iter().all(|&e| h.edge(e).len() == r) {
                let cert = collar_certificate_vector(h, &w);
                let present = line_spec.contains(-(r as f64), tol);
                out.push(
                    format!("collar ⇒ −{r} eigenvalue"),
                    json!({"collar_edges": w.edges, "connected": w.connected}),
                    json!({
                        "certificate": cert.as_ref().ok().map(|c| c.to_json()),
                        "eigenvalue_present": present,
                    }),
                    cert.is_ok() && present,
                    Some(tol),
                );
            }
        }
    }

    let pass = out.list.iter().all(|e| e.pass);
    Ok(CheckReport {
        vertices: h.vertex_count(),
        edges: m,
        rank: r,
        corank: s,
        connected,
        uniform: h.uniformity(),
        warnings,
        entries: out.list,
        pass,
    })
}

/// Sorted-multiset distance between root list and eigenvalues; `None` if
/// the counts differ.
fn sorted_deviation(roots: &[f64], eigenvalues: &[f64]) -> Option<f64> {
    let mut a = roots.to_vec();
    a.sort_by(|x, y| y.total_cmp(x));
    (a.len() == eigenvalues.len()).then(|| {
        a.iter()
            .zip(eigenvalues)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    })
}
