use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matrices::{exact_kernel, incidence_matrix, RationalVector};
use crate::structure::CollarWitness;

/// Exact witness that `−r` is an eigenvalue of the line adjacency matrix:
/// a non-zero `x` with `B·x = 0` and `x_i = 0` on every edge smaller than `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateMinusR {
    pub vector: RationalVector,
    pub rank: usize,
}

impl CertificateMinusR {
    /// Re-checks every defining condition in exact arithmetic.
    pub fn verify(&self, h: &Hypergraph) -> bool {
        if self.vector.len() != h.edge_count() || self.vector.is_zero() {
            return false;
        }
        let small_edges_zero = h
            .cardinalities()
            .iter()
            .zip(&self.vector.entries)
            .all(|(&c, x)| c == self.rank || num_traits::Zero::is_zero(x));
        let in_kernel = incidence_matrix(h)
            .apply(&self.vector)
            .map(|y| y.is_zero())
            .unwrap_or(false);
        small_edges_zero && in_kernel
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Out<'a> {
            rank: usize,
            eigenvalue: i64,
            vector: Vec<String>,
            #[serde(skip_serializing_if = "Option::is_none")]
            integer_vector: Option<&'a [i64]>,
        }
        let ints = self.vector.to_i64();
        serde_json::to_value(Out {
            rank: self.rank,
            eigenvalue: -(self.rank as i64),
            vector: self.vector.entries.iter().map(|x| x.to_string()).collect(),
            integer_vector: ints.as_deref(),
        })
        .expect("plain data serializes")
    }
}

fn small_edges(h: &Hypergraph, r: usize) -> Vec<usize> {
    h.cardinalities()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c < r)
        .map(|(i, _)| i)
        .collect()
}

/// First basis vector of the exact kernel of `B` restricted to the edges of
/// cardinality `r`, or `None` when that kernel is trivial (and `−r` is then
/// not an eigenvalue).
pub fn certificate_minus_r(h: &Hypergraph) -> Result<Option<CertificateMinusR>> {
    let r = h.rank()?;
    let basis = exact_kernel(&incidence_matrix(h), &small_edges(h, r));
    Ok(basis
        .into_iter()
        .next()
        .map(|vector| CertificateMinusR { vector, rank: r }))
}

/// Exact multiplicity of `−r` as a line-adjacency eigenvalue: the dimension
/// of the restricted kernel.
pub fn minus_r_eigenspace_dimension(h: &Hypergraph) -> Result<usize> {
    let r = h.rank()?;
    Ok(exact_kernel(&incidence_matrix(h), &small_edges(h, r)).len())
}

/// `+1` on collar edges of color 1, `−1` on color 2, `0` elsewhere. The
/// coloring and the 2-regularity of the collar are checked, then `B·x = 0`
/// is verified exactly before the vector is returned.
pub fn collar_certificate_vector(
    h: &Hypergraph,
    witness: &CollarWitness,
) -> Result<CertificateMinusR> {
    let r = h.rank()?;
    let m = h.edge_count();
    for &e in &witness.edges {
        if e >= m {
            return Err(Error::IndexOutOfRange { index: e, size: m });
        }
    }
    witness.check_against(h)?;
    for &e in &witness.edges {
        let c = h.edge(e).len();
        if c != r {
            return Err(Error::CollarNotUniform {
                edge: e,
                cardinality: c,
                rank: r,
            });
        }
    }
    let mut x = vec![0i64; m];
    for &e in &witness.edges {
        x[e] = if witness.color(e) == Some(1) { 1 } else { -1 };
    }
    let cert = CertificateMinusR {
        vector: RationalVector::from_integers(x),
        rank: r,
    };
    if !cert.verify(h) {
        return Err(Error::CertificateRejected);
    }
    Ok(cert)
}
