use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matrices::{exact_rank, incidence_matrix, signless_laplacian};

use super::{eigenvalues_symmetric, Spectrum};

/// Closed-form signless Laplacian spectrum of the power hypergraph `H^k_t`
/// computed from the spectrum of `Q(H)`.
///
/// With `q = k − rt` and `p = rank(B)` (the number of non-zero eigenvalues
/// `λ_1 ≥ … ≥ λ_p` of `Q(H)`), the result is `tλ_i + q` for `i ≤ p`, `q`
/// repeated `m − p` times, and `0` repeated `(q − 1)m + tn` times, for
/// `tn + mq` values in total. When `q = 0` the last two groups merge into
/// `tn − p` zeros.
pub fn power_spectrum_formula(
    base: &Hypergraph,
    t: usize,
    k: usize,
    tolerance: f64,
) -> Result<Spectrum> {
    if t == 0 {
        return Err(Error::ZeroExpansion);
    }
    let r = base.rank()?;
    if k < r * t {
        return Err(Error::KBelowRt { k, r, t });
    }
    let q = k - r * t;
    let (n, m) = (base.vertex_count(), base.edge_count());
    let p = exact_rank(&incidence_matrix(base));
    let base_spectrum = eigenvalues_symmetric(&signless_laplacian(base), tolerance)?;

    let mut values: Vec<f64> = base_spectrum.eigenvalues()[..p]
        .iter()
        .map(|&l| t as f64 * l + q as f64)
        .collect();
    // signed so that the q = 0 case can borrow from the q-group
    let zero_count = (q as i64 - 1) * m as i64 + (t * n) as i64;
    let q_count = (m - p) as i64;
    if q == 0 {
        let zeros = zero_count + q_count;
        debug_assert!(zeros >= 0);
        values.extend(std::iter::repeat_n(0.0, zeros as usize));
    } else {
        values.extend(std::iter::repeat_n(q as f64, q_count as usize));
        values.extend(std::iter::repeat_n(0.0, zero_count as usize));
    }
    debug_assert_eq!(values.len(), t * n + m * q);
    Ok(Spectrum::new(values, tolerance))
}
