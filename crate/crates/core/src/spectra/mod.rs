//! Spectra of the line adjacency and signless Laplacian matrices, the
//! eigenvalue bounds they satisfy and exact certificates for `−r`.

mod bounds;
mod certificate;
mod charpoly;
mod jacobi;
mod power_formula;
mod roots;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::matrices::IntMatrix;

pub use bounds::{
    check_lower_bound, degree_sum_bounds, spectral_radius_sandwich, DegreeSumReport,
    LowerBoundReport, SandwichReport,
};
pub use certificate::{
    certificate_minus_r, collar_certificate_vector, minus_r_eigenspace_dimension, CertificateMinusR,
};
pub use charpoly::{char_poly_exact, CharPoly};
pub use jacobi::jacobi_eigenvalues;
pub use power_formula::power_spectrum_formula;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Eigenvalues sorted descending together with the tolerance that governs
/// multiplicity grouping and comparisons.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
}

impl Spectrum {
    /// Sorts the values descending.
    pub fn new(mut eigenvalues: Vec<f64>, tolerance: f64) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Spectrum {
            eigenvalues,
            tolerance,
        }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Largest eigenvalue; the spectral radius for the non-negative matrices here.
    pub fn max(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn min(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    /// Number of eigenvalues within `tol` of `x`.
    pub fn count_near(&self, x: f64, tol: f64) -> usize {
        self.eigenvalues
            .iter()
            .filter(|&&v| (v - x).abs() <= tol)
            .count()
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.count_near(x, tol) > 0
    }

    /// Consecutive eigenvalues closer than `100·tolerance` form one group;
    /// each group reports its mean and size.
    pub fn grouped(&self) -> Vec<Eigenvalue> {
        let gap = 100.0 * self.tolerance;
        let mut out: Vec<(f64, usize, f64)> = Vec::new();
        for &v in &self.eigenvalues {
            match out.last_mut() {
                Some((sum, count, last)) if (*last - v).abs() < gap => {
                    *sum += v;
                    *count += 1;
                    *last = v;
                }
                _ => out.push((v, 1, v)),
            }
        }
        out.into_iter()
            .map(|(sum, count, _)| Eigenvalue {
                value: clean_zero(sum / count as f64, self.tolerance),
                multiplicity: count,
            })
            .collect()
    }

    /// Largest absolute difference between sorted entries, or `None` if
    /// the lengths differ.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.eigenvalues
                .iter()
                .zip(&other.eigenvalues)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }

    /// `{eigenvalues, spectrum: [{value, multiplicity}], tolerance}`; values
    /// within the tolerance of zero are written as `0`.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "eigenvalues": self.eigenvalues.iter().map(|&v| clean_zero(v, self.tolerance)).collect::<Vec<_>>(),
            "spectrum": self.grouped(),
            "tolerance": self.tolerance,
        })
    }
}

/// Values within `tol` of zero print as `0`.
fn clean_zero(v: f64, tol: f64) -> f64 {
    if v.abs() <= tol {
        0.0
    } else {
        v
    }
}

/// All eigenvalues of a symmetric integer matrix. Symmetry is checked exactly.
pub fn eigenvalues_symmetric(m: &IntMatrix, tolerance: f64) -> Result<Spectrum> {
    if !(tolerance > 0.0 && tolerance < 1.0) {
        return Err(Error::BadTolerance(tolerance));
    }
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let values = jacobi_eigenvalues(&m.to_f64_rows(), tolerance)?;
    Ok(Spectrum::new(values, tolerance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::matrices::{line_adjacency_matrix, signless_laplacian};

    fn close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len(), "{actual:?} vs {expected:?}");
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() < tol, "{actual:?} vs {expected:?}");
        }
    }

    #[test]
    fn small_example_line_spectrum() {
        let s = eigenvalues_symmetric(&line_adjacency_matrix(&families::small_example()), 1e-9)
            .unwrap();
        let r3 = 3f64.sqrt();
        close(s.eigenvalues(), &[1.0 + r3, 1.0 - r3, -2.0], 1e-12);
    }

    #[test]
    fn diagonal_spectrum() {
        let s = eigenvalues_symmetric(&IntMatrix::diagonal([3, 3, 3]), 1e-9).unwrap();
        close(s.eigenvalues(), &[3.0, 3.0, 3.0], 1e-15);
        assert_eq!(
            s.grouped(),
            vec![Eigenvalue {
                value: 3.0,
                multiplicity: 3
            }]
        );
    }

    #[test]
    fn path_signless_laplacian() {
        let s = eigenvalues_symmetric(&signless_laplacian(&families::path(4)), 1e-9).unwrap();
        let r2 = 2f64.sqrt();
        close(s.eigenvalues(), &[2.0 + r2, 2.0, 2.0 - r2, 0.0], 1e-12);
    }

    #[test]
    fn rejects_asymmetric_and_bad_tolerance() {
        let m = IntMatrix::from_rows(&[[0, 1], [2, 0]]).unwrap();
        assert!(matches!(
            eigenvalues_symmetric(&m, 1e-9),
            Err(Error::NotSymmetric)
        ));
        let m = IntMatrix::identity(2);
        assert!(matches!(
            eigenvalues_symmetric(&m, 0.0),
            Err(Error::BadTolerance(_))
        ));
        assert!(matches!(
            eigenvalues_symmetric(&m, 1.5),
            Err(Error::BadTolerance(_))
        ));
    }

    #[test]
    fn json_shape() {
        let s = Spectrum::new(vec![0.0, 2.0, 0.0], 1e-9);
        let j = s.to_json();
        assert_eq!(j["eigenvalues"], json!([2.0, 0.0, 0.0]));
        assert_eq!(j["spectrum"][1]["multiplicity"], json!(2));
        assert_eq!(j["tolerance"], json!(1e-9));
    }
}
