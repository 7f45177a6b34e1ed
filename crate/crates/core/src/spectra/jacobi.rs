use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;
/// Sweeps continue until the off-diagonal mass is at rounding level.
const OFF_DIAGONAL_STOP: f64 = 1e-14;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Rotations are applied in the fixed row-major `(p, q)` order, so the
/// result is bit-for-bit reproducible on a given platform. `tolerance`
/// bounds the acceptable off-diagonal Frobenius norm relative to `‖A‖_F`
/// if the sweep limit is reached. The result is sorted descending.
pub fn jacobi_eigenvalues(a: &[Vec<f64>], tolerance: f64) -> Result<Vec<f64>> {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let norm = frobenius(&m);
    if norm == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal(&m) <= OFF_DIAGONAL_STOP * norm {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, p, q);
            }
        }
    }
    if !converged && off_diagonal(&m) > tolerance * norm {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }
    let mut values: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

#[allow(clippy::needless_range_loop)]
fn rotate(m: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = m[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    if t == 0.0 {
        return;
    }
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = m.len();
    for row in m.iter_mut() {
        let (kp, kq) = (row[p], row[q]);
        row[p] = c * kp - s * kq;
        row[q] = s * kp + c * kq;
    }
    for k in 0..n {
        let (pk, qk) = (m[p][k], m[q][k]);
        m[p][k] = c * pk - s * qk;
        m[q][k] = s * pk + c * qk;
    }
    m[p][q] = 0.0;
    m[q][p] = 0.0;
}

fn frobenius(m: &[Vec<f64>]) -> f64 {
    m.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
}

fn off_diagonal(m: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                s += x * x;
            }
        }
    }
    s.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let v = jacobi_eigenvalues(&[vec![2.0, 1.0], vec![1.0, 2.0]], 1e-9).unwrap();
        assert!((v[0] - 3.0).abs() < 1e-14 && (v[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(
            jacobi_eigenvalues(&vec![vec![0.0; 3]; 3], 1e-9).unwrap(),
            vec![0.0; 3]
        );
    }

    #[test]
    fn deterministic() {
        let a = vec![
            vec![4.0, 1.0, 2.0, 0.5],
            vec![1.0, 3.0, 0.0, 1.0],
            vec![2.0, 0.0, 1.0, 3.0],
            vec![0.5, 1.0, 3.0, 2.0],
        ];
        let x = jacobi_eigenvalues(&a, 1e-9).unwrap();
        let y = jacobi_eigenvalues(&a, 1e-9).unwrap();
        assert_eq!(x, y);
        let trace: f64 = x.iter().sum();
        assert!((trace - 10.0).abs() < 1e-12);
    }
}
