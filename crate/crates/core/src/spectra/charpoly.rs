use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrices::IntMatrix;

use super::roots;

/// Monic characteristic polynomial `det(λI − A)` with exact integer
/// coefficients, stored in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coefficients: Vec<BigInt>,
}

impl CharPoly {
    /// Coefficients from the constant term up to the leading 1.
    pub fn from_ascending(coefficients: Vec<BigInt>) -> Self {
        debug_assert!(coefficients.last().is_some_and(One::is_one));
        CharPoly { coefficients }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients_i64(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coefficients.iter().map(ToPrimitive::to_i64).collect()
    }

    /// `t^deg · P(λ / t)`, the characteristic polynomial of `t·A`.
    pub fn scaled_argument(&self, t: i64) -> CharPoly {
        let d = self.degree();
        let t = BigInt::from(t);
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| c * num_traits::pow(t.clone(), d - i))
            .collect();
        CharPoly { coefficients }
    }

    /// Real roots with multiplicity, descending, found by exact square-free
    /// decomposition and Sturm-sequence bisection. `width` is the final
    /// isolating-interval width.
    pub fn real_roots(&self, width: f64) -> Vec<f64> {
        roots::real_roots(&self.coefficients, width)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            if !mag.is_one() || i == 0 {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{i}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Faddeev–LeVerrier recursion in exact integer arithmetic:
/// `M_k = A·M_{k−1} + c_{n−k+1}·I`, `c_{n−k} = −tr(A·M_k) / k`.
/// Each division is exact for an integer matrix.
pub fn char_poly_exact(a: &IntMatrix) -> Result<CharPoly> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m = IntMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = a.mul(&m)?;
        for i in 0..n {
            let d = next.get(i, i) + &c[n - k + 1];
            next.set(i, i, d);
        }
        m = next;
        let tr = a.mul(&m)?.trace();
        let (q, r) = tr.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "trace not divisible by k");
        c[n - k] = -q;
    }
    Ok(CharPoly { coefficients: c })
}
