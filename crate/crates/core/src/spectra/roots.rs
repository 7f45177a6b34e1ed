//! Real-root isolation for integer polynomials in exact arithmetic.
//!
//! Polynomials are ascending coefficient vectors over the rationals. The
//! square-free parts come from Yun's decomposition; each part is then
//! bisected with Sturm sequences evaluated at dyadic rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

type Poly = Vec<BigRational>;

pub(crate) fn real_roots(coefficients: &[BigInt], width: f64) -> Vec<f64> {
    let f: Poly = coefficients
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let f = trim(f);
    if degree(&f) < 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (part, multiplicity) in square_free(&f) {
        for root in isolate(&part, width) {
            out.extend(std::iter::repeat_n(root, multiplicity));
        }
    }
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Degree, with the zero polynomial at −1.
fn degree(p: &Poly) -> isize {
    p.len() as isize - 1
}

fn derivative(p: &Poly) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let b = trim(b.clone());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.clone());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let coef = &r[r.len() - 1] / &lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &coef * c;
        }
        q[shift] = coef;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(p: Poly) -> Poly {
    match p.last() {
        Some(lead) if !lead.is_one() => {
            let lead = lead.clone();
            p.into_iter().map(|c| c / &lead).collect()
        }
        _ => p,
    }
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

/// Yun's algorithm: `f = Π a_i^i` with each `a_i` square-free and coprime.
fn square_free(f: &Poly) -> Vec<(Poly, usize)> {
    let f = monic(f.clone());
    let df = derivative(&f);
    let b = gcd(&f, &df);
    let mut c = div_rem(&f, &b).0;
    let mut d = sub(&div_rem(&df, &b).0, &derivative(&c));
    let mut out = Vec::new();
    let mut i = 1;
    while degree(&c) > 0 {
        let a = gcd(&c, &d);
        c = div_rem(&c, &a).0;
        d = sub(&div_rem(&d, &a).0, &derivative(&c));
        if degree(&a) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), derivative(p)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let (_, r) = div_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq
}

/// Positive multiple of `p` with coprime integer coefficients.
fn primitive(p: &Poly) -> Vec<BigInt> {
    let denominators = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * &denominators).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if content.is_zero() {
        ints
    } else {
        ints.into_iter().map(|c| c / &content).collect()
    }
}

/// Sign of `p(num / 2^exp)` from the homogenized integer value
/// `Σ c_i num^i 2^{exp(d−i)}`.
fn sign_at(p: &[BigInt], num: &BigInt, exp: usize) -> i8 {
    let d = p.len() - 1;
    let mut acc = p[d].clone();
    for i in (0..d).rev() {
        acc = acc * num + (&p[i] << (exp * (d - i)));
    }
    if acc.is_positive() {
        1
    } else if acc.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(seq: &[Vec<BigInt>], num: &BigInt, exp: usize) -> usize {
    let mut changes = 0;
    let mut last = 0i8;
    for p in seq {
        let s = sign_at(p, num, exp);
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

fn dyadic_to_f64(num: &BigInt, exp: usize) -> f64 {
    BigRational::new(num.clone(), BigInt::one() << exp)
        .to_f64()
        .unwrap_or(f64::NAN)
}

/// Roots of a square-free polynomial, each located in an interval of at
/// most `width` and reported as its midpoint. Endpoints are dyadic
/// rationals `a / 2^e` kept as integer numerators over a shared exponent.
fn isolate(p: &Poly, width: f64) -> Vec<f64> {
    let seq: Vec<Vec<BigInt>> = sturm_sequence(p).iter().map(primitive).collect();
    let f = &seq[0];
    // Cauchy bound rounded up to a power of two
    let lead = p.last().unwrap().abs();
    let cauchy = p[..p.len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(BigRational::zero(), |m, x| if x > m { x } else { m })
        + BigRational::one();
    let mut bound = BigInt::one();
    while BigRational::from_integer(bound.clone()) < cauchy {
        bound <<= 1;
    }
    let span = (&bound << 1usize).to_f64().unwrap_or(f64::INFINITY);
    let narrow = |exp: usize| span / 2f64.powi(exp as i32) <= width;

    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound, 0usize)];
    while let Some((a, b, e)) = stack.pop() {
        let k = sign_changes(&seq, &a, e) - sign_changes(&seq, &b, e);
        if k == 0 {
            continue;
        }
        if k == 1 {
            out.push(bisect(f, a, b, e, &narrow));
            continue;
        }
        let mid = &a + &b;
        stack.push((a << 1usize, mid.clone(), e + 1));
        stack.push((mid, b << 1usize, e + 1));
    }
    out
}

/// Shrinks `(a, b]`, which holds exactly one root of the square-free `f`.
/// The sign just right of the root is the sign at `b`.
fn bisect(
    f: &[BigInt],
    mut a: BigInt,
    mut b: BigInt,
    mut e: usize,
    narrow: &dyn Fn(usize) -> bool,
) -> f64 {
    let sb = sign_at(f, &b, e);
    if sb == 0 {
        return dyadic_to_f64(&b, e);
    }
    while !narrow(e) {
        let mid = &a + &b;
        a <<= 1usize;
        b <<= 1usize;
        e += 1;
        match sign_at(f, &mid, e) {
            0 => return dyadic_to_f64(&mid, e),
            s if s == sb => b = mid,
            _ => a = mid,
        }
    }
    dyadic_to_f64(&(&a + &b), e + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots(c: &[i64]) -> Vec<f64> {
        let c: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        real_roots(&c, 1e-12)
    }

    #[test]
    fn cubic_with_irrational_roots() {
        // λ^3 − 6λ − 4 = (λ + 2)(λ^2 − 2λ − 2)
        let r = roots(&[-4, -6, 0, 1]);
        let s3 = 3f64.sqrt();
        let expected = [1.0 + s3, 1.0 - s3, -2.0];
        for (x, y) in r.iter().zip(expected) {
            assert!((x - y).abs() < 1e-11, "{x} vs {y}");
        }
    }

    #[test]
    fn repeated_roots() {
        // λ^2 (λ − 1)^3
        let r = roots(&[0, 0, -1, 3, -3, 1]);
        assert_eq!(r.len(), 5);
        for (x, y) in r.iter().zip([1.0, 1.0, 1.0, 0.0, 0.0]) {
            assert!((x - y).abs() < 1e-11);
        }
    }

    #[test]
    fn roots_on_dyadic_points() {
        // (2λ − 1)(λ − 1)(λ + 1) and (λ − 2)(λ + 4)
        let r = roots(&[1, -2, -1, 2]);
        assert_eq!(r, vec![1.0, 0.5, -1.0]);
        let r = roots(&[-8, 2, 1]);
        assert_eq!(r, vec![2.0, -4.0]);
    }

    #[test]
    fn constant_has_no_roots() {
        assert!(roots(&[5]).is_empty());
    }
}
