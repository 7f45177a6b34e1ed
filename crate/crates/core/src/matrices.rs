//! Exact integer matrices attached to a hypergraph and fraction-free
//! elimination for ranks and null spaces.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::line::line_multigraph;
use crate::multigraph::Multigraph;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn diagonal<I: IntoIterator<Item = i64>>(values: I) -> Self {
        let values: Vec<i64> = values.into_iter().collect();
        let mut m = Self::zeros(values.len(), values.len());
        for (i, v) in values.into_iter().enumerate() {
            m.set(i, i, BigInt::from(v));
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            let row = row.as_ref();
            if row.len() != c {
                return Err(Error::DimensionMismatch(format!(
                    "ragged rows: expected {c} columns, found {}",
                    row.len()
                )));
            }
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &IntMatrix) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} plus {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, t: i64) -> Self {
        let t = BigInt::from(t);
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * &t).collect(),
        }
    }

    /// Matrix-vector product over the rationals.
    pub fn apply(&self, x: &RationalVector) -> Result<RationalVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to length-{} vector",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let entries = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(&x.entries)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(BigRational::zero(), |acc, (a, b)| {
                        acc + BigRational::from_integer(a.clone()) * b
                    })
            })
            .collect();
        Ok(RationalVector { entries })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<BigInt> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).clone()).sum())
            .collect()
    }

    /// Text dump: `rows cols` on the first line, then one line per row.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Vector of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalVector {
    pub entries: Vec<BigRational>,
}

impl RationalVector {
    pub fn zeros(len: usize) -> Self {
        RationalVector {
            entries: vec![BigRational::zero(); len],
        }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(values: I) -> Self {
        RationalVector {
            entries: values
                .into_iter()
                .map(|v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Entries as machine integers when every entry is an integer that fits.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.entries
            .iter()
            .map(|x| {
                if x.is_integer() {
                    x.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries
            .iter()
            .map(|x| x.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// `n × m` vertex/edge incidence matrix; column `i` is edge `i`.
pub fn incidence_matrix(h: &Hypergraph) -> IntMatrix {
    let mut b = IntMatrix::zeros(h.vertex_count(), h.edge_count());
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e {
            b.set(v, i, BigInt::one());
        }
    }
    b
}

/// Diagonal matrix of edge cardinalities.
pub fn cardinality_matrix(h: &Hypergraph) -> IntMatrix {
    IntMatrix::diagonal(h.cardinalities().into_iter().map(|c| c as i64))
}

pub fn adjacency_matrix(g: &Multigraph) -> IntMatrix {
    let mut a = IntMatrix::zeros(g.order(), g.order());
    for e in g.edges() {
        let m = BigInt::from(e.multiplicity);
        a.set(e.u, e.v, m.clone());
        a.set(e.v, e.u, m);
    }
    a
}

/// Adjacency matrix of the line multigraph of `h`.
pub fn line_adjacency_matrix(h: &Hypergraph) -> IntMatrix {
    adjacency_matrix(&line_multigraph(h).graph)
}

/// `Q = B·Bᵀ`.
pub fn signless_laplacian(h: &Hypergraph) -> IntMatrix {
    let b = incidence_matrix(h);
    b.mul(&b.transpose()).expect("B and Bᵀ are conformable")
}

/// `BᵀB`, the edge Gram matrix.
pub fn edge_gram(h: &Hypergraph) -> IntMatrix {
    let b = incidence_matrix(h);
    b.transpose().mul(&b).expect("Bᵀ and B are conformable")
}

/// Whether `BᵀB = C + A_L` holds entrywise.
pub fn gram_identity_check(h: &Hypergraph) -> bool {
    let rhs = cardinality_matrix(h)
        .add(&line_adjacency_matrix(h))
        .expect("C and A_L are both m×m");
    edge_gram(h) == rhs
}

/// Integer row echelon form with every pivot column cleared above and below.
/// Rows are kept primitive (content 1) so entries stay small.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn reduced_echelon(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        // smallest non-zero magnitude keeps the multipliers small
        let pivot = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
        let Some(p) = pivot else { continue };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        let pv = &pivot_row[c];
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let g = row[c].gcd(pv);
            let row_mul = pv / &g;
            let pivot_mul = &row[c] / &g;
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &row_mul - y * &pivot_mul;
            }
            make_primitive(row);
        }
        make_primitive(&mut rows[r]);
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Exact rank over the rationals.
pub fn exact_rank(m: &IntMatrix) -> usize {
    let rows = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    reduced_echelon(rows, m.cols()).pivots.len()
}

/// Basis of `{x : M x = 0, x_j = 0 for j in fixed_zero_columns}`.
///
/// Each basis vector is an integer vector with content 1 whose first
/// non-zero entry is positive. Vectors come one per free column, ascending.
pub fn exact_kernel(m: &IntMatrix, fixed_zero_columns: &[usize]) -> Vec<RationalVector> {
    let free_cols: Vec<usize> = (0..m.cols())
        .filter(|c| !fixed_zero_columns.contains(c))
        .collect();
    let rows: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| free_cols.iter().map(|&c| m.get(i, c).clone()).collect())
        .collect();
    let ech = reduced_echelon(rows, free_cols.len());
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; free_cols.len()];
        for &p in &ech.pivots {
            s[p] = true;
        }
        s
    };
    let mut basis = Vec::new();
    for f in (0..free_cols.len()).filter(|&f| !pivot_set[f]) {
        // x_f = L, x_{pivot(r)} = -row_r[f] * L / pivot_r with L the lcm of pivots
        let l = ech
            .rows
            .iter()
            .zip(&ech.pivots)
            .fold(BigInt::one(), |acc, (row, &p)| acc.lcm(&row[p]));
        let mut x = vec![BigInt::zero(); m.cols()];
        x[free_cols[f]] = l.clone();
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            if !row[f].is_zero() {
                x[free_cols[p]] = -(&row[f] * &l) / &row[p];
            }
        }
        normalize_integer_vector(&mut x);
        basis.push(RationalVector {
            entries: x.into_iter().map(BigRational::from_integer).collect(),
        });
    }
    basis
}

fn normalize_integer_vector(x: &mut [BigInt]) {
    make_primitive(x);
    if let Some(first) = x.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in x.iter_mut() {
                *v = -&*v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn ints(m: &IntMatrix) -> Vec<Vec<i64>> {
        (0..m.rows())
            .map(|i| m.row(i).iter().map(|x| x.to_i64().unwrap()).collect())
            .collect()
    }

    #[test]
    fn incidence_examples() {
        let b = incidence_matrix(&families::small_example());
        assert_eq!((b.rows(), b.cols()), (5, 3));
        let col: Vec<i64> = b.col_sums().iter().map(|x| x.to_i64().unwrap()).collect();
        let row: Vec<i64> = b.row_sums().iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(col, vec![3, 3, 3]);
        assert_eq!(row, vec![2, 1, 2, 2, 2]);
        assert_eq!(
            ints(&incidence_matrix(&families::single_edge())),
            vec![vec![1], vec![1]]
        );
        assert_eq!(
            ints(&incidence_matrix(&families::path(4))),
            vec![vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]
        );
    }

    #[test]
    fn cardinality_examples() {
        assert_eq!(
            cardinality_matrix(&families::small_example()),
            IntMatrix::identity(3).scale(3)
        );
        let h = Hypergraph::from_labeled_edges([vec!["1", "2"], vec!["2", "3", "4"]]).unwrap();
        assert_eq!(cardinality_matrix(&h), IntMatrix::diagonal([2, 3]));
    }

    #[test]
    fn adjacency_examples() {
        let a = line_adjacency_matrix(&families::small_example());
        assert_eq!(ints(&a), vec![vec![0, 1, 1], vec![1, 0, 2], vec![1, 2, 0]]);
        assert!(a.is_symmetric());
        let scaled = adjacency_matrix(
            &line_multigraph(&families::small_example())
                .graph
                .scale(2)
                .unwrap(),
        );
        assert_eq!(
            ints(&scaled),
            vec![vec![0, 2, 2], vec![2, 0, 4], vec![2, 4, 0]]
        );
        assert_eq!(
            adjacency_matrix(&Multigraph::new(3)),
            IntMatrix::zeros(3, 3)
        );
    }

    #[test]
    fn signless_laplacian_examples() {
        let q = signless_laplacian(&families::small_example());
        let diag: Vec<i64> = (0..5).map(|i| q.get(i, i).to_i64().unwrap()).collect();
        assert_eq!(diag, vec![2, 1, 2, 2, 2]);
        assert_eq!(q.get(3, 4).to_i64(), Some(2));
        assert_eq!(
            ints(&signless_laplacian(&families::single_edge())),
            vec![vec![1, 1], vec![1, 1]]
        );
        assert_eq!(
            ints(&signless_laplacian(&families::path(4))),
            vec![
                vec![1, 1, 0, 0],
                vec![1, 2, 1, 0],
                vec![0, 1, 2, 1],
                vec![0, 0, 1, 1]
            ]
        );
    }

    #[test]
    fn gram_identity_examples() {
        assert!(gram_identity_check(&families::small_example()));
        assert!(gram_identity_check(&families::single_edge()));
        assert!(gram_identity_check(&families::collar_21()));
    }

    #[test]
    fn kernel_of_even_cycle() {
        let b = incidence_matrix(&families::cycle(4));
        let k = exact_kernel(&b, &[]);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].to_i64().unwrap(), vec![1, -1, 1, -1]);
    }

    #[test]
    fn kernel_trivial_cases() {
        assert!(exact_kernel(&incidence_matrix(&families::cycle(3)), &[]).is_empty());
        assert!(exact_kernel(&IntMatrix::identity(4), &[]).is_empty());
    }

    #[test]
    fn kernel_respects_fixed_columns() {
        let m = IntMatrix::from_rows(&[[1, 1, 1]]).unwrap();
        let k = exact_kernel(&m, &[1]);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].to_i64().unwrap(), vec![1, 0, -1]);
        let all = exact_kernel(&m, &[]);
        assert_eq!(all.len(), 2);
        for x in &all {
            assert!(m.apply(x).unwrap().is_zero());
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(exact_rank(&incidence_matrix(&families::small_example())), 3);
        assert_eq!(exact_rank(&incidence_matrix(&families::cycle(4))), 3);
        assert_eq!(exact_rank(&IntMatrix::zeros(2, 3)), 0);
    }

    #[test]
    fn text_dump() {
        let m = IntMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(m.to_text(), "2 2\n0 1\n1 0\n");
    }
}
