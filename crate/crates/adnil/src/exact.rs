//! Exact linear algebra over arbitrary-precision integers and rationals.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination, so there is no
//! floating-point rank ambiguity anywhere in the oracle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Square matrix over `BigInt`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> IntMatrix {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn diagonal(values: &[i64]) -> IntMatrix {
        let n = values.len();
        let mut m = IntMatrix::zero(n);
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, BigInt::from(v));
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn add_entry(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add_scaled(&mut self, other: &IntMatrix, c: &BigInt) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += b * c;
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &IntMatrix) -> IntMatrix {
        let mut ab = self.mul(other);
        let ba = other.mul(self);
        for (x, y) in ab.entries.iter_mut().zip(ba.entries) {
            *x -= y;
        }
        ab
    }

    pub fn scaled(&self, c: i64) -> IntMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e *= c;
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect();
        bareiss_rank(rows)
    }

    pub fn row_vector(&self) -> Vec<BigInt> {
        self.entries.clone()
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|e| BigRational::from(e.clone()))
                .collect(),
        }
    }
}

/// Square matrix over `BigRational`, used only for triple verification where
/// the nilnegative coefficients may be non-integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub n: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zero(n: usize) -> RatMatrix {
        RatMatrix {
            n,
            entries: vec![BigRational::zero(); n * n],
        }
    }

    pub fn add_scaled(&mut self, other: &IntMatrix, c: &BigRational) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.entries.iter_mut().zip(0..) {
            let v = &other.entries[b];
            if !v.is_zero() {
                *a += c * BigRational::from(v.clone());
            }
        }
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = RatMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        let prod = a * b;
                        out.entries[i * n + j] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &RatMatrix) -> RatMatrix {
        let mut ab = self.mul(other);
        let ba = other.mul(self);
        for (x, y) in ab.entries.iter_mut().zip(ba.entries) {
            *x -= y;
        }
        ab
    }

    pub fn scaled(&self, c: i64) -> RatMatrix {
        let c = BigRational::from(BigInt::from(c));
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e *= &c;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        let mut out = self.clone();
        for (x, y) in out.entries.iter_mut().zip(&other.entries) {
            *x -= y;
        }
        out
    }
}

/// Rank of a rectangular integer matrix given as rows, by Bareiss
/// fraction-free elimination. Divisions are exact.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Rank of a list of `i64` rows.
pub fn int_row_rank(rows: &[Vec<i64>]) -> usize {
    bareiss_rank(
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

/// Solves `A x = b` exactly over the rationals. Returns one solution, or
/// `None` when the system is inconsistent. `a` is given in column-major
/// form: `columns[j]` is the j-th column.
#[allow(clippy::needless_range_loop)] // rows r and i are borrowed together
pub fn solve_rational(columns: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
    let n_rows = b.len();
    let n_cols = columns.len();
    // augmented row-echelon elimination over BigRational
    let mut m: Vec<Vec<BigRational>> = (0..n_rows)
        .map(|i| {
            let mut row: Vec<BigRational> = columns
                .iter()
                .map(|col| BigRational::from(BigInt::from(col[i])))
                .collect();
            row.push(BigRational::from(BigInt::from(b[i])));
            row
        })
        .collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n_cols];
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for j in c..=n_cols {
            let v = &m[r][j] * &inv;
            m[r][j] = v;
        }
        for i in 0..n_rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n_cols {
                    let v = &m[i][j] - &f * &m[r][j];
                    m[i][j] = v;
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
    }
    // inconsistent iff some zero row has nonzero rhs
    for row in &m {
        if row[..n_cols].iter().all(|x| x.is_zero()) && !row[n_cols].is_zero() {
            return None;
        }
    }
    // free columns get coefficient zero
    let mut x = vec![BigRational::zero(); n_cols];
    for (c, pivot) in pivot_of_col.iter().enumerate() {
        if let Some(p) = *pivot {
            x[c] = m[p][n_cols].clone();
        }
    }
    Some(x)
}

/// Pretty-printer used in reports: `3/2`, `-1`, `0`.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else if q.denom().is_negative() {
        format!("{}/{}", -q.numer(), -q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
