use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Integral domain with exact division, enough structure for Bareiss elimination.
pub(crate) trait ExactDomain: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_ring_zero(&self) -> bool;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// Division known to be exact.
    fn div_exact(&self, other: &Self) -> Self;
}

impl ExactDomain for BigInt {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn is_ring_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % other)));
        self / other
    }
}

/// Fraction-free determinant (Bareiss). Every intermediate division is exact.
pub(crate) fn bareiss_determinant<R: ExactDomain>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::ring_one();
    }
    let mut negate = false;
    let mut prev = R::ring_one();
    for k in 0..n {
        if m[k][k].is_ring_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_ring_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return R::ring_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = m[k][k].ring_mul(&m[i][j]).ring_sub(&m[i][k].ring_mul(&m[k][j]));
                m[i][j] = cross.div_exact(&prev);
            }
            m[i][k] = R::ring_zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.ring_neg()
    } else {
        det
    }
}

/// Dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows. Returns `None` if the rows are ragged.
    pub fn try_from_rows<T: Into<BigInt>>(rows: Vec<Vec<T>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        let data = rows.into_iter().flatten().map(Into::into).collect();
        Some(IntMatrix { rows: r, cols: c, data })
    }

    /// Panics on ragged input; intended for literals.
    pub fn from_rows<T: Into<BigInt>>(rows: Vec<Vec<T>>) -> Self {
        Self::try_from_rows(rows).expect("ragged matrix rows")
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

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * k)
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn block_diag(&self, other: &Self) -> Self {
        Self::from_fn(self.rows + other.rows, self.cols + other.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)].clone()
            } else if i >= self.rows && j >= self.cols {
                other[(i - self.rows, j - self.cols)].clone()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        bareiss_determinant(self.to_rows())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.determinant().abs().is_one()
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += k * row[src]`
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = &self[(src, j)] * k;
            self[(dst, j)] += delta;
        }
    }

    /// `col[dst] += k * col[src]`
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = &self[(i, src)] * k;
            self[(i, dst)] += delta;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        IntMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
