use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::field::PrimeField;

use super::gf2::BitRows;
use super::subspace::Subspace;
use super::vector;

/// Dense row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: PrimeField> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows of length `cols`.
    ///
    /// # Panics
    /// If a row has the wrong length.
    pub fn from_rows<R: AsRef<[F]>>(cols: usize, rows: impl IntoIterator<Item = R>) -> Self {
        let mut data = Vec::new();
        let mut n = 0;
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend_from_slice(r);
            n += 1;
        }
        Matrix { rows: n, cols, data }
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns<C: AsRef<[F]>>(rows: usize, columns: &[C]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j].as_ref()[i])
    }

    /// Convenience constructor from small integers (reduced mod p).
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, data: entries.iter().map(|&v| F::from_i64(v)).collect() }
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

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl ExactSizeIterator<Item = &[F]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vector::add(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vector::sub(&self.data, &other.data),
        }
    }

    pub fn scale(&self, c: F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: vector::scale(c, &self.data) }
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Self) -> Self {
        (self * other).sub(&(other * self))
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.row_iter()
            .map(|r| r.iter().zip(v).map(|(&a, &b)| a * b).sum())
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Flattened row-major entries as a single vector (for spans of matrices).
    pub fn flatten(&self) -> Vec<F> {
        self.data.clone()
    }

    pub fn unflatten(rows: usize, cols: usize, v: &[F]) -> Self {
        assert_eq!(v.len(), rows * cols);
        Matrix { rows, cols, data: v.to_vec() }
    }

    /// Reduced row-echelon form and its pivot columns. Zero rows are kept
    /// at the bottom so the shape is unchanged.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        if F::P == 2 {
            return self.rref_gf2();
        }
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(found) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, found);
            let inv = self[(r, c)].inverse().expect("pivot is nonzero");
            for x in self.row_mut(r) {
                *x *= inv;
            }
            let pivot_row = self.row(r).to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self[(i, c)];
                if !f.is_zero() {
                    vector::axpy(self.row_mut(i), -f, &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn rref_gf2(&self) -> (Self, Vec<usize>) {
        let mut bits = BitRows::new(self.cols, self.row_iter().map(|r| r.iter().map(|x| !x.is_zero())));
        let pivots = bits.rref(self.cols);
        let mut out = Self::zeros(self.rows, self.cols);
        for i in 0..pivots.len() {
            for (j, b) in bits.row_bits(i, self.cols).enumerate() {
                if b {
                    out[(i, j)] = F::one();
                }
            }
        }
        (out, pivots)
    }

    /// Reference Gauss-Jordan elimination, bypassing the bit-packed path.
    #[doc(hidden)]
    pub fn rref_generic(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// `{v : M v = 0}` in canonical form.
    pub fn kernel(&self) -> Subspace<F> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let basis: Vec<Vec<F>> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vector::zeros(self.cols);
                v[f] = F::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(i, f)];
                }
                v
            })
            .collect();
        Subspace::span(self.cols, basis)
    }

    /// Row space in canonical form.
    pub fn row_space(&self) -> Subspace<F> {
        Subspace::from_matrix(self)
    }

    /// Column space in canonical form.
    pub fn column_space(&self) -> Subspace<F> {
        Subspace::from_matrix(&self.transpose())
    }

    /// Solves `self * x = b`, returning one solution if any exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)]
            } else {
                b[i]
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vector::zeros(self.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(i, self.cols)];
        }
        Some(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)]
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return if n == 0 { Some(Self::zeros(0, 0)) } else { None };
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, n + j)]))
    }
}

impl<F: PrimeField> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: PrimeField> IndexMut<(usize, usize)> for Matrix<F> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: PrimeField> Mul for &Matrix<F> {
    type Output = Matrix<F>;

    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let (start, end) = (i * rhs.cols, (i + 1) * rhs.cols);
                vector::axpy(&mut out.data[start..end], a, rhs.row(k));
            }
        }
        out
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.data.chunks(self.cols.max(1)).take(self.rows).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r:?}")?;
        }
        write!(f, "]")
    }
}
