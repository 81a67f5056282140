//! Dense exact linear algebra over `Q(i)` (and matrix arithmetic over any
//! [`Ring`]).
//!
//! Row reduction always pivots on the first nonzero entry of a column, so
//! reduced forms and the bases derived from them are deterministic.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::scalars::{GaussianRational, Ring};
use crate::Error;

/// A coordinate vector with respect to some basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector(Vec<GaussianRational>);

impl Vector {
    pub fn new(coords: Vec<GaussianRational>) -> Self {
        Vector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![GaussianRational::zero(); n])
    }

    /// The standard basis vector `e_i` of length `n` (0-based `i`).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = GaussianRational::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| GaussianRational::from_int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(GaussianRational::is_real)
    }

    pub fn coords(&self) -> &[GaussianRational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<GaussianRational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GaussianRational> {
        self.0.iter()
    }

    pub fn add(&self, o: &Vector) -> Vector {
        Vector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Vector) -> Vector {
        Vector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &GaussianRational) -> Vector {
        Vector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn conj(&self) -> Vector {
        Vector(self.0.iter().map(GaussianRational::conj).collect())
    }

    /// `self + c·o`.
    pub fn axpy(&self, c: &GaussianRational, o: &Vector) -> Vector {
        Vector(self.0.iter().zip(&o.0).map(|(a, b)| a + &(c * b)).collect())
    }
}

impl Index<usize> for Vector {
    type Output = GaussianRational;
    fn index(&self, i: usize) -> &GaussianRational {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut GaussianRational {
        &mut self.0[i]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T = GaussianRational> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// A linear map in column convention: column `j` is the image of `e_j`.
pub type LinearMap = Matrix<GaussianRational>;

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Panics on shape mismatch.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = &o[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        Self::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() + o[(r, c)].clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        Self::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() - o[(r, c)].clone())
    }

    /// Commutator `AB − BA`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block2(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let (r1, c1) = (a.rows, a.cols);
        assert!(b.rows == r1 && c.cols == c1 && d.rows == c.rows && d.cols == b.cols);
        Self::from_fn(r1 + c.rows, c1 + b.cols, |r, col| match (r < r1, col < c1) {
            (true, true) => a[(r, col)].clone(),
            (true, false) => b[(r, col - c1)].clone(),
            (false, true) => c[(r - r1, col)].clone(),
            (false, false) => d[(r - r1, col - c1)].clone(),
        })
    }

    /// Block-diagonal matrix with the given blocks.
    pub fn block_diagonal(blocks: &[&Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix<GaussianRational> {
    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector], len: usize) -> Self {
        Self::from_fn(len, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector::new((0..self.rows).map(|r| self[(r, c)].clone()).collect())
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix/vector shape mismatch");
        Vector::new(
            (0..self.rows)
                .map(|r| {
                    self.row(r)
                        .iter()
                        .zip(v.iter())
                        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                        .fold(GaussianRational::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        )
    }

    pub fn conj(&self) -> Self {
        self.map(GaussianRational::conj)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(GaussianRational::is_real)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].inv().expect("nonzero pivot");
            for c in col..m.cols {
                m[(row, c)] = &m[(row, c)] * &inv;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for c in col..m.cols {
                    let t = &f * &m[(row, c)];
                    m[(r, c)] -= &t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if !(0..n).all(|i| pivots.get(i) == Some(&i)) {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| red[(r, c + n)].clone()))
    }

    pub fn try_inverse(&self) -> Result<Self, Error> {
        self.inverse().ok_or(Error::Singular)
    }

    /// Basis of the right null space `{x : Ax = 0}`, one vector per free
    /// column, in increasing free-column order.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::unit(self.cols, f);
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -&red[(r, f)];
                }
                v
            })
            .collect()
    }

    /// Some solution of `Ax = b`, if one exists.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        let aug = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = Vector::zeros(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = red[(r, self.cols)].clone();
        }
        Some(x)
    }
}

/// A subspace of `Q(i)^n`, held as its reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let m = Matrix::from_fn(vectors.len(), ambient, |r, c| vectors[r][c].clone());
        let (red, pivots) = m.rref();
        let rows = (0..pivots.len())
            .map(|r| Vector::new(red.row(r).to_vec()))
            .collect();
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        let basis: Vec<Vector> = (0..ambient).map(|i| Vector::unit(ambient, i)).collect();
        Self::span(ambient, &basis)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Canonical (reduced echelon) basis.
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; the corresponding unit vectors span a
    /// complement of this subspace.
    pub fn free_coordinates(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Canonical representative of `v` modulo the subspace: all pivot
    /// coordinates are cleared.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let c = -&out[p];
                out = out.axpy(&c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_all(&self, vs: &[Vector]) -> bool {
        vs.iter().all(|v| self.contains(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.contains_all(other.basis())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let all: Vec<Vector> = self.rows.iter().chain(&other.rows).cloned().collect();
        Subspace::span(self.ambient, &all)
    }
}

/// Rank of a list of vectors of length `n`.
pub fn rank_of(n: usize, vectors: &[Vector]) -> usize {
    Subspace::span(n, vectors).dim()
}

/// Coordinates of `v` with respect to the linearly independent `basis`,
/// or `None` if `v` is outside their span.
pub fn coordinates(basis: &[Vector], v: &Vector) -> Option<Vector> {
    Matrix::from_columns(basis, v.len()).solve(v)
}
