use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::scalar::{Field, Scalar};
use crate::error::Error;

/// Row-major dense matrix over a single field. A matrix is read as a linear
/// map on column vectors: `rows` is the target dimension, `cols` the source.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix from row vectors, all of length `cols`.
    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Result<Matrix, Error> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { context: "matrix row", expected: cols, found: row.len() });
            }
            data.extend(row.iter().cloned());
        }
        Ok(Matrix { field, rows: rows.len(), cols, data })
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<Matrix, Error> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch { context: "matrix column", expected: rows, found: col.len() });
            }
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c { x.is_one() } else { x.is_zero() }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.data[r * rhs.cols + c].add_product(a, b);
                    }
                }
            }
        }
        out
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                o.add_product(self.get(r, c), x);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product; realizes `self ⊗ rhs` under the row-major tensor flattening.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..rhs.rows {
                    for c2 in 0..rhs.cols {
                        let b = rhs.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * rhs.rows + r2, c1 * rhs.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Rows of `self` followed by rows of `rhs`.
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack width mismatch");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack height mismatch");
        Matrix::from_fn(self.field, self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols { self.get(r, c).clone() } else { rhs.get(r, c - self.cols).clone() }
        })
    }

    pub fn pow(&self, e: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn rref(&self) -> Rref {
        rref(self)
    }

    pub fn rank(&self) -> usize {
        rref(self).rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Two-sided inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let red = rref(&aug);
        if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |r, c| red.matrix.get(r, n + c).clone()))
    }

    /// Some `x` with `self·x = y`, `None` when the system is inconsistent.
    pub fn solve(&self, y: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(y.len(), self.rows, "right-hand side length");
        let n = self.cols;
        let aug = self.hstack(&Matrix::from_fn(self.field, self.rows, 1, |r, _| y[r].clone()));
        let red = rref(&aug);
        if red.pivots.last() == Some(&n) {
            return None;
        }
        let mut x = vec![self.field.zero(); n];
        for (r, &p) in red.pivots.iter().enumerate() {
            x[p] = red.matrix.get(r, n).clone();
        }
        Some(x)
    }

    /// Sub-matrix of the given column indices.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t = &t + self.get(i, i);
        }
        t
    }
}

/// Output of Gauss–Jordan elimination: the reduced row echelon form (same
/// shape as the input, zero rows at the bottom) and its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows of the reduced form.
    pub fn nonzero_rows(&self) -> Matrix {
        let rows: Vec<usize> = (0..self.rank()).collect();
        self.matrix.select_rows(&rows)
    }
}

/// Reduced row echelon form with leftmost-pivot, top-down elimination.
/// Deterministic: the result depends only on the row space of the input.
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for k in 0..cols {
                a.data.swap(p * cols + k, r * cols + k);
            }
        }
        let inv = a.get(r, c).inverse().expect("pivot is nonzero");
        for k in c..cols {
            let x = a.get(r, k);
            if !x.is_zero() {
                let y = x * &inv;
                a.set(r, k, y);
            }
        }
        let pivot_row: Vec<(usize, Scalar)> = (c..cols)
            .filter_map(|k| {
                let x = a.get(r, k);
                (!x.is_zero()).then(|| (k, x.clone()))
            })
            .collect();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            let neg = -&f;
            for (k, x) in &pivot_row {
                a.data[i * cols + k].add_product(&neg, x);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { matrix: a, pivots }
}

/// Row-major flattening of multi-indices over a list of tensor factors:
/// `(i₁,…,i_r) ↦ i₁·(d₂⋯d_r) + … + i_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorIndex {
    dims: Vec<usize>,
}

impl TensorIndex {
    pub fn new(dims: &[usize]) -> TensorIndex {
        TensorIndex { dims: dims.to_vec() }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.dims.len(), "multi-index length");
        idx.iter().zip(&self.dims).fold(0, |acc, (&i, &d)| {
            debug_assert!(i < d, "multi-index out of range");
            acc * d + i
        })
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.dims.len()];
        for (slot, &d) in idx.iter_mut().zip(&self.dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        idx
    }
}

/// Applies `map` to tensor factor `factor` of a vector living in
/// `dims[0] ⊗ … ⊗ dims[r-1]`, identity on the other factors. The output lives
/// in the same tensor shape with `dims[factor]` replaced by `map.rows()`.
pub fn apply_on_factor(v: &[Scalar], dims: &[usize], factor: usize, map: &Matrix) -> Vec<Scalar> {
    let d = dims[factor];
    assert_eq!(map.cols(), d, "factor map width");
    assert_eq!(v.len(), dims.iter().product::<usize>(), "tensor vector length");
    let outer: usize = dims[..factor].iter().product();
    let inner: usize = dims[factor + 1..].iter().product();
    let p = map.rows();
    let field = map.field();
    let mut out = vec![field.zero(); outer * p * inner];
    for o in 0..outer {
        for a in 0..d {
            for i in 0..inner {
                let c = &v[(o * d + a) * inner + i];
                if c.is_zero() {
                    continue;
                }
                for b in 0..p {
                    let m = map.get(b, a);
                    if !m.is_zero() {
                        out[(o * p + b) * inner + i].add_product(c, m);
                    }
                }
            }
        }
    }
    out
}

/// `Σ (x_i ⊗ y_j)` flattened: the tensor of two vectors.
pub fn tensor_vectors(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(if a.is_zero() || b.is_zero() { a.field().zero() } else { a * b });
        }
    }
    out
}

pub fn basis_vector(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

pub fn zero_vector(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn add_vectors(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub_vectors(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale_vector(s: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|a| a * s).collect()
}

pub fn is_zero_vector(x: &[Scalar]) -> bool {
    x.iter().all(Scalar::is_zero)
}

/// `acc += s · x`.
pub fn axpy(acc: &mut [Scalar], s: &Scalar, x: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        a.add_product(s, b);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rational;
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
        Matrix::from_rows(f, cols, &rows).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(Field::Rational, 2);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank(), 2);
        let z = Matrix::zeros(Field::Rational, 1, 1);
        let r = rref(&z);
        assert_eq!(r.matrix, z);
        assert_eq!(r.rank(), 0);
    }

    #[test]
    fn rref_rank_one() {
        let r = rref(&q(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.matrix, q(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank(), 1);
        assert_eq!(rref(&r.matrix), r);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = q(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn kron_matches_factorwise_application() {
        let f = Field::Rational;
        let a = q(&[&[1, 2], &[0, 1], &[3, -1]]);
        let b = q(&[&[0, 1], &[5, 2]]);
        let v: Vec<Scalar> = (0..4).map(|i| f.from_i64(i * 3 - 2)).collect();
        let direct = a.kron(&b).apply(&v);
        let step = apply_on_factor(&v, &[2, 2], 1, &b);
        let step = apply_on_factor(&step, &[2, 2], 0, &a);
        assert_eq!(direct, step);
    }

    #[test]
    fn tensor_index_examples() {
        let t = TensorIndex::new(&[2, 3, 4]);
        assert_eq!(t.flatten(&[1, 2, 3]), 23);
        assert_eq!(t.unflatten(23), vec![1, 2, 3]);
        assert_eq!(t.total(), 24);
    }
}
