use alloc::vec::Vec;

use super::matrix::{is_zero_vector, rref, Matrix};
use super::scalar::{Field, Scalar};
use crate::error::Error;

/// A linear subspace of `field^ambient`, stored as the nonzero rows of its
/// reduced row echelon basis. Equal subspaces have identical representations,
/// so `==` is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Subspace {
        let red = rref(m);
        Subspace { ambient: m.cols(), basis: red.nonzero_rows(), pivots: red.pivots }
    }

    /// Span of the given vectors, each of length `ambient`.
    pub fn span<'a, I>(field: Field, ambient: usize, vectors: I) -> Result<Subspace, Error>
    where
        I: IntoIterator<Item = &'a [Scalar]>,
    {
        let rows: Vec<Vec<Scalar>> = vectors.into_iter().map(<[Scalar]>::to_vec).collect();
        let m = Matrix::from_rows(field, ambient, &rows)?;
        Ok(Subspace::row_space(&m))
    }

    /// Span of owned vectors; panics on a length mismatch (internal use).
    pub fn span_of(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        Subspace::span(field, ambient, vectors.iter().map(Vec::as_slice))
            .expect("span_of: vectors must have the ambient length")
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix) -> Subspace {
        Subspace::row_space(&m.transpose())
    }

    /// `{x : m·x = 0}`.
    pub fn kernel(m: &Matrix) -> Subspace {
        let field = m.field();
        let n = m.cols();
        let red = rref(m);
        let mut is_pivot = alloc::vec![false; n];
        for &p in &red.pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = alloc::vec![field.zero(); n];
            v[free] = field.one();
            for (r, &p) in red.pivots.iter().enumerate() {
                v[p] = -red.matrix.get(r, free);
            }
            vectors.push(v);
        }
        Subspace::span_of(field, n, &vectors)
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not occupied by a pivot; they index the quotient basis.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = alloc::vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v` minus its component along the pivot coordinates; zero iff `v ∈ self`.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length vs ambient");
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            let neg = -&c;
            for (k, x) in self.basis.row(r).iter().enumerate() {
                if !x.is_zero() {
                    out[k].add_product(&neg, x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Coordinates of `v` in the canonical basis, `None` if `v ∉ self`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = alloc::vec![self.field().zero(); self.ambient];
        for (r, c) in coords.iter().enumerate() {
            super::matrix::axpy(&mut out, c, self.basis.row(r));
        }
        out
    }

    pub fn is_subset_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    fn same_ambient(&self, other: &Subspace) -> Result<(), Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { context: "subspace ambient", expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    /// Smallest subspace containing both.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.same_ambient(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)))
    }

    /// Largest subspace inside both, from the left kernel of the stacked bases:
    /// `x·U + y·V = 0` gives `x·U ∈ U ∩ V`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.same_ambient(other)?;
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(field, self.ambient));
        }
        let stacked = self.basis.vstack(&other.basis);
        let relations = Subspace::kernel(&stacked.transpose());
        let r = self.dim();
        let vectors: Vec<Vec<Scalar>> = relations
            .basis_vectors()
            .iter()
            .map(|z| self.combine(&z[..r]))
            .collect();
        Ok(Subspace::span_of(field, self.ambient, &vectors))
    }

    /// Image of this subspace under `m` (which must accept vectors of length `ambient`).
    pub fn map(&self, m: &Matrix) -> Result<Subspace, Error> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch { context: "map source", expected: self.ambient, found: m.cols() });
        }
        let images: Vec<Vec<Scalar>> = (0..self.dim()).map(|r| m.apply(self.basis.row(r))).collect();
        Ok(Subspace::span_of(self.field(), m.rows(), &images))
    }

    /// `self ⊗ other` inside `ambient ⊗ other.ambient`. Kronecker products of
    /// reduced bases are again reduced, so no elimination is needed.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let basis = self.basis.kron(&other.basis);
        let pivots = self
            .pivots
            .iter()
            .flat_map(|&p| other.pivots.iter().map(move |&q| p * other.ambient + q))
            .collect();
        Subspace { ambient: self.ambient * other.ambient, basis, pivots }
    }
}

/// Projection onto, and section from, the quotient `field^ambient / w`.
/// The quotient basis is the non-pivot coordinates of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub projection: Matrix,
    pub section: Matrix,
    pub quo_dim: usize,
    pub kept: Vec<usize>,
}

pub fn quotient_space(ambient: usize, w: &Subspace) -> Result<Quotient, Error> {
    if w.ambient() != ambient {
        return Err(Error::DimensionMismatch { context: "quotient ambient", expected: ambient, found: w.ambient() });
    }
    let field = w.field();
    let kept = w.non_pivots();
    let q = kept.len();
    let mut projection = Matrix::zeros(field, q, ambient);
    for j in 0..ambient {
        let e = super::matrix::basis_vector(field, ambient, j);
        let red = w.reduce(&e);
        for (a, &k) in kept.iter().enumerate() {
            projection.set(a, j, red[k].clone());
        }
    }
    let mut section = Matrix::zeros(field, ambient, q);
    for (a, &k) in kept.iter().enumerate() {
        section.set(k, a, field.one());
    }
    Ok(Quotient { projection, section, quo_dim: q, kept })
}

/// `{x : f·x ∈ target}`.
pub fn preimage_subspace(f: &Matrix, target: &Subspace) -> Result<Subspace, Error> {
    if f.rows() != target.ambient() {
        return Err(Error::DimensionMismatch { context: "preimage target", expected: target.ambient(), found: f.rows() });
    }
    let quo = quotient_space(target.ambient(), target)?;
    Ok(Subspace::kernel(&quo.projection.mul(f)))
}
