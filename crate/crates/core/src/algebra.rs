//! Finite-dimensional unital associative algebras given by structure
//! constants, with ideals, quotients and algebra morphisms.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::linalg::{
    axpy, basis_vector, is_zero_vector, quotient_space, sub_vectors, Field, Matrix, Scalar,
    Subspace,
};

/// `e_i · e_j = Σ_k mult[(i·dim + j)·dim + k] e_k`, with unit `1_A = Σ unit[i] e_i`.
///
/// An optional augmentation (an algebra map `A → k`) can be declared; its
/// kernel is the default seed for bundle reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    names: Vec<String>,
    mult: Vec<Scalar>,
    unit: Vec<Scalar>,
    augmentation: Option<Vec<Scalar>>,
    // sparse view of `mult`, indexed by i·dim + j
    table: Vec<Vec<(usize, Scalar)>>,
}

impl Algebra {
    pub fn new(field: Field, names: Vec<String>, mult: Vec<Scalar>, unit: Vec<Scalar>) -> Result<Algebra, Error> {
        let d = names.len();
        if mult.len() != d * d * d {
            return Err(Error::DimensionMismatch { context: "structure constants", expected: d * d * d, found: mult.len() });
        }
        if unit.len() != d {
            return Err(Error::DimensionMismatch { context: "unit", expected: d, found: unit.len() });
        }
        check_field(field, mult.iter().chain(&unit))?;
        let table = (0..d * d)
            .map(|ij| {
                (0..d)
                    .filter_map(|k| {
                        let c = &mult[ij * d + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(Algebra { field, names, mult, unit, augmentation: None, table })
    }

    /// Builds from sparse `(i, j, k, c)` entries meaning `e_i·e_j ∋ c·e_k`;
    /// repeated entries are summed.
    pub fn from_sparse(
        field: Field,
        names: Vec<String>,
        entries: &[(usize, usize, usize, Scalar)],
        unit: Vec<Scalar>,
    ) -> Result<Algebra, Error> {
        let d = names.len();
        let mut mult = vec![field.zero(); d * d * d];
        for (i, j, k, c) in entries {
            let idx = [*i, *j, *k];
            if let Some(&bad) = idx.iter().find(|&&x| x >= d) {
                return Err(Error::DimensionMismatch { context: "structure constant index", expected: d, found: bad });
            }
            let slot = &mut mult[(i * d + j) * d + k];
            *slot = &*slot + c;
        }
        Algebra::new(field, names, mult, unit)
    }

    /// The one-dimensional algebra `k`.
    pub fn ground(field: Field) -> Algebra {
        Algebra::new(field, vec!["1".to_string()], vec![field.one()], vec![field.one()])
            .expect("ground field algebra")
            .with_augmentation(vec![field.one()])
            .expect("identity augmentation")
    }

    pub fn with_augmentation(mut self, augmentation: Vec<Scalar>) -> Result<Algebra, Error> {
        if augmentation.len() != self.dim() {
            return Err(Error::DimensionMismatch { context: "augmentation", expected: self.dim(), found: augmentation.len() });
        }
        check_field(self.field, augmentation.iter())?;
        self.augmentation = Some(augmentation);
        Ok(self)
    }

    pub fn without_augmentation(mut self) -> Algebra {
        self.augmentation = None;
        self
    }

    pub fn with_names(mut self, names: Vec<String>) -> Algebra {
        assert_eq!(names.len(), self.dim());
        self.names = names;
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn augmentation(&self) -> Option<&[Scalar]> {
        self.augmentation.as_deref()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let d = self.dim();
        &self.mult[(i * d + j) * d + k]
    }

    /// Nonzero `(k, c)` with `e_i·e_j = Σ c·e_k`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    /// All nonzero structure constants as `(i, j, k, c)`, in index order.
    pub fn sparse_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.basis_product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// Two algebras with identical structure constants and unit (names ignored).
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.field == other.field && self.mult == other.mult && self.unit == other.unit
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        let d = self.dim();
        for v in [x, y] {
            if v.len() != d {
                return Err(Error::DimensionMismatch { context: "algebra element", expected: d, found: v.len() });
            }
        }
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![self.field.zero(); d];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.basis_product(i, j) {
                    out[*k].add_product(&ab, c);
                }
            }
        }
        out
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        basis_vector(self.field, self.dim(), i)
    }

    /// The multiplication map `A⊗A → A` as a `dim × dim²` matrix.
    pub fn mult_matrix(&self) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(self.field, d, d * d);
        for ij in 0..d * d {
            for (k, c) in &self.table[ij] {
                m.set(*k, ij, c.clone());
            }
        }
        m
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..d).map(|j| self.mul(x, &self.basis(j))).collect();
        Matrix::from_columns(self.field, d, &cols).expect("square")
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..d).map(|j| self.mul(&self.basis(j), x)).collect();
        Matrix::from_columns(self.field, d, &cols).expect("square")
    }

    /// Itemized associativity and unit-law check over all basis triples.
    pub fn check(&self) -> AlgebraReport {
        let d = self.dim();
        let mut violations = Vec::new();
        let prods: Vec<Vec<Scalar>> = (0..d * d)
            .map(|ij| {
                let mut v = vec![self.field.zero(); d];
                for (k, c) in &self.table[ij] {
                    v[*k] = c.clone();
                }
                v
            })
            .collect();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let left = self.mul(&prods[i * d + j], &self.basis(k));
                    let right = self.mul(&self.basis(i), &prods[j * d + k]);
                    if left != right {
                        violations.push(AlgebraViolation::Associativity { i, j, k });
                    }
                }
            }
        }
        for i in 0..d {
            let e = self.basis(i);
            if self.mul(&self.unit, &e) != e {
                violations.push(AlgebraViolation::LeftUnit { i });
            }
            if self.mul(&e, &self.unit) != e {
                violations.push(AlgebraViolation::RightUnit { i });
            }
        }
        if let Some(aug) = &self.augmentation {
            let eval = |v: &[Scalar]| dot(aug, v);
            if !eval(&self.unit).is_one() {
                violations.push(AlgebraViolation::AugmentationUnit);
            }
            for i in 0..d {
                for j in 0..d {
                    if eval(&prods[i * d + j]) != &aug[i] * &aug[j] {
                        violations.push(AlgebraViolation::AugmentationProduct { i, j });
                    }
                }
            }
        }
        AlgebraReport { violations }
    }

    /// `Ok` when `A·J ⊆ J` and `J·A ⊆ J`; otherwise the first violating
    /// product of a basis vector with a generator of `J`.
    pub fn two_sided_ideal_witness(&self, j: &Subspace) -> Result<(), IdealWitness> {
        assert_eq!(j.ambient(), self.dim(), "ideal ambient");
        let gens = j.basis_vectors();
        for (g, gen) in gens.iter().enumerate() {
            for b in 0..self.dim() {
                let e = self.basis(b);
                if !j.contains(&self.mul(&e, gen)) {
                    return Err(IdealWitness { side: Side::Left, basis: b, generator: g });
                }
                if !j.contains(&self.mul(gen, &e)) {
                    return Err(IdealWitness { side: Side::Right, basis: b, generator: g });
                }
            }
        }
        Ok(())
    }

    pub fn is_two_sided_ideal(&self, j: &Subspace) -> bool {
        self.two_sided_ideal_witness(j).is_ok()
    }

    /// `Ok` when `s` contains the unit and is closed under multiplication.
    pub fn subalgebra_witness(&self, s: &Subspace) -> Result<(), String> {
        if !s.contains(&self.unit) {
            return Err("does not contain the unit".to_string());
        }
        let gens = s.basis_vectors();
        for (a, x) in gens.iter().enumerate() {
            for (b, y) in gens.iter().enumerate() {
                if !s.contains(&self.mul(x, y)) {
                    return Err(format!("product of generators {a} and {b} leaves the subspace"));
                }
            }
        }
        Ok(())
    }

    /// `A/I` on the non-pivot coordinates of `I`, with the canonical projection.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, AlgebraMorphism), Error> {
        if let Err(w) = self.two_sided_ideal_witness(ideal) {
            return Err(Error::NotAnIdeal(w.describe(self)));
        }
        let quo = quotient_space(self.dim(), ideal)?;
        let q = quo.quo_dim;
        let names: Vec<String> = quo.kept.iter().map(|&k| self.names[k].clone()).collect();
        let mut mult = Vec::with_capacity(q * q * q);
        for &a in &quo.kept {
            for &b in &quo.kept {
                let prod = self.mul(&self.basis(a), &self.basis(b));
                mult.extend(quo.projection.apply(&prod));
            }
        }
        let unit = quo.projection.apply(&self.unit);
        let mut target = Algebra::new(self.field, names, mult, unit)?;
        if let Some(aug) = &self.augmentation {
            // the augmentation descends when it vanishes on the ideal
            if ideal.basis_vectors().iter().all(|v| dot(aug, v).is_zero()) {
                let descended = quo.kept.iter().map(|&k| aug[k].clone()).collect();
                target = target.with_augmentation(descended)?;
            }
        }
        let projection = AlgebraMorphism { source: self.clone(), target, matrix: quo.projection };
        Ok((projection.target.clone(), projection))
    }

    /// `A ⊗ B` with componentwise multiplication, basis `a_i⊗b_j` at `i·dim B + j`.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        assert_eq!(self.field, other.field, "tensor of algebras over different fields");
        let (da, db) = (self.dim(), other.dim());
        let d = da * db;
        let names = self
            .names
            .iter()
            .flat_map(|a| other.names.iter().map(move |b| tensor_name(a, b)))
            .collect();
        let mut mult = vec![self.field.zero(); d * d * d];
        for i1 in 0..da {
            for j1 in 0..db {
                for i2 in 0..da {
                    for j2 in 0..db {
                        let row = (i1 * db + j1) * d + (i2 * db + j2);
                        for (k1, c1) in self.basis_product(i1, i2) {
                            for (k2, c2) in other.basis_product(j1, j2) {
                                mult[row * d + k1 * db + k2] = c1 * c2;
                            }
                        }
                    }
                }
            }
        }
        let unit = crate::linalg::tensor_vectors(&self.unit, &other.unit);
        let alg = Algebra::new(self.field, names, mult, unit).expect("tensor algebra shape");
        match (&self.augmentation, &other.augmentation) {
            (Some(a), Some(b)) => alg
                .with_augmentation(crate::linalg::tensor_vectors(a, b))
                .expect("tensor augmentation"),
            _ => alg,
        }
    }

    /// The algebra `B` obtained by moving the structure of `A` along an
    /// invertible basis change `p`, together with the isomorphism `p: A → B`.
    pub fn transport(&self, p: &Matrix) -> Result<AlgebraMorphism, Error> {
        let d = self.dim();
        if p.rows() != d || p.cols() != d {
            return Err(Error::DimensionMismatch { context: "basis change", expected: d, found: p.rows() });
        }
        let inv = p.inverse().ok_or(Error::NotInvertible)?;
        let pre: Vec<Vec<Scalar>> = (0..d).map(|i| inv.column(i)).collect();
        let mut mult = Vec::with_capacity(d * d * d);
        for x in &pre {
            for y in &pre {
                mult.extend(p.apply(&self.mul(x, y)));
            }
        }
        let unit = p.apply(&self.unit);
        let names = (0..d).map(|i| format!("b{i}")).collect();
        let mut target = Algebra::new(self.field, names, mult, unit)?;
        if let Some(aug) = &self.augmentation {
            let moved = pre.iter().map(|v| dot(aug, v)).collect();
            target = target.with_augmentation(moved)?;
        }
        Ok(AlgebraMorphism { source: self.clone(), target, matrix: p.clone() })
    }
}

/// `Σ x_i y_i`.
pub fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    let mut acc = x.first().map_or_else(|| y[0].field().zero(), |s| s.field().zero());
    for (a, b) in x.iter().zip(y) {
        acc.add_product(a, b);
    }
    acc
}

fn check_field<'a>(field: Field, scalars: impl Iterator<Item = &'a Scalar>) -> Result<(), Error> {
    for s in scalars {
        if s.field() != field {
            return Err(Error::FieldMismatch(format!("expected {field}, found {}", s.field())));
        }
    }
    Ok(())
}

pub(crate) fn tensor_name(a: &str, b: &str) -> String {
    format!("{a}⊗{b}")
}

/// Human-readable linear combination of named basis vectors, e.g. `g - 1`.
pub fn describe_vector(names: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let neg = c.signum() < 0;
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Products of basis tuples in a tensor product of algebras, without
/// materializing the tensor algebra's structure constants.
pub fn tensor_multiply(factors: &[&Algebra], x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let dims: Vec<usize> = factors.iter().map(|a| a.dim()).collect();
    let total: usize = dims.iter().product();
    assert_eq!(x.len(), total);
    assert_eq!(y.len(), total);
    let field = factors[0].field();
    let index = crate::linalg::TensorIndex::new(&dims);
    let nz = |v: &[Scalar]| -> Vec<(Vec<usize>, Scalar)> {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (index.unflatten(i), c.clone()))
            .collect()
    };
    let (xs, ys) = (nz(x), nz(y));
    let mut out = vec![field.zero(); total];
    for (a, ca) in &xs {
        for (b, cb) in &ys {
            let mut terms: Vec<(usize, Scalar)> = vec![(0, ca * cb)];
            for (f, alg) in factors.iter().enumerate() {
                let prod = alg.basis_product(a[f], b[f]);
                let mut next = Vec::with_capacity(terms.len() * prod.len());
                for (flat, c) in &terms {
                    for (k, s) in prod {
                        next.push((flat * dims[f] + k, c * s));
                    }
                }
                terms = next;
                if terms.is_empty() {
                    break;
                }
            }
            for (flat, c) in terms {
                out[flat] = &out[flat] + &c;
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A product leaving a candidate ideal: `e_basis · g` (left) or `g · e_basis`
/// (right), where `g` is the `generator`-th canonical basis vector of the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealWitness {
    pub side: Side,
    pub basis: usize,
    pub generator: usize,
}

impl IdealWitness {
    pub fn describe(&self, a: &Algebra) -> String {
        let name = &a.names()[self.basis];
        match self.side {
            Side::Left => format!("{name} · generator #{} leaves the subspace", self.generator),
            Side::Right => format!("generator #{} · {name} leaves the subspace", self.generator),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraViolation {
    Associativity { i: usize, j: usize, k: usize },
    LeftUnit { i: usize },
    RightUnit { i: usize },
    AugmentationUnit,
    AugmentationProduct { i: usize, j: usize },
}

impl fmt::Display for AlgebraViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraViolation::Associativity { i, j, k } => write!(f, "associativity fails on (e{i}, e{j}, e{k})"),
            AlgebraViolation::LeftUnit { i } => write!(f, "1·e{i} ≠ e{i}"),
            AlgebraViolation::RightUnit { i } => write!(f, "e{i}·1 ≠ e{i}"),
            AlgebraViolation::AugmentationUnit => write!(f, "augmentation does not send 1 to 1"),
            AlgebraViolation::AugmentationProduct { i, j } => write!(f, "augmentation not multiplicative on (e{i}, e{j})"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraReport {
    pub violations: Vec<AlgebraViolation>,
}

impl AlgebraReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A linear map between algebras, `matrix` of shape `target.dim × source.dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    pub source: Algebra,
    pub target: Algebra,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismWitness {
    Unit,
    Product { i: usize, j: usize },
}

impl fmt::Display for MorphismWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismWitness::Unit => write!(f, "unit is not preserved"),
            MorphismWitness::Product { i, j } => write!(f, "f(e{i}·e{j}) ≠ f(e{i})·f(e{j})"),
        }
    }
}

impl AlgebraMorphism {
    pub fn new(source: Algebra, target: Algebra, matrix: Matrix) -> Result<AlgebraMorphism, Error> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                context: "algebra morphism matrix",
                expected: target.dim() * source.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        Ok(AlgebraMorphism { source, target, matrix })
    }

    pub fn identity(a: &Algebra) -> AlgebraMorphism {
        AlgebraMorphism { source: a.clone(), target: a.clone(), matrix: Matrix::identity(a.field(), a.dim()) }
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(x)
    }

    /// Checks unit preservation and multiplicativity on all basis pairs.
    pub fn check(&self) -> Result<(), MorphismWitness> {
        if self.apply(self.source.unit()) != self.target.unit() {
            return Err(MorphismWitness::Unit);
        }
        let d = self.source.dim();
        let images: Vec<Vec<Scalar>> = (0..d).map(|i| self.matrix.column(i)).collect();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.apply(&self.source.mul(&self.source.basis(i), &self.source.basis(j)));
                let rhs = self.target.mul(&images[i], &images[j]);
                if !is_zero_vector(&sub_vectors(&lhs, &rhs)) {
                    return Err(MorphismWitness::Product { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn is_algebra_morphism(&self) -> bool {
        self.check().is_ok()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &AlgebraMorphism) -> AlgebraMorphism {
        assert_eq!(self.target.dim(), next.source.dim(), "composition shape");
        AlgebraMorphism { source: self.source.clone(), target: next.target.clone(), matrix: next.matrix.mul(&self.matrix) }
    }

    pub fn inverse(&self) -> Option<AlgebraMorphism> {
        self.matrix.inverse().map(|m| AlgebraMorphism { source: self.target.clone(), target: self.source.clone(), matrix: m })
    }

    /// Image of the unit-compatible map restricted to a subspace.
    pub fn image_of(&self, s: &Subspace) -> Subspace {
        s.map(&self.matrix).expect("subspace in source")
    }
}

/// `Σ c_i v_i` for vectors in an algebra, handy for building elements.
pub fn combination(field: Field, dim: usize, terms: &[(Scalar, &[Scalar])]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); dim];
    for (c, v) in terms {
        axpy(&mut out, c, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic_group, group_algebra, truncated_polynomial};

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    #[test]
    fn multiply_examples() {
        let dual = truncated_polynomial(Field::Rational, 2);
        let x = dual.basis(1);
        assert_eq!(dual.multiply(&x, dual.unit()).unwrap(), x);
        assert!(is_zero_vector(&dual.multiply(&x, &x).unwrap()));
        let z3 = group_algebra(&cyclic_group(3), Field::Rational).unwrap();
        let a = z3.algebra();
        assert_eq!(a.multiply(&a.basis(1), &a.basis(2)).unwrap(), a.basis(0));
        assert!(a.multiply(&[q(1)], &a.basis(0)).is_err());
    }

    #[test]
    fn check_flags_broken_tables() {
        let f = Field::Rational;
        assert!(Algebra::ground(f).check().is_valid());
        let z2 = group_algebra(&cyclic_group(2), f).unwrap();
        assert!(z2.algebra().check().is_valid());
        // e0 = "1", e1 = junk with e1·e1 = e1 but e0 is not a unit for e1
        let names = vec!["1".to_string(), "y".to_string()];
        let bad = Algebra::from_sparse(f, names, &[(0, 0, 0, q(1)), (1, 1, 1, q(1))], vec![q(1), q(0)]).unwrap();
        let report = bad.check();
        assert!(report.violations.contains(&AlgebraViolation::LeftUnit { i: 1 }));
        assert!(report.violations.contains(&AlgebraViolation::RightUnit { i: 1 }));
    }

    #[test]
    fn ideal_examples() {
        let f = Field::Rational;
        let dual = truncated_polynomial(f, 2);
        assert!(dual.is_two_sided_ideal(&Subspace::zero(f, 2)));
        assert!(dual.is_two_sided_ideal(&Subspace::span_of(f, 2, &[dual.basis(1)])));
        let z2 = group_algebra(&cyclic_group(2), f).unwrap();
        let a = z2.algebra();
        let w = a.two_sided_ideal_witness(&Subspace::span_of(f, 2, &[a.basis(0)])).unwrap_err();
        assert_eq!(w, IdealWitness { side: Side::Left, basis: 1, generator: 0 });
    }

    #[test]
    fn quotient_examples() {
        let f = Field::Rational;
        let dual = truncated_polynomial(f, 2);
        let (same, pi) = dual.quotient(&Subspace::zero(f, 2)).unwrap();
        assert!(same.same_structure(&dual));
        assert!(pi.matrix.is_identity());
        let (k, pi) = dual.quotient(&Subspace::span_of(f, 2, &[dual.basis(1)])).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.same_structure(&Algebra::ground(f)));
        assert!(pi.is_algebra_morphism());
        let z2 = group_algebra(&cyclic_group(2), f).unwrap();
        let a = z2.algebra();
        let aug = Subspace::span_of(f, 2, &[vec![q(-1), q(1)]]);
        let (k, pi) = a.quotient(&aug).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.check().is_valid());
        assert!(pi.is_algebra_morphism());
        assert!(matches!(a.quotient(&Subspace::span_of(f, 2, &[a.basis(0)])), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn morphism_examples() {
        let f = Field::Rational;
        let z2 = group_algebra(&cyclic_group(2), f).unwrap();
        let a = z2.algebra().clone();
        assert!(AlgebraMorphism::identity(&a).is_algebra_morphism());
        let swap = Matrix::from_rows(f, 2, &[vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        let m = AlgebraMorphism::new(a.clone(), a.clone(), swap).unwrap();
        assert_eq!(m.check(), Err(MorphismWitness::Unit));
        let neg = Matrix::from_rows(f, 2, &[vec![q(1), q(0)], vec![q(0), q(-1)]]).unwrap();
        assert!(AlgebraMorphism::new(a.clone(), a, neg).unwrap().is_algebra_morphism());
    }

    #[test]
    fn transport_gives_isomorphism() {
        let f = Field::Rational;
        let a = truncated_polynomial(f, 3);
        let p = Matrix::from_rows(f, 3, &[vec![q(1), q(2), q(0)], vec![q(0), q(1), q(1)], vec![q(1), q(0), q(3)]]).unwrap();
        let theta = a.transport(&p).unwrap();
        assert!(theta.target.check().is_valid());
        assert!(theta.is_algebra_morphism());
        assert!(theta.inverse().unwrap().is_algebra_morphism());
    }

    #[test]
    fn describe_vectors() {
        let names: Vec<String> = ["1", "g", "x"].iter().map(|s| s.to_string()).collect();
        assert_eq!(describe_vector(&names, &[q(-1), q(1), q(0)]), "-1 + g");
        assert_eq!(describe_vector(&names, &[q(0), q(2), q(-3)]), "2*g - 3*x");
        assert_eq!(describe_vector(&names, &[q(0), q(0), q(0)]), "0");
    }
}
