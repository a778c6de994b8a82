//! Right comodule algebras `δ: A → A⊗H`, their coefficient spaces, Hopf
//! images, inner-faithfulness, coinvariants, factorizations and the tensor
//! and conjugated coactions.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{describe_vector, tensor_multiply, Algebra, AlgebraMorphism};
use crate::error::Error;
use crate::hopf::{HopfAlgebra, HopfSubalgebra};
use crate::linalg::{apply_on_factor, basis_vector, tensor_vectors, Field, Matrix, Scalar, Subspace};

/// `map` is the `(dim A·dim H) × dim A` matrix of δ: column `i` is `δ(a_i)`
/// flattened with `a_j⊗h_k` at `j·dim H + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaction {
    comodule: Algebra,
    hopf: HopfAlgebra,
    map: Matrix,
}

impl Coaction {
    pub fn new(comodule: Algebra, hopf: HopfAlgebra, map: Matrix) -> Result<Coaction, Error> {
        let (da, dh) = (comodule.dim(), hopf.dim());
        if map.rows() != da * dh || map.cols() != da {
            return Err(Error::DimensionMismatch { context: "coaction map", expected: da * da * dh, found: map.rows() * map.cols() });
        }
        if comodule.field() != hopf.field() || map.field() != hopf.field() {
            return Err(Error::FieldMismatch("coaction".to_string()));
        }
        Ok(Coaction { comodule, hopf, map })
    }

    /// From `(i, j, k, c)` entries meaning `δ(a_i) ∋ c·a_j⊗h_k`.
    pub fn from_sparse(comodule: Algebra, hopf: HopfAlgebra, entries: &[(usize, usize, usize, Scalar)]) -> Result<Coaction, Error> {
        let (da, dh) = (comodule.dim(), hopf.dim());
        let mut map = Matrix::zeros(comodule.field(), da * dh, da);
        for (i, j, k, c) in entries {
            if *i >= da || *j >= da {
                return Err(Error::DimensionMismatch { context: "coaction index", expected: da, found: (*i).max(*j) });
            }
            if *k >= dh {
                return Err(Error::DimensionMismatch { context: "coaction Hopf index", expected: dh, found: *k });
            }
            let slot = map.entry_mut(j * dh + k, *i);
            *slot = &*slot + c;
        }
        Coaction::new(comodule, hopf, map)
    }

    pub fn comodule(&self) -> &Algebra {
        &self.comodule
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn field(&self) -> Field {
        self.hopf.field()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.map.apply(v)
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let (da, dh) = (self.comodule.dim(), self.hopf.dim());
        let mut out = Vec::new();
        for i in 0..da {
            for jk in 0..da * dh {
                let c = self.map.get(jk, i);
                if !c.is_zero() {
                    out.push((i, jk / dh, jk % dh, c.clone()));
                }
            }
        }
        out
    }

    /// Itemized check of coassociativity, counitality and multiplicativity.
    pub fn check(&self) -> CoactionReport {
        let (da, dh) = (self.comodule.dim(), self.hopf.dim());
        let field = self.field();
        let mut violations = Vec::new();
        let eps = self.hopf.counit_matrix();
        for i in 0..da {
            let d = self.map.column(i);
            let left = apply_on_factor(&d, &[da, dh], 0, &self.map);
            let right = apply_on_factor(&d, &[da, dh], 1, self.hopf.comult_matrix());
            if left != right {
                violations.push(CoactionViolation::Coassociativity { i });
            }
            if apply_on_factor(&d, &[da, dh], 1, &eps) != basis_vector(field, da, i) {
                violations.push(CoactionViolation::Counit { i });
            }
        }
        let unit = self.comodule.unit().to_vec();
        if self.apply(&unit) != tensor_vectors(&unit, self.hopf.unit()) {
            violations.push(CoactionViolation::Unit);
        }
        let pair = [&self.comodule, self.hopf.algebra()];
        for i in 0..da {
            for j in 0..da {
                let prod = self.comodule.mul(&self.comodule.basis(i), &self.comodule.basis(j));
                let rhs = tensor_multiply(&pair, &self.map.column(i), &self.map.column(j));
                if self.apply(&prod) != rhs {
                    violations.push(CoactionViolation::Multiplicative { i, j });
                }
            }
        }
        CoactionReport { violations }
    }

    /// The H-legs `(ω⊗id)δ(a_i)` for every basis element and coordinate functional.
    pub fn legs(&self) -> Vec<Vec<Scalar>> {
        let (da, dh) = (self.comodule.dim(), self.hopf.dim());
        let mut out = Vec::new();
        for i in 0..da {
            for j in 0..da {
                let leg: Vec<Scalar> = (0..dh).map(|k| self.map.get(j * dh + k, i).clone()).collect();
                if leg.iter().any(|c| !c.is_zero()) {
                    out.push(leg);
                }
            }
        }
        out
    }

    /// The coefficient space: span of all H-legs of δ. It is a subcoalgebra.
    pub fn coefficient_space(&self) -> Subspace {
        let c = Subspace::span_of(self.field(), self.hopf.dim(), &self.legs());
        debug_assert_eq!(self.hopf.coalgebra_closure(&c), c, "coefficient space is not a subcoalgebra");
        c
    }

    /// The Hopf image `H_δ` and the corestricted coaction `δ_im`.
    pub fn hopf_image(&self) -> Factorization {
        let sub = self.hopf.hopf_subalgebra_closure(&self.coefficient_space());
        self.corestrict(&sub).expect("δ factors through its Hopf image")
    }

    pub fn is_inner_faithful(&self) -> bool {
        self.hopf_image().sub.dim() == self.hopf.dim()
    }

    /// The corestriction of δ to `A⊗L` when `δ(A) ⊆ A⊗L`.
    pub fn corestrict(&self, l: &HopfSubalgebra) -> Option<Factorization> {
        let (da, dh) = (self.comodule.dim(), self.hopf.dim());
        let carrier = l.carrier();
        let r = carrier.dim();
        let mut map = Matrix::zeros(self.field(), da * r, da);
        for i in 0..da {
            for j in 0..da {
                let leg: Vec<Scalar> = (0..dh).map(|k| self.map.get(j * dh + k, i).clone()).collect();
                let coords = carrier.coordinates(&leg)?;
                for (s, c) in coords.into_iter().enumerate() {
                    map.set(j * r + s, i, c);
                }
            }
        }
        let restricted = Coaction::new(self.comodule.clone(), l.induced().clone(), map).expect("corestriction shape");
        Some(Factorization { sub: l.clone(), restricted })
    }

    /// Whether δ factors through the Hopf subalgebra `l`; when it does, the
    /// Hopf image is contained in `l`.
    pub fn factors_through(&self, l: &HopfSubalgebra) -> Option<Factorization> {
        let f = self.corestrict(l)?;
        debug_assert!(self.hopf_image().sub.carrier().is_subset_of(l.carrier()), "Hopf image is not minimal");
        Some(f)
    }

    /// `A^{co H} = {a : δ(a) = a⊗1}`; always a subalgebra.
    pub fn coinvariants(&self) -> Subspace {
        let da = self.comodule.dim();
        let trivial = Matrix::identity(self.field(), da).kron(&self.hopf.unit_matrix());
        let b = Subspace::kernel(&self.map.sub(&trivial));
        debug_assert!(self.comodule.subalgebra_witness(&b).is_ok(), "coinvariants are not a subalgebra");
        b
    }

    /// The coaction of `H₁⊗H₂` on `A⊗B`, `a⊗b ↦ a₀⊗b₀⊗a₁⊗b₁`.
    pub fn tensor(&self, other: &Coaction) -> Coaction {
        let (da, dh1) = (self.comodule.dim(), self.hopf.dim());
        let (db, dh2) = (other.comodule.dim(), other.hopf.dim());
        let dh = dh1 * dh2;
        let a = self.comodule.tensor(&other.comodule);
        let h = self.hopf.tensor(&other.hopf);
        let mut map = Matrix::zeros(self.field(), da * db * dh, da * db);
        let first = self.entries();
        let second = other.entries();
        for (i, j1, k1, c1) in &first {
            for (i2, j2, k2, c2) in &second {
                let row = (j1 * db + j2) * dh + k1 * dh2 + k2;
                let col = i * db + i2;
                let slot = map.entry_mut(row, col);
                *slot = &*slot + &(c1 * c2);
            }
        }
        Coaction::new(a, h, map).expect("tensor coaction shape")
    }

    /// `(θ⊗id)∘δ∘θ⁻¹` on the target of the algebra isomorphism `θ`.
    pub fn conjugate(&self, theta: &AlgebraMorphism) -> Result<Coaction, Error> {
        if !theta.source.same_structure(&self.comodule) {
            return Err(Error::Precondition("isomorphism does not start at the comodule algebra".to_string()));
        }
        theta.check().map_err(|w| Error::NotAlgebraMorphism(w.to_string()))?;
        let inv = theta.matrix.inverse().ok_or(Error::NotInvertible)?;
        let lifted = theta.matrix.kron(&Matrix::identity(self.field(), self.hopf.dim()));
        let map = lifted.mul(&self.map).mul(&inv);
        Coaction::new(theta.target.clone(), self.hopf.clone(), map)
    }

    /// `(id⊗ψ)∘δ` for a Hopf morphism `ψ: H → K`.
    pub fn extend(&self, psi: &Matrix, k: &HopfAlgebra) -> Result<Coaction, Error> {
        self.hopf.hopf_morphism_witness(k, psi).map_err(|w| Error::NotHopfMorphism(w.to_string()))?;
        let lifted = Matrix::identity(self.field(), self.comodule.dim()).kron(psi);
        Coaction::new(self.comodule.clone(), k.clone(), lifted.mul(&self.map))
    }

    /// The diagonal coaction on `A⊗A`, `a⊗a′ ↦ a₀⊗a′₀⊗a₁a′₁`, as a
    /// `(dim A²·dim H) × dim A²` matrix.
    pub fn diagonal_map(&self) -> Matrix {
        let (da, dh) = (self.comodule.dim(), self.hopf.dim());
        let field = self.field();
        let mut map = Matrix::zeros(field, da * da * dh, da * da);
        let entries = self.entries();
        let mut by_source: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); da];
        for (i, j, k, c) in entries {
            by_source[i].push((j, k, c));
        }
        let h = self.hopf.algebra();
        for i in 0..da {
            for i2 in 0..da {
                let col = i * da + i2;
                for (j, k, c) in &by_source[i] {
                    for (j2, k2, c2) in &by_source[i2] {
                        let cc = c * c2;
                        for (m, s) in h.basis_product(*k, *k2) {
                            let slot = map.entry_mut((j * da + j2) * dh + m, col);
                            slot.add_product(&cc, s);
                        }
                    }
                }
            }
        }
        map
    }

    /// Human-readable `δ(a_i)`.
    pub fn describe(&self, i: usize) -> String {
        let names: Vec<String> = self
            .comodule
            .names()
            .iter()
            .flat_map(|a| self.hopf.names().iter().map(move |h| crate::algebra::tensor_name(a, h)))
            .collect();
        describe_vector(&names, &self.map.column(i))
    }
}

/// A factorization `δ = (id⊗ι_L)∘δ_L` through a Hopf subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub sub: HopfSubalgebra,
    pub restricted: Coaction,
}

impl Factorization {
    /// `(id⊗ι_L)∘δ_L = δ`, entry-wise.
    pub fn recovers(&self, original: &Coaction) -> bool {
        let lifted = Matrix::identity(original.field(), original.comodule.dim()).kron(self.sub.inclusion());
        lifted.mul(self.restricted.map()) == *original.map()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoactionViolation {
    Coassociativity { i: usize },
    Counit { i: usize },
    Unit,
    Multiplicative { i: usize, j: usize },
}

impl fmt::Display for CoactionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoactionViolation::Coassociativity { i } => write!(f, "(δ⊗id)δ(a{i}) ≠ (id⊗Δ)δ(a{i})"),
            CoactionViolation::Counit { i } => write!(f, "(id⊗ε)δ(a{i}) ≠ a{i}"),
            CoactionViolation::Unit => write!(f, "δ(1) ≠ 1⊗1"),
            CoactionViolation::Multiplicative { i, j } => write!(f, "δ(a{i}·a{j}) ≠ δ(a{i})δ(a{j})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionReport {
    pub violations: Vec<CoactionViolation>,
}

impl CoactionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{
        cyclic_group, grading_coaction, group_algebra, group_hom_matrix, regular_coaction, surjection_coaction,
        sweedler_h4, trivial_coaction, truncated_polynomial,
    };

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    fn span_of_basis(dim: usize, idx: &[usize]) -> Subspace {
        let vs: Vec<Vec<Scalar>> = idx.iter().map(|&i| basis_vector(Field::Rational, dim, i)).collect();
        Subspace::span_of(Field::Rational, dim, &vs)
    }

    #[test]
    fn check_examples() {
        let h = sweedler_h4(Field::Rational).unwrap();
        assert!(regular_coaction(&h).check().is_valid());
        let a = truncated_polynomial(Field::Rational, 2);
        let c = grading_coaction(&a, &cyclic_group(2), &[0, 1]).unwrap();
        assert!(c.check().is_valid());
        // δ(x) = x⊗1 + x⊗g
        let mut map = c.map().clone();
        map.set(2, 1, q(1));
        let bad = Coaction::new(a, c.hopf().clone(), map).unwrap();
        let report = bad.check();
        assert!(report.violations.contains(&CoactionViolation::Counit { i: 1 }));
    }

    #[test]
    fn coefficient_spaces() {
        let z6 = cyclic_group(6);
        let h = group_algebra(&z6, Field::Rational).unwrap();
        let triv = trivial_coaction(&truncated_polynomial(Field::Rational, 2), &h);
        assert_eq!(triv.coefficient_space(), span_of_basis(6, &[0]));
        let c = grading_coaction(&truncated_polynomial(Field::Rational, 3), &z6, &[0, 2, 4]).unwrap();
        assert_eq!(c.coefficient_space(), span_of_basis(6, &[0, 2, 4]));
        let c = grading_coaction(&truncated_polynomial(Field::Rational, 2), &z6, &[0, 1]).unwrap();
        assert_eq!(c.coefficient_space(), span_of_basis(6, &[0, 1]));
        let image = c.hopf_image();
        assert_eq!(image.sub.dim(), 6);
    }

    #[test]
    fn hopf_images() {
        let z2 = group_algebra(&cyclic_group(2), Field::Rational).unwrap();
        assert_eq!(regular_coaction(&z2).hopf_image().sub.dim(), 2);
        let z6 = cyclic_group(6);
        let c = grading_coaction(&truncated_polynomial(Field::Rational, 3), &z6, &[0, 2, 4]).unwrap();
        let f = c.hopf_image();
        assert_eq!(f.sub.carrier(), &span_of_basis(6, &[0, 2, 4]));
        assert!(f.recovers(&c));
        assert!(f.restricted.check().is_valid());
        assert!(f.restricted.is_inner_faithful());
    }

    #[test]
    fn inner_faithfulness() {
        let h = sweedler_h4(Field::Rational).unwrap();
        assert!(regular_coaction(&h).is_inner_faithful());
        assert!(!trivial_coaction(&truncated_polynomial(Field::Rational, 2), &h).is_inner_faithful());
        let (z4, z2) = (cyclic_group(4), cyclic_group(2));
        let h4 = group_algebra(&z4, Field::Rational).unwrap();
        let h2 = group_algebra(&z2, Field::Rational).unwrap();
        let psi = group_hom_matrix(Field::Rational, &z4, &z2, &[0, 1, 0, 1]).unwrap();
        assert!(surjection_coaction(&h4, &psi, &h2).unwrap().is_inner_faithful());
    }

    #[test]
    fn factorizations() {
        let z6 = cyclic_group(6);
        let h = group_algebra(&z6, Field::Rational).unwrap();
        let c = grading_coaction(&truncated_polynomial(Field::Rational, 3), &z6, &[0, 2, 4]).unwrap();
        assert!(c.factors_through(&HopfSubalgebra::whole(&h)).is_some());
        let z3 = HopfSubalgebra::from_carrier(&h, span_of_basis(6, &[0, 2, 4])).unwrap();
        assert!(c.factors_through(&z3).unwrap().recovers(&c));
        let z2 = HopfSubalgebra::from_carrier(&h, span_of_basis(6, &[0, 3])).unwrap();
        assert!(c.factors_through(&z2).is_none());
    }

    #[test]
    fn coinvariant_examples() {
        let h = group_algebra(&cyclic_group(3), Field::Rational).unwrap();
        let a = truncated_polynomial(Field::Rational, 3);
        assert!(trivial_coaction(&a, &h).coinvariants().is_full());
        let c = grading_coaction(&a, &cyclic_group(3), &[0, 1, 2]).unwrap();
        assert_eq!(c.coinvariants(), span_of_basis(3, &[0]));
        let s = sweedler_h4(Field::Rational).unwrap();
        // δ(x) = x⊗g on k[x]/(x²) over H4
        let a2 = truncated_polynomial(Field::Rational, 2);
        let c = Coaction::from_sparse(a2, s, &[(0, 0, 0, q(1)), (1, 1, 1, q(1))]).unwrap();
        assert!(c.check().is_valid());
        assert_eq!(c.coinvariants(), span_of_basis(2, &[0]));
    }

    #[test]
    fn tensor_coactions() {
        let z2 = cyclic_group(2);
        let c = grading_coaction(&truncated_polynomial(Field::Rational, 2), &z2, &[0, 1]).unwrap();
        let t = c.tensor(&c);
        assert!(t.check().is_valid());
        assert_eq!(t.coefficient_space().dim(), 4);
        assert_eq!(t.hopf_image().sub.dim(), 4);
        let h = group_algebra(&z2, Field::Rational).unwrap();
        let triv = trivial_coaction(&Algebra::ground(Field::Rational), &h);
        let tt = triv.tensor(&triv);
        assert_eq!(tt.coefficient_space().dim(), 1);
    }

    #[test]
    fn conjugation() {
        let a = truncated_polynomial(Field::Rational, 2);
        let c = grading_coaction(&a, &cyclic_group(2), &[0, 1]).unwrap();
        let id = AlgebraMorphism::identity(&a);
        assert_eq!(c.conjugate(&id).unwrap(), c);
        let p = Matrix::from_rows(Field::Rational, 2, &[vec![q(1), q(0)], vec![q(0), q(2)]]).unwrap();
        let theta = a.transport(&p).unwrap();
        let conj = c.conjugate(&theta).unwrap();
        assert!(conj.check().is_valid());
        assert_eq!(conj.hopf_image().sub.carrier(), c.hopf_image().sub.carrier());
        let singular = AlgebraMorphism::new(a.clone(), a.clone(), Matrix::zeros(Field::Rational, 2, 2)).unwrap();
        assert!(c.conjugate(&singular).is_err());
    }
}
