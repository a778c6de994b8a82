//! Bundles (comodule algebras with a covariant first-order calculus), stable
//! ideals and quotient coactions, Hopf–Galois and principality checks, the
//! Hopf-image reduction pipeline and its action on bundle morphisms.

mod galois;
mod morphism;
mod pipeline;

pub use galois::{
    balanced_tensor, canonical_map, check_covariant_calculus, check_qpb, stable_ideal_identities, universal_calculus,
    ver_map, BalancedTensor, CanonicalMap, QpbReport,
};
pub use morphism::{
    bundles_equivalent, check_bundle_morphism, reduce_morphism, rigidity_embedding, BundleMorphism, Equivalence,
    Rigidity,
};
pub use pipeline::{default_seed, hopf_image_reduction, Claim, ClaimStatus, ReducedBundle, Reduction};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{describe_vector, AlgebraMorphism};
use crate::coaction::Coaction;
use crate::error::Error;
use crate::linalg::{quotient_space, Matrix, Subspace};

/// A comodule algebra `(A, H, δ)` with a calculus `Ω¹(A) = Ω¹_u(A)/N`,
/// presented by the sub-bimodule `N ⊆ ker(m) ⊆ A⊗A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub coaction: Coaction,
    pub calculus: Subspace,
}

impl Bundle {
    pub fn new(coaction: Coaction, calculus: Subspace) -> Result<Bundle, Error> {
        let d = coaction.comodule().dim();
        if calculus.ambient() != d * d {
            return Err(Error::DimensionMismatch { context: "calculus ambient", expected: d * d, found: calculus.ambient() });
        }
        Ok(Bundle { coaction, calculus })
    }

    /// The bundle with the universal calculus (`N = 0`).
    pub fn universal(coaction: Coaction) -> Bundle {
        let d = coaction.comodule().dim();
        let calculus = Subspace::zero(coaction.field(), d * d);
        Bundle { coaction, calculus }
    }
}

/// One named pass/fail item of a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &'static str, passed: bool, detail: String) -> Check {
        Check { name, passed, detail }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// The greatest subspace `I ⊆ seed` with `A·I ⊆ I`, `I·A ⊆ I` and
/// `δ(I) ⊆ I⊗H`, by iterating `I ↦ {x ∈ I : a·x, x·a ∈ I, δ(x) ∈ I⊗H}`
/// from `I₀ = seed`. Dimensions strictly decrease until the fixpoint.
pub fn largest_stable_ideal_within(c: &Coaction, seed: &Subspace) -> Subspace {
    let a = c.comodule();
    let (da, dh) = (a.dim(), c.hopf().dim());
    let field = c.field();
    assert_eq!(seed.ambient(), da, "seed must live in the comodule algebra");
    let lefts: Vec<Matrix> = (0..da).map(|k| a.left_mult_matrix(&a.basis(k))).collect();
    let rights: Vec<Matrix> = (0..da).map(|k| a.right_mult_matrix(&a.basis(k))).collect();
    let mut ideal = seed.clone();
    loop {
        if ideal.is_zero() {
            return ideal;
        }
        let proj = quotient_space(da, &ideal).expect("same ambient").projection;
        // columns parametrize x = Σ t_r b_r over the current basis
        let param = ideal.basis().transpose();
        let mut constraints = Matrix::zeros(field, 0, ideal.dim());
        for m in lefts.iter().chain(&rights) {
            constraints = constraints.vstack(&proj.mul(m).mul(&param));
        }
        let lifted = proj.kron(&Matrix::identity(field, dh));
        constraints = constraints.vstack(&lifted.mul(c.map()).mul(&param));
        let kernel = Subspace::kernel(&constraints);
        let next = kernel.map(&param).expect("parameter shape");
        if next.dim() == ideal.dim() {
            return ideal;
        }
        ideal = next;
    }
}

/// The coaction induced on `A/I` by a stable ideal `I`, with the projection.
pub fn quotient_coaction(c: &Coaction, ideal: &Subspace) -> Result<(Coaction, AlgebraMorphism), Error> {
    let a = c.comodule();
    let (da, dh) = (a.dim(), c.hopf().dim());
    if ideal.ambient() != da {
        return Err(Error::DimensionMismatch { context: "ideal ambient", expected: da, found: ideal.ambient() });
    }
    if ideal.dim() == da {
        return Err(Error::UnitCollapse);
    }
    let (_, pi) = a.quotient(ideal)?;
    let quo = quotient_space(da, ideal)?;
    let lifted = quo.projection.kron(&Matrix::identity(c.field(), dh));
    for v in ideal.basis_vectors() {
        if !crate::linalg::is_zero_vector(&lifted.apply(&c.apply(&v))) {
            return Err(Error::NotStable(format!("δ({}) ∉ I⊗H", describe_vector(a.names(), &v))));
        }
    }
    let map = lifted.mul(c.map()).mul(&quo.section);
    let reduced = Coaction::new(pi.target.clone(), c.hopf().clone(), map)?;
    Ok((reduced, pi))
}

/// `δ̄∘π = (π⊗id)∘δ`, entry-wise.
pub fn quotient_square_commutes(c: &Coaction, reduced: &Coaction, pi: &AlgebraMorphism) -> bool {
    let lifted = pi.matrix.kron(&Matrix::identity(c.field(), c.hopf().dim()));
    reduced.map().mul(&pi.matrix) == lifted.mul(c.map())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic_group, grading_coaction, group_algebra, regular_coaction, truncated_polynomial};
    use crate::linalg::{Field, Scalar};
    use alloc::vec;

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    fn graded() -> Coaction {
        grading_coaction(&truncated_polynomial(Field::Rational, 2), &cyclic_group(2), &[0, 1]).unwrap()
    }

    #[test]
    fn stable_ideal_examples() {
        let c = graded();
        let zero = Subspace::zero(Field::Rational, 2);
        assert_eq!(largest_stable_ideal_within(&c, &zero), zero);
        let x = Subspace::span_of(Field::Rational, 2, &[vec![q(0), q(1)]]);
        assert_eq!(largest_stable_ideal_within(&c, &x), x);
        let z2 = group_algebra(&cyclic_group(2), Field::Rational).unwrap();
        let reg = regular_coaction(&z2);
        let aug = Subspace::span_of(Field::Rational, 2, &[vec![q(-1), q(1)]]);
        assert!(largest_stable_ideal_within(&reg, &aug).is_zero());
        let full = Subspace::full(Field::Rational, 2);
        assert!(largest_stable_ideal_within(&reg, &full).is_full());
    }

    #[test]
    fn quotient_examples() {
        let c = graded();
        let zero = Subspace::zero(Field::Rational, 2);
        let (same, pi) = quotient_coaction(&c, &zero).unwrap();
        assert_eq!(same.map(), c.map());
        assert!(pi.matrix.is_identity());
        let x = Subspace::span_of(Field::Rational, 2, &[vec![q(0), q(1)]]);
        let (red, pi) = quotient_coaction(&c, &x).unwrap();
        assert_eq!(red.comodule().dim(), 1);
        assert!(red.check().is_valid());
        assert_eq!(red.coefficient_space().dim(), 1);
        assert!(quotient_square_commutes(&c, &red, &pi));
        assert_eq!(quotient_coaction(&c, &Subspace::full(Field::Rational, 2)).unwrap_err(), Error::UnitCollapse);
        let z2 = group_algebra(&cyclic_group(2), Field::Rational).unwrap();
        let reg = regular_coaction(&z2);
        let aug = Subspace::span_of(Field::Rational, 2, &[vec![q(-1), q(1)]]);
        assert!(matches!(quotient_coaction(&reg, &aug), Err(Error::NotStable(_))));
    }
}
