//! The Hopf-image reduction of a bundle and its per-instance claim ledger.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::galois::{check_covariant_calculus, check_qpb, stable_ideal_identities, QpbReport};
use super::{all_passed, largest_stable_ideal_within, quotient_coaction, quotient_square_commutes, Bundle};
use crate::algebra::{Algebra, AlgebraMorphism};
use crate::coaction::Factorization;
use crate::error::Error;
use crate::hopf::HopfSubalgebra;
use crate::linalg::{Matrix, Subspace};

/// The reduced bundle over `H_δ` together with the data that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBundle {
    pub bundle: Bundle,
    pub projection: AlgebraMorphism,
    pub ideal: Subspace,
    pub hopf_inclusion: HopfSubalgebra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClaimStatus {
    Verified,
    Refuted,
    Unsupported,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Verified => "verified",
            ClaimStatus::Refuted => "refuted on instance",
            ClaimStatus::Unsupported => "unsupported",
        })
    }
}

/// One ledger entry: a claim about the reduction, checked on this instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: ClaimStatus,
    pub detail: String,
}

fn claim(id: &'static str, statement: &'static str, ok: bool, detail: String) -> Claim {
    let status = if ok { ClaimStatus::Verified } else { ClaimStatus::Refuted };
    Claim { id, statement, status, detail }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub original: Bundle,
    pub seed: Subspace,
    pub factorization: Factorization,
    pub reduced: ReducedBundle,
    pub qpb: QpbReport,
    pub inner_faithful: bool,
    pub cosemisimple: Result<bool, Error>,
    pub claims: Vec<Claim>,
}

impl Reduction {
    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    /// No claim was refuted.
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != ClaimStatus::Refuted)
    }
}

/// The kernel of the declared augmentation, if any.
pub fn default_seed(a: &Algebra) -> Option<Subspace> {
    let aug = a.augmentation()?;
    let row = Matrix::from_rows(a.field(), a.dim(), &[aug.to_vec()]).expect("augmentation row");
    Some(Subspace::kernel(&row))
}

/// Hopf image, greatest stable ideal inside `seed`, quotient coaction and
/// reduced calculus `(π⊗π)(N)`, followed by the principal-bundle and
/// inner-faithfulness checks on the result.
pub fn hopf_image_reduction(b: &Bundle, seed: &Subspace) -> Result<Reduction, Error> {
    let c = &b.coaction;
    let a = c.comodule();
    let field = c.field();
    if seed.ambient() != a.dim() {
        return Err(Error::DimensionMismatch { context: "seed ambient", expected: a.dim(), found: seed.ambient() });
    }
    let factorization = c.hopf_image();
    let im = &factorization.restricted;
    let ideal = largest_stable_ideal_within(im, seed);
    let (reduced_coaction, projection) = quotient_coaction(im, &ideal)?;
    let calculus = b.calculus.map(&projection.matrix.kron(&projection.matrix))?;
    let bundle = Bundle::new(reduced_coaction, calculus)?;
    let qpb = check_qpb(&bundle);
    let inner_faithful = bundle.coaction.is_inner_faithful();
    let cosemisimple = factorization.sub.induced().is_cosemisimple();

    let mut claims = Vec::new();
    claims.push(claim(
        "factorization",
        "δ = (id⊗ι)∘δ_im through the Hopf image",
        factorization.recovers(c),
        format!("dim H = {}, dim H_δ = {}", c.hopf().dim(), factorization.sub.dim()),
    ));
    claims.push(claim(
        "image-inner-faithful",
        "the corestricted coaction δ_im is inner-faithful",
        im.is_inner_faithful(),
        format!("Hopf image of δ_im has dim {}", im.hopf_image().sub.dim()),
    ));
    let stable = a.is_two_sided_ideal(&ideal)
        && ideal.map(im.map())?.is_subset_of(&ideal.tensor(&Subspace::full(field, im.hopf().dim())))
        && ideal.is_subset_of(seed);
    claims.push(claim(
        "stable-ideal",
        "I is the largest δ_im-stable two-sided ideal (taken inside the seed)",
        stable,
        format!(
            "dim seed = {}, dim I = {}; without a proper seed the largest stable ideal is A itself",
            seed.dim(),
            ideal.dim()
        ),
    ));
    claims.push(claim(
        "quotient-square",
        "δ̄_im∘π = (π⊗id)∘δ_im",
        quotient_square_commutes(im, &bundle.coaction, &projection),
        format!("dim A = {}, dim A₀ = {}", a.dim(), projection.target.dim()),
    ));
    let coinvariants = im.coinvariants();
    claims.push(match stable_ideal_identities(im, &ideal, &coinvariants) {
        Ok(checks) => claim(
            "canonical-map-identities",
            "can(I⊗_B A + A⊗_B I) = I⊗H_δ and its preimage identity",
            all_passed(&checks),
            checks.iter().map(|c| c.detail.as_str()).collect::<Vec<_>>().join("; "),
        ),
        Err(Error::NotSurjective { rank, target }) => Claim {
            id: "canonical-map-identities",
            statement: "can(I⊗_B A + A⊗_B I) = I⊗H_δ and its preimage identity",
            status: ClaimStatus::Unsupported,
            detail: format!("hypothesis fails: can over the coinvariants has rank {rank} < {target}"),
        },
        Err(e) => return Err(e),
    });
    let covariance = check_covariant_calculus(&bundle);
    claims.push(claim(
        "reduced-calculus-covariant",
        "(π⊗π)(N) is an H_δ-covariant sub-bimodule of ker(m)",
        all_passed(&covariance),
        failures(&covariance),
    ));
    claims.push(claim(
        "reduced-principal",
        "the reduced bundle is a quantum principal H_δ-bundle",
        qpb.passed(),
        failures(&qpb.checks),
    ));
    claims.push(claim(
        "reduced-inner-faithful",
        "the quotient coaction δ̄_im is inner-faithful",
        inner_faithful,
        format!(
            "coefficient space of δ̄_im has dim {}, dim H_δ = {}",
            bundle.coaction.coefficient_space().dim(),
            factorization.sub.dim()
        ),
    ));
    claims.push(match &cosemisimple {
        Ok(v) => claim("cosemisimple", "H_δ is cosemisimple", *v, "trace form of the dual algebra".to_string()),
        Err(e) => Claim {
            id: "cosemisimple",
            statement: "H_δ is cosemisimple",
            status: ClaimStatus::Unsupported,
            detail: e.to_string(),
        },
    });

    let reduced = ReducedBundle { bundle, projection, ideal, hopf_inclusion: factorization.sub.clone() };
    Ok(Reduction {
        original: b.clone(),
        seed: seed.clone(),
        factorization,
        reduced,
        qpb,
        inner_faithful,
        cosemisimple,
        claims,
    })
}

fn failures(checks: &[super::Check]) -> String {
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    if failed.is_empty() {
        "all checks pass".to_string()
    } else {
        failed.join("; ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{
        cyclic_group, direct_product, grading_coaction, group_algebra, group_hom_matrix, hopf_morphism_coaction,
        regular_coaction, truncated_polynomial,
    };
    use crate::linalg::{Field, Scalar};

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    #[test]
    fn inner_faithful_input_is_a_fixed_point() {
        let h = group_algebra(&cyclic_group(2), Field::Rational).unwrap();
        let b = Bundle::universal(regular_coaction(&h));
        let seed = default_seed(b.coaction.comodule()).unwrap();
        let r = hopf_image_reduction(&b, &seed).unwrap();
        assert!(r.reduced.ideal.is_zero());
        assert_eq!(r.factorization.sub.dim(), 2);
        assert!(r.reduced.projection.matrix.is_identity());
        assert!(r.passed(), "{:?}", r.claims);
    }

    #[test]
    fn embedding_instance() {
        let z2 = cyclic_group(2);
        let v4 = direct_product(&z2, &z2);
        let h2 = group_algebra(&z2, Field::Rational).unwrap();
        let h4 = group_algebra(&v4, Field::Rational).unwrap();
        let iota = group_hom_matrix(Field::Rational, &z2, &v4, &[0, 2]).unwrap();
        let c = hopf_morphism_coaction(&h2, &iota, &h4).unwrap();
        let b = Bundle::universal(c);
        let seed = default_seed(b.coaction.comodule()).unwrap();
        let r = hopf_image_reduction(&b, &seed).unwrap();
        assert_eq!(r.factorization.sub.dim(), 2);
        assert!(r.reduced.ideal.is_zero());
        assert!(r.qpb.passed());
        assert!(r.inner_faithful);
        assert_eq!(r.qpb.can_rank, 4);
        assert!(r.passed(), "{:?}", r.claims);
    }

    #[test]
    fn graded_instance_refutes_inner_faithfulness() {
        let c = grading_coaction(&truncated_polynomial(Field::Rational, 2), &cyclic_group(2), &[0, 1]).unwrap();
        let b = Bundle::universal(c);
        let seed = Subspace::span_of(Field::Rational, 2, &[alloc::vec![q(0), q(1)]]);
        let r = hopf_image_reduction(&b, &seed).unwrap();
        assert_eq!(r.reduced.ideal, seed);
        assert_eq!(r.reduced.bundle.coaction.comodule().dim(), 1);
        assert!(!r.inner_faithful);
        assert_eq!(r.claim("reduced-inner-faithful").unwrap().status, ClaimStatus::Refuted);
        assert_eq!(r.claim("canonical-map-identities").unwrap().status, ClaimStatus::Unsupported);
        assert!(!r.passed());
    }

    #[test]
    fn whole_seed_collapses() {
        let c = grading_coaction(&truncated_polynomial(Field::Rational, 2), &cyclic_group(2), &[0, 1]).unwrap();
        let b = Bundle::universal(c);
        assert_eq!(hopf_image_reduction(&b, &Subspace::full(Field::Rational, 2)).unwrap_err(), Error::UnitCollapse);
    }
}
