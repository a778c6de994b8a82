//! Balanced tensor products, the canonical map, the universal calculus and
//! the vertical map, covariance of calculi and the principal bundle check.

use alloc::format;
use alloc::vec::Vec;

use super::{all_passed, Bundle, Check};
use crate::algebra::{describe_vector, tensor_name, Algebra, AlgebraMorphism};
use crate::coaction::Coaction;
use crate::error::Error;
use crate::linalg::{is_zero_vector, preimage_subspace, quotient_space, sub_vectors, tensor_vectors, Matrix, Scalar, Subspace};

/// `A⊗_B A` as the quotient of `A⊗A` by the balancing relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedTensor {
    pub relations: Subspace,
    /// `dim(A⊗_B A) × dim A²`.
    pub projection: Matrix,
    /// `dim A² × dim(A⊗_B A)`, a right inverse of the projection.
    pub section: Matrix,
    /// When `B` acts through lifts along a quotient map: whether a second
    /// choice of lifts gives the same relations.
    pub lift_independent: Option<bool>,
}

impl BalancedTensor {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }
}

fn balancing_relations(a: &Algebra, elements: &[Vec<Scalar>]) -> Subspace {
    let d = a.dim();
    let mut rels = Vec::new();
    for b in elements {
        for i in 0..d {
            let ab = a.mul(&a.basis(i), b);
            for j in 0..d {
                let ba = a.mul(b, &a.basis(j));
                let r = sub_vectors(&tensor_vectors(&ab, &a.basis(j)), &tensor_vectors(&a.basis(i), &ba));
                if !is_zero_vector(&r) {
                    rels.push(r);
                }
            }
        }
    }
    Subspace::span_of(a.field(), d * d, &rels)
}

/// `A⊗_B A` for a subalgebra `B`. With `via = π: A → A₀`, `B` is a
/// subalgebra of `A₀` acting on `A` through lifts along `π`.
pub fn balanced_tensor(a: &Algebra, b: &Subspace, via: Option<&AlgebraMorphism>) -> Result<BalancedTensor, Error> {
    let d = a.dim();
    let (relations, lift_independent) = match via {
        None => {
            if b.ambient() != d {
                return Err(Error::DimensionMismatch { context: "balancing subalgebra", expected: d, found: b.ambient() });
            }
            a.subalgebra_witness(b).map_err(Error::NotSubalgebra)?;
            (balancing_relations(a, &b.basis_vectors()), None)
        }
        Some(pi) => {
            if !pi.source.same_structure(a) || b.ambient() != pi.target.dim() {
                return Err(Error::Precondition("quotient map does not match the algebras".into()));
            }
            pi.target.subalgebra_witness(b).map_err(Error::NotSubalgebra)?;
            let mut lifts = Vec::new();
            for y in b.basis_vectors() {
                lifts.push(pi.matrix.solve(&y).ok_or_else(|| Error::NotSurjective { rank: pi.matrix.rank(), target: pi.target.dim() })?);
            }
            let first = balancing_relations(a, &lifts);
            let kernel = Subspace::kernel(&pi.matrix);
            let independent = match kernel.basis_vectors().first() {
                None => true,
                Some(k) => {
                    let shifted: Vec<Vec<Scalar>> = lifts.iter().map(|l| crate::linalg::add_vectors(l, k)).collect();
                    balancing_relations(a, &shifted) == first
                }
            };
            (first, Some(independent))
        }
    };
    let quo = quotient_space(d * d, &relations)?;
    Ok(BalancedTensor { relations, projection: quo.projection, section: quo.section, lift_independent })
}

/// `a⊗a′ ↦ a·δ(a′)` on all of `A⊗A`, a `(dim A·dim H) × dim A²` matrix.
pub(crate) fn canonical_on_tensor_square(c: &Coaction) -> Matrix {
    let a = c.comodule();
    let (da, dh) = (a.dim(), c.hopf().dim());
    let mut out = Matrix::zeros(c.field(), da * dh, da * da);
    let images: Vec<Vec<Scalar>> = (0..da).map(|j| c.map().column(j)).collect();
    for i in 0..da {
        let left = a.left_mult_matrix(&a.basis(i)).kron(&Matrix::identity(c.field(), dh));
        for (j, img) in images.iter().enumerate() {
            for (r, x) in left.apply(img).into_iter().enumerate() {
                out.set(r, i * da + j, x);
            }
        }
    }
    out
}

/// The canonical map `A⊗_B A → A⊗H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalMap {
    /// On `A⊗A` before balancing.
    pub full: Matrix,
    /// On the canonical basis of `A⊗_B A`.
    pub matrix: Matrix,
    pub balanced: BalancedTensor,
    pub rank: usize,
    pub bijective: bool,
}

impl CanonicalMap {
    pub fn is_surjective(&self) -> bool {
        self.rank == self.matrix.rows()
    }

    pub fn is_injective(&self) -> bool {
        self.rank == self.matrix.cols()
    }
}

/// `a⊗_B a′ ↦ a·a′₍₀₎⊗a′₍₁₎` for a subalgebra `B` of the coinvariants.
pub fn canonical_map(c: &Coaction, b: &Subspace) -> Result<CanonicalMap, Error> {
    let balanced = balanced_tensor(c.comodule(), b, None)?;
    if !b.is_subset_of(&c.coinvariants()) {
        return Err(Error::NotCoinvariant);
    }
    let full = canonical_on_tensor_square(c);
    debug_assert!(balanced.relations.basis_vectors().iter().all(|r| is_zero_vector(&full.apply(r))));
    let matrix = full.mul(&balanced.section);
    let rank = matrix.rank();
    let bijective = matrix.rows() == matrix.cols() && rank == matrix.rows();
    Ok(CanonicalMap { full, matrix, balanced, rank, bijective })
}

/// For a stable ideal `I`, checks that `can` maps `I⊗_B A + A⊗_B I` onto
/// `I⊗H` and that this sum is the full preimage of `I⊗H`. Requires `can`
/// to be surjective.
pub fn stable_ideal_identities(c: &Coaction, ideal: &Subspace, b: &Subspace) -> Result<Vec<Check>, Error> {
    let a = c.comodule();
    let (da, dh) = (a.dim(), c.hopf().dim());
    let field = c.field();
    if let Err(w) = a.two_sided_ideal_witness(ideal) {
        return Err(Error::NotAnIdeal(w.describe(a)));
    }
    if !ideal.map(c.map())?.is_subset_of(&ideal.tensor(&Subspace::full(field, dh))) {
        return Err(Error::NotStable("δ(I) ⊄ I⊗H".into()));
    }
    let can = canonical_map(c, b)?;
    if !can.is_surjective() {
        return Err(Error::NotSurjective { rank: can.rank, target: da * dh });
    }
    let whole = Subspace::full(field, da);
    let sum = ideal.tensor(&whole).sum(&whole.tensor(ideal))?;
    let image = sum.map(&can.full)?;
    let target = ideal.tensor(&Subspace::full(field, dh));
    let preimage = preimage_subspace(&can.full, &target)?;
    let expected = sum.sum(&can.balanced.relations)?;
    Ok(alloc::vec![
        Check::new(
            "image",
            image == target,
            format!("dim can(I⊗A + A⊗I) = {}, dim I⊗H = {}", image.dim(), target.dim()),
        ),
        Check::new(
            "preimage",
            preimage == expected,
            format!(
                "dim can⁻¹(I⊗H) = {}, dim (I⊗A + A⊗I + relations) = {} in A⊗A",
                preimage.dim(),
                expected.dim()
            ),
        ),
    ])
}

/// `ker(m: A⊗A → A)` and `d_u(a) = 1⊗a − a⊗1`.
pub fn universal_calculus(a: &Algebra) -> (Subspace, Matrix) {
    let d = a.dim();
    let kernel = Subspace::kernel(&a.mult_matrix());
    let cols: Vec<Vec<Scalar>> =
        (0..d).map(|i| sub_vectors(&tensor_vectors(a.unit(), &a.basis(i)), &tensor_vectors(&a.basis(i), a.unit()))).collect();
    let du = Matrix::from_columns(a.field(), d * d, &cols).expect("differential shape");
    (kernel, du)
}

/// `ver(Σ a⊗a′) = Σ a·a′₍₀₎⊗a′₍₁₎` on `ker(m)`; lands in `A⊗H⁺`.
pub fn ver_map(c: &Coaction, x: &[Scalar]) -> Result<Vec<Scalar>, Error> {
    let a = c.comodule();
    if x.len() != a.dim() * a.dim() {
        return Err(Error::DimensionMismatch { context: "ver argument", expected: a.dim() * a.dim(), found: x.len() });
    }
    if !is_zero_vector(&a.mult_matrix().apply(x)) {
        return Err(Error::NotInKernel);
    }
    Ok(canonical_on_tensor_square(c).apply(x))
}

fn tensor_names(a: &Algebra, b: &[alloc::string::String]) -> Vec<alloc::string::String> {
    a.names().iter().flat_map(|x| b.iter().map(move |y| tensor_name(x, y))).collect()
}

/// `N ⊆ ker(m)`, `N` a sub-bimodule of `A⊗A`, and `δ_⊗(N) ⊆ N⊗H`.
pub fn check_covariant_calculus(b: &Bundle) -> Vec<Check> {
    let c = &b.coaction;
    let a = c.comodule();
    let (da, dh) = (a.dim(), c.hopf().dim());
    let field = c.field();
    let n = &b.calculus;
    let names = tensor_names(a, a.names());
    let basis = n.basis_vectors();
    let mult = a.mult_matrix();
    let outside = basis.iter().find(|v| !is_zero_vector(&mult.apply(v)));
    let mut checks = alloc::vec![Check::new(
        "calculus-in-kernel",
        outside.is_none(),
        match outside {
            None => format!("dim N = {}", n.dim()),
            Some(v) => format!("m({}) ≠ 0", describe_vector(&names, v)),
        },
    )];
    let id = Matrix::identity(field, da);
    let mut bimodule_failure = None;
    'outer: for k in 0..da {
        let left = a.left_mult_matrix(&a.basis(k)).kron(&id);
        let right = id.kron(&a.right_mult_matrix(&a.basis(k)));
        for v in &basis {
            for (side, m) in [("left", &left), ("right", &right)] {
                let w = m.apply(v);
                if !n.contains(&w) {
                    bimodule_failure = Some(format!(
                        "{side} action of {} on {} leaves N: {}",
                        a.names()[k],
                        describe_vector(&names, v),
                        describe_vector(&names, &w)
                    ));
                    break 'outer;
                }
            }
        }
    }
    checks.push(Check::new(
        "calculus-bimodule",
        bimodule_failure.is_none(),
        bimodule_failure.unwrap_or_else(|| "N is an A-sub-bimodule".into()),
    ));
    let diag = c.diagonal_map();
    let target = n.tensor(&Subspace::full(field, dh));
    let escaped = basis.iter().find(|v| !target.contains(&diag.apply(v)));
    checks.push(Check::new(
        "calculus-covariant",
        escaped.is_none(),
        match escaped {
            None => "δ(N) ⊆ N⊗H".into(),
            Some(v) => format!("δ({}) ∉ N⊗H", describe_vector(&names, v)),
        },
    ));
    checks
}

/// Itemized principal-bundle verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QpbReport {
    pub checks: Vec<Check>,
    pub coinvariants: Subspace,
    pub can_rank: usize,
    pub can_domain: usize,
    pub can_target: usize,
    /// `I_H = {h ∈ H⁺ : 1⊗h ∈ ver(N)}`.
    pub structure_ideal: Subspace,
}

impl QpbReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Galois condition over the coinvariants plus `ver(N) = A⊗I_H` for an
/// `Ad_R`-stable right ideal `I_H ⊆ H⁺`.
pub fn check_qpb(b: &Bundle) -> QpbReport {
    let c = &b.coaction;
    let a = c.comodule();
    let h = c.hopf();
    let (da, dh) = (a.dim(), h.dim());
    let field = c.field();
    let mut checks = check_covariant_calculus(b);
    let coinvariants = c.coinvariants();
    let can = canonical_map(c, &coinvariants).expect("coinvariants are a coinvariant subalgebra");
    checks.push(Check::new(
        "galois",
        can.bijective,
        format!("can: {} → {} has rank {}", can.matrix.cols(), can.matrix.rows(), can.rank),
    ));
    let vertical = b.calculus.map(&can.full).expect("calculus in A⊗A");
    let embed = Matrix::from_columns(field, da, &[a.unit().to_vec()]).expect("unit column").kron(&Matrix::identity(field, dh));
    let structure_ideal = preimage_subspace(&embed, &vertical)
        .and_then(|s| s.intersect(&h.counit_kernel()))
        .expect("shapes agree");
    let expected = Subspace::full(field, da).tensor(&structure_ideal);
    checks.push(Check::new(
        "vertical-image",
        vertical == expected,
        format!("dim ver(N) = {}, dim A⊗I = {}", vertical.dim(), expected.dim()),
    ));
    let mut not_right_ideal = None;
    'outer: for x in structure_ideal.basis_vectors() {
        for k in 0..dh {
            let y = h.multiply(&x, &h.basis(k));
            if !structure_ideal.contains(&y) {
                not_right_ideal = Some(format!("{} · {} ∉ I", describe_vector(h.names(), &x), h.names()[k]));
                break 'outer;
            }
        }
    }
    checks.push(Check::new(
        "structure-right-ideal",
        not_right_ideal.is_none(),
        not_right_ideal.unwrap_or_else(|| format!("dim I = {}", structure_ideal.dim())),
    ));
    let ad_target = structure_ideal.tensor(&Subspace::full(field, dh));
    let unstable = structure_ideal.basis_vectors().into_iter().find(|x| !ad_target.contains(&h.adjoint_coaction(x)));
    checks.push(Check::new(
        "structure-adjoint-stable",
        unstable.is_none(),
        match unstable {
            None => "Ad(I) ⊆ I⊗H".into(),
            Some(x) => format!("Ad({}) ∉ I⊗H", describe_vector(h.names(), &x)),
        },
    ));
    QpbReport {
        checks,
        coinvariants,
        can_rank: can.rank,
        can_domain: can.matrix.cols(),
        can_target: can.matrix.rows(),
        structure_ideal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic_group, grading_coaction, group_algebra, regular_coaction, truncated_polynomial};
    use crate::hopf::HopfAlgebra;
    use crate::linalg::Field;

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| q(x)).collect()
    }

    fn graded() -> Coaction {
        grading_coaction(&truncated_polynomial(Field::Rational, 2), &cyclic_group(2), &[0, 1]).unwrap()
    }

    fn z(n: usize) -> HopfAlgebra {
        group_algebra(&cyclic_group(n), Field::Rational).unwrap()
    }

    #[test]
    fn balanced_tensor_examples() {
        let a = z(2).algebra().clone();
        let one = Subspace::span_of(Field::Rational, 2, &[a.unit().to_vec()]);
        assert_eq!(balanced_tensor(&a, &one, None).unwrap().dim(), 4);
        let full = Subspace::full(Field::Rational, 2);
        assert_eq!(balanced_tensor(&a, &full, None).unwrap().dim(), 2);
        let t = truncated_polynomial(Field::Rational, 2);
        assert_eq!(balanced_tensor(&t, &full, None).unwrap().dim(), 2);
        let x = Subspace::span_of(Field::Rational, 2, &[v(&[0, 1])]);
        assert!(matches!(balanced_tensor(&t, &x, None), Err(Error::NotSubalgebra(_))));
    }

    #[test]
    fn balanced_tensor_through_lifts() {
        let c = graded();
        let x = Subspace::span_of(Field::Rational, 2, &[v(&[0, 1])]);
        let (_, pi) = super::super::quotient_coaction(&c, &x).unwrap();
        let b0 = Subspace::full(Field::Rational, 1);
        let bt = balanced_tensor(c.comodule(), &b0, Some(&pi)).unwrap();
        assert_eq!(bt.lift_independent, Some(false));
        assert_eq!(bt.dim(), 4);
    }

    #[test]
    fn canonical_map_examples() {
        let h = z(2);
        let reg = regular_coaction(&h);
        let one = Subspace::span_of(Field::Rational, 2, &[h.unit().to_vec()]);
        let can = canonical_map(&reg, &one).unwrap();
        assert_eq!(can.rank, 4);
        assert!(can.bijective);
        let c = graded();
        let can = canonical_map(&c, &one).unwrap();
        assert!(!can.bijective);
        // can(x⊗x) = x²⊗g = 0
        assert!(is_zero_vector(&can.full.apply(&v(&[0, 0, 0, 1]))));
        let t = HopfAlgebra::trivial(Field::Rational);
        let b = Subspace::full(Field::Rational, 1);
        assert!(canonical_map(&regular_coaction(&t), &b).unwrap().bijective);
        let full = Subspace::full(Field::Rational, 2);
        assert_eq!(canonical_map(&c, &full).unwrap_err(), Error::NotCoinvariant);
    }

    #[test]
    fn identities_examples() {
        let h = z(2);
        let reg = regular_coaction(&h);
        let one = Subspace::span_of(Field::Rational, 2, &[h.unit().to_vec()]);
        let zero = Subspace::zero(Field::Rational, 2);
        let checks = stable_ideal_identities(&reg, &zero, &one).unwrap();
        assert!(all_passed(&checks));
        assert!(matches!(stable_ideal_identities(&graded(), &zero, &one), Err(Error::NotSurjective { .. })));
    }

    #[test]
    fn universal_calculus_examples() {
        let (k, _) = universal_calculus(&Algebra::ground(Field::Rational));
        assert!(k.is_zero());
        let (k, _) = universal_calculus(z(2).algebra());
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&v(&[0, 1, -1, 0])));
        let (k, du) = universal_calculus(&truncated_polynomial(Field::Rational, 2));
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&du.column(1)));
    }

    #[test]
    fn ver_examples() {
        let h = z(2);
        let reg = regular_coaction(&h);
        assert!(is_zero_vector(&ver_map(&reg, &v(&[0, 0, 0, 0])).unwrap()));
        // ver(1⊗g − g⊗1) = g⊗(g − 1)
        assert_eq!(ver_map(&reg, &v(&[0, 1, -1, 0])).unwrap(), v(&[0, 0, -1, 1]));
        // ver(1⊗x − x⊗1) = x⊗(g − 1)
        assert_eq!(ver_map(&graded(), &v(&[0, 1, -1, 0])).unwrap(), v(&[0, 0, -1, 1]));
        assert_eq!(ver_map(&reg, &v(&[1, 0, 0, 0])).unwrap_err(), Error::NotInKernel);
    }

    #[test]
    fn covariance_examples() {
        let c = graded();
        assert!(all_passed(&check_covariant_calculus(&Bundle::universal(c.clone()))));
        let (k, _) = universal_calculus(c.comodule());
        assert!(all_passed(&check_covariant_calculus(&Bundle::new(c.clone(), k).unwrap())));
        let n = Subspace::span_of(Field::Rational, 4, &[v(&[0, 1, -1, 0])]);
        let checks = check_covariant_calculus(&Bundle::new(c, n).unwrap());
        assert!(!checks.iter().find(|c| c.name == "calculus-bimodule").unwrap().passed);
    }

    #[test]
    fn qpb_examples() {
        let report = check_qpb(&Bundle::universal(regular_coaction(&z(4))));
        assert!(report.passed(), "{:?}", report.checks);
        assert_eq!(report.can_rank, 16);
        assert!(report.structure_ideal.is_zero());
        let report = check_qpb(&Bundle::universal(graded()));
        assert!(!report.checks.iter().find(|c| c.name == "galois").unwrap().passed);
        assert!(check_qpb(&Bundle::universal(regular_coaction(&HopfAlgebra::trivial(Field::Rational)))).passed());
    }
}
