//! Bundle morphisms, their reduction, witness-checked equivalence of
//! reductions, and the rigidity embedding of a reduced Hopf image.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::pipeline::{ReducedBundle, Reduction};
use super::{all_passed, Bundle, Check};
use crate::algebra::{describe_vector, AlgebraMorphism};
use crate::coaction::Coaction;
use crate::error::Error;
use crate::linalg::{quotient_space, Matrix, Scalar, Subspace};

/// `(φ, ψ)`: an algebra map `φ: A → A′` and a Hopf map `ψ: H → H′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleMorphism {
    pub phi: AlgebraMorphism,
    pub psi: Matrix,
}

impl BundleMorphism {
    pub fn identity(b: &Bundle) -> BundleMorphism {
        BundleMorphism {
            phi: AlgebraMorphism::identity(b.coaction.comodule()),
            psi: Matrix::identity(b.coaction.field(), b.coaction.hopf().dim()),
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &BundleMorphism) -> BundleMorphism {
        BundleMorphism { phi: self.phi.then(&next.phi), psi: next.psi.mul(&self.psi) }
    }

    pub fn is_identity(&self) -> bool {
        self.phi.matrix.is_identity() && self.psi.is_identity()
    }
}

/// Hopf-morphism axioms for ψ, equivariance `δ′∘φ = (φ⊗ψ)∘δ` and
/// `(φ⊗φ)(N) ⊆ N′`.
pub fn check_bundle_morphism(m: &BundleMorphism, src: &Bundle, dst: &Bundle) -> Vec<Check> {
    let (c, c2) = (&src.coaction, &dst.coaction);
    let shapes_ok = m.phi.source.same_structure(c.comodule())
        && m.phi.target.same_structure(c2.comodule())
        && m.psi.rows() == c2.hopf().dim()
        && m.psi.cols() == c.hopf().dim()
        && m.psi.field() == c.field();
    if !shapes_ok {
        return alloc::vec![Check::new("shapes", false, "morphism does not match the bundles".to_string())];
    }
    let mut checks = alloc::vec![Check::new("shapes", true, String::new())];
    let alg = m.phi.check();
    checks.push(Check::new("algebra-morphism", alg.is_ok(), alg.err().map(|w| w.to_string()).unwrap_or_default()));
    let hopf = c.hopf().hopf_morphism_witness(c2.hopf(), &m.psi);
    checks.push(Check::new("hopf-morphism", hopf.is_ok(), hopf.err().map(|w| w.to_string()).unwrap_or_default()));
    let lhs = c2.map().mul(&m.phi.matrix);
    let rhs = m.phi.matrix.kron(&m.psi).mul(c.map());
    let bad = (0..c.comodule().dim()).find(|&i| lhs.column(i) != rhs.column(i));
    checks.push(Check::new(
        "equivariance",
        bad.is_none(),
        bad.map(|i| format!("δ′(φ(a{i})) ≠ (φ⊗ψ)δ(a{i})")).unwrap_or_default(),
    ));
    let pushed = src.calculus.map(&m.phi.matrix.kron(&m.phi.matrix)).expect("calculus ambient");
    let escaped = pushed.basis_vectors().into_iter().find(|v| !dst.calculus.contains(v));
    checks.push(Check::new(
        "calculus",
        escaped.is_none(),
        escaped.map(|v| format!("(φ⊗φ)(N) ∌ {}", describe_vector(&tensor_names(c2), &v))).unwrap_or_default(),
    ));
    checks
}

fn tensor_names(c: &Coaction) -> Vec<String> {
    let n = c.comodule().names();
    n.iter().flat_map(|x| n.iter().map(move |y| crate::algebra::tensor_name(x, y))).collect()
}

/// The induced morphism between reductions: ψ restricted to `H_δ → H′_δ′`
/// and φ descended to `A₀ → A′₀`.
pub fn reduce_morphism(m: &BundleMorphism, src: &Reduction, dst: &Reduction) -> Result<BundleMorphism, Error> {
    let checks = check_bundle_morphism(m, &src.original, &dst.original);
    if let Some(f) = checks.iter().find(|c| !c.passed) {
        return Err(Error::Precondition(format!("not a bundle morphism ({}): {}", f.name, f.detail)));
    }
    let a_names = src.original.coaction.comodule().names();
    if let Some(v) = src.seed.basis_vectors().into_iter().find(|v| !dst.seed.contains(&m.phi.apply(v))) {
        return Err(Error::SeedIncompatible(format!("φ({}) is not in the target seed", describe_vector(a_names, &v))));
    }
    if let Some(v) = src.reduced.ideal.basis_vectors().into_iter().find(|v| !dst.reduced.ideal.contains(&m.phi.apply(v))) {
        return Err(Error::SeedIncompatible(format!("φ({}) is not in the target stable ideal", describe_vector(a_names, &v))));
    }
    let src_sub = &src.reduced.hopf_inclusion;
    let dst_sub = &dst.reduced.hopf_inclusion;
    let field = m.psi.field();
    let mut psi = Matrix::zeros(field, dst_sub.dim(), src_sub.dim());
    for (k, h) in src_sub.carrier().basis_vectors().iter().enumerate() {
        let coords = dst_sub
            .carrier()
            .coordinates(&m.psi.apply(h))
            .ok_or_else(|| Error::Precondition("ψ does not map the Hopf image into the target Hopf image".into()))?;
        for (r, x) in coords.into_iter().enumerate() {
            psi.set(r, k, x);
        }
    }
    let section = quotient_space(src.original.coaction.comodule().dim(), &src.reduced.ideal)?.section;
    let phi_bar = dst.reduced.projection.matrix.mul(&m.phi.matrix).mul(&section);
    let phi = AlgebraMorphism::new(
        src.reduced.bundle.coaction.comodule().clone(),
        dst.reduced.bundle.coaction.comodule().clone(),
        phi_bar,
    )?;
    Ok(BundleMorphism { phi, psi })
}

/// Outcome of a witness-checked equivalence test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    pub equivalent: bool,
    pub checks: Vec<Check>,
}

/// Whether the reductions `r1`, `r2` are isomorphic through the supplied
/// witnesses (morphisms between the reduced bundles in both directions).
pub fn bundles_equivalent(
    r1: &Reduction,
    r2: &Reduction,
    forward: Option<&BundleMorphism>,
    backward: Option<&BundleMorphism>,
) -> Result<Equivalence, Error> {
    let forward = forward.ok_or_else(|| Error::MissingWitness("forward morphism".into()))?;
    let backward = backward.ok_or_else(|| Error::MissingWitness("backward morphism".into()))?;
    let (b1, b2) = (&r1.reduced.bundle, &r2.reduced.bundle);
    let dims = (b1.coaction.comodule().dim(), b1.coaction.hopf().dim());
    let dims2 = (b2.coaction.comodule().dim(), b2.coaction.hopf().dim());
    let mut checks = alloc::vec![Check::new(
        "dimensions",
        dims == dims2,
        format!("(dim A₀, dim H_δ) = {dims:?} vs {dims2:?}"),
    )];
    if dims != dims2 {
        return Ok(Equivalence { equivalent: false, checks });
    }
    let fw = check_bundle_morphism(forward, b1, b2);
    checks.push(Check::new("forward", all_passed(&fw), summary(&fw)));
    let bw = check_bundle_morphism(backward, b2, b1);
    checks.push(Check::new("backward", all_passed(&bw), summary(&bw)));
    if all_passed(&checks) {
        checks.push(Check::new("round-trip-source", forward.then(backward).is_identity(), String::new()));
        checks.push(Check::new("round-trip-target", backward.then(forward).is_identity(), String::new()));
    }
    Ok(Equivalence { equivalent: all_passed(&checks), checks })
}

fn summary(checks: &[Check]) -> String {
    checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect::<Vec<_>>().join("; ")
}

/// Outcome of the rigidity solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rigidity {
    /// The unique injective Hopf map `ι: H_δ → K` with `δ_K = (id⊗ι)∘δ̄`.
    Embedding(Matrix),
    NoSolution(String),
    NotUnique { determined: usize, total: usize },
    NotHopfMorphism(String),
    NotInjective { rank: usize },
}

/// Solves `δ_K = (id⊗ι)∘δ̄_im` for ι, extending along products and the
/// antipode where the coefficients alone leave ι undetermined, then checks
/// that ι is an injective Hopf algebra map.
pub fn rigidity_embedding(r: &ReducedBundle, k: &Coaction) -> Result<Rigidity, Error> {
    let dbar = &r.bundle.coaction;
    let a0 = dbar.comodule();
    if !k.comodule().same_structure(a0) {
        return Err(Error::Precondition("K-coaction is not on the reduced algebra".into()));
    }
    if !k.is_inner_faithful() {
        return Err(Error::Precondition("K-coaction is not inner-faithful".into()));
    }
    if k.coinvariants() != dbar.coinvariants() {
        return Err(Error::Precondition("K-coinvariants differ from the reduced base".into()));
    }
    let h = dbar.hopf();
    let kh = k.hopf();
    let (da, r_dim, m) = (a0.dim(), h.dim(), kh.dim());
    let field = dbar.field();
    let total = r_dim + m;
    let join = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> { x.iter().chain(y).cloned().collect() };
    let mut pairs = alloc::vec![join(h.unit(), kh.unit())];
    for i in 0..da {
        for j in 0..da {
            let x: Vec<Scalar> = (0..r_dim).map(|s| dbar.map().get(j * r_dim + s, i).clone()).collect();
            let y: Vec<Scalar> = (0..m).map(|s| k.map().get(j * m + s, i).clone()).collect();
            pairs.push(join(&x, &y));
        }
    }
    let mut graph = Subspace::span_of(field, total, &pairs);
    let h_part: Vec<usize> = (0..r_dim).collect();
    loop {
        let proj_rank = graph.basis().select_columns(&h_part).rank();
        if proj_rank < graph.dim() {
            return Ok(Rigidity::NoSolution("the intertwining relations force ι(0) ≠ 0".into()));
        }
        if proj_rank == r_dim {
            break;
        }
        let basis = graph.basis_vectors();
        let mut grown = basis.clone();
        for u in &basis {
            let (x1, y1) = u.split_at(r_dim);
            grown.push(join(&h.apply_antipode(x1), &kh.apply_antipode(y1)));
            for w in &basis {
                let (x2, y2) = w.split_at(r_dim);
                grown.push(join(&h.multiply(x1, x2), &kh.multiply(y1, y2)));
            }
        }
        let next = Subspace::span_of(field, total, &grown);
        if next.dim() == graph.dim() {
            return Ok(Rigidity::NotUnique { determined: proj_rank, total: r_dim });
        }
        graph = next;
    }
    let iota = Matrix::from_fn(field, m, r_dim, |row, col| graph.basis().get(col, r_dim + row).clone());
    if let Err(w) = h.hopf_morphism_witness(kh, &iota) {
        return Ok(Rigidity::NotHopfMorphism(w.to_string()));
    }
    let rank = iota.rank();
    if rank != r_dim {
        return Ok(Rigidity::NotInjective { rank });
    }
    let lifted = Matrix::identity(field, da).kron(&iota);
    if lifted.mul(dbar.map()) != *k.map() {
        return Ok(Rigidity::NoSolution("(id⊗ι)∘δ̄ differs from the K-coaction".into()));
    }
    Ok(Rigidity::Embedding(iota))
}

#[cfg(test)]
mod tests {
    use super::super::pipeline::{default_seed, hopf_image_reduction};
    use super::*;
    use crate::catalog::{
        cyclic_group, direct_product, group_algebra, group_hom_matrix, hopf_morphism_coaction, regular_coaction,
        trivial_coaction,
    };
    use crate::linalg::Field;

    fn reduce(b: &Bundle) -> Reduction {
        hopf_image_reduction(b, &default_seed(b.coaction.comodule()).unwrap()).unwrap()
    }

    fn embedding_bundle() -> Bundle {
        let z2 = cyclic_group(2);
        let v4 = direct_product(&z2, &z2);
        let h2 = group_algebra(&z2, Field::Rational).unwrap();
        let h4 = group_algebra(&v4, Field::Rational).unwrap();
        let iota = group_hom_matrix(Field::Rational, &z2, &v4, &[0, 2]).unwrap();
        Bundle::universal(hopf_morphism_coaction(&h2, &iota, &h4).unwrap())
    }

    #[test]
    fn identity_morphisms() {
        let b = embedding_bundle();
        let id = BundleMorphism::identity(&b);
        assert!(all_passed(&check_bundle_morphism(&id, &b, &b)));
        let r = reduce(&b);
        let rid = reduce_morphism(&id, &r, &r).unwrap();
        assert!(rid.is_identity());
    }

    #[test]
    fn regular_to_embedding() {
        // (id, ι): the regular Z2-bundle into the embedded one
        let z2 = cyclic_group(2);
        let v4 = direct_product(&z2, &z2);
        let h2 = group_algebra(&z2, Field::Rational).unwrap();
        let src = Bundle::universal(regular_coaction(&h2));
        let dst = embedding_bundle();
        let iota = group_hom_matrix(Field::Rational, &z2, &v4, &[0, 2]).unwrap();
        let m = BundleMorphism { phi: AlgebraMorphism::identity(h2.algebra()), psi: iota };
        assert!(all_passed(&check_bundle_morphism(&m, &src, &dst)));
        let red = reduce_morphism(&m, &reduce(&src), &reduce(&dst)).unwrap();
        assert!(red.psi.is_identity());
        assert!(red.phi.matrix.is_identity());
    }

    #[test]
    fn calculus_incompatibility_reported() {
        let h2 = group_algebra(&cyclic_group(2), Field::Rational).unwrap();
        let c = regular_coaction(&h2);
        let (k, _) = super::super::universal_calculus(h2.algebra());
        let src = Bundle::new(c.clone(), k).unwrap();
        let dst = Bundle::universal(c);
        let checks = check_bundle_morphism(&BundleMorphism::identity(&src), &src, &dst);
        assert!(!checks.iter().find(|c| c.name == "calculus").unwrap().passed);
        assert!(checks.iter().filter(|c| c.name != "calculus").all(|c| c.passed));
    }

    #[test]
    fn equivalence() {
        let b = embedding_bundle();
        let r = reduce(&b);
        let id = BundleMorphism::identity(&r.reduced.bundle);
        assert!(bundles_equivalent(&r, &r, Some(&id), Some(&id)).unwrap().equivalent);
        let fixed = reduce(&r.reduced.bundle);
        assert!(bundles_equivalent(&r, &fixed, Some(&id), Some(&id)).unwrap().equivalent);
        let h3 = group_algebra(&cyclic_group(3), Field::Rational).unwrap();
        let other = reduce(&Bundle::universal(regular_coaction(&h3)));
        assert!(!bundles_equivalent(&r, &other, Some(&id), Some(&id)).unwrap().equivalent);
        assert!(matches!(bundles_equivalent(&r, &r, None, Some(&id)), Err(Error::MissingWitness(_))));
    }

    #[test]
    fn rigidity() {
        let r = reduce(&embedding_bundle());
        let own = r.reduced.bundle.coaction.clone();
        assert!(matches!(rigidity_embedding(&r.reduced, &own).unwrap(), Rigidity::Embedding(m) if m.is_identity()));
        // relabel K = k[Z3] by the automorphism g ↦ g²
        let z3 = cyclic_group(3);
        let h3 = group_algebra(&z3, Field::Rational).unwrap();
        let r3 = reduce(&Bundle::universal(regular_coaction(&h3)));
        let auto = group_hom_matrix(Field::Rational, &z3, &z3, &[0, 2, 1]).unwrap();
        let k = r3.reduced.bundle.coaction.extend(&auto, &h3).unwrap();
        assert_eq!(rigidity_embedding(&r3.reduced, &k).unwrap(), Rigidity::Embedding(auto));
        let triv = trivial_coaction(h3.algebra(), &h3);
        assert!(matches!(rigidity_embedding(&r3.reduced, &triv), Err(Error::Precondition(_))));
    }
}
