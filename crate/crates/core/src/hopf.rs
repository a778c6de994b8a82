//! Hopf algebras by structure constants: axiom checks, the adjoint coaction,
//! subcoalgebra and Hopf-subalgebra closures, duals and cosemisimplicity.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{describe_vector, dot, tensor_multiply, Algebra, AlgebraReport};
use crate::error::Error;
use crate::linalg::{
    apply_on_factor, basis_vector, is_zero_vector, scale_vector, sub_vectors, tensor_vectors,
    Field, Matrix, Scalar, Subspace,
};

/// A finite-dimensional Hopf algebra. `comult` is the `dim² × dim` matrix of
/// Δ (column `i` is `Δ(e_i)` flattened as `j·dim + k`), `antipode` the
/// `dim × dim` matrix of S. The antipode is invertible by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    alg: Algebra,
    comult: Matrix,
    counit: Vec<Scalar>,
    antipode: Matrix,
}

impl HopfAlgebra {
    pub fn new(alg: Algebra, comult: Matrix, counit: Vec<Scalar>, antipode: Matrix) -> Result<HopfAlgebra, Error> {
        let d = alg.dim();
        if comult.rows() != d * d || comult.cols() != d {
            return Err(Error::DimensionMismatch { context: "comultiplication", expected: d * d * d, found: comult.rows() * comult.cols() });
        }
        if counit.len() != d {
            return Err(Error::DimensionMismatch { context: "counit", expected: d, found: counit.len() });
        }
        if antipode.rows() != d || antipode.cols() != d {
            return Err(Error::DimensionMismatch { context: "antipode", expected: d * d, found: antipode.rows() * antipode.cols() });
        }
        if comult.field() != alg.field() || antipode.field() != alg.field() || counit.iter().any(|c| c.field() != alg.field()) {
            return Err(Error::FieldMismatch("Hopf structure maps".to_string()));
        }
        if !antipode.is_invertible() {
            return Err(Error::AntipodeNotInvertible);
        }
        let alg = alg.with_augmentation(counit.clone())?;
        Ok(HopfAlgebra { alg, comult, counit, antipode })
    }

    /// From sparse data: `(i, j, k, c)` means `Δ(e_i) ∋ c·e_j⊗e_k`, and
    /// `(i, j, c)` means `S(e_i) ∋ c·e_j`.
    pub fn from_sparse(
        alg: Algebra,
        comult: &[(usize, usize, usize, Scalar)],
        counit: Vec<Scalar>,
        antipode: &[(usize, usize, Scalar)],
    ) -> Result<HopfAlgebra, Error> {
        let d = alg.dim();
        let field = alg.field();
        let mut dm = Matrix::zeros(field, d * d, d);
        for (i, j, k, c) in comult {
            if let Some(&bad) = [*i, *j, *k].iter().find(|&&x| x >= d) {
                return Err(Error::DimensionMismatch { context: "comultiplication index", expected: d, found: bad });
            }
            let slot = dm.entry_mut(j * d + k, *i);
            *slot = &*slot + c;
        }
        let mut sm = Matrix::zeros(field, d, d);
        for (i, j, c) in antipode {
            if let Some(&bad) = [*i, *j].iter().find(|&&x| x >= d) {
                return Err(Error::DimensionMismatch { context: "antipode index", expected: d, found: bad });
            }
            let slot = sm.entry_mut(*j, *i);
            *slot = &*slot + c;
        }
        HopfAlgebra::new(alg, dm, counit, sm)
    }

    /// The one-dimensional Hopf algebra `k`.
    pub fn trivial(field: Field) -> HopfAlgebra {
        let one = field.one();
        HopfAlgebra::new(
            Algebra::ground(field),
            Matrix::identity(field, 1),
            vec![one],
            Matrix::identity(field, 1),
        )
        .expect("trivial Hopf algebra")
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn names(&self) -> &[String] {
        self.alg.names()
    }

    pub fn unit(&self) -> &[Scalar] {
        self.alg.unit()
    }

    pub fn comult_matrix(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        self.alg.basis(i)
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.alg.mul(x, y)
    }

    pub fn comultiply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.comult.apply(v)
    }

    pub fn apply_counit(&self, v: &[Scalar]) -> Scalar {
        dot(&self.counit, v)
    }

    pub fn apply_antipode(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(v)
    }

    pub fn counit_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field(), self.dim(), core::slice::from_ref(&self.counit)).expect("counit row")
    }

    pub fn unit_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field(), self.dim(), &[self.unit().to_vec()]).expect("unit column")
    }

    /// `(Δ⊗id)Δ(v)` in `H⊗H⊗H`.
    pub fn comultiply_twice(&self, v: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        apply_on_factor(&self.comultiply(v), &[d, d], 0, &self.comult)
    }

    /// Sparse `(i, j, k, c)` entries of Δ.
    pub fn comult_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for jk in 0..d * d {
                let c = self.comult.get(jk, i);
                if !c.is_zero() {
                    out.push((i, jk / d, jk % d, c.clone()));
                }
            }
        }
        out
    }

    /// Sparse `(i, j, c)` entries of S.
    pub fn antipode_entries(&self) -> Vec<(usize, usize, Scalar)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let c = self.antipode.get(j, i);
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    /// Full itemized verification of the algebra, coalgebra, bialgebra and
    /// antipode axioms.
    pub fn check(&self) -> HopfReport {
        let d = self.dim();
        let field = self.field();
        let algebra = self.alg.clone().without_augmentation().check();
        let mut violations = Vec::new();
        let eps = self.counit_matrix();
        let deltas: Vec<Vec<Scalar>> = (0..d).map(|i| self.comult.column(i)).collect();
        for (i, delta) in deltas.iter().enumerate() {
            let left = apply_on_factor(delta, &[d, d], 0, &self.comult);
            let right = apply_on_factor(delta, &[d, d], 1, &self.comult);
            if left != right {
                violations.push(HopfViolation::Coassociativity { i });
            }
            let e = basis_vector(field, d, i);
            if apply_on_factor(delta, &[d, d], 0, &eps) != e {
                violations.push(HopfViolation::LeftCounit { i });
            }
            if apply_on_factor(delta, &[d, d], 1, &eps) != e {
                violations.push(HopfViolation::RightCounit { i });
            }
        }
        let unit = self.unit().to_vec();
        if self.comultiply(&unit) != tensor_vectors(&unit, &unit) {
            violations.push(HopfViolation::ComultUnit);
        }
        if !self.apply_counit(&unit).is_one() {
            violations.push(HopfViolation::CounitUnit);
        }
        let pair = [&self.alg, &self.alg];
        for i in 0..d {
            for j in 0..d {
                let prod = self.multiply(&self.basis(i), &self.basis(j));
                if self.comultiply(&prod) != tensor_multiply(&pair, &deltas[i], &deltas[j]) {
                    violations.push(HopfViolation::ComultMultiplicative { i, j });
                }
                if self.apply_counit(&prod) != &self.counit[i] * &self.counit[j] {
                    violations.push(HopfViolation::CounitMultiplicative { i, j });
                }
            }
        }
        let mult = self.alg.mult_matrix();
        for (i, delta) in deltas.iter().enumerate() {
            let expected = scale_vector(&self.counit[i], &unit);
            let left = mult.apply(&apply_on_factor(delta, &[d, d], 0, &self.antipode));
            if left != expected {
                violations.push(HopfViolation::AntipodeLeft { i });
            }
            let right = mult.apply(&apply_on_factor(delta, &[d, d], 1, &self.antipode));
            if right != expected {
                violations.push(HopfViolation::AntipodeRight { i });
            }
        }
        if !self.antipode.is_invertible() {
            violations.push(HopfViolation::AntipodeNotInvertible);
        }
        HopfReport { algebra, violations }
    }

    /// `H⁺ = ker ε`.
    pub fn counit_kernel(&self) -> Subspace {
        Subspace::kernel(&self.counit_matrix())
    }

    /// Right adjoint coaction `h ↦ h₍₂₎ ⊗ S(h₍₁₎)h₍₃₎`, an element of `H⊗H`.
    pub fn adjoint_coaction(&self, v: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let field = self.field();
        let t = self.comultiply_twice(v);
        let antipodes: Vec<Vec<Scalar>> = (0..d).map(|a| self.antipode.column(a)).collect();
        let mut out = vec![field.zero(); d * d];
        for a in 0..d {
            for b in 0..d {
                for k in 0..d {
                    let c = &t[(a * d + b) * d + k];
                    if c.is_zero() {
                        continue;
                    }
                    let right = self.multiply(&antipodes[a], &self.basis(k));
                    for (m, r) in right.iter().enumerate() {
                        out[b * d + m].add_product(c, r);
                    }
                }
            }
        }
        out
    }

    /// `Ad_R` as a `dim² × dim` matrix.
    pub fn adjoint_matrix(&self) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|i| self.adjoint_coaction(&self.basis(i))).collect();
        Matrix::from_columns(self.field(), self.dim() * self.dim(), &cols).expect("adjoint shape")
    }

    /// Smallest subcoalgebra containing `v`: the span of the middle legs
    /// `(f⊗id⊗f′)Δ²(x)` over coordinate functionals, iterated to a fixpoint.
    pub fn coalgebra_closure(&self, v: &Subspace) -> Subspace {
        let d = self.dim();
        let field = self.field();
        let mut current = v.clone();
        loop {
            let mut vectors = current.basis_vectors();
            for x in current.basis_vectors() {
                let t = self.comultiply_twice(&x);
                for a in 0..d {
                    for c in 0..d {
                        let middle: Vec<Scalar> = (0..d).map(|b| t[(a * d + b) * d + c].clone()).collect();
                        if !is_zero_vector(&middle) {
                            vectors.push(middle);
                        }
                    }
                }
            }
            let next = Subspace::span_of(field, d, &vectors);
            if next.dim() == current.dim() {
                return next;
            }
            current = next;
        }
    }

    /// `span{x·y : x ∈ u, y ∈ w}`.
    pub fn product_space(&self, u: &Subspace, w: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for x in u.basis_vectors() {
            for y in w.basis_vectors() {
                vectors.push(self.multiply(&x, &y));
            }
        }
        Subspace::span_of(self.field(), self.dim(), &vectors)
    }

    /// Smallest Hopf subalgebra containing `v`.
    ///
    /// Starts from the subcoalgebra generated by `v + k·1` and repeatedly
    /// adds products and antipodes, re-closing as a coalgebra each round,
    /// until the dimension stabilizes (at most `dim` rounds).
    pub fn hopf_subalgebra_closure(&self, v: &Subspace) -> HopfSubalgebra {
        let d = self.dim();
        let field = self.field();
        let unit_line = Subspace::span_of(field, d, &[self.unit().to_vec()]);
        let mut carrier = self.coalgebra_closure(&v.sum(&unit_line).expect("ambient is dim H"));
        for _ in 0..=d {
            let grown = carrier
                .sum(&self.product_space(&carrier, &carrier))
                .and_then(|s| s.sum(&carrier.map(&self.antipode)?))
                .expect("same ambient");
            let closed = self.coalgebra_closure(&grown);
            // products and antipodes of subcoalgebras are subcoalgebras
            debug_assert_eq!(closed, grown, "coalgebra re-closure was not a no-op");
            if closed.dim() == carrier.dim() {
                break;
            }
            carrier = closed;
        }
        HopfSubalgebra::from_carrier(self, carrier).expect("closure is a Hopf subalgebra")
    }

    /// The dual Hopf algebra `H*` on the dual basis `δ_i`.
    pub fn dual(&self) -> HopfAlgebra {
        let d = self.dim();
        let field = self.field();
        let names: Vec<String> = self.names().iter().map(|n| format!("δ_{n}")).collect();
        let mut mult = vec![field.zero(); d * d * d];
        for i in 0..d {
            for ab in 0..d * d {
                let c = self.comult.get(ab, i);
                if !c.is_zero() {
                    mult[ab * d + i] = c.clone();
                }
            }
        }
        let unit = self.counit.clone();
        let alg = Algebra::new(field, names, mult, unit).expect("dual algebra shape");
        let mut comult = Matrix::zeros(field, d * d, d);
        for a in 0..d {
            for b in 0..d {
                for (i, c) in self.alg.basis_product(a, b) {
                    comult.set(a * d + b, *i, c.clone());
                }
            }
        }
        let counit = self.unit().to_vec();
        HopfAlgebra::new(alg, comult, counit, self.antipode.transpose()).expect("dual of a Hopf algebra")
    }

    /// Semisimplicity of `H*` via nondegeneracy of its trace form
    /// `T(f, g) = tr(L_{fg})`. Only sound in characteristic 0, so 𝔽_p is
    /// rejected.
    pub fn is_cosemisimple(&self) -> Result<bool, Error> {
        if self.field() != Field::Rational {
            return Err(Error::UnsupportedField(self.field().to_string()));
        }
        let dual = self.dual();
        let a = dual.algebra();
        let d = a.dim();
        let field = self.field();
        // tr(L_{f_k}) = Σ_j coefficient of f_j in f_k·f_j
        let traces: Vec<Scalar> = (0..d)
            .map(|k| {
                let mut t = field.zero();
                for j in 0..d {
                    t = &t + a.structure_constant(k, j, j);
                }
                t
            })
            .collect();
        let form = Matrix::from_fn(field, d, d, |r, c| {
            let prod = a.mul(&a.basis(r), &a.basis(c));
            dot(&prod, &traces)
        });
        Ok(form.is_invertible())
    }

    /// `H ⊗ K` with componentwise structure.
    pub fn tensor(&self, other: &HopfAlgebra) -> HopfAlgebra {
        let (d1, d2) = (self.dim(), other.dim());
        let d = d1 * d2;
        let field = self.field();
        let alg = self.alg.tensor(&other.alg);
        let mut comult = Matrix::zeros(field, d * d, d);
        for i in 0..d1 {
            for j in 0..d2 {
                let col = i * d2 + j;
                for ab in 0..d1 * d1 {
                    let c1 = self.comult.get(ab, i);
                    if c1.is_zero() {
                        continue;
                    }
                    let (a, b) = (ab / d1, ab % d1);
                    for ce in 0..d2 * d2 {
                        let c2 = other.comult.get(ce, j);
                        if c2.is_zero() {
                            continue;
                        }
                        let (c, e) = (ce / d2, ce % d2);
                        comult.set((a * d2 + c) * d + (b * d2 + e), col, c1 * c2);
                    }
                }
            }
        }
        let counit = tensor_vectors(&self.counit, &other.counit);
        let antipode = self.antipode.kron(&other.antipode);
        HopfAlgebra::new(alg, comult, counit, antipode).expect("tensor of Hopf algebras")
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.alg.basis_product(i, j) == self.alg.basis_product(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| self.comult.get(j * d + k, i) == self.comult.get(k * d + j, i))))
    }

    /// Checks that `psi: self → target` is a Hopf algebra morphism; `psi` has
    /// shape `target.dim × self.dim`.
    pub fn hopf_morphism_witness(&self, target: &HopfAlgebra, psi: &Matrix) -> Result<(), HopfMorphismWitness> {
        let (d, t) = (self.dim(), target.dim());
        if psi.rows() != t || psi.cols() != d {
            return Err(HopfMorphismWitness::Shape);
        }
        if psi.apply(self.unit()) != target.unit() {
            return Err(HopfMorphismWitness::Unit);
        }
        let images: Vec<Vec<Scalar>> = (0..d).map(|i| psi.column(i)).collect();
        for i in 0..d {
            for j in 0..d {
                let lhs = psi.apply(&self.multiply(&self.basis(i), &self.basis(j)));
                if lhs != target.multiply(&images[i], &images[j]) {
                    return Err(HopfMorphismWitness::Product { i, j });
                }
            }
        }
        for (i, img) in images.iter().enumerate() {
            let lhs = apply_on_factor(&apply_on_factor(&self.comult.column(i), &[d, d], 0, psi), &[t, d], 1, psi);
            if lhs != target.comultiply(img) {
                return Err(HopfMorphismWitness::Comult { i });
            }
            if target.apply_counit(img) != self.counit[i] {
                return Err(HopfMorphismWitness::Counit { i });
            }
            if psi.apply(&self.antipode.column(i)) != target.apply_antipode(img) {
                return Err(HopfMorphismWitness::Antipode { i });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfMorphismWitness {
    Shape,
    Unit,
    Product { i: usize, j: usize },
    Comult { i: usize },
    Counit { i: usize },
    Antipode { i: usize },
}

impl fmt::Display for HopfMorphismWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfMorphismWitness::Shape => write!(f, "matrix shape does not match the Hopf algebras"),
            HopfMorphismWitness::Unit => write!(f, "unit is not preserved"),
            HopfMorphismWitness::Product { i, j } => write!(f, "not multiplicative on (e{i}, e{j})"),
            HopfMorphismWitness::Comult { i } => write!(f, "does not intertwine Δ on e{i}"),
            HopfMorphismWitness::Counit { i } => write!(f, "does not preserve ε on e{i}"),
            HopfMorphismWitness::Antipode { i } => write!(f, "does not intertwine S on e{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfViolation {
    Coassociativity { i: usize },
    LeftCounit { i: usize },
    RightCounit { i: usize },
    ComultUnit,
    CounitUnit,
    ComultMultiplicative { i: usize, j: usize },
    CounitMultiplicative { i: usize, j: usize },
    AntipodeLeft { i: usize },
    AntipodeRight { i: usize },
    AntipodeNotInvertible,
}

impl fmt::Display for HopfViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfViolation::Coassociativity { i } => write!(f, "coassociativity fails on e{i}"),
            HopfViolation::LeftCounit { i } => write!(f, "(ε⊗id)Δ(e{i}) ≠ e{i}"),
            HopfViolation::RightCounit { i } => write!(f, "(id⊗ε)Δ(e{i}) ≠ e{i}"),
            HopfViolation::ComultUnit => write!(f, "Δ(1) ≠ 1⊗1"),
            HopfViolation::CounitUnit => write!(f, "ε(1) ≠ 1"),
            HopfViolation::ComultMultiplicative { i, j } => write!(f, "Δ(e{i}·e{j}) ≠ Δ(e{i})Δ(e{j})"),
            HopfViolation::CounitMultiplicative { i, j } => write!(f, "ε(e{i}·e{j}) ≠ ε(e{i})ε(e{j})"),
            HopfViolation::AntipodeLeft { i } => write!(f, "m(S⊗id)Δ(e{i}) ≠ ε(e{i})1"),
            HopfViolation::AntipodeRight { i } => write!(f, "m(id⊗S)Δ(e{i}) ≠ ε(e{i})1"),
            HopfViolation::AntipodeNotInvertible => write!(f, "antipode is not invertible"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub algebra: AlgebraReport,
    pub violations: Vec<HopfViolation>,
}

impl HopfReport {
    pub fn is_valid(&self) -> bool {
        self.algebra.is_valid() && self.violations.is_empty()
    }

    pub fn violation_count(&self) -> usize {
        self.algebra.violations.len() + self.violations.len()
    }
}

/// A Hopf subalgebra `L ⊆ H` with its induced structure on the canonical
/// basis of the carrier and the inclusion `ι_L` (`dim H × dim L`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfSubalgebra {
    parent: HopfAlgebra,
    carrier: Subspace,
    induced: HopfAlgebra,
    inclusion: Matrix,
}

impl HopfSubalgebra {
    /// Validates closure of `carrier` under unit, multiplication, Δ and S and
    /// builds the induced Hopf algebra.
    pub fn from_carrier(parent: &HopfAlgebra, carrier: Subspace) -> Result<HopfSubalgebra, Error> {
        let d = parent.dim();
        let field = parent.field();
        if carrier.ambient() != d {
            return Err(Error::DimensionMismatch { context: "Hopf subalgebra carrier", expected: d, found: carrier.ambient() });
        }
        let bad = |what: &str| Error::NotHopfSubalgebra(what.to_string());
        let basis = carrier.basis_vectors();
        let r = basis.len();
        let pivots = carrier.pivots().to_vec();
        let unit = carrier.coordinates(parent.unit()).ok_or_else(|| bad("unit not in carrier"))?;
        let mut mult = Vec::with_capacity(r * r * r);
        for x in &basis {
            for y in &basis {
                let coords = carrier.coordinates(&parent.multiply(x, y)).ok_or_else(|| bad("not closed under multiplication"))?;
                mult.extend(coords);
            }
        }
        let cc = carrier.tensor(&carrier);
        let mut comult = Matrix::zeros(field, r * r, r);
        let mut antipode = Matrix::zeros(field, r, r);
        for (a, x) in basis.iter().enumerate() {
            let delta = parent.comultiply(x);
            if !cc.contains(&delta) {
                return Err(bad("not closed under comultiplication"));
            }
            for (s, &ps) in pivots.iter().enumerate() {
                for (t, &pt) in pivots.iter().enumerate() {
                    comult.set(s * r + t, a, delta[ps * d + pt].clone());
                }
            }
            let sx = carrier.coordinates(&parent.apply_antipode(x)).ok_or_else(|| bad("not closed under the antipode"))?;
            for (s, c) in sx.into_iter().enumerate() {
                antipode.set(s, a, c);
            }
        }
        let counit = basis.iter().map(|x| parent.apply_counit(x)).collect();
        let names = basis.iter().map(|x| describe_vector(parent.names(), x)).collect();
        let alg = Algebra::new(field, names, mult, unit)?;
        let induced = HopfAlgebra::new(alg, comult, counit, antipode)?;
        let inclusion = carrier.basis().transpose();
        Ok(HopfSubalgebra { parent: parent.clone(), carrier, induced, inclusion })
    }

    /// `H ⊆ H`.
    pub fn whole(parent: &HopfAlgebra) -> HopfSubalgebra {
        HopfSubalgebra::from_carrier(parent, Subspace::full(parent.field(), parent.dim())).expect("H is a Hopf subalgebra of itself")
    }

    pub fn parent(&self) -> &HopfAlgebra {
        &self.parent
    }

    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    pub fn induced(&self) -> &HopfAlgebra {
        &self.induced
    }

    pub fn inclusion(&self) -> &Matrix {
        &self.inclusion
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// Verifies that the inclusion intertwines all structure maps.
    pub fn inclusion_witness(&self) -> Result<(), HopfMorphismWitness> {
        self.induced.hopf_morphism_witness(&self.parent, &self.inclusion)
    }
}

/// `S^n` as a matrix; handy for antipode-order checks.
pub fn antipode_power(h: &HopfAlgebra, n: usize) -> Matrix {
    h.antipode().pow(n)
}

/// `m(S⊗id)Δ(v) - ε(v)1`, zero for a valid antipode.
pub fn antipode_defect(h: &HopfAlgebra, v: &[Scalar]) -> Vec<Scalar> {
    let d = h.dim();
    let left = h.algebra().mult_matrix().apply(&apply_on_factor(&h.comultiply(v), &[d, d], 0, h.antipode()));
    sub_vectors(&left, &scale_vector(&h.apply_counit(v), h.unit()))
}
