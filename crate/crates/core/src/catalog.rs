//! Concrete Hopf algebras, algebras and coactions: group algebras and their
//! duals, Sweedler and Taft algebras, truncated polynomial and free algebras,
//! group gradings and coactions pushed along Hopf morphisms.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{tensor_multiply, Algebra};
use crate::coaction::Coaction;
use crate::error::Error;
use crate::hopf::HopfAlgebra;
use crate::linalg::{Field, Matrix, Scalar};

/// A finite group given by its multiplication table, validated on
/// construction (closure, associativity, identity, inverses).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    names: Vec<String>,
    table: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
}

impl FiniteGroupTable {
    /// `table[a·n + b]` is the index of `a·b`.
    pub fn new(names: Vec<String>, table: Vec<usize>) -> Result<FiniteGroupTable, Error> {
        let n = names.len();
        let bad = |msg: String| Err(Error::InvalidGroupTable(msg));
        if n == 0 {
            return bad("empty group".to_string());
        }
        if table.len() != n * n {
            return bad(format!("table has {} entries, expected {}", table.len(), n * n));
        }
        if let Some(&x) = table.iter().find(|&&x| x >= n) {
            return bad(format!("entry {x} out of range"));
        }
        let op = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if op(op(a, b), c) != op(a, op(b, c)) {
                        return bad(format!("associativity fails on ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| op(e, x) == x && op(x, e) == x)) else {
            return bad("no identity element".to_string());
        };
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| op(a, b) == identity && op(b, a) == identity) {
                Some(b) => inverse.push(b),
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        Ok(FiniteGroupTable { names, table, inverse, identity })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Checks that `images[a]` defines a homomorphism into `target`.
    pub fn is_homomorphism(&self, target: &FiniteGroupTable, images: &[usize]) -> bool {
        images.len() == self.order()
            && images.iter().all(|&x| x < target.order())
            && (0..self.order())
                .all(|a| (0..self.order()).all(|b| images[self.op(a, b)] == target.op(images[a], images[b])))
    }
}

pub fn trivial_group() -> FiniteGroupTable {
    cyclic_group(1)
}

/// `Z_n = {1, g, g^2, …}`.
pub fn cyclic_group(n: usize) -> FiniteGroupTable {
    assert!(n >= 1, "cyclic group of order 0");
    let names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let table = (0..n * n).map(|ab| (ab / n + ab % n) % n).collect();
    FiniteGroupTable::new(names, table).expect("cyclic group table")
}

/// `G × K` with `(g, k)` at index `g·|K| + k`.
pub fn direct_product(g: &FiniteGroupTable, k: &FiniteGroupTable) -> FiniteGroupTable {
    let (m, n) = (g.order(), k.order());
    let names = g
        .names
        .iter()
        .flat_map(|a| k.names.iter().map(move |b| format!("({a},{b})")))
        .collect();
    let mut table = Vec::with_capacity(m * n * m * n);
    for x in 0..m * n {
        for y in 0..m * n {
            table.push(g.op(x / n, y / n) * n + k.op(x % n, y % n));
        }
    }
    FiniteGroupTable::new(names, table).expect("product of groups")
}

/// `S_3` as permutations of `{0, 1, 2}`.
pub fn symmetric_group_3() -> FiniteGroupTable {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"].iter().map(|s| s.to_string()).collect();
    let mut table = Vec::with_capacity(36);
    for p in &perms {
        for q in &perms {
            // (p·q)(i) = p(q(i))
            let r = [p[q[0]], p[q[1]], p[q[2]]];
            table.push(perms.iter().position(|s| *s == r).expect("closed"));
        }
    }
    FiniteGroupTable::new(names, table).expect("S3 table")
}

/// `k[G]`: Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹.
pub fn group_algebra(g: &FiniteGroupTable, field: Field) -> Result<HopfAlgebra, Error> {
    let n = g.order();
    let one = field.one();
    let mult: Vec<_> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (a, b, g.op(a, b), one.clone())).collect();
    let mut unit = vec![field.zero(); n];
    unit[g.identity()] = one.clone();
    let alg = Algebra::from_sparse(field, g.names.clone(), &mult, unit)?;
    let comult: Vec<_> = (0..n).map(|a| (a, a, a, one.clone())).collect();
    let antipode: Vec<_> = (0..n).map(|a| (a, g.inverse(a), one.clone())).collect();
    HopfAlgebra::from_sparse(alg, &comult, vec![one; n], &antipode)
}

/// Functions on `G`, the dual of `k[G]`, on the point-mass basis `δ_g`.
pub fn function_algebra(g: &FiniteGroupTable, field: Field) -> Result<HopfAlgebra, Error> {
    Ok(group_algebra(g, field)?.dual())
}

/// The Hopf algebra of a group homomorphism `images: G → K`.
pub fn group_hom_matrix(field: Field, g: &FiniteGroupTable, k: &FiniteGroupTable, images: &[usize]) -> Result<Matrix, Error> {
    if !g.is_homomorphism(k, images) {
        return Err(Error::NotHopfMorphism("group map is not a homomorphism".to_string()));
    }
    let mut m = Matrix::zeros(field, k.order(), g.order());
    for (a, &b) in images.iter().enumerate() {
        m.set(b, a, field.one());
    }
    Ok(m)
}

/// Sweedler's four-dimensional Hopf algebra on `1, g, x, gx` with
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δ(x) = x⊗1 + g⊗x`.
pub fn sweedler_h4(field: Field) -> Result<HopfAlgebra, Error> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    taft_over(field, 2, field.from_i64(-1))
}

/// The Taft algebra `T_n(ω)` over `𝔽_p`, where `ω` is a primitive `n`-th
/// root of unity; dimension `n²`.
pub fn taft(n: usize, p: u64, root: i64) -> Result<HopfAlgebra, Error> {
    let field = Field::prime(p)?;
    if n < 2 {
        return Err(Error::Degenerate(format!("Taft algebra needs n ≥ 2, got {n}")));
    }
    let w = field.from_i64(root);
    if !w.pow(n as u64).is_one() || (1..n).any(|k| w.pow(k as u64).is_one()) {
        return Err(Error::BadRoot(format!("{w} is not a primitive {n}-th root of unity in {field}")));
    }
    taft_over(field, n, w)
}

fn taft_over(field: Field, n: usize, w: Scalar) -> Result<HopfAlgebra, Error> {
    // g^i x^j lives at index j·n + i
    let d = n * n;
    let idx = |i: usize, j: usize| j * n + i;
    let power = |base: &str, e: usize| match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    };
    let mut names = Vec::with_capacity(d);
    for j in 0..n {
        for i in 0..n {
            let s = format!("{}{}", power("g", i), power("x", j));
            names.push(if s.is_empty() { "1".to_string() } else { s });
        }
    }
    let mut mult = Vec::new();
    for j in 0..n {
        for i in 0..n {
            for l in 0..n {
                for k in 0..n {
                    if j + l < n {
                        let c = w.pow((j * k) as u64);
                        mult.push((idx(i, j), idx(k, l), idx((i + k) % n, j + l), c));
                    }
                }
            }
        }
    }
    let mut unit = vec![field.zero(); d];
    unit[0] = field.one();
    let alg = Algebra::from_sparse(field, names, &mult, unit)?;
    let pair = [&alg, &alg];
    let e = |i: usize| alg.basis(i);
    let g = idx(1 % n, 0);
    let x = idx(0, 1);
    let delta_g = crate::linalg::tensor_vectors(&e(g), &e(g));
    let mut delta_x = crate::linalg::tensor_vectors(&e(x), &e(0));
    crate::linalg::axpy(&mut delta_x, &field.one(), &crate::linalg::tensor_vectors(&e(g), &e(x)));
    let g_inv = e(idx(n - 1, 0));
    let s_x: Vec<Scalar> = alg.mul(&g_inv, &e(x)).iter().map(|c| -c).collect();
    let mut comult = Matrix::zeros(field, d * d, d);
    let mut antipode = Matrix::zeros(field, d, d);
    let mut counit = vec![field.zero(); d];
    for j in 0..n {
        for i in 0..n {
            let col = idx(i, j);
            let mut delta = crate::linalg::tensor_vectors(&e(0), &e(0));
            let mut s = e(0);
            for _ in 0..i {
                delta = tensor_multiply(&pair, &delta, &delta_g);
                s = alg.mul(&g_inv, &s);
            }
            for _ in 0..j {
                delta = tensor_multiply(&pair, &delta, &delta_x);
                s = alg.mul(&s_x, &s);
            }
            for (r, c) in delta.into_iter().enumerate() {
                comult.set(r, col, c);
            }
            for (r, c) in s.into_iter().enumerate() {
                antipode.set(r, col, c);
            }
            if j == 0 {
                counit[col] = field.one();
            }
        }
    }
    HopfAlgebra::new(alg, comult, counit, antipode)
}

/// `k[x]/(x^n)` on `1, x, …, x^{n-1}`, augmented by `x ↦ 0`.
pub fn truncated_polynomial(field: Field, n: usize) -> Algebra {
    assert!(n >= 1, "truncated polynomial algebra needs n ≥ 1");
    let names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n - i {
            mult.push((i, j, i + j, field.one()));
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    let aug = unit.clone();
    Algebra::from_sparse(field, names, &mult, unit)
        .expect("truncated polynomial shape")
        .with_augmentation(aug)
        .expect("augmentation shape")
}

/// Words of length `≤ max_len` in `letters` letters `a, b, …`, multiplied by
/// concatenation; products that would be longer vanish. Augmented by sending
/// every nonempty word to 0. Returns the algebra and the word of each basis
/// element (as letter indices).
pub fn truncated_free_algebra(field: Field, letters: usize, max_len: usize) -> (Algebra, Vec<Vec<usize>>) {
    assert!((1..=26).contains(&letters), "between 1 and 26 letters");
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in 0..letters {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let index: BTreeMap<Vec<usize>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let names = words
        .iter()
        .map(|w| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|&l| (b'a' + l as u8) as char).collect()
            }
        })
        .collect();
    let mut mult = Vec::new();
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            let mut uv = u.clone();
            uv.extend(v);
            if let Some(&k) = index.get(&uv) {
                mult.push((i, j, k, field.one()));
            }
        }
    }
    let mut unit = vec![field.zero(); words.len()];
    unit[0] = field.one();
    let aug = unit.clone();
    let alg = Algebra::from_sparse(field, names, &mult, unit)
        .expect("free algebra shape")
        .with_augmentation(aug)
        .expect("augmentation shape");
    (alg, words)
}

/// The coaction of `k[G]` on a `G`-graded algebra: `δ(a_i) = a_i ⊗ g_{deg i}`.
pub fn grading_coaction(a: &Algebra, g: &FiniteGroupTable, degrees: &[usize]) -> Result<Coaction, Error> {
    let d = a.dim();
    if degrees.len() != d {
        return Err(Error::DimensionMismatch { context: "grading degrees", expected: d, found: degrees.len() });
    }
    if let Some(&bad) = degrees.iter().find(|&&x| x >= g.order()) {
        return Err(Error::DimensionMismatch { context: "degree index", expected: g.order(), found: bad });
    }
    for (i, c) in a.unit().iter().enumerate() {
        if !c.is_zero() && degrees[i] != g.identity() {
            return Err(Error::NonMultiplicativeGrading(i, i, i));
        }
    }
    for i in 0..d {
        for j in 0..d {
            for (k, _) in a.basis_product(i, j) {
                if degrees[*k] != g.op(degrees[i], degrees[j]) {
                    return Err(Error::NonMultiplicativeGrading(i, j, *k));
                }
            }
        }
    }
    let h = group_algebra(g, a.field())?;
    let entries: Vec<_> = degrees.iter().enumerate().map(|(i, &k)| (i, i, k, a.field().one())).collect();
    Coaction::from_sparse(a.clone(), h, &entries)
}

/// `δ = Δ` on the underlying algebra of `h`.
pub fn regular_coaction(h: &HopfAlgebra) -> Coaction {
    Coaction::new(h.algebra().clone(), h.clone(), h.comult_matrix().clone()).expect("Δ has coaction shape")
}

/// `a ↦ a ⊗ 1`.
pub fn trivial_coaction(a: &Algebra, h: &HopfAlgebra) -> Coaction {
    let map = Matrix::identity(a.field(), a.dim()).kron(&h.unit_matrix());
    Coaction::new(a.clone(), h.clone(), map).expect("trivial coaction shape")
}

/// `δ = (id⊗ψ)∘Δ` on the underlying algebra of `a`, for a Hopf morphism
/// `ψ: a → h`.
pub fn hopf_morphism_coaction(a: &HopfAlgebra, psi: &Matrix, h: &HopfAlgebra) -> Result<Coaction, Error> {
    a.hopf_morphism_witness(h, psi).map_err(|w| Error::NotHopfMorphism(w.to_string()))?;
    let map = Matrix::identity(a.field(), a.dim()).kron(psi).mul(a.comult_matrix());
    Coaction::new(a.algebra().clone(), h.clone(), map)
}

/// `δ = (id⊗ψ)∘Δ` for a surjective Hopf morphism `ψ: a ↠ h`.
pub fn surjection_coaction(a: &HopfAlgebra, psi: &Matrix, h: &HopfAlgebra) -> Result<Coaction, Error> {
    let rank = psi.rank();
    if rank != h.dim() {
        return Err(Error::NotSurjective { rank, target: h.dim() });
    }
    hopf_morphism_coaction(a, psi, h)
}

/// The product bundle coaction `id⊗Δ` on `C ⊗ H`.
pub fn product_coaction(c: &Algebra, h: &HopfAlgebra) -> Coaction {
    let a = c.tensor(h.algebra());
    let (dc, dh) = (c.dim(), h.dim());
    // (c_i⊗h_j) ↦ Σ c_i⊗h_p ⊗ h_q over Δ(h_j) = Σ h_p⊗h_q
    let mut map = Matrix::zeros(c.field(), dc * dh * dh, dc * dh);
    for i in 0..dc {
        for j in 0..dh {
            for pq in 0..dh * dh {
                let coeff = h.comult_matrix().get(pq, j);
                if !coeff.is_zero() {
                    let (p, q) = (pq / dh, pq % dh);
                    map.set((i * dh + p) * dh + q, i * dh + j, coeff.clone());
                }
            }
        }
    }
    Coaction::new(a, h.clone(), map).expect("product coaction shape")
}

/// A catalog entry addressed by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Hopf(HopfAlgebra),
    Algebra(Algebra),
}

/// Parses a group name: `Z<n>`, products `Z2xZ2`, `S3` or `1`.
pub fn group_by_name(name: &str) -> Result<FiniteGroupTable, Error> {
    let unknown = || Error::Precondition(format!("unknown group {name:?}"));
    let mut out: Option<FiniteGroupTable> = None;
    for part in name.split(['x', '×']) {
        let part = part.trim();
        let g = if part == "1" {
            trivial_group()
        } else if part == "S3" {
            symmetric_group_3()
        } else if let Some(n) = part.strip_prefix('Z') {
            let n: usize = n.parse().map_err(|_| unknown())?;
            if n == 0 || n > 64 {
                return Err(unknown());
            }
            cyclic_group(n)
        } else {
            return Err(unknown());
        };
        out = Some(match out {
            None => g,
            Some(prev) => direct_product(&prev, &g),
        });
    }
    out.ok_or_else(unknown)
}

/// Looks up `group <G>`, `functions <G>`, `sweedler`, `taft <n> <p> <root>`
/// or `truncated <n>`. Taft algebras carry their own prime field.
pub fn lookup(name: &str, field: Field) -> Result<Entry, Error> {
    let words: Vec<&str> = name.split_whitespace().collect();
    let unknown = || Error::Precondition(format!("unknown catalog entry {name:?}"));
    let num = |s: &str| s.parse::<i64>().map_err(|_| unknown());
    match words.as_slice() {
        ["group", g] => Ok(Entry::Hopf(group_algebra(&group_by_name(g)?, field)?)),
        ["functions", g] => Ok(Entry::Hopf(function_algebra(&group_by_name(g)?, field)?)),
        ["sweedler"] => Ok(Entry::Hopf(sweedler_h4(field)?)),
        ["taft", n, p, root] => {
            let (n, p) = (num(n)?, num(p)?);
            if n < 0 || p < 0 {
                return Err(unknown());
            }
            Ok(Entry::Hopf(taft(n as usize, p as u64, num(root)?)?))
        }
        ["truncated", n] => {
            let n = num(n)?;
            if !(1..=64).contains(&n) {
                return Err(unknown());
            }
            Ok(Entry::Algebra(truncated_polynomial(field, n as usize)))
        }
        _ => Err(unknown()),
    }
}
