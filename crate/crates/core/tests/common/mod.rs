#![allow(dead_code)]

use std::collections::BTreeSet;

use hopfkit_core::catalog::{grading_coaction, group_by_name, truncated_free_algebra, FiniteGroupTable};
use hopfkit_core::coaction::Coaction;
use hopfkit_core::linalg::{Field, Matrix, Scalar, Subspace};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

pub const GROUPS: [&str; 17] = [
    "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12", "Z2xZ2", "S3", "Z2xZ4", "Z2xZ6", "Z3xZ3",
];

pub struct Grading {
    pub group_name: &'static str,
    pub group: FiniteGroupTable,
    pub letter_degrees: Vec<usize>,
    pub words: Vec<Vec<usize>>,
    pub coaction: Coaction,
}

pub fn word_degree(g: &FiniteGroupTable, letter_degrees: &[usize], word: &[usize]) -> usize {
    word.iter().fold(g.identity(), |acc, &l| g.op(acc, letter_degrees[l]))
}

pub fn random_grading(rng: &mut impl Rng) -> Grading {
    let group_name = *GROUPS.choose(rng).unwrap();
    let group = group_by_name(group_name).unwrap();
    let letters = rng.gen_range(1..=3);
    let max_len = match letters {
        1 => rng.gen_range(1..=4),
        2 => rng.gen_range(1..=3),
        _ => rng.gen_range(1..=2),
    };
    let letter_degrees: Vec<usize> = (0..letters).map(|_| rng.gen_range(0..group.order())).collect();
    let (alg, words) = truncated_free_algebra(Field::Rational, letters, max_len);
    let degrees: Vec<usize> = words.iter().map(|w| word_degree(&group, &letter_degrees, w)).collect();
    let coaction = grading_coaction(&alg, &group, &degrees).unwrap();
    Grading { group_name, group, letter_degrees, words, coaction }
}

/// Brute-force closure of `gens ∪ {1}` under the group law.
pub fn subgroup_closure(g: &FiniteGroupTable, gens: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    set.insert(g.identity());
    loop {
        let mut grown = set.clone();
        for &a in &set {
            for &b in &set {
                grown.insert(g.op(a, b));
            }
        }
        if grown.len() == set.len() {
            return set;
        }
        set = grown;
    }
}

pub fn coordinate_span(field: Field, n: usize, indices: impl IntoIterator<Item = usize>) -> Subspace {
    let vectors: Vec<Vec<Scalar>> = indices
        .into_iter()
        .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect();
    Subspace::span_of(field, n, &vectors)
}

pub fn to_rational(s: &Scalar) -> BigRational {
    s.to_canonical_string().parse().expect("rational scalar")
}

/// Gaussian elimination over ℚ, written independently of the crate.
pub fn rank_oracle(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot_row[c];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rational_rows(m: &Matrix) -> Vec<Vec<BigRational>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(to_rational).collect()).collect()
}

pub fn small_rational(rng: &mut impl Rng) -> BigRational {
    let num = rng.gen_range(-4i64..=4);
    let den = rng.gen_range(1i64..=3);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn scalar(field: Field, q: &BigRational) -> Scalar {
    field.parse(&q.to_string()).unwrap()
}

/// `L·U` with unit diagonals and small off-diagonal entries, so always
/// invertible.
pub fn random_invertible(field: Field, n: usize, rng: &mut impl Rng) -> Matrix {
    let mut lower = Matrix::identity(field, n);
    let mut upper = Matrix::identity(field, n);
    for r in 0..n {
        for c in 0..n {
            let x = field.from_i64(rng.gen_range(-2..=2));
            if r > c {
                lower.set(r, c, x);
            } else if r < c {
                upper.set(r, c, x);
            }
        }
    }
    let mut scale = Matrix::identity(field, n);
    for i in 0..n {
        let s = [1i64, -1, 2, 3][rng.gen_range(0..4)];
        scale.set(i, i, field.from_i64(s));
    }
    lower.mul(&scale).mul(&upper)
}

pub fn one() -> BigRational {
    BigRational::one()
}
