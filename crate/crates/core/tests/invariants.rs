mod common;

use std::collections::BTreeSet;

use common::*;
use hopfkit_core::catalog::{group_algebra, group_by_name, regular_coaction};
use hopfkit_core::hopf::HopfSubalgebra;
use hopfkit_core::linalg::{Field, Subspace};
use hopfkit_core::reduction::{
    canonical_map, largest_stable_ideal_within, quotient_coaction, quotient_square_commutes, universal_calculus, ver_map,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_grading(rng: &mut impl Rng) -> Grading {
    loop {
        let g = random_grading(rng);
        if g.words.len() <= 7 && g.group.order() <= 6 {
            return g;
        }
    }
}

/// Words all of whose two-sided extensions stay inside `allowed`.
fn monomial_ideal_inside(words: &[Vec<usize>], allowed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let contains = |outer: &[usize], inner: &[usize]| inner.is_empty() || outer.windows(inner.len()).any(|w| w == inner);
    (0..words.len())
        .filter(|&i| (0..words.len()).filter(|&j| contains(&words[j], &words[i])).all(|j| allowed.contains(&j)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn stable_ideal_is_sound_and_contains_monomial_ideals(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_grading(&mut rng);
        let c = &g.coaction;
        let a = c.comodule();
        let n = a.dim();
        let allowed: BTreeSet<usize> = (1..n).filter(|_| rng.gen_bool(0.7)).collect();
        let seed_space = coordinate_span(Field::Rational, n, allowed.iter().copied());
        let ideal = largest_stable_ideal_within(c, &seed_space);
        prop_assert!(a.is_two_sided_ideal(&ideal));
        prop_assert!(ideal.is_subset_of(&seed_space));
        let image = ideal.map(c.map()).unwrap();
        prop_assert!(image.is_subset_of(&ideal.tensor(&Subspace::full(Field::Rational, c.hopf().dim()))));
        prop_assert_eq!(largest_stable_ideal_within(c, &ideal), ideal.clone());
        let monomial = coordinate_span(Field::Rational, n, monomial_ideal_inside(&g.words, &allowed));
        prop_assert!(monomial.is_subset_of(&ideal));

        let (reduced, pi) = quotient_coaction(c, &ideal).unwrap();
        prop_assert!(quotient_square_commutes(c, &reduced, &pi));
        prop_assert!(reduced.check().is_valid());
        prop_assert_eq!(reduced.comodule().dim(), n - ideal.dim());
    }

    #[test]
    fn ver_lands_in_augmentation_ideal(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = small_grading(&mut rng);
        let c = &g.coaction;
        let (kernel, du) = universal_calculus(c.comodule());
        prop_assert_eq!(kernel.dim(), c.comodule().dim() * (c.comodule().dim() - 1));
        let target = Subspace::full(Field::Rational, c.comodule().dim()).tensor(&c.hopf().counit_kernel());
        let coords: Vec<_> = (0..kernel.dim()).map(|_| scalar(Field::Rational, &small_rational(&mut rng))).collect();
        let x = kernel.combine(&coords);
        prop_assert!(target.contains(&ver_map(c, &x).unwrap()));
        for i in 0..du.cols() {
            prop_assert!(target.contains(&ver_map(c, &du.column(i)).unwrap()));
        }
    }

    #[test]
    fn galois_forces_full_coefficient_space(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = if rng.gen_bool(0.3) {
            let g = group_by_name(GROUPS[rng.gen_range(0..8)]).unwrap();
            regular_coaction(&group_algebra(&g, Field::Rational).unwrap())
        } else {
            small_grading(&mut rng).coaction
        };
        let can = canonical_map(&c, &c.coinvariants()).unwrap();
        if can.bijective {
            prop_assert!(c.coefficient_space().is_full());
            prop_assert!(c.is_inner_faithful());
        }
    }

    #[test]
    fn hopf_image_is_invariant_under_conjugation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = small_grading(&mut rng);
        let c = &g.coaction;
        let p = random_invertible(Field::Rational, c.comodule().dim(), &mut rng);
        let theta = c.comodule().transport(&p).unwrap();
        let moved = c.conjugate(&theta).unwrap();
        prop_assert!(moved.check().is_valid());
        let (before, after) = (c.hopf_image(), moved.hopf_image());
        prop_assert_eq!(after.sub.carrier(), before.sub.carrier());
        prop_assert_eq!(moved.coinvariants(), c.coinvariants().map(&p).unwrap());
    }

    #[test]
    fn hopf_image_is_minimal(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_grading(&mut rng);
        let c = &g.coaction;
        let image = c.hopf_image();
        let mut gens = g.letter_degrees.clone();
        gens.push(rng.gen_range(0..g.group.order()));
        let bigger = subgroup_closure(&g.group, &gens);
        let carrier = coordinate_span(Field::Rational, g.group.order(), bigger.iter().copied());
        let l = HopfSubalgebra::from_carrier(c.hopf(), carrier).unwrap();
        let f = c.factors_through(&l).expect("δ lands in k[L]");
        prop_assert!(f.recovers(c));
        prop_assert!(image.sub.carrier().is_subset_of(l.carrier()));

        let smaller = subgroup_closure(&g.group, &g.letter_degrees[1..]);
        if !smaller.contains(&g.letter_degrees[0]) {
            let carrier = coordinate_span(Field::Rational, g.group.order(), smaller.iter().copied());
            let l = HopfSubalgebra::from_carrier(c.hopf(), carrier).unwrap();
            prop_assert!(c.factors_through(&l).is_none());
        }
    }

    #[test]
    fn tensor_hopf_image_sits_in_tensor_of_images(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g1, g2) = (small_grading(&mut rng), small_grading(&mut rng));
        let t = g1.coaction.tensor(&g2.coaction);
        prop_assert!(t.check().is_valid());
        let inside = g1.coaction.hopf_image().sub.carrier().tensor(g2.coaction.hopf_image().sub.carrier());
        prop_assert!(t.hopf_image().sub.carrier().is_subset_of(&inside));
    }
}
