//! Randomized invariants tying the independent implementations together.

use num_bigint::BigInt;
use proptest::prelude::*;

use fences::poset::{circular_fence, fence};
use fences::rowmotion::{
    decode_tiling, encode_tiling, orbit_stats, orbits, rowmotion, rowmotion_inverse,
    stats_from_tiling,
};
use fences::shape::{
    ineq_a, ineq_b, ineq_t, is_bottom_interlacing, is_top_interlacing, measure_shape,
    predict_shape, satisfies_predicted,
};
use fences::{q_int, rank_poly, rank_poly_oracle, Composition, IdealSet, PosetKind, RankPoly};

fn parts(max_part: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1..=max_part, 1..=max_len)
}

fn even_parts(max_part: u32, max_pairs: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec((1..=max_part, 1..=max_part), 1..=max_pairs)
        .prop_map(|pairs| pairs.into_iter().flat_map(|(a, b)| [a, b]).collect())
}

fn poly(len: usize) -> impl Strategy<Value = RankPoly> {
    (-3i64..=3, prop::collection::vec(-9i64..=9, 0..=len)).prop_map(|(offset, coeffs)| {
        RankPoly::from_coeffs(offset, coeffs.into_iter().map(BigInt::from).collect())
    })
}

proptest! {
    #[test]
    fn dp_matches_oracle_fence(p in parts(4, 5)) {
        let alpha = Composition::new(p).unwrap();
        prop_assert_eq!(
            rank_poly(&alpha, PosetKind::Fence).unwrap(),
            rank_poly_oracle(&alpha, PosetKind::Fence).unwrap()
        );
    }

    #[test]
    fn dp_matches_oracle_circular(p in even_parts(3, 3)) {
        let alpha = Composition::new(p).unwrap();
        prop_assert_eq!(
            rank_poly(&alpha, PosetKind::Circular).unwrap(),
            rank_poly_oracle(&alpha, PosetKind::Circular).unwrap()
        );
    }

    #[test]
    fn circular_rank_sequences_are_palindromic(p in even_parts(5, 4)) {
        let alpha = Composition::new(p).unwrap();
        let r = rank_poly(&alpha, PosetKind::Circular).unwrap();
        prop_assert!(r.is_symmetric_about(alpha.size() as i64));
        // one-step rotation reverses, hence agrees
        let rot = rank_poly(&alpha.rotate_left(1), PosetKind::Circular).unwrap();
        prop_assert_eq!(rot, r);
    }

    #[test]
    fn poly_ring_laws(a in poly(6), b in poly(6), k in -4i64..=4) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(a.shift(k).shift(-k), a.clone());
        prop_assert_eq!(a.reversed(k).reversed(k), a.clone());
        prop_assert_eq!(&a.reversed(0) * &b.reversed(0), (&a * &b).reversed(0));
        prop_assert_eq!(
            (&a * &b).eval_at_one(),
            a.eval_at_one() * b.eval_at_one()
        );
    }

    #[test]
    fn q_int_products_are_symmetric(n in 1u32..=8, m in 1u32..=8) {
        let prod = &q_int(n) * &q_int(m);
        prop_assert!(prod.is_symmetric_about(n as i64 + m as i64 - 2));
    }

    #[test]
    fn interlacing_chains_split_into_families(seq in prop::collection::vec(0i64..=5, 1..=9)) {
        let seq: Vec<BigInt> = seq.into_iter().map(BigInt::from).collect();
        prop_assert_eq!(is_bottom_interlacing(&seq), ineq_a(&seq) && ineq_b(&seq));
        prop_assert_eq!(is_top_interlacing(&seq), ineq_a(&seq) && ineq_t(&seq));
    }

    #[test]
    fn fence_shapes_match_prediction(p in parts(4, 6)) {
        let alpha = Composition::new(p).unwrap();
        let seq = rank_poly(&alpha, PosetKind::Fence).unwrap().dense().unwrap();
        prop_assert!(satisfies_predicted(&seq, predict_shape(&alpha)));
        prop_assert_ne!(
            format!("{}", measure_shape(&seq)),
            "not-unimodal".to_string()
        );
    }

    #[test]
    fn ideal_lattice_is_closed(p in parts(4, 4)) {
        let poset = fence(&Composition::new(p).unwrap()).unwrap();
        let ideals = poset.enumerate_ideals().unwrap();
        let set: std::collections::HashSet<_> = ideals.iter().copied().collect();
        for &a in &ideals {
            for &b in &ideals {
                prop_assert!(set.contains(&IdealSet(a.0 | b.0)));
                prop_assert!(set.contains(&IdealSet(a.0 & b.0)));
            }
        }
    }

    #[test]
    fn rowmotion_bijects(p in even_parts(3, 3)) {
        let poset = circular_fence(&Composition::new(p).unwrap()).unwrap();
        for &ideal in &poset.enumerate_ideals().unwrap() {
            let next = rowmotion(&poset, ideal).unwrap();
            prop_assert!(poset.is_ideal(next));
            prop_assert_eq!(rowmotion_inverse(&poset, next).unwrap(), ideal);
        }
    }

    #[test]
    fn tilings_roundtrip(p in even_parts(3, 2)) {
        let alpha = Composition::new(p).unwrap();
        let poset = circular_fence(&alpha).unwrap();
        for orbit in orbits(&poset).unwrap() {
            let tiling = encode_tiling(&orbit, &poset).unwrap();
            prop_assert_eq!(decode_tiling(&tiling, &alpha).unwrap(), orbit.clone());
            prop_assert_eq!(
                stats_from_tiling(&tiling, &alpha).unwrap(),
                orbit_stats(&orbit, &poset)
            );
        }
    }
}
