//! Property tests for the permutation algebra and the text round trip.

use commuting_graph::perm::Permutation;
use proptest::prelude::*;

fn arb_perm(max_degree: usize) -> impl Strategy<Value = Permutation> {
    (1..max_degree).prop_flat_map(|n| {
        Just((0..n as u16).collect::<Vec<u16>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::from_images(images).unwrap())
    })
}

/// A pair of permutations of one shared degree.
fn arb_pair(max_degree: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (2..max_degree).prop_flat_map(|n| {
        let one = move || {
            Just((0..n as u16).collect::<Vec<u16>>())
                .prop_shuffle()
                .prop_map(|images| Permutation::from_images(images).unwrap())
        };
        (one(), one())
    })
}

fn arb_triple(max_degree: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (2..max_degree).prop_flat_map(|n| {
        let one = move || {
            Just((0..n as u16).collect::<Vec<u16>>())
                .prop_shuffle()
                .prop_map(|images| Permutation::from_images(images).unwrap())
        };
        (one(), one(), one())
    })
}

proptest! {
    #[test]
    fn composition_is_associative((p, q, r) in arb_triple(40)) {
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_reverses_products((p, q) in arb_pair(40)) {
        let lhs = p.compose(&q).unwrap().inverse();
        let rhs = q.inverse().compose(&p.inverse()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_cancels(p in arb_perm(40)) {
        let n = p.degree();
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), Permutation::identity(n));
        prop_assert_eq!(p.inverse().compose(&p).unwrap(), Permutation::identity(n));
    }

    #[test]
    fn order_is_the_least_annihilating_power(p in arb_perm(24)) {
        let ord = p.order();
        prop_assert!(p.pow(ord).is_identity());
        for d in 1..ord {
            if ord % d == 0 {
                prop_assert!(d == ord || !p.pow(d).is_identity());
            }
        }
    }

    #[test]
    fn commuting_is_symmetric((p, q) in arb_pair(40)) {
        prop_assert_eq!(
            p.commutes_with(&q).unwrap(),
            q.commutes_with(&p).unwrap()
        );
    }

    #[test]
    fn cycle_notation_round_trips(p in arb_perm(40)) {
        let text = p.cycle_string();
        let back = Permutation::parse_cycles(&text, p.degree()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn conjugation_preserves_order_and_distributes((p, q, g) in arb_triple(40)) {
        let pg = p.conjugated_by(&g).unwrap();
        prop_assert_eq!(pg.order(), p.order());
        let product_conj = p.compose(&q).unwrap().conjugated_by(&g).unwrap();
        let conj_product = pg.compose(&q.conjugated_by(&g).unwrap()).unwrap();
        prop_assert_eq!(product_conj, conj_product);
    }
}
