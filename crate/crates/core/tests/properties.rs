use proptest::prelude::*;

mod common;

use common::{drawing, relabelling, rotation};
use k5n_core::cyclic::{route_order, routes_of_size, AntidistanceTable, CyclicPermutation};
use k5n_core::drawing::{are_isomorphic, AbstractDrawing};

fn sorted_rotations(d: &AbstractDrawing) -> Vec<CyclicPermutation> {
    let mut v = d.rotations().to_vec();
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cleaning_never_adds_crossings(d in drawing()) {
        prop_assert!(d.validate().is_valid());
        let c = d.clean();
        prop_assert!(c.total_crossings() <= d.total_crossings());
        prop_assert!(c.is_clean());
        prop_assert_eq!(c.n(), d.n());
        prop_assert_eq!(c.clean(), c);
    }

    #[test]
    fn isomorphism_is_an_equivalence(d in drawing(), sigma in relabelling(), tau in relabelling()) {
        prop_assert!(are_isomorphic(&d, &d).is_some());
        let d2 = d.relabel(&sigma).unwrap();
        let w = are_isomorphic(&d, &d2).unwrap();
        prop_assert_eq!(sorted_rotations(&d.relabel(&w).unwrap()), sorted_rotations(&d2));
        let back = are_isomorphic(&d2, &d).unwrap();
        prop_assert_eq!(sorted_rotations(&d2.relabel(&back).unwrap()), sorted_rotations(&d));
        prop_assert_eq!(
            sorted_rotations(&d2.relabel(&w.inverse()).unwrap()),
            sorted_rotations(&d)
        );
        let d3 = d2.relabel(&tau).unwrap();
        prop_assert!(are_isomorphic(&d, &d3).is_some());
        let composed = tau.compose(&w);
        prop_assert_eq!(sorted_rotations(&d.relabel(&composed).unwrap()), sorted_rotations(&d3));
    }

    #[test]
    fn routes_reverse(a in rotation(), b in rotation(), size in 0usize..=5) {
        for route in routes_of_size(&a, &b, size, true) {
            let target = b.reverse();
            prop_assert!(route.carries(&a, &target));
            prop_assert!(route_order(&target, &a, route.transpositions()).is_some());
            let back: Vec<_> = route.witness_order().iter().rev().copied().collect();
            let mut state = target;
            for t in back {
                state = state.apply(t).unwrap();
            }
            prop_assert_eq!(state, a);
        }
    }

    #[test]
    fn relabelling_commutes_with_reversal(p in rotation(), sigma in relabelling()) {
        prop_assert_eq!(p.relabel(&sigma).unwrap().reverse(), p.reverse().relabel(&sigma).unwrap());
        prop_assert_eq!(p.relabel(&sigma).unwrap().relabel(&sigma.inverse()).unwrap(), p);
    }

    #[test]
    fn applying_a_transposition_twice_is_the_identity(
        word in Just((0u8..8).collect::<Vec<_>>()).prop_shuffle(),
        k in 3usize..=8,
    ) {
        let symbols: Vec<u8> = word.into_iter().filter(|&s| (s as usize) < k).collect();
        let p = CyclicPermutation::new(&symbols).unwrap();
        for t in p.applicable() {
            let q = p.apply(t).unwrap();
            prop_assert_ne!(q, p);
            prop_assert_eq!(q.apply(t).unwrap(), p);
        }
    }

    #[test]
    fn antidistance_is_symmetric_and_invariant(a in rotation(), b in rotation(), sigma in relabelling()) {
        let table = AntidistanceTable::new();
        let d = table.antidistance(&a, &b);
        prop_assert_eq!(d, table.antidistance(&b, &a));
        prop_assert_eq!(d, table.antidistance(&a.relabel(&sigma).unwrap(), &b.relabel(&sigma).unwrap()));
        prop_assert_eq!(table.antidistance(&a.reverse(), &b.reverse()), d);
    }
}
