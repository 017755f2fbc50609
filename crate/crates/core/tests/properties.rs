use num_bigint::BigInt;
use proptest::prelude::*;

use graphflag::acceptance::random_optional_cycle_graph;
use graphflag::flagvec::{
    complement_transform, concise_flag_vector, concise_from_verbose, verbose_flag_vector,
    verbose_from_concise, verbose_of_graph, ConciseVector, VerboseMethod,
};
use graphflag::graphcore::{canonical, enumerate_graphs, expand, pair_count, Graph, OptionalGraph};
use graphflag::shelling::{acyclic_shelling_number, tree_shelling_number};
use graphflag::Word;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        (Just(n), any::<u64>()).prop_map(|(n, bits)| {
            let mask = bits as u128 & ((1u128 << pair_count(n)) - 1);
            Graph::from_mask(n, mask)
        })
    })
}

fn permuted(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

/// Random labelled tree by attaching each vertex to an earlier one.
fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)).prop_map(move |ix| {
            let edges: Vec<(usize, usize)> =
                ix.iter().enumerate().map(|(k, i)| (i.index(k + 1), k + 1)).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_isomorphism_invariant((g, perm) in permuted(8)) {
        let h = g.relabel(&perm);
        let c = canonical(&g).unwrap();
        prop_assert_eq!(canonical(&h).unwrap(), c);
        prop_assert_eq!(canonical(&c).unwrap(), c);
    }

    #[test]
    fn complement_respects_classes((g, perm) in permuted(8)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical(&g.complement()).unwrap(), canonical(&h.complement()).unwrap());
    }

    #[test]
    fn verbose_vector_is_invariant((g, perm) in permuted(6)) {
        prop_assert_eq!(verbose_of_graph(&g).unwrap(), verbose_of_graph(&g.relabel(&perm)).unwrap());
    }

    #[test]
    fn all_a_coefficient_is_n_factorial(g in graph(7)) {
        let v = verbose_of_graph(&g).unwrap();
        prop_assert_eq!(v.coeff(&Word::all_a(g.n())), factorial(g.n()));
    }

    #[test]
    fn expansion_signs(n in 2usize..=6, reg in any::<u64>(), opt in any::<u64>()) {
        let full = (1u128 << pair_count(n)) - 1;
        let opt = opt as u128 & full;
        let reg = reg as u128 & full & !opt;
        let og = OptionalGraph::from_masks(n, reg, opt);
        let sum = expand(&og).unwrap();
        let total: BigInt = sum.terms().map(|(_, c)| c.clone()).sum();
        if opt != 0 {
            prop_assert_eq!(total, BigInt::from(0));
        } else {
            prop_assert_eq!(total, BigInt::from(1));
        }
        // the completion adding every optional edge always has sign +1
        let top = canonical(&Graph::from_mask(n, reg | opt)).unwrap();
        prop_assert!(sum.coeff(&top) >= BigInt::from(1));
    }

    #[test]
    fn tree_shelling_relation(t in tree(8)) {
        let sa = BigInt::from(acyclic_shelling_number(&t).unwrap());
        let s = BigInt::from(tree_shelling_number(&t).unwrap());
        let factor = match t.n() { 1 => 1, 2 => 2, _ => 4 };
        prop_assert_eq!(sa, s * factor);
    }

    #[test]
    fn forests_merge_multinomially(a in tree(4), b in tree(4)) {
        let f = a.disjoint_union(&b);
        let lhs = BigInt::from(acyclic_shelling_number(&f).unwrap());
        let binom = factorial(f.n()) / (factorial(a.n()) * factorial(b.n()));
        let rhs = binom
            * BigInt::from(acyclic_shelling_number(&a).unwrap())
            * BigInt::from(acyclic_shelling_number(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conversions_round_trip(g in graph(7)) {
        let v = verbose_of_graph(&g).unwrap();
        let c = concise_flag_vector(&g).unwrap();
        prop_assert_eq!(verbose_from_concise(&c).unwrap(), v.clone());
        prop_assert_eq!(concise_from_verbose(&v, true).unwrap(), c);
    }

    #[test]
    fn complement_conjugation(g in graph(6)) {
        let v = verbose_of_graph(&g).unwrap();
        prop_assert_eq!(complement_transform(&v).unwrap(), verbose_of_graph(&g.complement()).unwrap());
    }

    #[test]
    fn optional_only_collapse(n in 2usize..=6, bits in any::<u64>()) {
        let opt = bits as u128 & ((1u128 << pair_count(n)) - 1);
        let og = OptionalGraph::from_masks(n, 0, opt);
        let c = concise_flag_vector(&og).unwrap();
        let h = Graph::from_mask(n, opt);
        if h.is_acyclic() {
            let mut s = BigInt::from(1);
            for comp in h.components() {
                let keep = comp;
                s *= BigInt::from(tree_shelling_number(&h.induced(keep)).unwrap());
            }
            let want = ConciseVector::unit(&h.connected_partition()).scale(&s);
            prop_assert_eq!(c, want);
        } else {
            prop_assert!(c.is_zero());
        }
    }
}

#[test]
fn methods_agree_on_all_six_vertex_classes() {
    for g in enumerate_graphs(6).unwrap() {
        assert_eq!(
            verbose_flag_vector(&g, VerboseMethod::Recursion).unwrap(),
            verbose_flag_vector(&g, VerboseMethod::ShellingSum).unwrap(),
            "{g}"
        );
    }
}

#[test]
fn methods_agree_on_random_optional_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 3..=5 {
        for _ in 0..10 {
            let og = random_optional_cycle_graph(&mut rng, n);
            let shelling = verbose_flag_vector(&og, VerboseMethod::ShellingSum).unwrap();
            assert!(shelling.is_zero(), "{og}");
            // the same edges, all regular
            let plain = OptionalGraph::from_masks(n, og.regular().mask() | og.optional().mask(), 0);
            assert_eq!(
                verbose_flag_vector(&plain, VerboseMethod::Recursion).unwrap(),
                verbose_flag_vector(&plain, VerboseMethod::ShellingSum).unwrap()
            );
        }
    }
}
