//! Invariants checked against brute-force oracles and structural identities.

mod common;

use proptest::prelude::*;

use ramsey_goodness::enumeration::{collect, GenerationFilter};
use ramsey_goodness::invariants::{
    circumference, connectivity, cycle_spectrum, find_k2n, girth, has_cycle_of_length,
    independence_number, is_hamiltonian, is_two_connected, k2n_free, longest_cycle,
    max_common_neighborhood,
};
use ramsey_goodness::Graph;

fn arbitrary_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|order| {
        let pairs = common::pairs(order);
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = pairs.iter().zip(&bits).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
            Graph::from_edges(order, &edges).expect("valid edges")
        })
    })
}

fn small_graphs(max_order: usize) -> impl Iterator<Item = Graph> {
    (1..=max_order).flat_map(|order| collect(order, &GenerationFilter::All))
}

#[test]
fn k2n_free_matches_embedding_oracle() {
    for g in small_graphs(7) {
        for n in 1..=3 {
            assert_eq!(k2n_free(&g, n), !common::contains_k2n_brute(&g, n), "{g:?}, n={n}");
            match find_k2n(&g, n) {
                Some(w) => assert!(w.validate(&g), "{g:?}: invalid witness {w:?}"),
                None => assert!(k2n_free(&g, n)),
            }
        }
    }
}

#[test]
fn cycle_invariants_match_brute_force() {
    for g in small_graphs(7) {
        let lengths = common::cycle_lengths_brute(&g);
        assert_eq!(cycle_spectrum(&g).into_iter().collect::<Vec<_>>(), lengths, "{g:?}");
        assert_eq!(girth(&g), lengths.first().copied(), "{g:?}");
        assert_eq!(circumference(&g), lengths.last().copied().unwrap_or(0), "{g:?}");
        for len in 3..=g.order() {
            let witness = has_cycle_of_length(&g, len).expect("length in range");
            assert_eq!(witness.is_some(), lengths.contains(&len), "{g:?}, length {len}");
            if let Some(w) = witness {
                assert!(w.validate(&g) && w.size() == len, "{g:?}: bad witness {w:?}");
            }
        }
        match longest_cycle(&g) {
            Some(cycle) => assert_eq!(cycle.len(), circumference(&g)),
            None => assert!(lengths.is_empty()),
        }
        if g.order() >= 3 {
            assert_eq!(is_hamiltonian(&g).expect("order ≥ 3").is_some(), lengths.contains(&g.order()), "{g:?}");
        } else {
            assert!(is_hamiltonian(&g).is_err());
        }
    }
}

#[test]
fn girth_never_exceeds_circumference() {
    for g in small_graphs(8) {
        if let Some(short) = girth(&g) {
            assert!(short <= circumference(&g), "{g:?}");
        }
    }
}

#[test]
fn connectivity_matches_vertex_deletion_oracle() {
    for g in small_graphs(6) {
        assert_eq!(connectivity(&g), common::connectivity_brute(&g), "{g:?}");
        assert_eq!(is_two_connected(&g), common::is_k_connected_brute(&g, 2), "{g:?}");
    }
}

#[test]
fn connectivity_of_cycles_and_complete_graphs() {
    for n in 3..=10 {
        assert_eq!(connectivity(&Graph::cycle(n).unwrap()), 2, "C_{n}");
        assert_eq!(connectivity(&Graph::complete(n).unwrap()), n - 1, "K_{n}");
        assert_eq!(connectivity(&Graph::path(n).unwrap()), 1, "P_{n}");
    }
}

#[test]
fn independence_number_matches_subset_oracle() {
    for g in small_graphs(7) {
        let n = g.order();
        let brute = (0..1u32 << n)
            .filter(|&s| common::pairs(n).iter().all(|&(i, j)| s >> i & 1 == 0 || s >> j & 1 == 0 || !g.has_edge(i, j)))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0);
        assert_eq!(independence_number(&g), brute, "{g:?}");
    }
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arbitrary_graph(20)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let n = g.order();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn adjacency_is_symmetric_and_loopless(g in arbitrary_graph(20)) {
        for u in 0..g.order() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.order() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn common_and_union_neighbourhoods_are_consistent(g in arbitrary_graph(16)) {
        for (u, v) in common::pairs(g.order()) {
            let common_count = g.common_neighbors(u, v).unwrap().len();
            let mut union = g.neighbors(u) | g.neighbors(v);
            union = union - [u, v].into_iter().collect();
            let own = |x: usize, other: usize| g.degree(x) - usize::from(g.has_edge(x, other));
            // inclusion–exclusion, excluding the pair itself
            prop_assert_eq!(union.len(), own(u, v) + own(v, u) - common_count);
            prop_assert_eq!(g.union_neighborhood_excl(u, v).unwrap(), union.len());
        }
    }

    #[test]
    fn max_common_neighbourhood_decides_k2n_freeness(g in arbitrary_graph(14), n in 1usize..6) {
        prop_assert_eq!(k2n_free(&g, n), max_common_neighborhood(&g) < n);
    }

    #[test]
    fn longest_cycle_is_a_cycle_of_the_graph(g in arbitrary_graph(14)) {
        if let Some(cycle) = longest_cycle(&g) {
            let len = cycle.len();
            prop_assert_eq!(len, circumference(&g));
            for i in 0..len {
                prop_assert!(g.has_edge(cycle[i], cycle[(i + 1) % len]));
            }
            let mut sorted = cycle.clone();
            sorted.sort_unstable();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), len);
        }
    }
}
