//! Property suites for the spec-level invariants.

mod common;

use proptest::prelude::*;
use sepsys::chordal::{
    build_clique_tree, chromatic_number, is_chordal, max_weight_independent_set,
    min_weight_vertex_cover, optimal_coloring,
};
use sepsys::gen::{generate_chordal, GeneratorParams};
use sepsys::separating::{
    canonical_color, coloring_cost, design_cost, design_from_assignment, design_to_coloring,
    verify_separating, ColorVector, Coloring,
};
use sepsys::weight::Weight;
use sepsys::WeightedGraph;

fn chordal_graph(max_n: usize) -> impl Strategy<Value = WeightedGraph> {
    (1..=max_n, 1usize..=4, 0u32..=1000, any::<u64>()).prop_map(move |(n, b, dmil, seed)| {
        let b = b.min(n.saturating_sub(1)).max(1);
        let d = b as f64 * dmil as f64 / 1000.0;
        let params = GeneratorParams { n, b, d, pareto_shape: 2.0, seed };
        generate_chordal(&params).expect("valid params")
    })
}

fn with_integer_weights(g: WeightedGraph, seed: u64) -> WeightedGraph {
    let ws = common::integer_weights(g.n(), seed, 50);
    g.with_weights(ws).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn mwis_and_cover_partition_total_weight(g in chordal_graph(24), wseed in any::<u64>()) {
        let g = with_integer_weights(g, wseed);
        let mis = max_weight_independent_set(&g).unwrap();
        let cover = min_weight_vertex_cover(&g).unwrap();
        let mis_w: Weight = mis.iter().map(|&v| g.weight(v)).sum();
        let cover_w: Weight = cover.iter().map(|&v| g.weight(v)).sum();
        prop_assert_eq!(mis_w + &cover_w, g.total_weight());
        // The cover is the complement and covers every edge.
        let mut in_mis = vec![false; g.n()];
        for &v in &mis { in_mis[v] = true; }
        for (u, v) in g.edges() {
            prop_assert!(!(in_mis[u] && in_mis[v]));
        }
        prop_assert_eq!(mis.len() + cover.len(), g.n());
    }

    #[test]
    fn mwis_matches_exhaustive_search(g in chordal_graph(14), wseed in any::<u64>()) {
        let g = with_integer_weights(g, wseed);
        let values = common::oracle_values(&g, 1);
        let expect = common::brute_mwis(&g, &values);
        let got = max_weight_independent_set(&g).unwrap();
        prop_assert_eq!(got, expect);
    }

    #[test]
    fn coloring_is_proper_and_uses_clique_many_colors(g in chordal_graph(10)) {
        let colors = optimal_coloring(&g).unwrap();
        for (u, v) in g.edges() {
            prop_assert_ne!(colors[u], colors[v]);
        }
        let used = colors.iter().max().map_or(0, |&c| c + 1);
        prop_assert_eq!(used, common::brute_chromatic_number(&g));
    }

    #[test]
    fn chordality_matches_chordless_cycle_search(n in 1usize..=9, bits in any::<u64>()) {
        let g = common::arbitrary_graph(n, bits);
        prop_assert_eq!(is_chordal(&g), common::brute_is_chordal(&g));
    }

    #[test]
    fn induced_subgraphs_stay_chordal(g in chordal_graph(24), mask in any::<u32>()) {
        let verts: Vec<usize> = (0..g.n()).filter(|&v| mask >> (v % 32) & 1 == 1).collect();
        let sub = g.induced_subgraph(&verts).unwrap();
        prop_assert!(is_chordal(&sub));
    }

    #[test]
    fn clique_tree_invariants_hold(g in chordal_graph(24)) {
        let tree = build_clique_tree(&g).unwrap();
        prop_assert!(tree.bags.len() <= g.n().max(1));
        for (u, v) in g.edges() {
            prop_assert!(tree.bags.iter().any(|bag|
                bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok()));
        }
        prop_assert!(common::check_running_intersection(&g, &tree));
    }

    #[test]
    fn clique_tree_bags_are_the_maximal_cliques(g in chordal_graph(10)) {
        let tree = build_clique_tree(&g).unwrap();
        let mut bags = tree.bags.clone();
        bags.sort();
        prop_assert_eq!(bags, common::brute_maximal_cliques(&g));
    }

    #[test]
    fn design_round_trip_and_costs(
        g in chordal_graph(16),
        m in 1u32..=5,
        color_seed in any::<u64>(),
        wseed in any::<u64>(),
    ) {
        let g = with_integer_weights(g, wseed);
        // Arbitrary assignment, proper or not.
        let mut state = color_seed;
        let assignment: Vec<ColorVector> = (0..g.n()).map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ColorVector::new(m, (state >> 32) & ((1 << m) - 1))
        }).collect();
        let c = Coloring::new(m, assignment);
        let d = design_from_assignment(&c);
        // Round trip is exact.
        prop_assert_eq!(&design_to_coloring(&d, g.n()), &c);
        // Separating iff proper.
        prop_assert_eq!(verify_separating(&g, &d), c.is_proper(&g));
        // Cost equality holds with multiplicity.
        prop_assert_eq!(coloring_cost(&g, &c), design_cost(&g, &d));
    }

    #[test]
    fn separating_design_uses_at_most_two_to_the_m_colors(
        g in chordal_graph(16),
        m in 1u32..=5,
        color_seed in any::<u64>(),
    ) {
        let mut state = color_seed;
        let assignment: Vec<ColorVector> = (0..g.n()).map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ColorVector::new(m, (state >> 32) & ((1 << m) - 1))
        }).collect();
        let c = Coloring::new(m, assignment);
        let d = design_from_assignment(&c);
        let induced = design_to_coloring(&d, g.n());
        prop_assert!(induced.distinct_colors() as u128 <= 1u128 << m);
    }

    #[test]
    fn greedy_output_separates(g in chordal_graph(30), quantize in any::<bool>()) {
        let chi = chromatic_number(&g).unwrap();
        let m = sepsys::greedy::termination_threshold(g.n(), chi);
        let (design, trace) = sepsys::greedy::greedy_min_cost_design(&g, m, quantize).unwrap();
        prop_assert!(verify_separating(&g, &design));
        prop_assert_eq!(trace.rounds.iter().map(|r| r.vertices.len()).sum::<usize>(), g.n());
        // Round sets are disjoint independent sets.
        for round in &trace.rounds {
            for (i, &u) in round.vertices.iter().enumerate() {
                for &v in &round.vertices[i + 1..] {
                    prop_assert!(!g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn ksparse_outputs_respect_proposition_2(
        g in chordal_graph(30),
        k in 1usize..=4,
        lambda_num in 0u32..=40,
    ) {
        let lb = sepsys::ksparse::ksparse_lower_bound(&g, k).unwrap();
        let d2 = sepsys::ksparse::min_size_ksparse_design(&g, k).unwrap();
        prop_assert!(verify_separating(&g, &d2));
        prop_assert!(d2.is_k_sparse(k));
        prop_assert!(d2.size() >= lb);
        prop_assert!(d2.size() <= lb + g.max_degree() + 1);
        let lambda = num_rational::BigRational::new(lambda_num.into(), 8.into());
        let w = sepsys::ksparse::weighted_ksparse_design(&g, k, &lambda).unwrap();
        prop_assert!(verify_separating(&g, &w.design));
        prop_assert!(w.design.is_k_sparse(k));
        prop_assert!(w.size >= lb);
    }
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<WeightedGraph>();
    assert_send_sync::<Weight>();
    assert_send_sync::<Coloring>();
    assert_send_sync::<sepsys::InterventionDesign>();
    assert_send_sync::<sepsys::CliqueTree>();
    // Concurrent solves on a shared graph are deterministic.
    let g = std::sync::Arc::new(
        generate_chordal(&GeneratorParams { n: 40, b: 3, d: 1.5, pareto_shape: 2.0, seed: 5 })
            .unwrap(),
    );
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let g = g.clone();
            std::thread::spawn(move || {
                sepsys::greedy::greedy_min_cost_design(&g, 6, true).unwrap().0
            })
        })
        .collect();
    let designs: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert!(designs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn canonical_color_order_is_a_bijection_for_small_m() {
    for m in 0..=10u32 {
        let mut seen = std::collections::HashSet::new();
        let mut prev: Option<(u32, u64)> = None;
        for rank in 0..(1u128 << m) {
            let c = canonical_color(m, rank).unwrap();
            let key = (c.hamming_weight(), c.bits());
            if let Some(p) = prev {
                assert!(p < key, "canonical order not strictly increasing at m={m}");
            }
            prev = Some(key);
            assert!(seen.insert(c.bits()));
        }
        assert_eq!(seen.len(), 1 << m);
    }
}
