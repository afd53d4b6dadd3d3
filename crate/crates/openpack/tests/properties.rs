//! Property-based tests: format round trips, checker agreement, duality,
//! and reduction guarantees on arbitrary small instances.

use openpack::certify;
use openpack::graph::Graph;
use openpack::io;
use openpack::oracle;
use openpack::recognize;
use openpack::reductions;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |flags| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if flags[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).expect("generated edges are valid")
        })
    })
}

proptest! {
    #[test]
    fn graph_format_round_trips(g in arb_graph(12)) {
        let text = io::serialize_graph(&g);
        let back = io::parse_graph(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
        // canonical form is a fixed point
        prop_assert_eq!(io::serialize_graph(&back), text);
    }

    #[test]
    fn fast_checker_agrees_with_naive(g in arb_graph(8), mask in any::<u8>()) {
        let s: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let fast = certify::is_open_packing_fast(&g, &s).unwrap();
        let naive = certify::is_open_packing_naive(&g, &s).unwrap();
        prop_assert_eq!(fast.valid, naive.valid);
    }

    #[test]
    fn duality_holds(g in arb_graph(7)) {
        prop_assume!(!g.has_isolated_vertex());
        let rho = oracle::max_open_packing_bf(&g).unwrap().len();
        let gt = oracle::min_total_dominating_bf(&g).unwrap().len();
        prop_assert!(rho <= gt);
    }

    #[test]
    fn neighborhood_graph_equivalence(g in arb_graph(7), mask in any::<u8>()) {
        let s: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let ng = recognize::neighborhood_graph(&g);
        let packing = certify::is_open_packing_fast(&g, &s).unwrap().valid;
        let independent = certify::is_independent_set(&ng, &s).unwrap().valid;
        prop_assert_eq!(packing, independent);
    }

    #[test]
    fn construction1_preserves_independence_number(g in arb_graph(6)) {
        let inst = reductions::construct1(&g);
        let alpha = oracle::max_independent_set_bf(&g).unwrap().len();
        let rho = oracle::max_open_packing_bf(&inst.graph).unwrap().len();
        prop_assert_eq!(rho, alpha);
    }

    #[test]
    fn split_recognition_is_sound(g in arb_graph(9)) {
        if let Some(part) = recognize::split_partition(&g) {
            prop_assert!(part.is_valid(&g));
        }
    }
}
