use proptest::prelude::*;
use rlgraphs::graph::{circulant, graph6, CirculantParam};
use rlgraphs::{Graph, Permutation};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = vec![];
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in (1usize..=100).prop_flat_map(|n| arb_graph(n).prop_filter("order", move |g| g.order() == n))) {
        let text = graph6::encode(&g);
        prop_assert!(text.iter().all(|&b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph(70)) {
        let c = g.complement();
        prop_assert!(c.check_invariants());
        prop_assert_eq!(c.edge_count(), g.non_edge_count());
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn degree_sum_is_twice_the_edges(g in arb_graph(70)) {
        let sum: usize = g.degrees().iter().sum();
        prop_assert_eq!(sum as u64, 2 * g.edge_count());
        prop_assert_eq!(g.edges().count() as u64, g.edge_count());
    }

    #[test]
    fn codegree_partitions_the_neighbourhood(g in arb_graph(40), a in any::<usize>(), b in any::<usize>()) {
        prop_assume!(g.order() >= 2);
        let n = g.order();
        let (u, v) = (a % n, b % n);
        prop_assume!(u != v);
        let d = g.degree(u).unwrap();
        // N(u) \ N(v) contains v itself when u ~ v
        prop_assert_eq!(g.codegree(u, v).unwrap() + g.codegree_minus(u, v).unwrap(), d);
        prop_assert_eq!(g.codegree(u, v).unwrap(), g.codegree(v, u).unwrap());
    }

    #[test]
    fn circulants_are_regular(k in 1usize..=500, num in 1u64..40, den in 1u64..8) {
        let r = CirculantParam::ratio(num, den).unwrap();
        let g = circulant(k, r).unwrap();
        let degrees = g.degrees();
        prop_assert!(degrees.iter().all(|&d| d == degrees[0]));
        // every rotation is an automorphism
        let shift = Permutation::new((0..k).map(|i| (i + 1) % k).collect()).unwrap();
        prop_assert_eq!(g.permuted(&shift).unwrap(), g);
    }

    #[test]
    fn induced_subgraphs_restrict_adjacency(g in arb_graph(30), mask in any::<u32>()) {
        let members: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
        let set = rlgraphs::VertexSet::new(members.clone(), g.order()).unwrap();
        let h = g.induced(&set).unwrap();
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate() {
                if i != j {
                    prop_assert_eq!(h.adjacent(i, j), g.adjacent(u, v));
                }
            }
        }
    }
}

#[test]
fn optimal_circulant_threshold_matches_the_decimal_expansion() {
    let r = CirculantParam::OPTIMAL;
    let digits: f64 = rlgraphs::graph::OPTIMAL_R_DIGITS.parse().unwrap();
    assert!((r.to_f64() - digits).abs() < 1e-14);
    assert_eq!(r.ceil(), 10);
}
