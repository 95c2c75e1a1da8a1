use proptest::prelude::*;
use rlgraphs::analyzers::{
    canonical_form, clique_number, enumerate_classes, has_induced, has_induced_with, independence_number, is_l_universal,
    is_l_universal_with,
};
use rlgraphs::constructions::{five_cycle, gnp, iterated_blowup, random_graph, Seed};
use rlgraphs::{Exec, Graph, Permutation};

/// Size of the largest clique, by extending every clique in index order.
fn max_clique_exhaustive(g: &Graph) -> usize {
    fn grow(g: &Graph, clique: &mut Vec<usize>, from: usize, best: &mut usize) {
        *best = (*best).max(clique.len());
        for v in from..g.order() {
            if clique.iter().all(|&u| g.adjacent(u, v)) {
                clique.push(v);
                grow(g, clique, v + 1, best);
                clique.pop();
            }
        }
    }
    let mut best = 0;
    grow(g, &mut vec![], 0, &mut best);
    best
}

fn is_clique(g: &Graph, members: &[usize]) -> bool {
    members.iter().enumerate().all(|(i, &u)| members[i + 1..].iter().all(|&v| g.adjacent(u, v)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn clique_search_matches_exhaustive(n in 0usize..=40, p in 0.1f64..0.9, s in any::<u64>()) {
        let g = gnp(n, p, Seed(s)).unwrap();
        let r = clique_number(&g).unwrap();
        prop_assert!(r.exact);
        prop_assert_eq!(r.size, max_clique_exhaustive(&g));
        prop_assert_eq!(r.witness.len(), r.size);
        prop_assert!(is_clique(&g, r.witness.members()));
    }

    #[test]
    fn independence_is_clique_of_complement(n in 0usize..=60, p in 0.1f64..0.9, s in any::<u64>()) {
        let g = gnp(n, p, Seed(s)).unwrap();
        let a = independence_number(&g).unwrap();
        prop_assert_eq!(a.size, clique_number(&g.complement()).unwrap().size);
        prop_assert!(is_clique(&g.complement(), a.witness.members()));
    }

    #[test]
    fn canonical_form_ignores_labels(n in 1usize..=7, s in any::<u64>(), shuffle in any::<u64>()) {
        let g = random_graph(n, Seed(s)).unwrap();
        let mut image: Vec<usize> = (0..n).collect();
        let mut x = shuffle;
        for i in (1..n).rev() {
            image.swap(i, (x % (i as u64 + 1)) as usize);
            x = x.rotate_left(17).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        }
        let h = g.permuted(&Permutation::new(image).unwrap()).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn universality_is_thread_independent(n in 5usize..=30, s in any::<u64>(), k in 3usize..=5) {
        let g = random_graph(n, Seed(s)).unwrap();
        prop_assert_eq!(is_l_universal_with(&g, k, Exec::Sequential).unwrap(), is_l_universal_with(&g, k, Exec::Parallel).unwrap());
    }
}

#[test]
fn every_class_contains_itself_and_nothing_larger_is_universal() {
    for order in 1..=5 {
        let table = enumerate_classes(order).unwrap();
        for code in &table.codes {
            let h = code.to_graph();
            assert!(has_induced(&h, &h).unwrap().is_some(), "{}", code.graph6());
            let report = is_l_universal(&h, order).unwrap();
            assert_eq!(report.verdict, table.len() == 1, "{}", code.graph6());
            assert_eq!(report.present.len() + report.missing.len(), table.len());
        }
    }
}

#[test]
fn random_graph_on_64_vertices_is_4_universal() {
    let g = random_graph(64, Seed(5)).unwrap();
    let report = is_l_universal(&g, 4).unwrap();
    assert!(report.verdict, "missing {:?}", report.missing);
}

#[test]
fn witnesses_do_not_depend_on_threads() {
    let g = iterated_blowup(2).unwrap();
    let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let a = has_induced_with(&g, &p4, Exec::Sequential).unwrap();
    let b = has_induced_with(&g, &p4, Exec::Parallel).unwrap();
    assert_eq!(a, b);
    assert!(has_induced(&five_cycle(), &p4).unwrap().is_some());
}

#[test]
fn blowup_level_two_misses_p5() {
    let p5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    let g = iterated_blowup(2).unwrap();
    assert!(has_induced(&g, &p5).unwrap().is_none());
    let report = is_l_universal(&g, 5).unwrap();
    assert!(!report.verdict && report.is_missing(&p5));
}

#[test]
fn complete_graph_is_not_2_universal() {
    let report = is_l_universal(&Graph::complete(10).unwrap(), 2).unwrap();
    assert!(!report.verdict);
    assert_eq!(report.missing.len(), 1);
    assert_eq!(report.missing[0].graph6, "A?");
}
