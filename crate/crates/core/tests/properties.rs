mod common;

use common::{brute_class_count, brute_family, brute_gamma, brute_influence, Matrix};
use pdom_core::conjecture::{canonical_form, enumerate_connected_graphs, enumerate_graphs};
use pdom_core::formulas::influencing_lemma_findings;
use pdom_core::generators::*;
use pdom_core::locating::{greedy_high_degree, lemma_findings};
use pdom_core::{
    all_gamma_p_sets, gamma_p, influencing_set, is_p_dominating, Graph, Proportion, VertexSet,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges = pairs.zip(bits).filter_map(|(e, b)| b.then_some(e));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn as_lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.iter().collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn solver_matches_brute_force(g in arb_graph(8)) {
        let n = g.order() as u64;
        for k in 0..=n {
            let p = Proportion::new(k, n).unwrap();
            let fam = all_gamma_p_sets(&g, p);
            let (size, sets) = brute_family(&g, k, n);
            prop_assert_eq!(gamma_p(&g, p).gamma_p, size);
            prop_assert_eq!(fam.size, size);
            prop_assert_eq!(as_lists(&fam.sets), sets.clone());
            prop_assert_eq!(gamma_p(&g, p).witness.iter().collect::<Vec<_>>(), sets[0].clone());
        }
    }

    #[test]
    fn gamma_p_monotone_in_p(g in arb_graph(8)) {
        let n = g.order();
        let values: Vec<usize> = (0..=n)
            .map(|k| gamma_p(&g, Proportion::of_order(k, n).unwrap()).gamma_p)
            .collect();
        prop_assert!(values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn witness_is_p_dominating(g in arb_graph(12), k in 0usize..=12) {
        let n = g.order();
        let p = Proportion::of_order(k.min(n), n).unwrap();
        let r = gamma_p(&g, p);
        prop_assert!(is_p_dominating(&g, r.witness, p));
        prop_assert_eq!(r.witness.len(), r.gamma_p);
        let greedy = greedy_high_degree(&g, p);
        prop_assert!(is_p_dominating(&g, greedy, p));
        prop_assert!(greedy.len() >= r.gamma_p);
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(7), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&g.relabel(&perm).unwrap()).0, canonical_form(&g).0);
    }
}

#[test]
fn influencing_lemmas_on_small_graphs() {
    for g in enumerate_graphs(7, false).unwrap() {
        let m = Matrix::of(&g);
        let n = g.order();
        // Lemma checks implemented by the crate.
        let found = influencing_lemma_findings(&g);
        assert!(found.is_empty(), "{found:?}");
        // Independent spot check of the max-degree threshold.
        if n <= 6 {
            let max = (0..n).map(|v| m.degree(v)).max().unwrap();
            let tops: Vec<usize> = (0..n).filter(|&v| m.degree(v) == max).collect();
            assert_eq!(brute_influence(&g, max as u64 + 1, n as u64), tops);
        }
    }
}

#[test]
fn influencing_full_at_low_p() {
    for g in enumerate_connected_graphs(7).unwrap() {
        let n = g.order();
        for k in 1..=2.min(n) {
            assert_eq!(
                influencing_set(&g, Proportion::of_order(k, n).unwrap()),
                g.vertices()
            );
        }
    }
}

#[test]
fn enumeration_matches_brute_recount() {
    let connected = enumerate_connected_graphs(6).unwrap();
    let all = enumerate_graphs(6, false).unwrap();
    for n in 1..=6 {
        let c = connected.iter().filter(|g| g.order() == n).count();
        let a = all.iter().filter(|g| g.order() == n).count();
        assert_eq!(c, brute_class_count(n, true), "connected, n={n}");
        assert_eq!(a, brute_class_count(n, false), "all, n={n}");
    }
}

#[test]
fn enumeration_is_duplicate_free() {
    let graphs = enumerate_connected_graphs(7).unwrap();
    let mut codes: Vec<(usize, u64)> = graphs
        .iter()
        .map(|g| (g.order(), canonical_form(g).0))
        .collect();
    let before = codes.len();
    codes.sort();
    codes.dedup();
    assert_eq!(codes.len(), before);
    assert!(graphs.iter().all(|g| g.is_connected()));
    // Connected graphs on 1..=7 vertices: 1, 1, 2, 6, 21, 112, 853.
    let counts: Vec<usize> = (1..=7)
        .map(|n| graphs.iter().filter(|g| g.order() == n).count())
        .collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn greedy_valid_on_connected_graphs() {
    for g in enumerate_connected_graphs(7).unwrap() {
        let n = g.order();
        for k in 1..=n {
            let p = Proportion::of_order(k, n).unwrap();
            assert!(is_p_dominating(&g, greedy_high_degree(&g, p), p));
        }
    }
}

#[test]
fn locating_lemmas_on_connected_graphs() {
    for g in enumerate_connected_graphs(6).unwrap() {
        let found = lemma_findings(&g);
        assert!(found.is_empty(), "{found:?}");
    }
}

#[test]
fn fixture_values_match_brute_force() {
    assert_eq!(brute_gamma(&subdivided_star(8).unwrap(), 1, 1), 8);
    assert_eq!(brute_gamma(&path(6).unwrap(), 1, 1), 2);
    let (size, sets) = brute_family(&figure4_tree(), 9, 11);
    assert_eq!((size, sets), (2, vec![vec![2, 3]]));
    let (size, sets) = brute_family(&figure2_graph(), 8, 9);
    assert_eq!((size, sets), (2, vec![vec![5, 6]]));
    let (_, sets) = brute_family(&figure3_graph(), 7, 9);
    assert_eq!(sets.len(), 10);
    let k3 = complete(3)
        .unwrap()
        .cartesian_product(&complete(3).unwrap())
        .unwrap();
    assert_eq!(brute_gamma(&k3, 1, 2), 1);
}

#[test]
fn product_bound_fails_at_four_fifths() {
    let c4 = cycle(4).unwrap();
    for g in [path(4).unwrap(), c4.clone()] {
        let product = g.cartesian_product(&c4).unwrap();
        assert_eq!(brute_gamma(&g, 4, 5), 2);
        assert_eq!(brute_gamma(&c4, 4, 5), 2);
        assert_eq!(brute_gamma(&product, 4, 5), 3);
        let report = pdom_core::conjecture::check_product_inequality(
            &g,
            &c4,
            Proportion::new(4, 5).unwrap(),
        )
        .unwrap();
        assert!(!report.holds && report.is_consistent());
        let witness: Vec<usize> = report.witness.unwrap().iter().collect();
        assert!(Matrix::of(&product).covered(&witness) >= 13);
    }
}
