mod common;

use netmorph::community::{
    community_sizes, edge_betweenness, girvan_newman, louvain, modularity, GnOptions, GnTarget, Partition,
    DEFAULT_MIN_GAIN,
};
use netmorph::generators::{generate, GenSpec};
use netmorph::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn bell_numbers() {
    for (n, bell) in [(0, 1), (1, 1), (3, 5), (6, 203), (8, 4140)] {
        let mut count = 0;
        common::for_each_set_partition(n, |_| count += 1);
        assert_eq!(count, bell);
    }
}

#[test]
fn two_triangles_optimum() {
    let g = common::two_triangles();
    let (best, labels) = common::brute_force_max_modularity(&g);
    assert!((best - 5.0 / 14.0).abs() < 1e-15);
    assert_eq!(labels, vec![0, 0, 0, 1, 1, 1]);
    let p = louvain(&g, 0, DEFAULT_MIN_GAIN).unwrap();
    assert_eq!(modularity(&g, &p).unwrap(), 5.0 / 14.0);
}

#[test]
fn modularity_hand_values() {
    let tri = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)], false).unwrap();
    let q = modularity(&tri, &Partition::singletons(&tri)).unwrap();
    assert!((q + 1.0 / 3.0).abs() < 1e-15);
    assert_eq!(modularity(&tri, &Partition::whole(&tri)).unwrap(), 0.0);
}

#[test]
fn random_bisection_has_no_structure() {
    let mut total = 0.0;
    for seed in 0..10 {
        let g = generate(&GenSpec::erdos_renyi(1000, 0.01, seed)).unwrap().graph;
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let labels: Vec<usize> = (0..1000).map(|_| rng.random_range(0..2)).collect();
        total += modularity(&g, &Partition::new(&g, &labels).unwrap()).unwrap();
    }
    assert!((total / 10.0).abs() < 0.05, "{}", total / 10.0);
}

#[test]
fn betweenness_matches_enumeration_on_dense_graphs() {
    for seed in 0..5 {
        let g = common::coin_flip_graph(12, 0.5, seed);
        let fast = edge_betweenness(&g);
        let slow = common::betweenness_by_enumeration(&g);
        for ((u, v), s) in fast.iter() {
            assert!((s - slow[&(u, v)]).abs() < 1e-9);
        }
    }
}

#[test]
fn directed_input_is_symmetrized() {
    let d = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (3, 2)], true).unwrap();
    let p = louvain(&d, 1, DEFAULT_MIN_GAIN).unwrap();
    assert_eq!(p.assignment(), &[0, 0, 0, 1, 1, 1]);
    assert_eq!(modularity(&d, &p).unwrap(), 5.0 / 14.0);
}

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 1..3 * n)))
        .prop_map(|(n, e)| Graph::from_edges(n, e, false).unwrap())
        .prop_filter("needs an edge", |g| g.edge_count() > 0)
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0.0..0.6f64, any::<u64>()).prop_map(|(n, p, seed)| common::connected_graph(n, p, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn betweenness_matches_enumeration(g in small_graph(14)) {
        let fast = edge_betweenness(&g);
        let slow = common::betweenness_by_enumeration(&g);
        prop_assert_eq!(fast.len(), slow.len());
        for ((u, v), s) in fast.iter() {
            prop_assert!((s - slow[&(u, v)]).abs() < 1e-9);
        }
    }

    #[test]
    fn betweenness_sums_to_path_lengths(g in small_graph(20)) {
        let total: f64 = edge_betweenness(&g).scores().iter().sum();
        prop_assert!((total - common::total_pair_distance(&g)).abs() < 1e-9);
    }

    #[test]
    fn modularity_matches_matrix_form(g in small_graph(12), labels in prop::collection::vec(0usize..4, 12)) {
        let labels = &labels[..g.node_count()];
        let q = modularity(&g, &Partition::new(&g, labels).unwrap()).unwrap();
        prop_assert!((q - common::modularity_matrix_form(&g, labels)).abs() < 1e-12);
    }

    #[test]
    fn heuristics_never_beat_exhaustive_search(g in connected(7), seed in any::<u64>()) {
        let (best, _) = common::brute_force_max_modularity(&g);
        let lq = modularity(&g, &louvain(&g, seed, DEFAULT_MIN_GAIN).unwrap()).unwrap();
        prop_assert!(lq >= 0.0);
        prop_assert!(lq <= best + 1e-12);
        let gn = girvan_newman(&g, GnTarget::MaxQ, GnOptions::default()).unwrap();
        prop_assert!(gn.modularity <= best + 1e-12);
        prop_assert_eq!(gn.modularity, modularity(&g, &gn.partition).unwrap());
    }

    #[test]
    fn girvan_newman_dendrogram_refines(g in small_graph(14)) {
        let gn = girvan_newman(&g, GnTarget::MaxQ, GnOptions::default()).unwrap();
        prop_assert_eq!(gn.dendrogram.len(), g.edge_count());
        let mut remaining: Vec<(usize, usize)> = g.edges().collect();
        let mut previous = Partition::components(&g);
        for step in &gn.dendrogram {
            remaining.retain(|&e| e != step.removed_edge);
            let h = Graph::from_edges(g.node_count(), remaining.iter().copied(), false).unwrap();
            let current = Partition::components(&h);
            prop_assert!(current.refines(&previous));
            prop_assert_eq!(current.community_count(), step.num_components);
            prop_assert!((modularity(&g, &Partition::new(&g, current.assignment()).unwrap()).unwrap() - step.modularity).abs() < 1e-12);
            previous = current;
        }
    }

    #[test]
    fn relabeling_changes_nothing(g in small_graph(16), labels in prop::collection::vec(0usize..5, 16), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let n = g.node_count();
        let labels = &labels[..n];
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm).unwrap();
        let mut moved = vec![0; n];
        for v in 0..n {
            moved[perm[v]] = labels[v];
        }
        let p = Partition::new(&g, labels).unwrap();
        let p2 = Partition::new(&h, &moved).unwrap();
        prop_assert!((modularity(&g, &p).unwrap() - modularity(&h, &p2).unwrap()).abs() < 1e-12);
        prop_assert_eq!(community_sizes(&p).histogram, community_sizes(&p2).histogram);
    }

    #[test]
    fn louvain_is_seed_deterministic(g in small_graph(30), seed in any::<u64>()) {
        prop_assert_eq!(louvain(&g, seed, DEFAULT_MIN_GAIN).unwrap(), louvain(&g, seed, DEFAULT_MIN_GAIN).unwrap());
    }
}
