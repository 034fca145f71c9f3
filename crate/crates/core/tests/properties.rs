use extendix::connectivity;
use extendix::correspondence;
use extendix::format::{self, Instance};
use extendix::graph::{BipartiteGraph, Digraph, Edge, ZeroOneMatrix};
use extendix::matching;
use extendix::matrix;
use proptest::prelude::*;

fn bipartite() -> impl Strategy<Value = BipartiteGraph> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let edges = (0..n * n).filter(|&i| bits[i]).map(|i| Edge::new(i / n, i % n));
            BipartiteGraph::new(n, edges).unwrap()
        })
    })
}

fn with_canonical_pm() -> impl Strategy<Value = BipartiteGraph> {
    bipartite().prop_map(|g| {
        let n = g.n();
        (0..n).fold(g, |g, i| g.with_edge(Edge::new(i, i)))
    })
}

fn digraph() -> impl Strategy<Value = Digraph> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n * n).filter(|&i| bits[i] && i / n != i % n).map(|i| (i / n, i % n));
            Digraph::loop_free(n, arcs).unwrap()
        })
    })
}

fn zero_one() -> impl Strategy<Value = ZeroOneMatrix> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| ZeroOneMatrix::from_fn(n, |i, j| bits[i * n + j]))
    })
}

proptest! {
    #[test]
    fn text_format_round_trips(g in bipartite(), d in digraph(), a in zero_one()) {
        for inst in [Instance::Bipartite(g), Instance::Digraph(d), Instance::Matrix(a)] {
            let text = format::write_instance(&inst);
            prop_assert_eq!(format::parse(&text).unwrap(), inst);
        }
    }

    #[test]
    fn digraph_and_bipartite_graph_round_trip(d in digraph()) {
        let (g, m, _) = correspondence::bipartite_of_digraph(&d).unwrap();
        let (back, map) = correspondence::digraph_of(&g, &m).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert!(map.verify(&g, &back));
    }

    #[test]
    fn graph_to_digraph_and_back_under_the_matching(g in with_canonical_pm()) {
        let m = matching::Matching::canonical(g.n());
        let (d, _) = correspondence::digraph_of(&g, &m).unwrap();
        let (h, _, _) = correspondence::bipartite_of_digraph(&d).unwrap();
        prop_assert_eq!(h, g.clone());
        prop_assert_eq!(correspondence::digraph_of_via_matrix(&g, &m).unwrap(), d);
    }

    #[test]
    fn any_matching_gives_the_same_strong_verdict(g in with_canonical_pm()) {
        let verdicts: Vec<bool> = matching::enumerate_perfect_matchings(&g)
            .take(20)
            .map(|m| connectivity::is_strong(&correspondence::digraph_of(&g, &m).unwrap().0))
            .collect();
        prop_assert!(verdicts.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn loops_do_not_change_strong_connectivity(d in digraph(), at in prop::collection::vec(0usize..6, 0..4)) {
        let at: Vec<usize> = at.into_iter().filter(|&v| v < d.n()).collect();
        let looped = d.with_loops(at);
        for k in 1..=d.n() {
            prop_assert_eq!(connectivity::is_k_strong(&looped, k).holds, connectivity::is_k_strong(&d, k).holds);
        }
        prop_assert_eq!(connectivity::vertex_connectivity(&looped), connectivity::vertex_connectivity(&d));
    }

    #[test]
    fn matrix_and_graph_agree_on_matchings(a in zero_one()) {
        let g = correspondence::bipartite_of_matrix(&a);
        prop_assert_eq!(correspondence::reduced_adjacency(&g), a.clone());
        let count = matching::count_perfect_matchings(&g).unwrap();
        prop_assert_eq!(matrix::count_nonzero_diagonals(&a), Some(count));
    }
}
