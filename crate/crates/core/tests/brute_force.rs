//! Library answers against exhaustive enumeration on small instances.

use extendix::connectivity;
use extendix::generate;
use extendix::graph::{BipartiteGraph, Digraph, Edge};
use extendix::matching::{self, EdgeTag};

fn all_bipartite(n: usize) -> impl Iterator<Item = BipartiteGraph> {
    (0u32..1 << (n * n)).map(move |m| {
        BipartiteGraph::new(n, (0..n * n).filter(|b| m >> b & 1 == 1).map(|b| Edge::new(b / n, b % n))).unwrap()
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn matchings_by_permutation(g: &BipartiteGraph) -> Vec<Vec<usize>> {
    permutations(g.n()).into_iter().filter(|p| p.iter().enumerate().all(|(u, &w)| g.has_edge(Edge::new(u, w)))).collect()
}

fn strong_without(d: &Digraph, gone: u32) -> bool {
    let alive: Vec<usize> = (0..d.n()).filter(|v| gone >> v & 1 == 0).collect();
    let Some(&s) = alive.first() else { return false };
    let reach = |forward: bool| {
        let mut seen = 1u32 << s;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for x in 0..d.n() {
                let arc = if forward { d.has_arc(v, x) } else { d.has_arc(x, v) };
                if arc && gone >> x & 1 == 0 && seen >> x & 1 == 0 {
                    seen |= 1 << x;
                    stack.push(x);
                }
            }
        }
        seen.count_ones() as usize == alive.len()
    };
    reach(true) && reach(false)
}

#[test]
fn perfect_matching_counts_match_permutation_enumeration() {
    for n in 1..=3 {
        for g in all_bipartite(n) {
            let expected = matchings_by_permutation(&g).len();
            assert_eq!(matching::count_perfect_matchings(&g).unwrap() as usize, expected);
            assert_eq!(matching::enumerate_perfect_matchings(&g).count(), expected);
            assert_eq!(matching::has_perfect_matching(&g), expected > 0);
        }
    }
}

#[test]
fn edge_classes_match_permutation_enumeration() {
    for n in 1..=3 {
        for g in all_bipartite(n) {
            let pms = matchings_by_permutation(&g);
            let Ok(classes) = matching::classify_edges(&g) else {
                assert!(pms.is_empty());
                continue;
            };
            for e in g.edges() {
                let hits = pms.iter().filter(|p| p[e.u] == e.w).count();
                let expected = match hits {
                    0 => EdgeTag::FixedSingle,
                    h if h == pms.len() => EdgeTag::FixedDouble,
                    _ => EdgeTag::Allowed,
                };
                assert_eq!(classes.tag(e), Some(expected), "{e} in {g:?}");
            }
        }
    }
}

#[test]
fn minimum_separators_are_minimum() {
    for n in 2..=4 {
        for d in generate::all_digraphs(n).unwrap() {
            let kappa = connectivity::vertex_connectivity(&d);
            let smallest = (0u32..1 << n)
                .filter(|&s| !strong_without(&d, s))
                .map(|s| s.count_ones() as usize)
                .min()
                .unwrap();
            // deleting n - 1 vertices always leaves a strong single vertex
            assert_eq!(kappa, smallest.min(n - 1), "{d:?}");
            match connectivity::minimum_separator(&d) {
                Some(sep) => {
                    assert_eq!(sep.len(), kappa);
                    let gone = sep.iter().fold(0u32, |m, &v| m | 1 << v);
                    assert!(!strong_without(&d, gone));
                    assert!(connectivity::is_separator(&d, &sep));
                }
                None => assert_eq!(kappa, n - 1),
            }
        }
    }
}
