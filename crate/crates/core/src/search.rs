//! Exhaustive searches for minimal instances, up to isomorphism, with the degree and
//! trail audits run on every instance found.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::connectivity::{self, MaderReport};
use crate::correspondence::bipartite_of_digraph;
use crate::extendability::{self, ForestReport, LouReport, MinimalExtend, TransferReport};
use crate::graph::{BipartiteGraph, Digraph, Edge};
use crate::matching::first_perfect_matching;
use crate::matrix::Permutations;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("n_max = {n_max} exceeds the search limit {limit}")]
    TooLarge { n_max: usize, limit: usize },
    #[error("k must be at least 1")]
    KZero,
}

pub const MINIMAL_STRONG_LIMIT: usize = 5;
pub const MINIMAL_EXTENDABLE_LIMIT: usize = 4;
pub const COUNTEREXAMPLE_LIMIT: usize = 6;

fn arc_mask(n: usize, arcs: impl Iterator<Item = (usize, usize)>) -> u64 {
    arcs.fold(0, |m, (a, b)| m | 1 << (a * n + b))
}

fn off_diagonal(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect()
}

fn digraph_from_mask(n: usize, mask: u64) -> Digraph {
    let arcs = off_diagonal(n).into_iter().filter(|&(a, b)| mask >> (a * n + b) & 1 == 1);
    Digraph::loop_free(n, arcs.collect::<Vec<_>>()).expect("valid")
}

/// Smallest arc mask over all relabelings, with bit `a * n + b` for arc `a -> b`.
pub fn canonical_digraph(d: &Digraph) -> Digraph {
    let n = d.n();
    assert!(n * n <= 64, "canonical forms limited to n <= 8");
    let arcs: Vec<(usize, usize)> = d.proper_arcs().collect();
    let best = Permutations::new(n)
        .map(|p| arc_mask(n, arcs.iter().map(|&(a, b)| (p[a], p[b]))))
        .min()
        .unwrap_or(0);
    digraph_from_mask(n, best)
}

/// Smallest edge mask over relabelings of U and W and swapping the two classes.
pub fn canonical_bipartite(g: &BipartiteGraph) -> BipartiteGraph {
    let n = g.n();
    assert!(n * n <= 64, "canonical forms limited to n <= 8");
    let edges: Vec<Edge> = g.edges().collect();
    let mut best = u64::MAX;
    let perms: Vec<Vec<usize>> = Permutations::new(n).collect();
    for swap in [false, true] {
        for p in &perms {
            for q in &perms {
                let mask = edges.iter().fold(0u64, |m, e| {
                    let (u, w) = if swap { (e.w, e.u) } else { (e.u, e.w) };
                    m | 1 << (p[u] * n + q[w])
                });
                best = best.min(mask);
            }
        }
    }
    let edges = (0..n * n).filter(|b| best >> b & 1 == 1).map(|b| Edge::new(b / n, b % n));
    BipartiteGraph::new(n, edges).expect("valid")
}

/// Every isomorphism class of loop-free digraphs on `n` vertices passing `keep`, as
/// canonical representatives in mask order.
fn digraph_classes(n: usize, keep: impl Fn(&Digraph) -> bool + Sync) -> Vec<Digraph> {
    let slots = off_diagonal(n);
    let found: BTreeSet<(u64, Vec<(usize, usize)>)> = (0u64..1 << slots.len())
        .into_par_iter()
        .filter_map(|bits| {
            let arcs = slots.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &a)| a);
            let d = Digraph::loop_free(n, arcs.collect::<Vec<_>>()).expect("valid");
            keep(&d).then(|| {
                let c = canonical_digraph(&d);
                (arc_mask(n, c.proper_arcs()), c.proper_arcs().collect())
            })
        })
        .collect();
    found.into_iter().map(|(_, arcs)| Digraph::loop_free(n, arcs).expect("valid")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalStrongEntry {
    pub digraph: Digraph,
    pub mader: MaderReport,
    /// Anti-directed trail among the high-degree arcs; expected to be absent.
    pub trail: Option<Vec<(usize, usize)>>,
}

/// All minimal `k`-strong digraphs with `k + 1 <= n <= n_max`, up to isomorphism.
pub fn minimal_k_strong(n_max: usize, k: usize) -> Result<Vec<MinimalStrongEntry>, SearchError> {
    if k == 0 {
        return Err(SearchError::KZero);
    }
    if n_max > MINIMAL_STRONG_LIMIT {
        return Err(SearchError::TooLarge { n_max, limit: MINIMAL_STRONG_LIMIT });
    }
    let mut out = Vec::new();
    for n in k + 1..=n_max {
        for d in digraph_classes(n, |d| connectivity::is_minimal_k_strong(d, k).is_minimal()) {
            let mader = connectivity::mader_degree_audit(&d, k).expect("minimal by construction");
            let trail = connectivity::anti_directed_trail_find(&d, k);
            out.push(MinimalStrongEntry { digraph: d, mader, trail });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalExtendableEntry {
    pub graph: BipartiteGraph,
    pub lou: LouReport,
    pub forest: ForestReport,
    pub transfer: TransferReport,
}

/// All minimal `k`-extendable bipartite graphs with `k + 1 <= n <= n_max`, up to
/// isomorphism. Every such graph contains a perfect matching, so graphs containing
/// `{u_i w_i}` cover every class.
pub fn minimal_k_extendable(n_max: usize, k: usize) -> Result<Vec<MinimalExtendableEntry>, SearchError> {
    if k == 0 {
        return Err(SearchError::KZero);
    }
    if n_max > MINIMAL_EXTENDABLE_LIMIT {
        return Err(SearchError::TooLarge { n_max, limit: MINIMAL_EXTENDABLE_LIMIT });
    }
    let mut out = Vec::new();
    for n in k + 1..=n_max {
        let slots = off_diagonal(n);
        let found: BTreeSet<(u64, Vec<Edge>)> = (0u64..1 << slots.len())
            .into_par_iter()
            .filter_map(|bits| {
                let extra = slots.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &(u, w))| Edge::new(u, w));
                let g = BipartiteGraph::new(n, (0..n).map(|i| Edge::new(i, i)).chain(extra)).expect("valid");
                let minimal = extendability::is_minimal_k_extendable(&g, k).ok()? == MinimalExtend::Minimal;
                minimal.then(|| {
                    let c = canonical_bipartite(&g);
                    let mask = c.edges().fold(0u64, |m, e| m | 1 << (e.u * n + e.w));
                    (mask, c.edges().collect())
                })
            })
            .collect();
        for (_, edges) in found {
            let graph = BipartiteGraph::new(n, edges).expect("valid");
            let lou = extendability::lou_degree_audit(&graph, k).expect("minimal");
            let forest = extendability::lou_forest_check(&graph, k).expect("minimal");
            let m = first_perfect_matching(&graph).expect("extendable");
            let transfer = extendability::minimality_transfer_check(&graph, &m, k).expect("minimal");
            out.push(MinimalExtendableEntry { graph, lou, forest, transfer });
        }
    }
    Ok(out)
}

/// A minimal strong digraph whose bipartite graph is not minimal 1-extendable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleEntry {
    pub digraph: Digraph,
    pub graph: BipartiteGraph,
    /// An edge of `B(D)` whose removal keeps it 1-extendable.
    pub deletable: Edge,
}

/// Searches `n = 2, 3, ...` up to `n_max` and returns every class found at the first
/// order where one exists; empty if none exists within the bound.
pub fn minimality_counterexample(n_max: usize) -> Result<Vec<CounterexampleEntry>, SearchError> {
    if n_max > COUNTEREXAMPLE_LIMIT {
        return Err(SearchError::TooLarge { n_max, limit: COUNTEREXAMPLE_LIMIT });
    }
    for n in 2..=n_max {
        let classes = digraph_classes(n, |d| {
            connectivity::is_minimal_k_strong(d, 1).is_minimal() && deletable_edge(d).is_some()
        });
        if !classes.is_empty() {
            return Ok(classes
                .into_iter()
                .map(|digraph| {
                    let (graph, _, _) = bipartite_of_digraph(&digraph).expect("loop-free");
                    let deletable = deletable_edge(&digraph).expect("filtered");
                    CounterexampleEntry { digraph, graph, deletable }
                })
                .collect());
        }
    }
    Ok(Vec::new())
}

fn deletable_edge(d: &Digraph) -> Option<Edge> {
    let (g, _, _) = bipartite_of_digraph(d).ok()?;
    match extendability::is_minimal_k_extendable(&g, 1).ok()? {
        MinimalExtend::Deletable(e) => Some(e),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms_identify_relabelings() {
        let a = Digraph::loop_free(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let b = Digraph::loop_free(3, [(0, 2), (2, 1), (1, 0)]).unwrap();
        assert_eq!(canonical_digraph(&a), canonical_digraph(&b));
        let g = BipartiteGraph::cycle(3);
        let h = g.relabel_w(&[2, 0, 1]);
        assert_eq!(canonical_bipartite(&g), canonical_bipartite(&h));
    }

    #[test]
    fn small_minimal_strong() {
        let found = minimal_k_strong(3, 1).unwrap();
        // the 2-cycle, the 3-cycle and two 2-cycles sharing a vertex
        assert_eq!(found.len(), 3);
        assert!(found.iter().all(|e| e.mader.holds && e.trail.is_none()));
    }

    #[test]
    fn small_minimal_extendable() {
        let found = minimal_k_extendable(3, 1).unwrap();
        assert!(found.iter().any(|e| canonical_bipartite(&e.graph) == canonical_bipartite(&BipartiteGraph::cycle(3))));
        assert!(found.iter().all(|e| e.lou.holds && e.forest.is_forest && e.transfer.holds));
    }

    #[test]
    fn counterexample_exists_at_order_three() {
        let found = minimality_counterexample(6).unwrap();
        assert!(!found.is_empty());
        assert!(found.iter().all(|e| e.digraph.n() == 3));
    }
}
