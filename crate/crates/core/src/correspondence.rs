//! The translation between bipartite graphs with a perfect matching and digraphs.
//!
//! Given `G` and a perfect matching `M`, vertex `v_i` of `D(G, M)` stands for the
//! `i`-th matching edge (ordered by its U endpoint) and every non-matching edge
//! `u_i w_j` becomes the arc from the vertex of `u_i`'s matching edge to the vertex of
//! `w_j`'s matching edge. Conversely `B(D)` has the canonical matching `{u_i w_i}` plus
//! `u_i w_j` for every arc `v_i -> v_j`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{BipartiteGraph, Digraph, Edge, ZeroOneMatrix};
use crate::matching::{Matching, MatchingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrespondenceError {
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error("digraph has a loop at v{0}")]
    HasLoop(usize),
}

/// The bijections `M <-> V(D)` and `E(G) \ M <-> A(D)` produced by [`digraph_of`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceMap {
    n: usize,
    /// `w_partner[i]`: the W endpoint of the matching edge at `u_i`.
    w_partner: Vec<usize>,
    /// inverse of `w_partner`: which D-vertex owns `w_j`
    vertex_of_w: Vec<usize>,
    arc_of_edge: BTreeMap<Edge, (usize, usize)>,
    edge_of_arc: BTreeMap<(usize, usize), Edge>,
}

impl CorrespondenceMap {
    fn new(g: &BipartiteGraph, w_partner: Vec<usize>) -> Self {
        let n = g.n();
        let mut vertex_of_w = vec![0; n];
        for (i, &w) in w_partner.iter().enumerate() {
            vertex_of_w[w] = i;
        }
        let mut arc_of_edge = BTreeMap::new();
        let mut edge_of_arc = BTreeMap::new();
        for e in g.edges() {
            if w_partner[e.u] == e.w {
                continue;
            }
            let arc = (e.u, vertex_of_w[e.w]);
            arc_of_edge.insert(e, arc);
            edge_of_arc.insert(arc, e);
        }
        CorrespondenceMap { n, w_partner, vertex_of_w, arc_of_edge, edge_of_arc }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The matching edge represented by vertex `v`.
    pub fn matching_edge_of_vertex(&self, v: usize) -> Edge {
        Edge::new(v, self.w_partner[v])
    }

    /// The D-vertex of a matching edge, `None` if `e` is not in the matching.
    pub fn vertex_of_matching_edge(&self, e: Edge) -> Option<usize> {
        (self.w_partner.get(e.u) == Some(&e.w)).then_some(e.u)
    }

    /// The D-vertex whose matching edge covers `u_i`.
    pub fn vertex_of_u(&self, u: usize) -> usize {
        u
    }

    /// The D-vertex whose matching edge covers `w_j`.
    pub fn vertex_of_w(&self, w: usize) -> usize {
        self.vertex_of_w[w]
    }

    pub fn arc_of_edge(&self, e: Edge) -> Option<(usize, usize)> {
        self.arc_of_edge.get(&e).copied()
    }

    pub fn edge_of_arc(&self, a: usize, b: usize) -> Option<Edge> {
        self.edge_of_arc.get(&(a, b)).copied()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Edge, (usize, usize))> + '_ {
        self.arc_of_edge.iter().map(|(&e, &a)| (e, a))
    }

    /// The relabeling of W that turns the matching into `{u_i w_i}`: `w_j -> w_{perm[j]}`.
    pub fn w_relabeling(&self) -> Vec<usize> {
        self.vertex_of_w.clone()
    }

    pub fn matching(&self) -> Matching {
        Matching::from_permutation(&self.w_partner)
    }

    /// Checks that both maps are bijections whose domains partition `E(G)` and whose
    /// images cover `V(D)` and `A(D)` exactly.
    pub fn verify(&self, g: &BipartiteGraph, d: &Digraph) -> bool {
        let n = self.n;
        if g.n() != n || d.n() != n {
            return false;
        }
        let mut seen_w = vec![false; n];
        for (u, &w) in self.w_partner.iter().enumerate() {
            if !g.has_edge(Edge::new(u, w)) || std::mem::replace(&mut seen_w[w], true) {
                return false;
            }
        }
        let non_matching = g.edges().filter(|e| self.w_partner[e.u] != e.w).count();
        non_matching == self.arc_of_edge.len()
            && self.arc_of_edge.len() == self.edge_of_arc.len()
            && d.arc_count() == self.edge_of_arc.len()
            && self
                .arc_of_edge
                .iter()
                .all(|(e, &(a, b))| g.has_edge(*e) && d.has_arc(a, b) && self.edge_of_arc[&(a, b)] == *e)
    }

    /// Pulls a directed cycle `(x_0, ..., x_{m-1})` (start not repeated) back to the
    /// edges of the corresponding M-alternating cycle in `G`.
    pub fn pull_back_cycle(&self, cycle: &[usize]) -> Option<Vec<Edge>> {
        let m = cycle.len();
        let mut edges = Vec::with_capacity(2 * m);
        for (i, &x) in cycle.iter().enumerate() {
            let y = cycle[(i + 1) % m];
            edges.push(self.matching_edge_of_vertex(x));
            edges.push(self.edge_of_arc(x, y)?);
        }
        Some(edges)
    }
}

/// Builds `D(G, M)` by contracting the matching edges (the "contraction route").
pub fn digraph_of(g: &BipartiteGraph, m: &Matching) -> Result<(Digraph, CorrespondenceMap), CorrespondenceError> {
    if !m.is_matching_of(g) {
        return Err(MatchingError::ForeignMatching.into());
    }
    let w_partner = m
        .as_permutation()
        .ok_or(MatchingError::NotPerfect { size: m.len(), n: g.n() })?;
    let map = CorrespondenceMap::new(g, w_partner);
    let arcs = map.edge_of_arc.keys().copied();
    let d = Digraph::loop_free(g.n(), arcs).expect("contraction produces distinct non-loop arcs");
    Ok((d, map))
}

/// Builds `D(G, M)` as `D(R' - I)` where `R'` is `R(G)` with columns reordered so `M`
/// becomes the main diagonal (the "matrix route").
pub fn digraph_of_via_matrix(g: &BipartiteGraph, m: &Matching) -> Result<Digraph, CorrespondenceError> {
    if !m.is_matching_of(g) {
        return Err(MatchingError::ForeignMatching.into());
    }
    let perm = m
        .as_permutation()
        .ok_or(MatchingError::NotPerfect { size: m.len(), n: g.n() })?;
    let r = reduced_adjacency(g);
    let rows: Vec<usize> = (0..g.n()).collect();
    let aligned = r.permuted(&rows, &perm);
    debug_assert!(aligned.has_positive_main_diagonal());
    Ok(aligned.minus_identity().digraph().without_loops())
}

/// `B(D) = B(M(D) + I)` with its canonical matching and the correspondence.
pub fn bipartite_of_digraph(d: &Digraph) -> Result<(BipartiteGraph, Matching, CorrespondenceMap), CorrespondenceError> {
    if let Some((v, _)) = d.arcs().find(|&(a, b)| a == b) {
        return Err(CorrespondenceError::HasLoop(v));
    }
    let n = d.n();
    let edges = (0..n).map(|i| Edge::new(i, i)).chain(d.arcs().map(|(a, b)| Edge::new(a, b)));
    let g = BipartiteGraph::new(n, edges).expect("distinct off-diagonal arcs give distinct edges");
    let map = CorrespondenceMap::new(&g, (0..n).collect());
    Ok((g, Matching::canonical(n), map))
}

/// `R(G)`: `a_ij = 1` iff `u_i w_j` is an edge.
pub fn reduced_adjacency(g: &BipartiteGraph) -> ZeroOneMatrix {
    ZeroOneMatrix::from_fn(g.n(), |i, j| g.has_edge(Edge::new(i, j)))
}

/// `B(A)`: the reduced associated bipartite graph.
pub fn bipartite_of_matrix(a: &ZeroOneMatrix) -> BipartiteGraph {
    let n = a.n();
    let edges = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| a.get(i, j))
        .map(|(i, j)| Edge::new(i, j));
    BipartiteGraph::new(n, edges).expect("matrix entries give distinct edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::enumerate_perfect_matchings;

    fn graph(n: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(n, edges.iter().map(|&(u, w)| Edge::new(u, w))).unwrap()
    }

    #[test]
    fn reduced_adjacency_examples() {
        assert_eq!(reduced_adjacency(&BipartiteGraph::perfect_matching(3)), ZeroOneMatrix::identity(3));
        assert_eq!(reduced_adjacency(&BipartiteGraph::complete(2)), ZeroOneMatrix::ones(2));
        let r = reduced_adjacency(&BipartiteGraph::cycle(3));
        assert_eq!(r.rows(), vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
    }

    #[test]
    fn bipartite_of_matrix_examples() {
        assert_eq!(bipartite_of_matrix(&ZeroOneMatrix::identity(2)), BipartiteGraph::perfect_matching(2));
        assert_eq!(bipartite_of_matrix(&ZeroOneMatrix::ones(3)), BipartiteGraph::complete(3));
        let a = ZeroOneMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(bipartite_of_matrix(&a), graph(2, &[(0, 0), (0, 1), (1, 1)]));
    }

    #[test]
    fn c6_contracts_to_directed_triangle() {
        let c6 = BipartiteGraph::cycle(3);
        let (d, map) = digraph_of(&c6, &Matching::canonical(3)).unwrap();
        assert_eq!(d, Digraph::cycle(3));
        assert!(map.verify(&c6, &d));
        assert_eq!(digraph_of_via_matrix(&c6, &Matching::canonical(3)).unwrap(), d);
    }

    #[test]
    fn complete_graph_gives_complete_digraph_for_every_matching() {
        let k = BipartiteGraph::complete(3);
        for m in enumerate_perfect_matchings(&k) {
            let (d, map) = digraph_of(&k, &m).unwrap();
            assert_eq!(d, Digraph::complete(3));
            assert!(map.verify(&k, &d));
        }
    }

    #[test]
    fn p4_gives_single_arc() {
        let p4 = graph(2, &[(0, 0), (0, 1), (1, 1)]);
        let (d, _) = digraph_of(&p4, &Matching::canonical(2)).unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn non_perfect_or_foreign_matching_is_rejected() {
        let k = BipartiteGraph::complete(2);
        let half = Matching::new(&k, [Edge::new(0, 0)]).unwrap();
        assert!(matches!(
            digraph_of(&k, &half),
            Err(CorrespondenceError::Matching(MatchingError::NotPerfect { .. }))
        ));
        let p4 = graph(2, &[(0, 0), (0, 1), (1, 1)]);
        let foreign = Matching::from_permutation(&[1, 0]);
        assert!(digraph_of(&p4, &foreign).is_err());
    }

    #[test]
    fn bipartite_of_digraph_examples() {
        let (g, m, _) = bipartite_of_digraph(&Digraph::cycle(3)).unwrap();
        assert_eq!(g, BipartiteGraph::cycle(3));
        assert_eq!(m, Matching::canonical(3));
        let (g, _, _) = bipartite_of_digraph(&Digraph::arcless(4)).unwrap();
        assert_eq!(g, BipartiteGraph::perfect_matching(4));
        let (g, _, _) = bipartite_of_digraph(&Digraph::complete(3)).unwrap();
        assert_eq!(g, BipartiteGraph::complete(3));
        let looped = Digraph::new(2, [(1, 1)], true).unwrap();
        assert_eq!(bipartite_of_digraph(&looped), Err(CorrespondenceError::HasLoop(1)));
    }

    #[test]
    fn relabeling_makes_matching_diagonal() {
        let k = BipartiteGraph::complete(3);
        let m = Matching::from_permutation(&[2, 0, 1]);
        let (d, map) = digraph_of(&k, &m).unwrap();
        let relabeled = k.relabel_w(&map.w_relabeling());
        let (g2, m2, _) = bipartite_of_digraph(&d).unwrap();
        assert_eq!(g2, relabeled);
        assert_eq!(m2, Matching::canonical(3));
    }
}
