//! Matchings of balanced bipartite graphs: maximum matching, enumeration,
//! perfect-matching counts, fixed-edge classification and alternating structure.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::graph::{BipartiteGraph, Edge, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("vertex {0} is covered twice")]
    SharedEndpoint(Vertex),
    #[error("matching is not perfect ({size} of {n} edges)")]
    NotPerfect { size: usize, n: usize },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph has {0} perfect matchings, expected exactly one")]
    NotUnique(u64),
    #[error("matching is not a matching of this graph")]
    ForeignMatching,
    #[error("order {0} too large for perfect matching counting")]
    TooLarge(usize),
}

/// A set of pairwise disjoint edges of a host graph, kept sorted by `u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    n: usize,
    edges: Vec<Edge>,
}

impl Matching {
    /// Checks that `edges` is a matching of `g`.
    pub fn new(g: &BipartiteGraph, edges: impl IntoIterator<Item = Edge>) -> Result<Self, MatchingError> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        let mut used_u = vec![false; g.n()];
        let mut used_w = vec![false; g.n()];
        for &e in &edges {
            if e.u >= g.n() || e.w >= g.n() || !g.has_edge(e) {
                return Err(MatchingError::NotAnEdge(e));
            }
            if std::mem::replace(&mut used_u[e.u], true) {
                return Err(MatchingError::SharedEndpoint(Vertex::U(e.u)));
            }
            if std::mem::replace(&mut used_w[e.w], true) {
                return Err(MatchingError::SharedEndpoint(Vertex::W(e.w)));
            }
        }
        Ok(Matching { n: g.n(), edges })
    }

    /// Checks that `edges` is a perfect matching of `g`.
    pub fn perfect(g: &BipartiteGraph, edges: impl IntoIterator<Item = Edge>) -> Result<Self, MatchingError> {
        let m = Self::new(g, edges)?;
        if !m.is_perfect() {
            return Err(MatchingError::NotPerfect { size: m.len(), n: g.n() });
        }
        Ok(m)
    }

    /// `{u_i w_i}` on `n + n` vertices.
    pub fn canonical(n: usize) -> Self {
        Matching { n, edges: (0..n).map(|i| Edge::new(i, i)).collect() }
    }

    /// Perfect matching `{u_i w_{perm[i]}}`.
    pub fn from_permutation(perm: &[usize]) -> Self {
        let edges = perm.iter().enumerate().map(|(u, &w)| Edge::new(u, w)).collect();
        Matching { n: perm.len(), edges }
    }

    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        Matching { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_perfect(&self) -> bool {
        self.edges.len() == self.n
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn partner_of_u(&self, u: usize) -> Option<usize> {
        self.edges.iter().find(|e| e.u == u).map(|e| e.w)
    }

    pub fn partner_of_w(&self, w: usize) -> Option<usize> {
        self.edges.iter().find(|e| e.w == w).map(|e| e.u)
    }

    /// For a perfect matching, `perm[u] = w` for every edge `u w`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if !self.is_perfect() {
            return None;
        }
        let mut perm = vec![0; self.n];
        for e in &self.edges {
            perm[e.u] = e.w;
        }
        Some(perm)
    }

    pub fn is_matching_of(&self, g: &BipartiteGraph) -> bool {
        self.n == g.n() && Matching::new(g, self.edges.iter().copied()).is_ok()
    }

    /// Symmetric difference with an edge set; the caller guarantees the result is a matching.
    pub fn flipped(&self, along: &[Edge]) -> Matching {
        let mut set: std::collections::BTreeSet<Edge> = self.edges.iter().copied().collect();
        for e in along {
            if !set.remove(e) {
                set.insert(*e);
            }
        }
        Matching { n: self.n, edges: set.into_iter().collect() }
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Hopcroft-Karp restricted to the alive vertices and skipping one optional banned edge.
struct Restricted<'a> {
    g: &'a BipartiteGraph,
    u_alive: &'a [bool],
    w_alive: &'a [bool],
    banned: Option<Edge>,
}

impl Restricted<'_> {
    fn usable(&self, u: usize, w: usize) -> bool {
        self.w_alive[w] && self.banned != Some(Edge::new(u, w))
    }

    fn solve(&self) -> Vec<Option<usize>> {
        let n = self.g.n();
        let mut mate_u: Vec<Option<usize>> = vec![None; n];
        let mut mate_w: Vec<Option<usize>> = vec![None; n];
        let mut dist = vec![usize::MAX; n];
        loop {
            // BFS layering from free U vertices.
            let mut queue = VecDeque::new();
            for u in 0..n {
                if self.u_alive[u] && mate_u[u].is_none() {
                    dist[u] = 0;
                    queue.push_back(u);
                } else {
                    dist[u] = usize::MAX;
                }
            }
            let mut found = false;
            while let Some(u) = queue.pop_front() {
                for &w in self.g.neighbors_of_u(u) {
                    if !self.usable(u, w) {
                        continue;
                    }
                    match mate_w[w] {
                        None => found = true,
                        Some(u2) if dist[u2] == usize::MAX => {
                            dist[u2] = dist[u] + 1;
                            queue.push_back(u2);
                        }
                        _ => {}
                    }
                }
            }
            if !found {
                break;
            }
            for u in 0..n {
                if self.u_alive[u] && mate_u[u].is_none() {
                    self.augment(u, &mut mate_u, &mut mate_w, &mut dist);
                }
            }
        }
        mate_u
    }

    fn augment(
        &self,
        u: usize,
        mate_u: &mut [Option<usize>],
        mate_w: &mut [Option<usize>],
        dist: &mut [usize],
    ) -> bool {
        for &w in self.g.neighbors_of_u(u) {
            if !self.usable(u, w) {
                continue;
            }
            let ok = match mate_w[w] {
                None => true,
                Some(u2) => dist[u2] == dist[u] + 1 && self.augment(u2, mate_u, mate_w, dist),
            };
            if ok {
                mate_u[u] = Some(w);
                mate_w[w] = Some(u);
                return true;
            }
        }
        dist[u] = usize::MAX;
        false
    }
}

fn restricted_mates(
    g: &BipartiteGraph,
    u_alive: &[bool],
    w_alive: &[bool],
    banned: Option<Edge>,
) -> Vec<Option<usize>> {
    Restricted { g, u_alive, w_alive, banned }.solve()
}

/// A maximum-cardinality matching (Hopcroft-Karp).
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let alive = vec![true; g.n()];
    let mates = restricted_mates(g, &alive, &alive, None);
    let edges = mates
        .iter()
        .enumerate()
        .filter_map(|(u, w)| w.map(|w| Edge::new(u, w)))
        .collect();
    Matching::from_sorted_unchecked(g.n(), edges)
}

pub fn has_perfect_matching(g: &BipartiteGraph) -> bool {
    max_matching(g).is_perfect()
}

/// Whether the graph induced by the alive vertices, minus `banned`, has a perfect matching.
pub fn has_perfect_matching_restricted(
    g: &BipartiteGraph,
    u_alive: &[bool],
    w_alive: &[bool],
    banned: Option<Edge>,
) -> bool {
    let alive_u = u_alive.iter().filter(|&&a| a).count();
    let alive_w = w_alive.iter().filter(|&&a| a).count();
    if alive_u != alive_w {
        return false;
    }
    let mates = restricted_mates(g, u_alive, w_alive, banned);
    mates.iter().filter(|m| m.is_some()).count() == alive_u
}

/// Whether `m` extends to a perfect matching of `g`.
pub fn extends_to_perfect(g: &BipartiteGraph, m: &Matching) -> bool {
    let mut u_alive = vec![true; g.n()];
    let mut w_alive = vec![true; g.n()];
    for e in m.edges() {
        u_alive[e.u] = false;
        w_alive[e.w] = false;
    }
    has_perfect_matching_restricted(g, &u_alive, &w_alive, None)
}

/// A set `X` of alive U-vertices with fewer alive neighbors than members, if one exists.
///
/// Built from the alternating reachability set of an unmatched vertex after a maximum
/// matching, so `|N(X)| = |X| - 1`.
pub fn hall_violator(g: &BipartiteGraph, u_alive: &[bool], w_alive: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mates = restricted_mates(g, u_alive, w_alive, None);
    let mut mate_w = vec![None; n];
    for (u, w) in mates.iter().enumerate() {
        if let Some(w) = w {
            mate_w[*w] = Some(u);
        }
    }
    let root = (0..n).find(|&u| u_alive[u] && mates[u].is_none())?;
    let mut seen_u = vec![false; n];
    let mut seen_w = vec![false; n];
    seen_u[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors_of_u(u) {
            if !w_alive[w] || seen_w[w] {
                continue;
            }
            seen_w[w] = true;
            let u2 = mate_w[w].expect("maximum matching leaves no augmenting path");
            if !seen_u[u2] {
                seen_u[u2] = true;
                queue.push_back(u2);
            }
        }
    }
    Some((0..n).filter(|&u| seen_u[u]).collect())
}

/// Streams every matching of size `k`; see [`enumerate_matchings`].
pub struct Matchings<'g> {
    g: &'g BipartiteGraph,
    k: usize,
    level: usize,
    cursors: Vec<usize>,
    picks: Vec<Option<usize>>,
    used_w: Vec<bool>,
    count: usize,
    fresh: bool,
    exhausted: bool,
}

impl Matchings<'_> {
    fn undo(&mut self, level: usize) {
        if let Some(w) = self.picks[level].take() {
            self.used_w[w] = false;
            self.count -= 1;
        }
    }

    fn current(&self) -> Matching {
        let edges = self
            .picks
            .iter()
            .enumerate()
            .filter_map(|(u, w)| w.map(|w| Edge::new(u, w)))
            .collect();
        Matching::from_sorted_unchecked(self.g.n(), edges)
    }
}

impl Iterator for Matchings<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.exhausted {
            return None;
        }
        let n = self.g.n();
        if self.fresh {
            self.fresh = false;
            if self.k == 0 {
                self.exhausted = true;
                return Some(Matching::from_sorted_unchecked(n, Vec::new()));
            }
            if self.k > n {
                self.exhausted = true;
                return None;
            }
            self.level = 0;
            self.cursors[0] = 0;
        } else {
            self.level -= 1;
            self.undo(self.level);
        }
        loop {
            let u = self.level;
            let adj = self.g.neighbors_of_u(u);
            let mut advanced = false;
            while self.cursors[u] <= adj.len() {
                let c = self.cursors[u];
                self.cursors[u] += 1;
                if c < adj.len() {
                    let w = adj[c];
                    if self.used_w[w] {
                        continue;
                    }
                    self.picks[u] = Some(w);
                    self.used_w[w] = true;
                    self.count += 1;
                    advanced = true;
                    break;
                } else if self.k - self.count < n - u {
                    // skipping u still leaves enough rows
                    self.picks[u] = None;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                if u == 0 {
                    self.exhausted = true;
                    return None;
                }
                self.level -= 1;
                self.undo(self.level);
                continue;
            }
            if self.count == self.k {
                self.level = u + 1;
                return Some(self.current());
            }
            self.level = u + 1;
            self.cursors[u + 1] = 0;
        }
    }
}

/// Every matching of size `k`, each exactly once. Perfect matchings come out in
/// lexicographic order of `(w(u_1), w(u_2), ...)`.
pub fn enumerate_matchings(g: &BipartiteGraph, k: usize) -> Matchings<'_> {
    let n = g.n();
    Matchings {
        g,
        k,
        level: 0,
        cursors: vec![0; n + 1],
        picks: vec![None; n],
        used_w: vec![false; n],
        count: 0,
        fresh: true,
        exhausted: false,
    }
}

pub fn enumerate_perfect_matchings(g: &BipartiteGraph) -> Matchings<'_> {
    enumerate_matchings(g, g.n())
}

/// The lexicographically first perfect matching, if any.
pub fn first_perfect_matching(g: &BipartiteGraph) -> Option<Matching> {
    if !has_perfect_matching(g) {
        return None;
    }
    enumerate_perfect_matchings(g).next()
}

pub const MAX_COUNT_ORDER: usize = 20;

/// Number of perfect matchings, i.e. the permanent of `R(G)`, by subset DP over W.
pub fn count_perfect_matchings(g: &BipartiteGraph) -> Result<u64, MatchingError> {
    let n = g.n();
    if n > MAX_COUNT_ORDER {
        return Err(MatchingError::TooLarge(n));
    }
    // ways[mask] = matchings of u_0..u_{|mask|-1} onto exactly the W-set mask
    let mut ways = vec![0u64; 1 << n];
    ways[0] = 1;
    for mask in 0usize..1 << n {
        let count = ways[mask];
        if count == 0 {
            continue;
        }
        let u = mask.count_ones() as usize;
        if u == n {
            continue;
        }
        for &w in g.neighbors_of_u(u) {
            if mask >> w & 1 == 0 {
                ways[mask | 1 << w] += count;
            }
        }
    }
    Ok(ways[(1 << n) - 1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeTag {
    /// In no perfect matching.
    FixedSingle,
    /// In every perfect matching.
    FixedDouble,
    /// In some but not all perfect matchings.
    Allowed,
}

impl fmt::Display for EdgeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeTag::FixedSingle => "fixed_single",
            EdgeTag::FixedDouble => "fixed_double",
            EdgeTag::Allowed => "allowed_nonfixed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    tags: BTreeMap<Edge, EdgeTag>,
}

impl EdgeClassification {
    pub fn tag(&self, e: Edge) -> Option<EdgeTag> {
        self.tags.get(&e).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, EdgeTag)> + '_ {
        self.tags.iter().map(|(&e, &t)| (e, t))
    }

    pub fn edges_with(&self, tag: EdgeTag) -> Vec<Edge> {
        self.iter().filter(|&(_, t)| t == tag).map(|(e, _)| e).collect()
    }

    pub fn count(&self, tag: EdgeTag) -> usize {
        self.tags.values().filter(|&&t| t == tag).count()
    }
}

/// Tags every edge as fixed single, fixed double or allowed.
///
/// `uw` is fixed single iff `G - {u, w}` has no perfect matching, and fixed double iff
/// `G - uw` has none.
pub fn classify_edges(g: &BipartiteGraph) -> Result<EdgeClassification, MatchingError> {
    if !has_perfect_matching(g) {
        return Err(MatchingError::NoPerfectMatching);
    }
    let n = g.n();
    let all = vec![true; n];
    let mut tags = BTreeMap::new();
    for e in g.edges() {
        let mut u_alive = all.clone();
        let mut w_alive = all.clone();
        u_alive[e.u] = false;
        w_alive[e.w] = false;
        let tag = if !has_perfect_matching_restricted(g, &u_alive, &w_alive, None) {
            EdgeTag::FixedSingle
        } else if !has_perfect_matching_restricted(g, &all, &all, Some(e)) {
            EdgeTag::FixedDouble
        } else {
            EdgeTag::Allowed
        };
        tags.insert(e, tag);
    }
    Ok(EdgeClassification { tags })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Cycle,
    Path,
}

/// A connected piece of `M1 △ M2`. For a cycle, `vertices` lists the cycle once
/// without repeating the start; for a path it runs end to end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingComponent {
    pub kind: ComponentKind,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

/// Decomposes `m1 △ m2` into alternating cycles and paths.
pub fn symmetric_difference(
    g: &BipartiteGraph,
    m1: &Matching,
    m2: &Matching,
) -> Result<Vec<AlternatingComponent>, MatchingError> {
    if !m1.is_matching_of(g) || !m2.is_matching_of(g) {
        return Err(MatchingError::ForeignMatching);
    }
    let diff: Vec<Edge> = m1
        .edges()
        .iter()
        .filter(|e| !m2.contains(**e))
        .chain(m2.edges().iter().filter(|e| !m1.contains(**e)))
        .copied()
        .collect();
    let n = g.n();
    let mut u_inc: Vec<Vec<Edge>> = vec![Vec::new(); n];
    let mut w_inc: Vec<Vec<Edge>> = vec![Vec::new(); n];
    for &e in &diff {
        u_inc[e.u].push(e);
        w_inc[e.w].push(e);
    }
    let incident = |v: Vertex| -> &Vec<Edge> {
        match v {
            Vertex::U(i) => &u_inc[i],
            Vertex::W(j) => &w_inc[j],
        }
    };
    let other = |e: Edge, v: Vertex| -> Vertex {
        match v {
            Vertex::U(_) => Vertex::W(e.w),
            Vertex::W(_) => Vertex::U(e.u),
        }
    };
    let mut used: std::collections::BTreeSet<Edge> = Default::default();
    let mut out = Vec::new();
    let walk = |start: Vertex, used: &mut std::collections::BTreeSet<Edge>| {
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let mut at = start;
        while let Some(&e) = incident(at).iter().find(|e| !used.contains(*e)) {
            used.insert(e);
            edges.push(e);
            at = other(e, at);
            vertices.push(at);
        }
        (vertices, edges)
    };
    // paths first: start at degree-one vertices
    for v in g.vertices() {
        if incident(v).len() == 1 && !used.contains(&incident(v)[0]) {
            let (vertices, edges) = walk(v, &mut used);
            out.push(AlternatingComponent { kind: ComponentKind::Path, vertices, edges });
        }
    }
    for v in g.vertices() {
        if incident(v).iter().any(|e| !used.contains(e)) {
            let (mut vertices, edges) = walk(v, &mut used);
            vertices.pop();
            out.push(AlternatingComponent { kind: ComponentKind::Cycle, vertices, edges });
        }
    }
    Ok(out)
}

/// Witness that a graph with a unique perfect matching yields an acyclic digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniqueMatchingReport {
    pub matching: Matching,
    pub digraph: crate::graph::Digraph,
    /// Topological order of `D(G, M)`, or `None` if a directed cycle was found.
    pub topological_order: Option<Vec<usize>>,
}

impl UniqueMatchingReport {
    pub fn acyclic(&self) -> bool {
        self.topological_order.is_some()
    }
}

/// For a graph with exactly one perfect matching `M`, builds `D(G, M)` and returns its
/// topological order as the acyclicity witness.
pub fn unique_pm_implies_acyclic_check(g: &BipartiteGraph) -> Result<UniqueMatchingReport, MatchingError> {
    let count = count_perfect_matchings(g)?;
    if count != 1 {
        return Err(MatchingError::NotUnique(count));
    }
    let matching = first_perfect_matching(g).expect("count is one");
    let (digraph, _) = crate::correspondence::digraph_of(g, &matching)
        .expect("matching is perfect by construction");
    let topological_order = crate::connectivity::topological_order(&digraph);
    Ok(UniqueMatchingReport { matching, digraph, topological_order })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(n, edges.iter().map(|&(u, w)| Edge::new(u, w))).unwrap()
    }

    fn p4() -> BipartiteGraph {
        graph(2, &[(0, 0), (0, 1), (1, 1)])
    }

    #[test]
    fn max_matching_sizes() {
        assert_eq!(max_matching(&BipartiteGraph::complete(3)).len(), 3);
        assert_eq!(max_matching(&BipartiteGraph::perfect_matching(3)).len(), 3);
        let star = graph(2, &[(0, 0), (0, 1), (1, 0)]);
        let m = max_matching(&star);
        assert_eq!(m.edges(), &[Edge::new(0, 1), Edge::new(1, 0)]);
    }

    #[test]
    fn matching_constructor_rejects_bad_sets() {
        let g = BipartiteGraph::complete(2);
        assert_eq!(
            Matching::new(&g, [Edge::new(0, 0), Edge::new(1, 0)]),
            Err(MatchingError::SharedEndpoint(Vertex::W(0)))
        );
        let pm = BipartiteGraph::perfect_matching(2);
        assert_eq!(Matching::new(&pm, [Edge::new(0, 1)]), Err(MatchingError::NotAnEdge(Edge::new(0, 1))));
        assert!(matches!(Matching::perfect(&g, [Edge::new(0, 0)]), Err(MatchingError::NotPerfect { .. })));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_matchings(&BipartiteGraph::complete(2), 2).count(), 2);
        assert_eq!(enumerate_matchings(&BipartiteGraph::cycle(3), 1).count(), 6);
        assert_eq!(enumerate_matchings(&BipartiteGraph::cycle(3), 3).count(), 2);
        assert_eq!(enumerate_matchings(&BipartiteGraph::cycle(3), 0).count(), 1);
        assert_eq!(enumerate_matchings(&BipartiteGraph::complete(3), 4).count(), 0);
        // K_{3,3}: 9 + 18 + 6 matchings of sizes 1..3
        assert_eq!(enumerate_matchings(&BipartiteGraph::complete(3), 2).count(), 18);
    }

    #[test]
    fn perfect_matchings_come_out_lexicographically() {
        let all: Vec<_> = enumerate_perfect_matchings(&BipartiteGraph::complete(3))
            .map(|m| m.as_permutation().unwrap())
            .collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all[0], vec![0, 1, 2]);
    }

    #[test]
    fn permanent_counts() {
        assert_eq!(count_perfect_matchings(&BipartiteGraph::complete(3)), Ok(6));
        assert_eq!(count_perfect_matchings(&p4()), Ok(1));
        let isolated = graph(2, &[(1, 0), (1, 1)]);
        assert_eq!(count_perfect_matchings(&isolated), Ok(0));
    }

    #[test]
    fn classification_examples() {
        let c = classify_edges(&p4()).unwrap();
        assert_eq!(c.tag(Edge::new(0, 0)), Some(EdgeTag::FixedDouble));
        assert_eq!(c.tag(Edge::new(1, 1)), Some(EdgeTag::FixedDouble));
        assert_eq!(c.tag(Edge::new(0, 1)), Some(EdgeTag::FixedSingle));
        let c6 = classify_edges(&BipartiteGraph::cycle(3)).unwrap();
        assert_eq!(c6.count(EdgeTag::Allowed), 6);
        let k22 = classify_edges(&BipartiteGraph::complete(2)).unwrap();
        assert_eq!(k22.count(EdgeTag::Allowed), 4);
        let none = graph(2, &[(0, 0), (1, 0)]);
        assert_eq!(classify_edges(&none), Err(MatchingError::NoPerfectMatching));
    }

    #[test]
    fn hall_violator_is_deficient() {
        let g = graph(3, &[(0, 0), (1, 0), (2, 1), (2, 2)]);
        let alive = vec![true; 3];
        let x = hall_violator(&g, &alive, &alive).unwrap();
        let mut nbrs: Vec<usize> = x.iter().flat_map(|&u| g.neighbors_of_u(u).to_vec()).collect();
        nbrs.sort();
        nbrs.dedup();
        assert!(nbrs.len() < x.len());
        assert!(hall_violator(&BipartiteGraph::complete(3), &alive, &alive).is_none());
    }

    #[test]
    fn symmetric_difference_examples() {
        let c6 = BipartiteGraph::cycle(3);
        let pms: Vec<_> = enumerate_perfect_matchings(&c6).collect();
        assert!(symmetric_difference(&c6, &pms[0], &pms[0]).unwrap().is_empty());
        let diff = symmetric_difference(&c6, &pms[0], &pms[1]).unwrap();
        assert_eq!(diff.len(), 1);
        assert_eq!(diff[0].kind, ComponentKind::Cycle);
        assert_eq!(diff[0].edges.len(), 6);

        let k22 = BipartiteGraph::complete(2);
        let pms: Vec<_> = enumerate_perfect_matchings(&k22).collect();
        let diff = symmetric_difference(&k22, &pms[0], &pms[1]).unwrap();
        assert_eq!(diff[0].kind, ComponentKind::Cycle);
        assert_eq!(diff[0].vertices.len(), 4);

        let foreign = Matching::canonical(3);
        assert_eq!(
            symmetric_difference(&k22, &pms[0], &foreign),
            Err(MatchingError::ForeignMatching)
        );
    }

    #[test]
    fn symmetric_difference_finds_paths() {
        let g = graph(2, &[(0, 0), (0, 1), (1, 1)]);
        let m1 = Matching::new(&g, [Edge::new(0, 0), Edge::new(1, 1)]).unwrap();
        let m2 = Matching::new(&g, [Edge::new(0, 1)]).unwrap();
        let diff = symmetric_difference(&g, &m1, &m2).unwrap();
        assert_eq!(diff.len(), 1);
        assert_eq!(diff[0].kind, ComponentKind::Path);
        assert_eq!(diff[0].edges.len(), 3);
    }

    #[test]
    fn unique_matching_gives_acyclic_digraph() {
        let r = unique_pm_implies_acyclic_check(&p4()).unwrap();
        assert_eq!(r.topological_order, Some(vec![0, 1]));
        let r = unique_pm_implies_acyclic_check(&BipartiteGraph::perfect_matching(4)).unwrap();
        assert!(r.acyclic());
        let lower = BipartiteGraph::new(4, (0..4).flat_map(|u| (0..=u).map(move |w| Edge::new(u, w)))).unwrap();
        assert!(unique_pm_implies_acyclic_check(&lower).unwrap().acyclic());
        assert_eq!(
            unique_pm_implies_acyclic_check(&BipartiteGraph::cycle(3)),
            Err(MatchingError::NotUnique(2))
        );
    }
}
