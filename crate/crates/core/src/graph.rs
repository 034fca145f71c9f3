//! Core instance types: balanced bipartite graphs, digraphs and zero-one matrices.
//!
//! Vertices are identified by 0-based indices inside the library. Labels such as
//! `u3`, `w1` or `v2` are 1-based and only used for display and file formats.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// An edge `u_i w_j` of a bipartite graph, stored as 0-based class indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub w: usize,
}

impl Edge {
    pub const fn new(u: usize, w: usize) -> Self {
        Edge { u, w }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u{}w{}", self.u + 1, self.w + 1)
    }
}

impl FromStr for Edge {
    type Err = String;

    /// Parses the `u<i>w<j>` label, 1-based.
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("expected an edge label like u1w2, found `{s}`");
        let (u, w) = s.strip_prefix('u').and_then(|r| r.split_once('w')).ok_or_else(bad)?;
        let (u, w): (usize, usize) = (u.parse().map_err(|_| bad())?, w.parse().map_err(|_| bad())?);
        Ok(Edge::new(u.checked_sub(1).ok_or_else(bad)?, w.checked_sub(1).ok_or_else(bad)?))
    }
}

/// A vertex of a bipartite graph, tagged with its color class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    U(usize),
    W(usize),
}

impl Vertex {
    pub fn index(self) -> usize {
        match self {
            Vertex::U(i) | Vertex::W(i) => i,
        }
    }

    pub fn is_u(self) -> bool {
        matches!(self, Vertex::U(_))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::U(i) => write!(f, "u{}", i + 1),
            Vertex::W(i) => write!(f, "w{}", i + 1),
        }
    }
}

/// A single broken invariant found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyOrder,
    VertexOutOfRange { vertex: String, n: usize },
    IntraClassEdge { a: Vertex, b: Vertex },
    DuplicateEdge(Edge),
    DuplicateArc(usize, usize),
    LoopNotAllowed(usize),
    NotSquare { row: usize, len: usize, n: usize },
    NonBinaryEntry { row: usize, col: usize, value: u8 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyOrder => write!(f, "order must be at least 1"),
            Violation::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
            Violation::IntraClassEdge { a, b } => write!(f, "intra-class edge {a}{b}"),
            Violation::DuplicateEdge(e) => write!(f, "duplicate edge {e}"),
            Violation::DuplicateArc(a, b) => write!(f, "duplicate arc v{}->v{}", a + 1, b + 1),
            Violation::LoopNotAllowed(v) => write!(f, "loop at v{} not allowed", v + 1),
            Violation::NotSquare { row, len, n } => {
                write!(f, "row {} has {len} entries, expected {n}", row + 1)
            }
            Violation::NonBinaryEntry { row, col, value } => {
                write!(f, "non-binary entry {value} at ({}, {})", row + 1, col + 1)
            }
        }
    }
}

/// Outcome of [`validate`]; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Error)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "invalid: {}", parts.join("; "))
    }
}

/// Unchecked bipartite input, as read from a file or built by hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawBipartite {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

/// Unchecked digraph input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawDigraph {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
    pub loops_allowed: bool,
}

/// Unchecked matrix input; entries are raw bytes so non-binary values can be reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawMatrix {
    pub rows: Vec<Vec<u8>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawInstance {
    Bipartite(RawBipartite),
    Digraph(RawDigraph),
    Matrix(RawMatrix),
}

/// Reports every violated invariant of an unchecked instance.
pub fn validate(instance: &RawInstance) -> ValidationReport {
    let mut violations = Vec::new();
    match instance {
        RawInstance::Bipartite(raw) => {
            if raw.n == 0 {
                violations.push(Violation::EmptyOrder);
            }
            let mut seen = BTreeSet::new();
            for &(a, b) in &raw.edges {
                for v in [a, b] {
                    if v.index() >= raw.n {
                        violations.push(Violation::VertexOutOfRange {
                            vertex: v.to_string(),
                            n: raw.n,
                        });
                    }
                }
                let edge = match (a, b) {
                    (Vertex::U(u), Vertex::W(w)) | (Vertex::W(w), Vertex::U(u)) => Edge::new(u, w),
                    _ => {
                        violations.push(Violation::IntraClassEdge { a, b });
                        continue;
                    }
                };
                if !seen.insert(edge) {
                    violations.push(Violation::DuplicateEdge(edge));
                }
            }
        }
        RawInstance::Digraph(raw) => {
            if raw.n == 0 {
                violations.push(Violation::EmptyOrder);
            }
            let mut seen = BTreeSet::new();
            for &(a, b) in &raw.arcs {
                for v in [a, b] {
                    if v >= raw.n {
                        violations.push(Violation::VertexOutOfRange {
                            vertex: format!("v{}", v + 1),
                            n: raw.n,
                        });
                    }
                }
                if a == b && !raw.loops_allowed {
                    violations.push(Violation::LoopNotAllowed(a));
                }
                if !seen.insert((a, b)) {
                    violations.push(Violation::DuplicateArc(a, b));
                }
            }
        }
        RawInstance::Matrix(raw) => {
            let n = raw.rows.len();
            if n == 0 {
                violations.push(Violation::EmptyOrder);
            }
            for (i, row) in raw.rows.iter().enumerate() {
                if row.len() != n {
                    violations.push(Violation::NotSquare { row: i, len: row.len(), n });
                }
                for (j, &value) in row.iter().enumerate() {
                    if value > 1 {
                        violations.push(Violation::NonBinaryEntry { row: i, col: j, value });
                    }
                }
            }
        }
    }
    ValidationReport { violations }
}

/// A balanced bipartite graph with classes `U = {u_1..u_n}` and `W = {w_1..w_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    n: usize,
    edges: BTreeSet<Edge>,
    u_adj: Vec<Vec<usize>>,
    w_adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, ValidationReport> {
        let edges: Vec<Edge> = edges.into_iter().collect();
        let raw = RawBipartite {
            n,
            edges: edges.iter().map(|e| (Vertex::U(e.u), Vertex::W(e.w))).collect(),
        };
        let report = validate(&RawInstance::Bipartite(raw));
        if !report.is_valid() {
            return Err(report);
        }
        Ok(Self::from_set(n, edges.into_iter().collect()))
    }

    pub fn from_raw(raw: &RawBipartite) -> Result<Self, ValidationReport> {
        let report = validate(&RawInstance::Bipartite(raw.clone()));
        if !report.is_valid() {
            return Err(report);
        }
        let edges = raw.edges.iter().map(|&(a, b)| match (a, b) {
            (Vertex::U(u), Vertex::W(w)) | (Vertex::W(w), Vertex::U(u)) => Edge::new(u, w),
            _ => unreachable!("validated"),
        });
        Ok(Self::from_set(raw.n, edges.collect()))
    }

    fn from_set(n: usize, edges: BTreeSet<Edge>) -> Self {
        let mut u_adj = vec![Vec::new(); n];
        let mut w_adj = vec![Vec::new(); n];
        for e in &edges {
            u_adj[e.u].push(e.w);
            w_adj[e.w].push(e.u);
        }
        for list in w_adj.iter_mut() {
            list.sort_unstable();
        }
        BipartiteGraph { n, edges, u_adj, w_adj }
    }

    /// `n` disjoint edges `u_i w_i`.
    pub fn perfect_matching(n: usize) -> Self {
        assert!(n >= 1);
        Self::from_set(n, (0..n).map(|i| Edge::new(i, i)).collect())
    }

    /// `K_{n,n}`.
    pub fn complete(n: usize) -> Self {
        assert!(n >= 1);
        let edges = (0..n).flat_map(|u| (0..n).map(move |w| Edge::new(u, w)));
        Self::from_set(n, edges.collect())
    }

    /// The cycle `C_{2n}` with edges `u_i w_i` and `u_i w_{i+1}` (indices mod n).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 2);
        let edges = (0..n).flat_map(|i| [Edge::new(i, i), Edge::new(i, (i + 1) % n)]);
        Self::from_set(n, edges.collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic `(u, w)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    /// Sorted W-neighbors of `u_i`.
    pub fn neighbors_of_u(&self, u: usize) -> &[usize] {
        &self.u_adj[u]
    }

    /// Sorted U-neighbors of `w_j`.
    pub fn neighbors_of_w(&self, w: usize) -> &[usize] {
        &self.w_adj[w]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        match v {
            Vertex::U(i) => self.u_adj[i].len(),
            Vertex::W(j) => self.w_adj[j].len(),
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        let n = self.n;
        (0..n).map(Vertex::U).chain((0..n).map(Vertex::W))
    }

    pub fn without_edge(&self, e: Edge) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(&e);
        Self::from_set(self.n, edges)
    }

    pub fn with_edge(&self, e: Edge) -> Self {
        assert!(e.u < self.n && e.w < self.n);
        let mut edges = self.edges.clone();
        edges.insert(e);
        Self::from_set(self.n, edges)
    }

    /// Renames `w_j` to `w_{perm[j]}`.
    pub fn relabel_w(&self, perm: &[usize]) -> Self {
        let edges = self.edges.iter().map(|e| Edge::new(e.u, perm[e.w]));
        Self::from_set(self.n, edges.collect())
    }

    /// Connected components as (sorted U indices, sorted W indices).
    pub fn components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.n;
        let mut seen_u = vec![false; n];
        let mut seen_w = vec![false; n];
        let mut out = Vec::new();
        for start in self.vertices() {
            let seen = match start {
                Vertex::U(i) => seen_u[i],
                Vertex::W(j) => seen_w[j],
            };
            if seen {
                continue;
            }
            let (mut us, mut ws) = (Vec::new(), Vec::new());
            let mut queue = VecDeque::from([start]);
            match start {
                Vertex::U(i) => seen_u[i] = true,
                Vertex::W(j) => seen_w[j] = true,
            }
            while let Some(v) = queue.pop_front() {
                match v {
                    Vertex::U(i) => {
                        us.push(i);
                        for &j in &self.u_adj[i] {
                            if !seen_w[j] {
                                seen_w[j] = true;
                                queue.push_back(Vertex::W(j));
                            }
                        }
                    }
                    Vertex::W(j) => {
                        ws.push(j);
                        for &i in &self.w_adj[j] {
                            if !seen_u[i] {
                                seen_u[i] = true;
                                queue.push_back(Vertex::U(i));
                            }
                        }
                    }
                }
            }
            us.sort_unstable();
            ws.sort_unstable();
            out.push((us, ws));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }
}

/// A digraph on vertices `v_1..v_n`. Loops may be stored, but every connectivity
/// computation works on the loop-free view.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
    loops_allowed: bool,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
        loops_allowed: bool,
    ) -> Result<Self, ValidationReport> {
        let arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        let raw = RawDigraph { n, arcs: arcs.clone(), loops_allowed };
        let report = validate(&RawInstance::Digraph(raw));
        if !report.is_valid() {
            return Err(report);
        }
        Ok(Self::from_set(n, arcs.into_iter().collect(), loops_allowed))
    }

    /// Loop-free digraph from an arc list.
    pub fn loop_free(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ValidationReport> {
        Self::new(n, arcs, false)
    }

    pub fn from_raw(raw: &RawDigraph) -> Result<Self, ValidationReport> {
        Self::new(raw.n, raw.arcs.iter().copied(), raw.loops_allowed)
    }

    pub(crate) fn from_set(n: usize, arcs: BTreeSet<(usize, usize)>, loops_allowed: bool) -> Self {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(a, b) in &arcs {
            if a != b {
                out_adj[a].push(b);
                in_adj[b].push(a);
            }
        }
        for list in in_adj.iter_mut() {
            list.sort_unstable();
        }
        Digraph { n, arcs, loops_allowed, out_adj, in_adj }
    }

    pub fn arcless(n: usize) -> Self {
        assert!(n >= 1);
        Self::from_set(n, BTreeSet::new(), false)
    }

    pub fn complete(n: usize) -> Self {
        assert!(n >= 1);
        let arcs = (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)));
        Self::from_set(n, arcs.collect(), false)
    }

    /// Directed cycle `v_1 -> v_2 -> ... -> v_n -> v_1`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 2);
        Self::from_set(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), false)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn loops_allowed(&self) -> bool {
        self.loops_allowed
    }

    /// All stored arcs, loops included, in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    /// Non-loop arcs in lexicographic order.
    pub fn proper_arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied().filter(|&(a, b)| a != b)
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn proper_arc_count(&self) -> usize {
        self.arcs.iter().filter(|&&(a, b)| a != b).count()
    }

    pub fn has_loops(&self) -> bool {
        self.arcs.iter().any(|&(a, b)| a == b)
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.arcs.contains(&(a, b))
    }

    /// Sorted out-neighbors, loops excluded.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    /// Sorted in-neighbors, loops excluded.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn without_arc(&self, a: usize, b: usize) -> Self {
        let mut arcs = self.arcs.clone();
        arcs.remove(&(a, b));
        Self::from_set(self.n, arcs, self.loops_allowed)
    }

    pub fn without_loops(&self) -> Self {
        let arcs = self.proper_arcs().collect();
        Self::from_set(self.n, arcs, false)
    }

    /// Same digraph with a loop added at every listed vertex.
    pub fn with_loops(&self, at: impl IntoIterator<Item = usize>) -> Self {
        let mut arcs = self.arcs.clone();
        for v in at {
            assert!(v < self.n);
            arcs.insert((v, v));
        }
        Self::from_set(self.n, arcs, true)
    }

    /// Subdigraph induced by `keep` (sorted, distinct); vertex `keep[i]` becomes `i`.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]))
            .collect();
        Self::from_set(keep.len(), arcs, self.loops_allowed)
    }
}

/// An element of `B_n`, the `n x n` matrices over `{0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroOneMatrix {
    n: usize,
    entries: Vec<bool>,
}

impl ZeroOneMatrix {
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self, ValidationReport> {
        let report = validate(&RawInstance::Matrix(RawMatrix { rows: rows.to_vec() }));
        if !report.is_valid() {
            return Err(report);
        }
        let n = rows.len();
        let entries = rows.iter().flat_map(|r| r.iter().map(|&x| x == 1)).collect();
        Ok(ZeroOneMatrix { n, entries })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        assert!(n >= 1);
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        ZeroOneMatrix { n, entries }
    }

    /// Row-major bit `i * n + j` of `bits` is entry `(i, j)`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(n * n <= 64);
        Self::from_fn(n, |i, j| bits >> (i * n + j) & 1 == 1)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| i == j)
    }

    pub fn ones(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }

    /// `A + I` over the Boolean algebra.
    pub fn plus_identity(&self) -> Self {
        Self::from_fn(self.n, |i, j| i == j || self.get(i, j))
    }

    /// `A - I`: clears the main diagonal.
    pub fn minus_identity(&self) -> Self {
        Self::from_fn(self.n, |i, j| i != j && self.get(i, j))
    }

    pub fn has_positive_main_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i))
    }

    /// `P^T A Q` style reordering: entry `(i, j)` of the result is `A[rows[i], cols[j]]`.
    pub fn permuted(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(self.n, |i, j| self.get(rows[i], cols[j]))
    }

    /// The associated digraph `D(A)`: arc `i -> j` per one entry, diagonal ones become loops.
    pub fn digraph(&self) -> Digraph {
        let arcs = (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.get(i, j))
            .collect();
        Digraph::from_set(self.n, arcs, true)
    }

    /// Adjacency matrix `M(D)`, loops included.
    pub fn of_digraph(d: &Digraph) -> Self {
        Self::from_fn(d.n(), |i, j| d.has_arc(i, j))
    }

    pub fn is_zero_block(&self, rows: &[usize], cols: &[usize]) -> bool {
        rows.iter().all(|&i| cols.iter().all(|&j| !self.get(i, j)))
    }
}

impl fmt::Display for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.n {
                write!(f, "{}", self.get(i, j) as u8)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_is_valid() {
        let raw = RawBipartite { n: 1, edges: vec![(Vertex::U(0), Vertex::W(0))] };
        assert!(validate(&RawInstance::Bipartite(raw)).is_valid());
    }

    #[test]
    fn intra_class_edge_is_reported() {
        let raw = RawBipartite { n: 2, edges: vec![(Vertex::U(0), Vertex::U(1))] };
        let report = validate(&RawInstance::Bipartite(raw));
        assert_eq!(
            report.violations,
            vec![Violation::IntraClassEdge { a: Vertex::U(0), b: Vertex::U(1) }]
        );
    }

    #[test]
    fn non_binary_entry_is_reported() {
        let raw = RawMatrix { rows: vec![vec![1, 2], vec![0, 1]] };
        let report = validate(&RawInstance::Matrix(raw));
        assert_eq!(
            report.violations,
            vec![Violation::NonBinaryEntry { row: 0, col: 1, value: 2 }]
        );
    }

    #[test]
    fn every_violation_is_listed() {
        let raw = RawDigraph { n: 2, arcs: vec![(0, 0), (0, 1), (0, 1), (0, 5)], loops_allowed: false };
        let report = validate(&RawInstance::Digraph(raw));
        assert_eq!(report.violations.len(), 3);
        assert!(report.to_string().starts_with("invalid: "));
    }

    #[test]
    fn ragged_matrix_is_not_square() {
        let raw = RawMatrix { rows: vec![vec![1, 0], vec![1]] };
        let report = validate(&RawInstance::Matrix(raw));
        assert!(matches!(report.violations[0], Violation::NotSquare { row: 1, .. }));
    }

    #[test]
    fn loops_are_ignored_by_adjacency() {
        let d = Digraph::new(2, [(0, 0), (0, 1)], true).unwrap();
        assert_eq!(d.out_degree(0), 1);
        assert_eq!(d.in_degree(0), 0);
        assert_eq!(d.proper_arc_count(), 1);
        assert!(d.has_loops());
    }

    #[test]
    fn cycle_c6_matches_hand_edge_list() {
        let c6 = BipartiteGraph::cycle(3);
        let expected = [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (2, 0)];
        assert_eq!(c6.edge_count(), 6);
        for (u, w) in expected {
            assert!(c6.has_edge(Edge::new(u, w)));
        }
        assert!(c6.is_connected());
    }

    #[test]
    fn components_of_perfect_matching() {
        let g = BipartiteGraph::perfect_matching(3);
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[1], (vec![1], vec![1]));
    }

    #[test]
    fn matrix_display_round_trips_rows() {
        let a = ZeroOneMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(a.to_string(), "11\n01");
        assert_eq!(ZeroOneMatrix::from_rows(&a.rows()).unwrap(), a);
    }
}
