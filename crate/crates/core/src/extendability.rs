//! Bipartite-side machinery: k-extendability by three routes, minimality, bipartite
//! ear decompositions, alternating path systems, elementary components and the
//! degree/forest audits for minimal instances.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::connectivity::{self, ConnectivityError, Ear, EarDecompositionD};
use crate::correspondence::{digraph_of, CorrespondenceError, CorrespondenceMap};
use crate::graph::{BipartiteGraph, Digraph, Edge, Vertex};
use crate::matching::{
    classify_edges, enumerate_matchings, enumerate_perfect_matchings, extends_to_perfect,
    first_perfect_matching, has_perfect_matching, EdgeTag, Matching, MatchingError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendabilityError {
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error(transparent)]
    Correspondence(#[from] CorrespondenceError),
    #[error(transparent)]
    Connectivity(#[from] ConnectivityError),
    #[error("order {n} exceeds the exhaustive limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("k = {k} out of range for n = {n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("graph is not {0}-extendable")]
    NotKExtendable(usize),
    #[error("graph is not minimal {0}-extendable")]
    NotMinimal(usize),
    #[error("expected a U-vertex and a W-vertex")]
    WrongClass,
    #[error("start edge {0} is not an edge of the graph")]
    StartEdgeMissing(Edge),
    #[error("component correspondence fails: {0}")]
    ComponentMismatch(String),
}

/// Why a graph is (or is not) `k`-extendable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendWitness {
    /// The route's defining condition was checked in full.
    Verified,
    Disconnected,
    NoPerfectMatching,
    NoMatchingOfSizeK,
    /// A size-`k` matching contained in no perfect matching.
    NonExtendable(Matching),
    /// `X ⊆ U` with `|N(X)| < |X| + k`.
    Deficient { x: Vec<usize>, neighborhood: Vec<usize> },
    /// A separator of `D(G, M)` of order less than `k`.
    Separator(Vec<usize>),
    /// `D(G, M)` has at most `k` vertices.
    TooFewVertices,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendCheck {
    pub holds: bool,
    pub witness: ExtendWitness,
    /// Set when `k` exceeds `(|V(G)| - 1) / 2`, which only happens for `K_2` with `k = 1`.
    pub beyond_cap: bool,
}

impl ExtendCheck {
    fn new(holds: bool, witness: ExtendWitness, n: usize, k: usize) -> Self {
        ExtendCheck { holds, witness, beyond_cap: k >= 1 && k > n.saturating_sub(1) }
    }
}

fn check_k(n: usize, k: usize) -> Result<(), ExtendabilityError> {
    if k + 1 > n && !(n == 1 && k == 1) {
        return Err(ExtendabilityError::KOutOfRange { k, n });
    }
    Ok(())
}

pub const ORACLE_LIMIT: usize = 9;
pub const NEIGHBORHOOD_LIMIT: usize = 20;

/// Definitional check: connected (for `k >= 1`), has a size-`k` matching, and every
/// size-`k` matching extends to a perfect matching.
pub fn is_k_extendable_oracle(g: &BipartiteGraph, k: usize) -> Result<ExtendCheck, ExtendabilityError> {
    let n = g.n();
    if n > ORACLE_LIMIT {
        return Err(ExtendabilityError::TooLarge { n, limit: ORACLE_LIMIT });
    }
    check_k(n, k)?;
    if k == 0 {
        let holds = has_perfect_matching(g);
        let witness = if holds { ExtendWitness::Verified } else { ExtendWitness::NoPerfectMatching };
        return Ok(ExtendCheck::new(holds, witness, n, k));
    }
    if !g.is_connected() {
        return Ok(ExtendCheck::new(false, ExtendWitness::Disconnected, n, k));
    }
    let mut any = false;
    for m in enumerate_matchings(g, k) {
        any = true;
        if !extends_to_perfect(g, &m) {
            return Ok(ExtendCheck::new(false, ExtendWitness::NonExtendable(m), n, k));
        }
    }
    if !any {
        return Ok(ExtendCheck::new(false, ExtendWitness::NoMatchingOfSizeK, n, k));
    }
    Ok(ExtendCheck::new(true, ExtendWitness::Verified, n, k))
}

/// `k`-extendability read off the connectivity of `D(G, M)`.
///
/// For `k = 1` strongness is used, so a single vertex (from `K_2`) counts.
pub fn is_k_extendable_via_digraph(
    g: &BipartiteGraph,
    m: &Matching,
    k: usize,
) -> Result<ExtendCheck, ExtendabilityError> {
    let n = g.n();
    check_k(n, k)?;
    if !m.is_perfect() || !m.is_matching_of(g) {
        return Err(MatchingError::NotPerfect { size: m.len(), n }.into());
    }
    if k == 0 {
        return Ok(ExtendCheck::new(true, ExtendWitness::Verified, n, k));
    }
    let (d, _) = digraph_of(g, m)?;
    if k == 1 && n == 1 {
        return Ok(ExtendCheck::new(true, ExtendWitness::Verified, n, k));
    }
    let check = connectivity::is_k_strong(&d, k);
    let witness = match check.witness {
        connectivity::StrongWitness::Connectivity { .. } => ExtendWitness::Verified,
        connectivity::StrongWitness::Separator(s) => ExtendWitness::Separator(s),
        connectivity::StrongWitness::TooFewVertices { .. } => ExtendWitness::TooFewVertices,
    };
    Ok(ExtendCheck::new(check.holds, witness, n, k))
}

fn neighborhood(g: &BipartiteGraph, x: &[usize]) -> Vec<usize> {
    let set: BTreeSet<usize> = x.iter().flat_map(|&u| g.neighbors_of_u(u).iter().copied()).collect();
    set.into_iter().collect()
}

/// The neighborhood condition `|N(X)| >= |X| + k` for every non-empty `X ⊆ U` with
/// `|X| <= n - k`, plus connectivity for `k >= 1`. Violating sets are searched by size,
/// then lexicographically.
pub fn is_k_extendable_via_neighborhood(
    g: &BipartiteGraph,
    k: usize,
) -> Result<ExtendCheck, ExtendabilityError> {
    let n = g.n();
    if n > NEIGHBORHOOD_LIMIT {
        return Err(ExtendabilityError::TooLarge { n, limit: NEIGHBORHOOD_LIMIT });
    }
    check_k(n, k)?;
    if k >= 1 && !g.is_connected() {
        return Ok(ExtendCheck::new(false, ExtendWitness::Disconnected, n, k));
    }
    for size in 1..=n.saturating_sub(k) {
        let mut x: Vec<usize> = (0..size).collect();
        loop {
            let nx = neighborhood(g, &x);
            if nx.len() < size + k {
                let witness = ExtendWitness::Deficient { x, neighborhood: nx };
                return Ok(ExtendCheck::new(false, witness, n, k));
            }
            if !next_subset(&mut x, n) {
                break;
            }
        }
    }
    Ok(ExtendCheck::new(true, ExtendWitness::Verified, n, k))
}

fn next_subset(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Default route: no perfect matching or (for `k >= 1`) disconnected means false,
/// otherwise the digraph route with the first perfect matching.
pub fn is_k_extendable(g: &BipartiteGraph, k: usize) -> Result<ExtendCheck, ExtendabilityError> {
    let n = g.n();
    check_k(n, k)?;
    let Some(m) = first_perfect_matching(g) else {
        return Ok(ExtendCheck::new(false, ExtendWitness::NoPerfectMatching, n, k));
    };
    if k >= 1 && !g.is_connected() {
        return Ok(ExtendCheck::new(false, ExtendWitness::Disconnected, n, k));
    }
    is_k_extendable_via_digraph(g, &m, k)
}

/// The largest `k` for which `g` is `k`-extendable; `0` without a perfect matching or
/// when disconnected. `K_2` gives `1`.
pub fn max_extendability(g: &BipartiteGraph) -> usize {
    let Some(m) = first_perfect_matching(g) else {
        return 0;
    };
    if g.n() == 1 {
        return 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let (d, _) = digraph_of(g, &m).expect("perfect matching");
    connectivity::vertex_connectivity(&d).min(g.n() - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalExtend {
    Minimal,
    NotKExtendable,
    /// An edge whose removal keeps the graph `k`-extendable.
    Deletable(Edge),
}

impl MinimalExtend {
    pub fn is_minimal(&self) -> bool {
        matches!(self, MinimalExtend::Minimal)
    }
}

/// `k`-extendable, and `G - e` is not `k`-extendable for any edge `e`.
pub fn is_minimal_k_extendable(g: &BipartiteGraph, k: usize) -> Result<MinimalExtend, ExtendabilityError> {
    if !is_k_extendable(g, k)?.holds {
        return Ok(MinimalExtend::NotKExtendable);
    }
    for e in g.edges() {
        if is_k_extendable(&g.without_edge(e), k)?.holds {
            return Ok(MinimalExtend::Deletable(e));
        }
    }
    Ok(MinimalExtend::Minimal)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub digraph: Digraph,
    pub minimal_strong: connectivity::MinimalStrong,
    pub holds: bool,
}

/// For minimal `k`-extendable `g`, checks that `D(G, M)` is minimal `k`-strong.
pub fn minimality_transfer_check(
    g: &BipartiteGraph,
    m: &Matching,
    k: usize,
) -> Result<TransferReport, ExtendabilityError> {
    if g.n() < k + 1 {
        return Err(ExtendabilityError::KOutOfRange { k, n: g.n() });
    }
    if !is_minimal_k_extendable(g, k)?.is_minimal() {
        return Err(ExtendabilityError::NotMinimal(k));
    }
    let (digraph, _) = digraph_of(g, m)?;
    let minimal_strong = connectivity::is_minimal_k_strong(&digraph, k);
    let holds = minimal_strong.is_minimal();
    Ok(TransferReport { digraph, minimal_strong, holds })
}

fn edge_between(a: Vertex, b: Vertex) -> Option<Edge> {
    match (a, b) {
        (Vertex::U(u), Vertex::W(w)) | (Vertex::W(w), Vertex::U(u)) => Some(Edge::new(u, w)),
        _ => None,
    }
}

fn path_edges(path: &[Vertex]) -> Option<Vec<Edge>> {
    path.windows(2).map(|p| edge_between(p[0], p[1])).collect()
}

/// Start edge `e` followed by odd paths `P_1, ..., P_r`, each joining two vertices of
/// what came before through new vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarDecompositionB {
    pub start: Edge,
    pub ears: Vec<Vec<Vertex>>,
    /// The perfect matching restricting to a perfect matching of every prefix.
    pub matching: Matching,
}

impl EarDecompositionB {
    pub fn r(&self) -> usize {
        self.ears.len()
    }

    /// Re-checks the attachment rules and edge-exact reassembly of `g`.
    pub fn verify(&self, g: &BipartiteGraph) -> Result<(), String> {
        if !g.has_edge(self.start) {
            return Err(format!("start edge {} missing", self.start));
        }
        let mut covered: BTreeSet<Vertex> = [Vertex::U(self.start.u), Vertex::W(self.start.w)].into();
        let mut edges: BTreeSet<Edge> = [self.start].into();
        for (i, ear) in self.ears.iter().enumerate() {
            let i = i + 1;
            let Some(pe) = path_edges(ear) else {
                return Err(format!("P_{i} is not a bipartite path"));
            };
            if pe.len() % 2 == 0 {
                return Err(format!("P_{i} has even length {}", pe.len()));
            }
            let distinct: BTreeSet<&Vertex> = ear.iter().collect();
            if distinct.len() != ear.len() {
                return Err(format!("P_{i} repeats a vertex"));
            }
            let (s, t) = (ear[0], *ear.last().unwrap());
            if !covered.contains(&s) || !covered.contains(&t) {
                return Err(format!("P_{i} does not start and end on earlier vertices"));
            }
            if ear[1..ear.len() - 1].iter().any(|v| covered.contains(v)) {
                return Err(format!("P_{i} meets earlier vertices internally"));
            }
            for e in pe {
                if !g.has_edge(e) {
                    return Err(format!("P_{i}: {e} not an edge"));
                }
                if !edges.insert(e) {
                    return Err(format!("P_{i}: {e} reused"));
                }
            }
            covered.extend(ear.iter().copied());
        }
        if covered.len() != 2 * g.n() || edges.len() != g.edge_count() {
            return Err("ears do not reassemble the graph".into());
        }
        if !has_prefix_property(self, &self.matching) {
            return Err("matching does not restrict to every prefix".into());
        }
        Ok(())
    }

    /// Vertex sets of the prefixes `G_0, G_1, ..., G_r`, as sorted U and W index lists.
    fn prefixes(&self) -> Vec<(BTreeSet<Vertex>, BTreeSet<Edge>)> {
        let mut covered: BTreeSet<Vertex> = [Vertex::U(self.start.u), Vertex::W(self.start.w)].into();
        let mut edges: BTreeSet<Edge> = [self.start].into();
        let mut out = vec![(covered.clone(), edges.clone())];
        for ear in &self.ears {
            covered.extend(ear.iter().copied());
            edges.extend(path_edges(ear).unwrap_or_default());
            out.push((covered.clone(), edges.clone()));
        }
        out
    }

    /// Maps the ears to an ear decomposition of `D(G, M)`: the first odd path closes
    /// into the start cycle, each later ear `u_a w_c1 u_c1 ... w_b` becomes the
    /// directed path `a -> c1 -> ... -> b`.
    pub fn to_digraph_ears(&self, map: &CorrespondenceMap) -> EarDecompositionD {
        let ears = self
            .ears
            .iter()
            .map(|ear| {
                let oriented: Vec<Vertex> = if ear[0].is_u() {
                    ear.clone()
                } else {
                    ear.iter().rev().copied().collect()
                };
                let mut vertices: Vec<usize> = oriented
                    .iter()
                    .filter(|v| v.is_u())
                    .map(|v| map.vertex_of_u(v.index()))
                    .collect();
                vertices.push(map.vertex_of_w(oriented.last().unwrap().index()));
                Ear { vertices }
            })
            .collect();
        EarDecompositionD { ears }
    }
}

/// Whether `m ∩ E(G_i)` is a perfect matching of every prefix `G_i`.
pub fn has_prefix_property(dec: &EarDecompositionB, m: &Matching) -> bool {
    dec.prefixes().iter().all(|(vertices, edges)| {
        let inside: Vec<Edge> = m.edges().iter().filter(|e| edges.contains(e)).copied().collect();
        inside.len() * 2 == vertices.len()
    })
}

/// All perfect matchings of `g` with the prefix property for `dec`.
pub fn prefix_matchings(g: &BipartiteGraph, dec: &EarDecompositionB) -> Vec<Matching> {
    enumerate_perfect_matchings(g).filter(|m| has_prefix_property(dec, m)).collect()
}

/// A bipartite ear decomposition starting with `start_edge`, built from an ear
/// decomposition of `D(G, M)` for a perfect matching `M` through the start edge.
pub fn bipartite_ear_decomposition(
    g: &BipartiteGraph,
    start_edge: Edge,
) -> Result<EarDecompositionB, ExtendabilityError> {
    if !g.has_edge(start_edge) {
        return Err(ExtendabilityError::StartEdgeMissing(start_edge));
    }
    if !is_k_extendable(g, 1)?.holds {
        return Err(ExtendabilityError::NotKExtendable(1));
    }
    let n = g.n();
    // a perfect matching through the start edge, which 1-extendability guarantees
    let mut u_alive = vec![true; n];
    let mut w_alive = vec![true; n];
    u_alive[start_edge.u] = false;
    w_alive[start_edge.w] = false;
    let rest = BipartiteGraph::new(
        n,
        g.edges().filter(|e| u_alive[e.u] && w_alive[e.w]).chain([start_edge]),
    )
    .expect("subgraph");
    let m = first_perfect_matching(&rest).expect("start edge extends");
    let (d, map) = digraph_of(g, &m)?;
    if n == 1 {
        return Ok(EarDecompositionB { start: start_edge, ears: Vec::new(), matching: m });
    }
    let a = map.vertex_of_u(start_edge.u);
    let cycle = connectivity::shortest_cycle_through(&d, a).ok_or(ConnectivityError::NoCycle)?;
    let dec = connectivity::ear_decomposition_digraph(&d, Some(&cycle))?;
    let ears = dec
        .ears
        .iter()
        .map(|ear| {
            let v = &ear.vertices;
            let mut path = Vec::with_capacity(2 * v.len());
            for (i, &x) in v.iter().enumerate() {
                let e = map.matching_edge_of_vertex(x);
                if i == 0 {
                    path.push(Vertex::U(e.u));
                } else if i + 1 == v.len() {
                    path.push(Vertex::W(e.w));
                } else {
                    path.push(Vertex::W(e.w));
                    path.push(Vertex::U(e.u));
                }
            }
            path
        })
        .collect();
    Ok(EarDecompositionB { start: start_edge, ears, matching: m })
}

/// `k` internally disjoint M-alternating `u`-`w` paths whose first and last edges lie
/// outside `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltPathSystem {
    pub matching: Matching,
    pub u: usize,
    pub w: usize,
    pub paths: Vec<Vec<Vertex>>,
}

impl AltPathSystem {
    /// Checks alternation, terminal edges, internal disjointness and the count.
    pub fn verify(&self, g: &BipartiteGraph, k: usize) -> Result<(), String> {
        if self.paths.len() != k {
            return Err(format!("expected {k} paths, found {}", self.paths.len()));
        }
        let (u, w) = (Vertex::U(self.u), Vertex::W(self.w));
        let mut inner = BTreeSet::new();
        for p in &self.paths {
            if p.first() != Some(&u) || p.last() != Some(&w) {
                return Err("path has wrong ends".into());
            }
            let Some(edges) = path_edges(p) else {
                return Err("not a bipartite path".into());
            };
            for (i, e) in edges.iter().enumerate() {
                if !g.has_edge(*e) {
                    return Err(format!("{e} is not an edge"));
                }
                if self.matching.contains(*e) != (i % 2 == 1) {
                    return Err(format!("path does not alternate at {e}"));
                }
            }
            if edges.len() % 2 == 0 {
                return Err("path does not end outside the matching".into());
            }
            for v in &p[1..p.len() - 1] {
                if !inner.insert(*v) {
                    return Err(format!("vertex {v} shared"));
                }
            }
        }
        Ok(())
    }
}

/// Pulls a directed path `a -> c_1 -> ... -> b` of `D(G, M)` back to
/// `u_a w_c1 u_c1 ... u_cm w_b`.
fn pull_back_path(map: &CorrespondenceMap, path: &[usize]) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(2 * path.len());
    for (i, &x) in path.iter().enumerate() {
        let e = map.matching_edge_of_vertex(x);
        if i > 0 {
            out.push(Vertex::W(e.w));
        }
        if i + 1 < path.len() {
            out.push(Vertex::U(e.u));
        }
    }
    out
}

/// Menger-type alternating paths: internally disjoint directed paths (or cycles
/// through one vertex when `uw ∈ M`) of `D(G, M)`, pulled back to `G`.
pub fn alternating_path_system(
    g: &BipartiteGraph,
    m: &Matching,
    u: Vertex,
    w: Vertex,
    k: usize,
) -> Result<AltPathSystem, ExtendabilityError> {
    let (Vertex::U(u), Vertex::W(w)) = (u, w) else {
        return Err(ExtendabilityError::WrongClass);
    };
    if u >= g.n() || w >= g.n() {
        return Err(ExtendabilityError::WrongClass);
    }
    if !is_k_extendable_via_digraph(g, m, k)?.holds {
        return Err(ExtendabilityError::NotKExtendable(k));
    }
    let (d, map) = digraph_of(g, m)?;
    let (a, b) = (map.vertex_of_u(u), map.vertex_of_w(w));
    let directed = if a == b {
        connectivity::cycles_through_vertex(&d, a, k)?
    } else {
        connectivity::menger_paths(&d, a, b, k)?.paths
    };
    let paths = directed.iter().map(|p| pull_back_path(&map, p)).collect();
    Ok(AltPathSystem { matching: m.clone(), u, w, paths })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieceKind {
    Elementary,
    FixedDouble,
}

/// An elementary component, or a fixed double edge on its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub kind: PieceKind,
    pub u: Vec<usize>,
    pub w: Vec<usize>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentMap {
    pub pieces: Vec<Piece>,
    pub matching: Matching,
    pub strong_components: Vec<Vec<usize>>,
    /// `bijection[i]` is the strong component matching `pieces[i]`.
    pub bijection: Vec<usize>,
}

impl ComponentMap {
    pub fn elementary(&self) -> impl Iterator<Item = &Piece> {
        self.pieces.iter().filter(|p| p.kind == PieceKind::Elementary)
    }

    pub fn fixed_double(&self) -> impl Iterator<Item = &Piece> {
        self.pieces.iter().filter(|p| p.kind == PieceKind::FixedDouble)
    }
}

/// Components of the subgraph of non-fixed edges, plus each fixed double edge on its own.
pub fn pieces(g: &BipartiteGraph) -> Result<Vec<Piece>, ExtendabilityError> {
    let tags = classify_edges(g)?;
    let allowed = BipartiteGraph::new(g.n(), tags.edges_with(EdgeTag::Allowed)).expect("subgraph");
    let mut out = Vec::new();
    for (u, w) in allowed.components() {
        let edges: Vec<Edge> = allowed.edges().filter(|e| u.binary_search(&e.u).is_ok()).collect();
        if !edges.is_empty() {
            out.push(Piece { kind: PieceKind::Elementary, u, w, edges });
        }
    }
    for e in tags.edges_with(EdgeTag::FixedDouble) {
        out.push(Piece { kind: PieceKind::FixedDouble, u: vec![e.u], w: vec![e.w], edges: vec![e] });
    }
    out.sort_by_key(|p| p.u[0]);
    Ok(out)
}

/// Elementary components with the bijection to the strong components of `D(G, M)`
/// for the first perfect matching.
pub fn elementary_components(g: &BipartiteGraph) -> Result<ComponentMap, ExtendabilityError> {
    let m = first_perfect_matching(g).ok_or(MatchingError::NoPerfectMatching)?;
    elementary_components_with(g, &m)
}

/// As [`elementary_components`] for a given perfect matching; fails if a piece does
/// not carry a perfect matching from `m` or the pieces do not match the strong
/// components one to one.
pub fn elementary_components_with(g: &BipartiteGraph, m: &Matching) -> Result<ComponentMap, ExtendabilityError> {
    let pieces = pieces(g)?;
    let (d, map) = digraph_of(g, m)?;
    let strong_components = connectivity::strong_components(&d);
    let scc_index: BTreeMap<&[usize], usize> =
        strong_components.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut bijection = Vec::with_capacity(pieces.len());
    for p in &pieces {
        if !piece_carries_matching(p, m) {
            return Err(ExtendabilityError::ComponentMismatch(format!(
                "matching is not perfect on the piece at u{}",
                p.u[0] + 1
            )));
        }
        let mut vertices: Vec<usize> = p.u.iter().map(|&u| map.vertex_of_u(u)).collect();
        vertices.sort_unstable();
        let Some(&i) = scc_index.get(vertices.as_slice()) else {
            return Err(ExtendabilityError::ComponentMismatch(format!(
                "piece at u{} is not a strong component",
                p.u[0] + 1
            )));
        };
        bijection.push(i);
    }
    let distinct: BTreeSet<usize> = bijection.iter().copied().collect();
    if distinct.len() != strong_components.len() || bijection.len() != strong_components.len() {
        return Err(ExtendabilityError::ComponentMismatch("pieces and strong components differ in number".into()));
    }
    Ok(ComponentMap { pieces, matching: m.clone(), strong_components, bijection })
}

/// Whether the matching edges inside the piece form a perfect matching of it.
pub fn piece_carries_matching(p: &Piece, m: &Matching) -> bool {
    let inside = m
        .edges()
        .iter()
        .filter(|e| p.u.binary_search(&e.u).is_ok() && p.w.binary_search(&e.w).is_ok())
        .filter(|e| p.edges.contains(e))
        .count();
    inside == p.u.len() && inside == p.w.len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LouReport {
    pub k: usize,
    /// Vertices of degree `k + 1` overall, in U and in W.
    pub total: usize,
    pub in_u: usize,
    pub in_w: usize,
    pub holds: bool,
}

/// Degree-`(k+1)` counts of a minimal `k`-extendable graph against the bounds
/// `2k + 2` overall and `k + 1` per class.
pub fn lou_degree_audit(g: &BipartiteGraph, k: usize) -> Result<LouReport, ExtendabilityError> {
    if !is_minimal_k_extendable(g, k)?.is_minimal() {
        return Err(ExtendabilityError::NotMinimal(k));
    }
    let in_u = (0..g.n()).filter(|&u| g.degree(Vertex::U(u)) == k + 1).count();
    let in_w = (0..g.n()).filter(|&w| g.degree(Vertex::W(w)) == k + 1).count();
    let total = in_u + in_w;
    Ok(LouReport { k, total, in_u, in_w, holds: total >= 2 * k + 2 && in_u > k && in_w > k })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestReport {
    pub k: usize,
    /// Edges whose ends both have degree at least `k + 2`.
    pub qualifying: Vec<Edge>,
    /// A cycle among the qualifying edges, if any.
    pub cycle: Option<Vec<Edge>>,
    /// An anti-directed trail among the high-degree arcs of `D(G, M)` and its pull-back.
    pub trail: Option<(Vec<(usize, usize)>, Vec<Edge>)>,
    /// The pulled-back trail, when present, is a closed trail of qualifying edges.
    pub trail_is_closed: bool,
    pub is_forest: bool,
}

fn node(v: Vertex, n: usize) -> usize {
    match v {
        Vertex::U(i) => i,
        Vertex::W(j) => n + j,
    }
}

/// A cycle in the edge set, found by union-find plus a forest path.
fn find_cycle(n: usize, edges: &[Edge]) -> Option<Vec<Edge>> {
    let mut parent: Vec<usize> = (0..2 * n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut forest: Vec<Vec<(usize, Edge)>> = vec![Vec::new(); 2 * n];
    for &e in edges {
        let (a, b) = (e.u, n + e.w);
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            forest[a].push((b, e));
            forest[b].push((a, e));
            continue;
        }
        let mut prev: Vec<Option<(usize, Edge)>> = vec![None; 2 * n];
        let mut stack = vec![a];
        let mut seen = vec![false; 2 * n];
        seen[a] = true;
        while let Some(x) = stack.pop() {
            for &(y, f) in &forest[x] {
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = Some((x, f));
                    stack.push(y);
                }
            }
        }
        let mut cycle = vec![e];
        let mut at = b;
        while at != a {
            let (p, f) = prev[at].expect("same tree");
            cycle.push(f);
            at = p;
        }
        return Some(cycle);
    }
    None
}

/// Whether the edges, in order, form a closed trail: distinct edges, each sharing a
/// vertex with the next, entering and leaving every visit through different ends.
pub fn is_closed_trail(n: usize, edges: &[Edge]) -> bool {
    let m = edges.len();
    if m < 2 || edges.iter().collect::<BTreeSet<_>>().len() != m {
        return false;
    }
    let ends = |e: Edge| [node(Vertex::U(e.u), n), node(Vertex::W(e.w), n)];
    let shared: Option<Vec<usize>> = (0..m)
        .map(|i| {
            let (a, b) = (ends(edges[i]), ends(edges[(i + 1) % m]));
            a.iter().copied().find(|x| b.contains(x))
        })
        .collect();
    let Some(shared) = shared else { return false };
    // each edge is entered at one end and left at the other
    (0..m).all(|i| shared[(i + m - 1) % m] != shared[i])
}

/// The subgraph of edges with both ends of degree at least `k + 2` in a minimal
/// `k`-extendable graph, checked for cycles. An anti-directed trail among the
/// high-degree arcs of `D(G, M)` is pulled back as a closed trail of such edges.
pub fn lou_forest_check(g: &BipartiteGraph, k: usize) -> Result<ForestReport, ExtendabilityError> {
    if !is_minimal_k_extendable(g, k)?.is_minimal() {
        return Err(ExtendabilityError::NotMinimal(k));
    }
    let n = g.n();
    let qualifying: Vec<Edge> = g
        .edges()
        .filter(|e| g.degree(Vertex::U(e.u)) >= k + 2 && g.degree(Vertex::W(e.w)) >= k + 2)
        .collect();
    let cycle = find_cycle(n, &qualifying);
    let m = first_perfect_matching(g).ok_or(MatchingError::NoPerfectMatching)?;
    let (d, map) = digraph_of(g, &m)?;
    let trail = connectivity::anti_directed_trail_find(&d, k).map(|arcs| {
        let edges: Vec<Edge> = arcs
            .iter()
            .map(|&(a, b)| map.edge_of_arc(a, b).expect("arc of D(G, M)"))
            .collect();
        (arcs, edges)
    });
    let trail_is_closed = trail
        .as_ref()
        .map_or(true, |(_, edges)| is_closed_trail(n, edges) && edges.iter().all(|e| qualifying.contains(e)));
    Ok(ForestReport { k, is_forest: cycle.is_none(), qualifying, cycle, trail, trail_is_closed })
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

    fn c6() -> BipartiteGraph {
        BipartiteGraph::cycle(3)
    }

    #[test]
    fn oracle_examples() {
        assert!(is_k_extendable_oracle(&c6(), 1).unwrap().holds);
        let check = is_k_extendable_oracle(&c6(), 2).unwrap();
        assert!(!check.holds);
        let ExtendWitness::NonExtendable(m) = check.witness else { panic!() };
        assert_eq!(m.edges(), &[Edge::new(0, 0), Edge::new(1, 2)]);
        assert!(is_k_extendable_oracle(&BipartiteGraph::complete(3), 2).unwrap().holds);
    }

    #[test]
    fn digraph_route_examples() {
        let m = Matching::canonical(3);
        assert!(is_k_extendable_via_digraph(&c6(), &m, 1).unwrap().holds);
        assert!(!is_k_extendable_via_digraph(&c6(), &m, 2).unwrap().holds);
        for n in 3..=4 {
            let k = BipartiteGraph::complete(n);
            assert!(is_k_extendable_via_digraph(&k, &Matching::canonical(n), n - 1).unwrap().holds);
        }
    }

    #[test]
    fn neighborhood_examples() {
        assert!(is_k_extendable_via_neighborhood(&BipartiteGraph::complete(3), 2).unwrap().holds);
        let c = is_k_extendable_via_neighborhood(&c6(), 2).unwrap();
        assert_eq!(c.witness, ExtendWitness::Deficient { x: vec![0], neighborhood: vec![0, 1] });
        let c = is_k_extendable_via_neighborhood(&p4(), 1).unwrap();
        assert_eq!(c.witness, ExtendWitness::Deficient { x: vec![1], neighborhood: vec![1] });
    }

    #[test]
    fn k2_is_flagged() {
        let k2 = BipartiteGraph::complete(1);
        let c = is_k_extendable(&k2, 1).unwrap();
        assert!(c.holds && c.beyond_cap);
        assert!(is_k_extendable_oracle(&k2, 1).unwrap().holds);
        assert!(is_k_extendable_via_neighborhood(&k2, 1).unwrap().holds);
        assert_eq!(max_extendability(&k2), 1);
    }

    #[test]
    fn k_range_is_enforced() {
        assert_eq!(
            is_k_extendable(&c6(), 3),
            Err(ExtendabilityError::KOutOfRange { k: 3, n: 3 })
        );
    }

    #[test]
    fn max_extendability_examples() {
        assert_eq!(max_extendability(&BipartiteGraph::complete(3)), 2);
        assert_eq!(max_extendability(&c6()), 1);
        assert_eq!(max_extendability(&p4()), 0);
        assert_eq!(max_extendability(&graph(2, &[(0, 1)])), 0);
    }

    #[test]
    fn minimality_examples() {
        assert_eq!(is_minimal_k_extendable(&c6(), 1).unwrap(), MinimalExtend::Minimal);
        assert!(matches!(
            is_minimal_k_extendable(&BipartiteGraph::complete(3), 1).unwrap(),
            MinimalExtend::Deletable(_)
        ));
        let report = minimality_transfer_check(&c6(), &Matching::canonical(3), 1).unwrap();
        assert!(report.holds);
        assert_eq!(report.digraph, Digraph::cycle(3));
    }

    #[test]
    fn ear_decomposition_examples() {
        for e in c6().edges() {
            let dec = bipartite_ear_decomposition(&c6(), e).unwrap();
            assert_eq!(dec.r(), 1);
            assert_eq!(dec.ears[0].len(), 6);
            dec.verify(&c6()).unwrap();
        }
        let k22 = BipartiteGraph::complete(2);
        let dec = bipartite_ear_decomposition(&k22, Edge::new(0, 0)).unwrap();
        assert_eq!(dec.r(), 1);
        assert_eq!(dec.ears[0].len(), 4);
        dec.verify(&k22).unwrap();
        assert_eq!(prefix_matchings(&k22, &dec), vec![dec.matching.clone()]);
        assert_eq!(
            bipartite_ear_decomposition(&p4(), Edge::new(0, 0)),
            Err(ExtendabilityError::NotKExtendable(1))
        );
    }

    #[test]
    fn ear_decomposition_maps_to_digraph() {
        let g = BipartiteGraph::complete(3);
        let dec = bipartite_ear_decomposition(&g, Edge::new(1, 2)).unwrap();
        dec.verify(&g).unwrap();
        let (d, map) = digraph_of(&g, &dec.matching).unwrap();
        dec.to_digraph_ears(&map).verify(&d).unwrap();
    }

    #[test]
    fn alternating_paths_examples() {
        let m = Matching::canonical(3);
        let ps = alternating_path_system(&c6(), &m, Vertex::U(0), Vertex::W(0), 1).unwrap();
        let expected = vec![
            Vertex::U(0), Vertex::W(1), Vertex::U(1), Vertex::W(2), Vertex::U(2), Vertex::W(0),
        ];
        assert_eq!(ps.paths, vec![expected]);
        ps.verify(&c6(), 1).unwrap();
        let k33 = BipartiteGraph::complete(3);
        let ps = alternating_path_system(&k33, &m, Vertex::U(0), Vertex::W(1), 2).unwrap();
        ps.verify(&k33, 2).unwrap();
        assert!(matches!(
            alternating_path_system(&p4(), &Matching::canonical(2), Vertex::U(0), Vertex::W(0), 1),
            Err(ExtendabilityError::NotKExtendable(1))
        ));
        assert_eq!(
            alternating_path_system(&c6(), &m, Vertex::W(0), Vertex::W(0), 1),
            Err(ExtendabilityError::WrongClass)
        );
    }

    #[test]
    fn component_examples() {
        let map = elementary_components(&p4()).unwrap();
        assert_eq!(map.elementary().count(), 0);
        assert_eq!(map.fixed_double().count(), 2);
        assert_eq!(map.strong_components.len(), 2);

        let g = graph(3, &[(0, 0), (1, 1), (0, 1), (1, 0), (2, 2), (1, 2)]);
        let map = elementary_components(&g).unwrap();
        let elementary: Vec<&Piece> = map.elementary().collect();
        assert_eq!(elementary.len(), 1);
        assert_eq!((elementary[0].u.clone(), elementary[0].w.clone()), (vec![0, 1], vec![0, 1]));
        let doubles: Vec<&Piece> = map.fixed_double().collect();
        assert_eq!(doubles[0].edges, vec![Edge::new(2, 2)]);
        assert_eq!(map.strong_components, vec![vec![0, 1], vec![2]]);

        let map = elementary_components(&c6()).unwrap();
        assert_eq!(map.pieces.len(), 1);
        assert_eq!(map.pieces[0].edges.len(), 6);
    }

    #[test]
    fn lou_examples() {
        let r = lou_degree_audit(&c6(), 1).unwrap();
        assert_eq!((r.total, r.in_u, r.in_w, r.holds), (6, 3, 3, true));
        assert_eq!(lou_degree_audit(&BipartiteGraph::complete(3), 1), Err(ExtendabilityError::NotMinimal(1)));
        let f = lou_forest_check(&c6(), 1).unwrap();
        assert!(f.is_forest && f.qualifying.is_empty() && f.trail_is_closed);
        assert_eq!(lou_forest_check(&BipartiteGraph::complete(3), 1), Err(ExtendabilityError::NotMinimal(1)));
    }

    #[test]
    fn closed_trail_detection() {
        let square = [Edge::new(0, 0), Edge::new(1, 0), Edge::new(1, 1), Edge::new(0, 1)];
        assert!(is_closed_trail(2, &square));
        assert!(!is_closed_trail(2, &square[..3]));
        assert_eq!(find_cycle(2, &square).map(|c| c.len()), Some(4));
    }
}
