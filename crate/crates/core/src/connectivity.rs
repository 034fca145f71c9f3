//! Digraph connectivity: strong components, vertex connectivity, Menger path systems,
//! cycles through a vertex, ear decompositions, minimality, one-way pairs and
//! anti-directed trails.
//!
//! Loops never take part in any computation here.

use std::collections::{BTreeSet, BinaryHeap, VecDeque};
use std::cmp::Reverse;
use std::fmt;

use thiserror::Error;

use crate::flow::{self, SplitNetwork};
use crate::graph::Digraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("vertex v{0} out of range")]
    VertexOutOfRange(usize),
    #[error("source and target coincide")]
    SameEndpoints,
    #[error("only {found} of {requested} internally disjoint paths exist; cut {cut:?}")]
    InsufficientPaths {
        requested: usize,
        found: usize,
        /// Vertices of a minimum vertex cut (0-based); a direct arc is counted separately.
        cut: Vec<usize>,
        direct_arc: bool,
    },
    #[error("sources and sinks must be {0} distinct vertices each, pairwise distinct")]
    TerminalsNotDistinct(usize),
    #[error("digraph is not {k}-strong (connectivity {kappa})")]
    NotKStrong { k: usize, kappa: usize },
    #[error("digraph is not strong")]
    NotStrong,
    #[error("digraph has no cycle to start an ear decomposition")]
    NoCycle,
    #[error("start sequence is not a cycle of the digraph")]
    InvalidStartCycle,
    #[error("order {n} exceeds the exhaustive limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("digraph is not minimal {0}-strong")]
    NotMinimal(usize),
}

fn check_vertex(d: &Digraph, v: usize) -> Result<(), ConnectivityError> {
    if v >= d.n() {
        Err(ConnectivityError::VertexOutOfRange(v))
    } else {
        Ok(())
    }
}

/// Tarjan's algorithm over the alive vertices; returns a component id per vertex
/// (`usize::MAX` for dead ones) and the component count.
fn tarjan(d: &Digraph, alive: &[bool]) -> (Vec<usize>, usize) {
    let n = d.n();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut comp = vec![usize::MAX; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut comps = 0;
    for root in 0..n {
        if !alive[root] || index[root] != usize::MAX {
            continue;
        }
        // explicit call stack of (vertex, next neighbor position)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let out = d.out_neighbors(v);
            if *pos < out.len() {
                let w = out[*pos];
                *pos += 1;
                if !alive[w] {
                    continue;
                }
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp[w] = comps;
                    if w == v {
                        break;
                    }
                }
                comps += 1;
            }
        }
    }
    (comp, comps)
}

fn strong_components_within(d: &Digraph, alive: &[bool]) -> Vec<Vec<usize>> {
    let (comp, count) = tarjan(d, alive);
    let mut members = vec![Vec::new(); count];
    for v in 0..d.n() {
        if comp[v] != usize::MAX {
            members[comp[v]].push(v);
        }
    }
    // condensation in topological order, ties broken by smallest member
    let mut indegree = vec![0usize; count];
    let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); count];
    for (a, b) in d.proper_arcs() {
        if comp[a] != usize::MAX && comp[b] != usize::MAX && comp[a] != comp[b] && succ[comp[a]].insert(comp[b]) {
            indegree[comp[b]] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..count)
        .filter(|&c| indegree[c] == 0)
        .map(|c| Reverse((members[c][0], c)))
        .collect();
    let mut order = Vec::with_capacity(count);
    while let Some(Reverse((_, c))) = heap.pop() {
        order.push(std::mem::take(&mut members[c]));
        for &s in &succ[c] {
            indegree[s] -= 1;
            if indegree[s] == 0 {
                heap.push(Reverse((members[s][0], s)));
            }
        }
    }
    order
}

/// Strong components in topological order of the condensation; ties go to the
/// component holding the smallest vertex. Members are sorted.
pub fn strong_components(d: &Digraph) -> Vec<Vec<usize>> {
    strong_components_within(d, &vec![true; d.n()])
}

pub fn is_strong(d: &Digraph) -> bool {
    tarjan(d, &vec![true; d.n()]).1 == 1
}

fn is_strong_within(d: &Digraph, alive: &[bool]) -> bool {
    tarjan(d, alive).1 <= 1
}

/// Whether `d - s` is non-empty and not strong.
pub fn is_separator(d: &Digraph, s: &[usize]) -> bool {
    let mut alive = vec![true; d.n()];
    for &v in s {
        if v < d.n() {
            alive[v] = false;
        }
    }
    alive.iter().any(|&a| a) && !is_strong_within(d, &alive)
}

/// Kahn's algorithm, smallest available vertex first; `None` if there is a directed cycle.
pub fn topological_order(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.n();
    let mut indegree: Vec<usize> = (0..n).map(|v| d.in_degree(v)).collect();
    let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = heap.pop() {
        order.push(v);
        for &w in d.out_neighbors(v) {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                heap.push(Reverse(w));
            }
        }
    }
    (order.len() == n).then_some(order)
}

fn is_complete(d: &Digraph) -> bool {
    d.proper_arc_count() == d.n() * (d.n() - 1)
}

/// Minimum local connectivity over non-adjacent ordered pairs, with the first pair
/// attaining it.
fn min_local_connectivity(d: &Digraph) -> Option<(usize, (usize, usize))> {
    let n = d.n();
    let mut best: Option<(usize, (usize, usize))> = None;
    for s in 0..n {
        for t in 0..n {
            if s == t || d.has_arc(s, t) {
                continue;
            }
            let local = flow::local_connectivity(d, s, t);
            if best.map_or(true, |(b, _)| local < b) {
                best = Some((local, (s, t)));
                if local == 0 {
                    return best;
                }
            }
        }
    }
    best
}

/// The largest `k` such that `d` is `k`-strong. A complete digraph has no separator,
/// so its value is capped at `n - 1`.
pub fn vertex_connectivity(d: &Digraph) -> usize {
    let n = d.n();
    if n == 1 || !is_strong(d) {
        return 0;
    }
    if is_complete(d) {
        return n - 1;
    }
    min_local_connectivity(d).map_or(n - 1, |(k, _)| k)
}

/// Whether `d` is `k`-strong, without building a witness; stops at the first pair
/// with fewer than `k` disjoint paths.
pub fn connectivity_at_least(d: &Digraph, k: usize) -> bool {
    let n = d.n();
    if n < k + 1 {
        return false;
    }
    if k == 0 {
        return true;
    }
    if !is_strong(d) {
        return false;
    }
    if k == 1 {
        return true;
    }
    (0..n).all(|s| {
        (0..n).all(|t| s == t || d.has_arc(s, t) || flow::disjoint_paths(d, s, t, k as u32).0.len() >= k)
    })
}

const EXHAUSTIVE_SEPARATOR_LIMIT: usize = 12;

fn next_combination(combo: &mut [usize], n: usize) -> bool {
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

/// A minimum separator, `None` for complete digraphs. For small orders the
/// lexicographically first minimum separator is returned.
pub fn minimum_separator(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.n();
    if !is_strong(d) {
        return Some(Vec::new());
    }
    if is_complete(d) {
        return None;
    }
    let (kappa, (s, t)) = min_local_connectivity(d)?;
    if n <= EXHAUSTIVE_SEPARATOR_LIMIT {
        let mut combo: Vec<usize> = (0..kappa).collect();
        loop {
            if is_separator(d, &combo) {
                return Some(combo);
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    let (_, cut) = flow::disjoint_paths(d, s, t, n as u32);
    Some(cut)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrongWitness {
    /// Every non-adjacent ordered pair has at least `kappa` internally disjoint paths.
    Connectivity { kappa: usize },
    /// A separator of order less than `k`.
    Separator(Vec<usize>),
    /// Fewer than `k + 1` vertices.
    TooFewVertices { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KStrongCheck {
    pub holds: bool,
    pub witness: StrongWitness,
}

/// Decides `k`-strong connectivity with a witness either way.
pub fn is_k_strong(d: &Digraph, k: usize) -> KStrongCheck {
    let n = d.n();
    if n < k + 1 {
        return KStrongCheck { holds: false, witness: StrongWitness::TooFewVertices { n } };
    }
    let kappa = vertex_connectivity(d);
    if kappa >= k {
        return KStrongCheck { holds: true, witness: StrongWitness::Connectivity { kappa } };
    }
    let separator = minimum_separator(d).expect("kappa below n - 1 implies a separator");
    KStrongCheck { holds: false, witness: StrongWitness::Separator(separator) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DisjointnessMode {
    /// All paths share both endpoints and nothing else.
    InternallyDisjointSameEndpoints,
    /// Paths are pairwise vertex-disjoint and join distinct sources to distinct sinks.
    IndependentMultiEndpoint,
}

/// Directed paths given as vertex sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    pub paths: Vec<Vec<usize>>,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub mode: DisjointnessMode,
}

impl PathSystem {
    /// Re-checks every path arc by arc in `d` and the disjointness mode.
    pub fn verify(&self, d: &Digraph) -> Result<(), String> {
        for p in &self.paths {
            if p.len() < 2 {
                return Err(format!("path {p:?} is too short"));
            }
            let distinct: BTreeSet<usize> = p.iter().copied().collect();
            if distinct.len() != p.len() {
                return Err(format!("path {p:?} repeats a vertex"));
            }
            if let Some(w) = p.windows(2).find(|w| w[0] == w[1] || !d.has_arc(w[0], w[1])) {
                return Err(format!("arc v{}->v{} missing", w[0] + 1, w[1] + 1));
            }
        }
        match self.mode {
            DisjointnessMode::InternallyDisjointSameEndpoints => {
                let (s, t) = (self.sources[0], self.sinks[0]);
                let mut used = BTreeSet::new();
                for p in &self.paths {
                    if p[0] != s || *p.last().unwrap() != t {
                        return Err(format!("path {p:?} has wrong endpoints"));
                    }
                    for &v in &p[1..p.len() - 1] {
                        if !used.insert(v) {
                            return Err(format!("vertex v{} shared", v + 1));
                        }
                    }
                }
                let direct = self.paths.iter().filter(|p| p.len() == 2).count();
                if direct > 1 {
                    return Err("direct arc used twice".into());
                }
            }
            DisjointnessMode::IndependentMultiEndpoint => {
                let mut used = BTreeSet::new();
                let mut starts = BTreeSet::new();
                let mut ends = BTreeSet::new();
                for p in &self.paths {
                    if !self.sources.contains(&p[0]) || !self.sinks.contains(p.last().unwrap()) {
                        return Err(format!("path {p:?} does not join a source to a sink"));
                    }
                    starts.insert(p[0]);
                    ends.insert(*p.last().unwrap());
                    for &v in p {
                        if !used.insert(v) {
                            return Err(format!("vertex v{} shared", v + 1));
                        }
                    }
                }
                if starts.len() != self.sources.len() || ends.len() != self.sinks.len() {
                    return Err("not every source and sink is used".into());
                }
            }
        }
        Ok(())
    }
}

/// `k` internally disjoint `s -> t` paths.
pub fn menger_paths(d: &Digraph, s: usize, t: usize, k: usize) -> Result<PathSystem, ConnectivityError> {
    check_vertex(d, s)?;
    check_vertex(d, t)?;
    if s == t {
        return Err(ConnectivityError::SameEndpoints);
    }
    let (paths, cut) = flow::disjoint_paths(d, s, t, k as u32);
    if paths.len() < k {
        return Err(ConnectivityError::InsufficientPaths {
            requested: k,
            found: paths.len(),
            cut,
            direct_arc: d.has_arc(s, t),
        });
    }
    Ok(PathSystem {
        paths,
        sources: vec![s],
        sinks: vec![t],
        mode: DisjointnessMode::InternallyDisjointSameEndpoints,
    })
}

/// `k` pairwise vertex-disjoint paths from `sources` to `sinks`, each terminal used once.
///
/// A super source feeds every source and every sink drains into a super sink; the
/// disjoint paths are read off a maximum flow with unit vertex capacities.
pub fn independent_path_system(
    d: &Digraph,
    sources: &[usize],
    sinks: &[usize],
) -> Result<PathSystem, ConnectivityError> {
    let k = sources.len();
    for &v in sources.iter().chain(sinks) {
        check_vertex(d, v)?;
    }
    let all: BTreeSet<usize> = sources.iter().chain(sinks).copied().collect();
    if sinks.len() != k || all.len() != 2 * k {
        return Err(ConnectivityError::TerminalsNotDistinct(k));
    }
    let mut net = SplitNetwork::new(d, &vec![false; d.n()], None);
    let (src, snk) = (net.source(), net.sink());
    for &x in sources {
        net.add_edge(src, SplitNetwork::vin(x), 1);
    }
    for &y in sinks {
        net.add_edge(SplitNetwork::vout(y), snk, 1);
    }
    let found = net.max_flow(src, snk, k as u32) as usize;
    if found < k {
        let cut = net.vertex_cut(src);
        return Err(ConnectivityError::InsufficientPaths { requested: k, found, cut, direct_arc: false });
    }
    let mut paths: Vec<Vec<usize>> = net
        .extract_paths(src, snk)
        .iter()
        .map(|p| net.to_vertex_path(p))
        .collect();
    paths.sort();
    Ok(PathSystem {
        paths,
        sources: sources.to_vec(),
        sinks: sinks.to_vec(),
        mode: DisjointnessMode::IndependentMultiEndpoint,
    })
}

/// `k` cycles through `x`, pairwise meeting only in `x`. Each cycle is returned as a
/// closed vertex sequence starting and ending at `x`.
///
/// `x` is cloned into `x'` which inherits the in-arcs of `x`; `k` internally disjoint
/// `x -> x'` paths then fold back into the cycles.
pub fn cycles_through_vertex(d: &Digraph, x: usize, k: usize) -> Result<Vec<Vec<usize>>, ConnectivityError> {
    check_vertex(d, x)?;
    let check = is_k_strong(d, k);
    if !check.holds {
        return Err(ConnectivityError::NotKStrong { k, kappa: vertex_connectivity(d) });
    }
    let n = d.n();
    let clone = n;
    let arcs = d
        .proper_arcs()
        .chain(d.in_neighbors(x).iter().map(|&u| (u, clone)))
        .chain(d.out_neighbors(x).iter().map(|&u| (clone, u)));
    let extended = Digraph::loop_free(n + 1, arcs.collect::<Vec<_>>()).expect("valid extension");
    let system = menger_paths(&extended, x, clone, k)?;
    Ok(system
        .paths
        .into_iter()
        .map(|mut p| {
            *p.last_mut().unwrap() = x;
            p
        })
        .collect())
}

/// Checks that `cycles` are cycles of `d` through `x` that pairwise meet exactly in `{x}`.
pub fn verify_cycles_through(d: &Digraph, x: usize, cycles: &[Vec<usize>]) -> Result<(), String> {
    let mut used = BTreeSet::new();
    for c in cycles {
        if c.len() < 3 || c[0] != x || *c.last().unwrap() != x {
            return Err(format!("{c:?} is not a closed walk at v{}", x + 1));
        }
        if let Some(w) = c.windows(2).find(|w| w[0] == w[1] || !d.has_arc(w[0], w[1])) {
            return Err(format!("arc v{}->v{} missing", w[0] + 1, w[1] + 1));
        }
        for &v in &c[1..c.len() - 1] {
            if v == x || !used.insert(v) {
                return Err(format!("vertex v{} repeated", v + 1));
            }
        }
    }
    Ok(())
}

/// One ear: a closed vertex sequence (first equals last) for a cycle, otherwise a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ear {
    pub vertices: Vec<usize>,
}

impl Ear {
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() > 1 && self.vertices[0] == *self.vertices.last().unwrap()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

impl fmt::Display for Ear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| format!("v{}", v + 1)).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `P_0` (a cycle) followed by paths and cycles attached to what came before.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarDecompositionD {
    pub ears: Vec<Ear>,
}

impl EarDecompositionD {
    /// Checks arc-disjointness, the attachment rules and exact coverage of `d`.
    pub fn verify(&self, d: &Digraph) -> Result<(), String> {
        let Some(first) = self.ears.first() else {
            return Err("no ears".into());
        };
        if !first.is_cycle() || first.vertices.len() < 3 {
            return Err("P_0 is not a cycle".into());
        }
        let mut covered = BTreeSet::new();
        let mut arcs = BTreeSet::new();
        for (i, ear) in self.ears.iter().enumerate() {
            if ear.vertices.len() < 2 {
                return Err(format!("ear {i} is empty"));
            }
            for (a, b) in ear.arcs() {
                if a == b || !d.has_arc(a, b) {
                    return Err(format!("ear {i}: arc v{}->v{} not in digraph", a + 1, b + 1));
                }
                if !arcs.insert((a, b)) {
                    return Err(format!("ear {i}: arc v{}->v{} reused", a + 1, b + 1));
                }
            }
            let body: &[usize] = if ear.is_cycle() {
                &ear.vertices[..ear.vertices.len() - 1]
            } else {
                &ear.vertices
            };
            let distinct: BTreeSet<usize> = body.iter().copied().collect();
            if distinct.len() != body.len() {
                return Err(format!("ear {i} is not simple"));
            }
            if i > 0 {
                if ear.is_cycle() {
                    let common = body.iter().filter(|v| covered.contains(*v)).count();
                    if common != 1 {
                        return Err(format!("cycle ear {i} meets earlier ears in {common} vertices"));
                    }
                } else {
                    let (s, t) = (body[0], *body.last().unwrap());
                    if s == t || !covered.contains(&s) || !covered.contains(&t) {
                        return Err(format!("path ear {i} has bad end-vertices"));
                    }
                    if body[1..body.len() - 1].iter().any(|v| covered.contains(v)) {
                        return Err(format!("path ear {i} revisits earlier vertices"));
                    }
                }
            }
            covered.extend(body.iter().copied());
        }
        if covered.len() != d.n() {
            return Err("ears miss some vertices".into());
        }
        if arcs.len() != d.proper_arc_count() {
            return Err("ears miss some arcs".into());
        }
        Ok(())
    }
}

/// Shortest cycle through `v` as a closed sequence.
pub fn shortest_cycle_through(d: &Digraph, v: usize) -> Option<Vec<usize>> {
    let n = d.n();
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &w in d.out_neighbors(v) {
        if prev[w] == usize::MAX {
            prev[w] = v;
            queue.push_back(w);
        }
    }
    while let Some(x) = queue.pop_front() {
        if x == v {
            let mut path = vec![v];
            let mut at = prev[v];
            while at != v {
                path.push(at);
                at = prev[at];
            }
            path.push(v);
            path.reverse();
            return Some(path);
        }
        for &w in d.out_neighbors(x) {
            if prev[w] == usize::MAX {
                prev[w] = x;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Ear decomposition of a strong digraph, optionally starting from a given cycle
/// (closed sequence).
pub fn ear_decomposition_digraph(
    d: &Digraph,
    start_cycle: Option<&[usize]>,
) -> Result<EarDecompositionD, ConnectivityError> {
    let n = d.n();
    if !is_strong(d) {
        return Err(ConnectivityError::NotStrong);
    }
    let p0 = match start_cycle {
        Some(c) => {
            if !is_cycle_of(d, c) {
                return Err(ConnectivityError::InvalidStartCycle);
            }
            c.to_vec()
        }
        None => shortest_cycle_through(d, 0).ok_or(ConnectivityError::NoCycle)?,
    };
    let mut covered = vec![false; n];
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    for w in p0.windows(2) {
        covered[w[0]] = true;
        used.insert((w[0], w[1]));
    }
    let mut ears = vec![Ear { vertices: p0 }];
    loop {
        let next = d
            .proper_arcs()
            .find(|&(a, b)| covered[a] && !used.contains(&(a, b)));
        let Some((a, b)) = next else { break };
        let mut ear = vec![a];
        if covered[b] {
            ear.push(b);
        } else {
            // walk through uncovered vertices back to the covered part
            let mut prev = vec![usize::MAX; n];
            prev[b] = b;
            let mut queue = VecDeque::from([b]);
            let mut end = None;
            'bfs: while let Some(x) = queue.pop_front() {
                for &y in d.out_neighbors(x) {
                    if covered[y] {
                        end = Some((x, y));
                        break 'bfs;
                    }
                    if prev[y] == usize::MAX {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            let (last, target) = end.expect("strong digraph returns to covered vertices");
            let mut inner = vec![last];
            while *inner.last().unwrap() != b {
                let x = *inner.last().unwrap();
                inner.push(prev[x]);
            }
            inner.reverse();
            ear.extend(inner);
            ear.push(target);
        }
        for w in ear.windows(2) {
            used.insert((w[0], w[1]));
            covered[w[0]] = true;
            covered[w[1]] = true;
        }
        ears.push(Ear { vertices: ear });
    }
    Ok(EarDecompositionD { ears })
}

fn is_cycle_of(d: &Digraph, c: &[usize]) -> bool {
    if c.len() < 3 || c[0] != *c.last().unwrap() || c.iter().any(|&v| v >= d.n()) {
        return false;
    }
    let body: BTreeSet<usize> = c[..c.len() - 1].iter().copied().collect();
    body.len() == c.len() - 1 && c.windows(2).all(|w| w[0] != w[1] && d.has_arc(w[0], w[1]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalStrong {
    Minimal,
    NotKStrong,
    /// An arc whose removal keeps the digraph `k`-strong.
    Deletable((usize, usize)),
}

impl MinimalStrong {
    pub fn is_minimal(&self) -> bool {
        matches!(self, MinimalStrong::Minimal)
    }
}

/// Minimal `k`-strong: `k`-strong, and no single non-loop arc can be removed
/// without losing it.
pub fn is_minimal_k_strong(d: &Digraph, k: usize) -> MinimalStrong {
    if !connectivity_at_least(d, k) {
        return MinimalStrong::NotKStrong;
    }
    for (a, b) in d.proper_arcs() {
        if connectivity_at_least(&d.without_arc(a, b), k) {
            return MinimalStrong::Deletable((a, b));
        }
    }
    MinimalStrong::Minimal
}

/// Disjoint non-empty vertex sets with no arc from `x` to `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneWayPair {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// `|V - X - Y|`
    pub h: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OneWayViolation {
    TooFewVertices,
    Pair(OneWayPair),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneWayAudit {
    pub holds: bool,
    pub violation: Option<OneWayViolation>,
}

pub const ONE_WAY_AUDIT_LIMIT: usize = 12;

/// Exhaustive check that `n >= k + 1` and `h(X, Y) >= k` for every one-way pair.
pub fn one_way_pair_audit(d: &Digraph, k: usize) -> Result<OneWayAudit, ConnectivityError> {
    let n = d.n();
    if n > ONE_WAY_AUDIT_LIMIT {
        return Err(ConnectivityError::TooLarge { n, limit: ONE_WAY_AUDIT_LIMIT });
    }
    if n < k + 1 {
        return Ok(OneWayAudit { holds: false, violation: Some(OneWayViolation::TooFewVertices) });
    }
    let out_mask: Vec<u32> = (0..n)
        .map(|v| d.out_neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let (mut x, mut y, mut c) = (0u32, 0u32, code);
        for v in 0..n {
            match c % 3 {
                1 => x |= 1 << v,
                2 => y |= 1 << v,
                _ => {}
            }
            c /= 3;
        }
        if x == 0 || y == 0 {
            continue;
        }
        let reach = (0..n).filter(|&v| x >> v & 1 == 1).fold(0u32, |m, v| m | out_mask[v]);
        if reach & y != 0 {
            continue;
        }
        let h = n - (x | y).count_ones() as usize;
        if h < k {
            let members = |m: u32| (0..n).filter(|&v| m >> v & 1 == 1).collect();
            return Ok(OneWayAudit {
                holds: false,
                violation: Some(OneWayViolation::Pair(OneWayPair { x: members(x), y: members(y), h })),
            });
        }
    }
    Ok(OneWayAudit { holds: true, violation: None })
}

/// Whether `arcs` (distinct, even in number) alternate shared heads and shared tails
/// cyclically, in either phase.
pub fn is_anti_directed_trail(arcs: &[(usize, usize)]) -> bool {
    let m = arcs.len();
    if m < 2 || m % 2 == 1 {
        return false;
    }
    let distinct: BTreeSet<_> = arcs.iter().collect();
    if distinct.len() != m || arcs.iter().any(|&(a, b)| a == b) {
        return false;
    }
    let head = |i: usize| arcs[i % m].1;
    let tail = |i: usize| arcs[i % m].0;
    let phase_heads_first = (0..m / 2).all(|i| head(2 * i) == head(2 * i + 1) && tail(2 * i + 1) == tail(2 * i + 2));
    let phase_tails_first = (0..m / 2).all(|i| tail(2 * i) == tail(2 * i + 1) && head(2 * i + 1) == head(2 * i + 2));
    phase_heads_first || phase_tails_first
}

/// An anti-directed trail among `arcs`, starting with a shared-head pair.
///
/// Such trails are exactly the cycles of the undirected graph joining `tail(a)` on one
/// side to `head(a)` on the other.
pub fn anti_directed_trail_in(n: usize, arcs: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    // nodes 0..n are tail copies, n..2n head copies
    let mut parent: Vec<usize> = (0..2 * n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let mut forest: Vec<Vec<(usize, (usize, usize))>> = vec![Vec::new(); 2 * n];
    for &(t, h) in arcs {
        if t == h {
            continue;
        }
        let (a, b) = (t, n + h);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            forest[a].push((b, (t, h)));
            forest[b].push((a, (t, h)));
            continue;
        }
        // path from b to a in the forest, then close with the arc (t, h)
        let mut prev: Vec<Option<(usize, (usize, usize))>> = vec![None; 2 * n];
        let mut seen = vec![false; 2 * n];
        seen[b] = true;
        let mut queue = VecDeque::from([b]);
        while let Some(x) = queue.pop_front() {
            for &(y, arc) in &forest[x] {
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = Some((x, arc));
                    queue.push_back(y);
                }
            }
        }
        // walking back from a towards b yields arcs in order a ... b
        let mut trail = Vec::new();
        let mut at = a;
        while at != b {
            let (p, arc) = prev[at].expect("a and b share a tree");
            trail.push(arc);
            at = p;
        }
        trail.push((t, h));
        // trail: consecutive arcs share the node visited between them; the first node
        // after `a` (a tail copy) is a head copy, so the first two arcs share a head
        return Some(trail);
    }
    None
}

/// Arcs whose tail has out-degree at least `k + 1` and whose head has in-degree at least `k + 1`.
pub fn high_degree_arcs(d: &Digraph, k: usize) -> Vec<(usize, usize)> {
    d.proper_arcs()
        .filter(|&(t, h)| d.out_degree(t) > k && d.in_degree(h) > k)
        .collect()
}

/// Looks for an anti-directed trail in the subdigraph of [`high_degree_arcs`].
pub fn anti_directed_trail_find(d: &Digraph, k: usize) -> Option<Vec<(usize, usize)>> {
    anti_directed_trail_in(d.n(), &high_degree_arcs(d, k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaderReport {
    pub k: usize,
    pub out_degree_k: usize,
    pub in_degree_k: usize,
    pub holds: bool,
}

/// Counts vertices of out-degree exactly `k` and in-degree exactly `k` in a minimal
/// `k`-strong digraph; both must be at least `k`.
pub fn mader_degree_audit(d: &Digraph, k: usize) -> Result<MaderReport, ConnectivityError> {
    if !is_minimal_k_strong(d, k).is_minimal() {
        return Err(ConnectivityError::NotMinimal(k));
    }
    let out_degree_k = (0..d.n()).filter(|&v| d.out_degree(v) == k).count();
    let in_degree_k = (0..d.n()).filter(|&v| d.in_degree(v) == k).count();
    Ok(MaderReport { k, out_degree_k, in_degree_k, holds: out_degree_k >= k && in_degree_k >= k })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dg(n: usize, arcs: &[(usize, usize)]) -> Digraph {
        Digraph::loop_free(n, arcs.iter().copied()).unwrap()
    }

    #[test]
    fn strong_component_examples() {
        assert_eq!(strong_components(&Digraph::cycle(3)), vec![vec![0, 1, 2]]);
        assert_eq!(strong_components(&dg(2, &[(0, 1)])), vec![vec![0], vec![1]]);
        assert_eq!(strong_components(&dg(3, &[(0, 1), (1, 0), (1, 2)])), vec![vec![0, 1], vec![2]]);
        assert_eq!(strong_components(&dg(3, &[(2, 0)])), vec![vec![1], vec![2], vec![0]]);
    }

    #[test]
    fn strongness_examples() {
        assert!(is_strong(&Digraph::cycle(3)));
        assert!(!is_strong(&dg(2, &[(0, 1)])));
        assert!(is_strong(&Digraph::arcless(1)));
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&Digraph::complete(4)), 3);
        assert_eq!(vertex_connectivity(&Digraph::cycle(3)), 1);
        assert_eq!(vertex_connectivity(&dg(2, &[(0, 1)])), 0);
        assert_eq!(vertex_connectivity(&Digraph::arcless(1)), 0);
    }

    #[test]
    fn k_strong_examples() {
        assert!(is_k_strong(&Digraph::cycle(3), 1).holds);
        let check = is_k_strong(&Digraph::cycle(3), 2);
        assert!(!check.holds);
        assert_eq!(check.witness, StrongWitness::Separator(vec![0]));
        assert!(is_k_strong(&Digraph::complete(3), 2).holds);
        assert_eq!(
            is_k_strong(&Digraph::complete(3), 3).witness,
            StrongWitness::TooFewVertices { n: 3 }
        );
    }

    #[test]
    fn menger_examples() {
        let ps = menger_paths(&Digraph::cycle(3), 0, 1, 1).unwrap();
        assert_eq!(ps.paths, vec![vec![0, 1]]);
        let ps = menger_paths(&Digraph::complete(3), 0, 1, 2).unwrap();
        assert_eq!(ps.paths, vec![vec![0, 1], vec![0, 2, 1]]);
        ps.verify(&Digraph::complete(3)).unwrap();
        let err = menger_paths(&dg(2, &[(0, 1)]), 1, 0, 1).unwrap_err();
        assert!(matches!(err, ConnectivityError::InsufficientPaths { found: 0, .. }));
        assert_eq!(menger_paths(&Digraph::cycle(3), 1, 1, 1), Err(ConnectivityError::SameEndpoints));
    }

    #[test]
    fn menger_cut_is_a_separator() {
        // two routes from 0 to 3 through 1 and 2, both pinched at 1
        let d = dg(5, &[(0, 1), (1, 2), (1, 4), (2, 3), (4, 3), (3, 0)]);
        let err = menger_paths(&d, 0, 3, 2).unwrap_err();
        let ConnectivityError::InsufficientPaths { found, cut, .. } = err else { panic!() };
        assert_eq!(found, 1);
        assert_eq!(cut, vec![1]);
    }

    #[test]
    fn independent_paths_examples() {
        let d = Digraph::complete(4);
        let ps = independent_path_system(&d, &[0, 1], &[2, 3]).unwrap();
        assert_eq!(ps.paths.len(), 2);
        assert!(ps.paths.iter().all(|p| p.len() == 2));
        ps.verify(&d).unwrap();
        let single = independent_path_system(&Digraph::cycle(4), &[0], &[2]).unwrap();
        assert_eq!(single.paths, vec![vec![0, 1, 2]]);
        assert_eq!(
            independent_path_system(&Digraph::complete(5), &[0, 1], &[1, 2]),
            Err(ConnectivityError::TerminalsNotDistinct(2))
        );
    }

    #[test]
    fn cycles_through_vertex_examples() {
        let c = cycles_through_vertex(&Digraph::cycle(3), 0, 1).unwrap();
        assert_eq!(c, vec![vec![0, 1, 2, 0]]);
        let c = cycles_through_vertex(&Digraph::complete(3), 0, 2).unwrap();
        assert_eq!(c, vec![vec![0, 1, 0], vec![0, 2, 0]]);
        verify_cycles_through(&Digraph::complete(3), 0, &c).unwrap();
        assert!(matches!(
            cycles_through_vertex(&dg(2, &[(0, 1)]), 0, 1),
            Err(ConnectivityError::NotKStrong { .. })
        ));
    }

    #[test]
    fn ear_decomposition_examples() {
        let ed = ear_decomposition_digraph(&Digraph::cycle(3), None).unwrap();
        assert_eq!(ed.ears.len(), 1);
        assert_eq!(ed.ears[0].vertices, vec![0, 1, 2, 0]);

        let pendant = dg(3, &[(0, 1), (1, 0), (1, 2)]);
        assert_eq!(ear_decomposition_digraph(&pendant, None), Err(ConnectivityError::NotStrong));

        let k3 = Digraph::complete(3);
        let ed = ear_decomposition_digraph(&k3, Some(&[0, 1, 0])).unwrap();
        assert_eq!(ed.ears[0].vertices, vec![0, 1, 0]);
        ed.verify(&k3).unwrap();
        assert_eq!(
            ear_decomposition_digraph(&Digraph::cycle(3), Some(&[0, 2, 0])),
            Err(ConnectivityError::InvalidStartCycle)
        );
    }

    #[test]
    fn ear_verifier_rejects_bad_attachment() {
        let k3 = Digraph::complete(3);
        let bad = EarDecompositionD {
            ears: vec![
                Ear { vertices: vec![0, 1, 0] },
                Ear { vertices: vec![1, 2, 1] },
                Ear { vertices: vec![0, 2, 0] },
            ],
        };
        assert!(bad.verify(&k3).is_err());
    }

    #[test]
    fn minimality_examples() {
        assert_eq!(is_minimal_k_strong(&Digraph::cycle(5), 1), MinimalStrong::Minimal);
        assert!(matches!(is_minimal_k_strong(&Digraph::complete(3), 1), MinimalStrong::Deletable(_)));
        assert_eq!(is_minimal_k_strong(&Digraph::cycle(3), 2), MinimalStrong::NotKStrong);
    }

    #[test]
    fn one_way_examples() {
        assert!(one_way_pair_audit(&Digraph::cycle(3), 1).unwrap().holds);
        let audit = one_way_pair_audit(&dg(2, &[(0, 1)]), 1).unwrap();
        assert_eq!(
            audit.violation,
            Some(OneWayViolation::Pair(OneWayPair { x: vec![1], y: vec![0], h: 0 }))
        );
        assert!(one_way_pair_audit(&Digraph::complete(4), 3).unwrap().holds);
        assert!(!one_way_pair_audit(&Digraph::complete(4), 4).unwrap().holds);
    }

    #[test]
    fn anti_directed_trail_examples() {
        assert_eq!(anti_directed_trail_find(&Digraph::arcless(3), 0), None);
        // a=0, b=1, c=2, d=3
        let shared_head = dg(4, &[(0, 2), (1, 2)]);
        assert_eq!(anti_directed_trail_find(&shared_head, 0), None);
        let square = dg(4, &[(0, 2), (1, 2), (1, 3), (0, 3)]);
        let trail = anti_directed_trail_find(&square, 1).unwrap();
        assert_eq!(trail.len(), 4);
        assert!(is_anti_directed_trail(&trail));
        assert!(is_anti_directed_trail(&[(0, 2), (1, 2), (1, 3), (0, 3)]));
        assert!(!is_anti_directed_trail(&[(0, 2), (1, 2)]));
    }

    #[test]
    fn mader_examples() {
        let r = mader_degree_audit(&Digraph::cycle(5), 1).unwrap();
        assert_eq!((r.out_degree_k, r.in_degree_k, r.holds), (5, 5, true));
        assert_eq!(mader_degree_audit(&Digraph::complete(3), 1), Err(ConnectivityError::NotMinimal(1)));
    }

    #[test]
    fn topological_order_detects_cycles() {
        assert_eq!(topological_order(&dg(3, &[(2, 0), (0, 1)])), Some(vec![2, 0, 1]));
        assert_eq!(topological_order(&Digraph::cycle(3)), None);
    }
}
