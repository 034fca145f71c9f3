//! Self-contained certificates for the four claims, and a verifier that re-checks them
//! from the embedded instance alone.
//!
//! ```text
//! extendix-certificate 1
//! claim: k-strong
//! k: 2
//! verdict: fails
//! instance:
//! dg 3 3
//! 1 2
//! 2 3
//! 3 1
//! end
//! witness: separator
//! vertices: v1
//! end
//! ```
//!
//! The verifier uses its own small reachability and augmenting-path routines so a
//! certificate does not depend on the code that produced it.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::connectivity::{self, StrongWitness};
use crate::correspondence::bipartite_of_matrix;
use crate::extendability::{self, ExtendWitness};
use crate::format::{self, Instance, InstanceKind};
use crate::graph::{BipartiteGraph, Digraph, Edge, Vertex, ZeroOneMatrix};
use crate::matching::{first_perfect_matching, hall_violator, Matching};
use crate::matrix;

pub const HEADER: &str = "extendix-certificate 1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    KExtendable,
    KStrong,
    KIndecomposable,
    KIrreducible,
}

impl Claim {
    pub fn applies_to(self, kind: InstanceKind) -> bool {
        matches!(
            (self, kind),
            (Claim::KExtendable, InstanceKind::Bipartite)
                | (Claim::KStrong, InstanceKind::Digraph)
                | (Claim::KIndecomposable, InstanceKind::Matrix)
                | (Claim::KIrreducible, InstanceKind::Matrix)
        )
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::KExtendable => "k-extendable",
            Claim::KStrong => "k-strong",
            Claim::KIndecomposable => "k-indecomposable",
            Claim::KIrreducible => "k-irreducible",
        })
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "k-extendable" => Ok(Claim::KExtendable),
            "k-strong" => Ok(Claim::KStrong),
            "k-indecomposable" => Ok(Claim::KIndecomposable),
            "k-irreducible" => Ok(Claim::KIrreducible),
            other => Err(format!(
                "unknown claim `{other}` (expected k-extendable, k-strong, k-indecomposable or k-irreducible)"
            )),
        }
    }
}

/// A pair of digraph vertices with its internally disjoint paths.
pub type PathFamily = ((usize, usize), Vec<Vec<usize>>);
/// A `(u, w)` pair with its alternating paths.
pub type AlternatingFamily = ((usize, usize), Vec<Vec<Vertex>>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `k` internally disjoint paths for every ordered pair of the digraph (for
    /// bipartite claims: of `D(G, M)` for the recorded matching), plus sample
    /// alternating path systems.
    PathSystems { matching: Option<Vec<Edge>>, families: Vec<PathFamily>, alternating: Vec<AlternatingFamily> },
    PerfectMatching(Vec<Edge>),
    /// No `l x (n - k + 1 - l)` block exists because `k = n`.
    NoAdmissibleBlock,
    Separator { matching: Option<Vec<Edge>>, vertices: Vec<usize> },
    TooFewVertices,
    NonExtendableMatching(Vec<Edge>),
    DeficientSet(Vec<usize>),
    /// The vertices of one connected component.
    Disconnected(Vec<Vertex>),
    /// A set of U-vertices (rows) with fewer neighbors than members.
    NoPerfectMatching(Vec<usize>),
    ZeroBlock { rows: Vec<usize>, cols: Vec<usize> },
}

impl Witness {
    fn name(&self) -> &'static str {
        match self {
            Witness::PathSystems { .. } => "path-systems",
            Witness::PerfectMatching(_) => "perfect-matching",
            Witness::NoAdmissibleBlock => "no-admissible-block",
            Witness::Separator { .. } => "separator",
            Witness::TooFewVertices => "too-few-vertices",
            Witness::NonExtendableMatching(_) => "nonextendable-matching",
            Witness::DeficientSet(_) => "deficient-set",
            Witness::Disconnected(_) => "disconnected",
            Witness::NoPerfectMatching(_) => "no-perfect-matching",
            Witness::ZeroBlock { .. } => "zero-block",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub claim: Claim,
    pub k: usize,
    pub holds: bool,
    pub instance: Instance,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("claim {claim} does not apply to a {kind} instance")]
    Inapplicable { claim: Claim, kind: InstanceKind },
    #[error("k = {k} out of range for {claim} at order {n}")]
    KOutOfRange { claim: Claim, k: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("certificate rejected: {0}")]
    Rejected(String),
}

fn reject<T>(message: impl Into<String>) -> Result<T, CertificateError> {
    Err(CertificateError::Rejected(message.into()))
}

fn all_pair_paths(d: &Digraph, k: usize) -> Vec<PathFamily> {
    let n = d.n();
    let mut out = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if s != t {
                let ps = connectivity::menger_paths(d, s, t, k).expect("k-strong digraph");
                out.push(((s, t), ps.paths));
            }
        }
    }
    out
}

fn sample_pairs(n: usize) -> Vec<(usize, usize)> {
    if n <= 4 {
        (0..n).flat_map(|u| (0..n).map(move |w| (u, w))).collect()
    } else {
        let mut pairs: BTreeSet<(usize, usize)> = (0..n).map(|w| (0, w)).collect();
        pairs.extend((0..n).map(|u| (u, 0)));
        pairs.into_iter().collect()
    }
}

fn extendable_certificate(g: &BipartiteGraph, k: usize) -> Result<(bool, Witness), CertificateError> {
    let n = g.n();
    let check = extendability::is_k_extendable(g, k).map_err(|_| CertificateError::KOutOfRange {
        claim: Claim::KExtendable,
        k,
        n,
    })?;
    if check.holds {
        let m = first_perfect_matching(g).expect("extendable graphs have a perfect matching");
        if k == 0 || n == 1 {
            return Ok((true, Witness::PerfectMatching(m.edges().to_vec())));
        }
        let (d, _) = crate::correspondence::digraph_of(g, &m).expect("perfect matching");
        let alternating = sample_pairs(n)
            .into_iter()
            .map(|(u, w)| {
                let ps = extendability::alternating_path_system(g, &m, Vertex::U(u), Vertex::W(w), k)
                    .expect("k-extendable");
                ((u, w), ps.paths)
            })
            .collect();
        let witness = Witness::PathSystems {
            matching: Some(m.edges().to_vec()),
            families: all_pair_paths(&d, k),
            alternating,
        };
        return Ok((true, witness));
    }
    let witness = match check.witness {
        ExtendWitness::NoPerfectMatching => {
            let alive = vec![true; n];
            Witness::NoPerfectMatching(hall_violator(g, &alive, &alive).expect("no perfect matching"))
        }
        ExtendWitness::Disconnected => {
            let (u, w) = g.components().into_iter().next().expect("at least one component");
            Witness::Disconnected(u.into_iter().map(Vertex::U).chain(w.into_iter().map(Vertex::W)).collect())
        }
        ExtendWitness::Separator(s) if n <= extendability::ORACLE_LIMIT => {
            match extendability::is_k_extendable_oracle(g, k).expect("small").witness {
                ExtendWitness::NonExtendable(m) => Witness::NonExtendableMatching(m.edges().to_vec()),
                _ => separator_witness(g, s),
            }
        }
        ExtendWitness::Separator(s) => separator_witness(g, s),
        other => unreachable!("digraph route produced {other:?}"),
    };
    Ok((false, witness))
}

fn separator_witness(g: &BipartiteGraph, vertices: Vec<usize>) -> Witness {
    let m = first_perfect_matching(g).expect("perfect matching");
    Witness::Separator { matching: Some(m.edges().to_vec()), vertices }
}

/// Decides `claim` for `instance` and packages a witness either way.
pub fn certify(instance: &Instance, claim: Claim, k: usize) -> Result<Certificate, CertificateError> {
    if !claim.applies_to(instance.kind()) {
        return Err(CertificateError::Inapplicable { claim, kind: instance.kind() });
    }
    let (holds, witness) = match instance {
        Instance::Bipartite(g) => extendable_certificate(g, k)?,
        Instance::Digraph(d) => {
            let check = connectivity::is_k_strong(d, k);
            match check.witness {
                StrongWitness::Connectivity { .. } => {
                    (true, Witness::PathSystems { matching: None, families: all_pair_paths(d, k), alternating: Vec::new() })
                }
                StrongWitness::Separator(s) => (false, Witness::Separator { matching: None, vertices: s }),
                StrongWitness::TooFewVertices { .. } => (false, Witness::TooFewVertices),
            }
        }
        Instance::Matrix(a) => {
            let n = a.n();
            let out_of_range = || CertificateError::KOutOfRange { claim, k, n };
            let check = match claim {
                Claim::KIndecomposable => matrix::is_k_partly_decomposable(a, k).map_err(|_| out_of_range())?,
                _ => matrix::is_k_reducible(a, k).map_err(|_| out_of_range())?,
            };
            if let Some(w) = check.witness {
                (false, Witness::ZeroBlock { rows: w.rows, cols: w.cols })
            } else if claim == Claim::KIrreducible && k == n {
                (true, Witness::NoAdmissibleBlock)
            } else if claim == Claim::KIrreducible {
                let d = a.digraph().without_loops();
                (true, Witness::PathSystems { matching: None, families: all_pair_paths(&d, k), alternating: Vec::new() })
            } else {
                extendable_certificate(&bipartite_of_matrix(a), k)?
            }
        }
    };
    Ok(Certificate { claim, k, holds, instance: instance.clone(), witness })
}

fn edge_list(edges: &[Edge]) -> String {
    edges.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

fn v_list(vs: &[usize]) -> String {
    vs.iter().map(|v| format!("v{}", v + 1)).collect::<Vec<_>>().join(" ")
}

fn u_list(vs: &[usize]) -> String {
    vs.iter().map(|v| format!("u{}", v + 1)).collect::<Vec<_>>().join(" ")
}

fn index_list(vs: &[usize]) -> String {
    vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn vertex_list(vs: &[Vertex]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// `witness: <name>` followed by the witness lines, without the closing `end`.
impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "witness: {}", self.name())?;
        match self {
            Witness::PathSystems { matching, families, alternating } => {
                if let Some(m) = matching {
                    writeln!(f, "matching: {}", edge_list(m))?;
                }
                for ((s, t), paths) in families {
                    writeln!(f, "pair: v{} v{}", s + 1, t + 1)?;
                    for p in paths {
                        writeln!(f, "path: {}", v_list(p))?;
                    }
                }
                for ((u, w), paths) in alternating {
                    writeln!(f, "alternating: u{} w{}", u + 1, w + 1)?;
                    for p in paths {
                        writeln!(f, "apath: {}", vertex_list(p))?;
                    }
                }
            }
            Witness::PerfectMatching(m) | Witness::NonExtendableMatching(m) => writeln!(f, "edges: {}", edge_list(m))?,
            Witness::NoAdmissibleBlock | Witness::TooFewVertices => {}
            Witness::Separator { matching, vertices } => {
                if let Some(m) = matching {
                    writeln!(f, "matching: {}", edge_list(m))?;
                }
                writeln!(f, "vertices: {}", v_list(vertices))?;
            }
            Witness::DeficientSet(x) | Witness::NoPerfectMatching(x) => writeln!(f, "set: {}", u_list(x))?,
            Witness::Disconnected(vs) => writeln!(f, "component: {}", vertex_list(vs))?,
            Witness::ZeroBlock { rows, cols } => {
                writeln!(f, "rows: {}", index_list(rows))?;
                writeln!(f, "cols: {}", index_list(cols))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER}")?;
        writeln!(f, "claim: {}", self.claim)?;
        writeln!(f, "k: {}", self.k)?;
        writeln!(f, "verdict: {}", if self.holds { "holds" } else { "fails" })?;
        writeln!(f, "instance:")?;
        write!(f, "{}", format::write_instance(&self.instance))?;
        writeln!(f, "end")?;
        write!(f, "{}", self.witness)?;
        writeln!(f, "end")
    }
}

struct Reader<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Reader<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, CertificateError> {
        let line = self.lines.get(self.pos).map_or(self.lines.last().map_or(1, |l| l.0 + 1), |l| l.0);
        Err(CertificateError::Parse { line, message: message.into() })
    }

    fn next(&mut self) -> Option<&'a str> {
        let line = self.lines.get(self.pos).map(|l| l.1);
        self.pos += 1;
        line
    }

    fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).map(|l| l.1)
    }

    fn field(&mut self, key: &str) -> Result<&'a str, CertificateError> {
        match self.peek().and_then(|l| l.strip_prefix(key)).and_then(|r| r.strip_prefix(':')) {
            Some(rest) => {
                self.pos += 1;
                Ok(rest.trim())
            }
            None => self.err(format!("expected `{key}:`")),
        }
    }
}

fn parse_label(tok: &str, prefix: char) -> Option<usize> {
    let rest = tok.strip_prefix(prefix)?;
    let v: usize = rest.parse().ok()?;
    v.checked_sub(1)
}

fn parse_vertex(tok: &str) -> Option<Vertex> {
    parse_label(tok, 'u').map(Vertex::U).or_else(|| parse_label(tok, 'w').map(Vertex::W))
}

fn parse_edge(tok: &str) -> Option<Edge> {
    tok.parse().ok()
}

fn parse_all<T>(text: &str, f: impl Fn(&str) -> Option<T>) -> Option<Vec<T>> {
    text.split_whitespace().map(f).collect()
}

impl FromStr for Certificate {
    type Err = CertificateError;

    fn from_str(text: &str) -> Result<Self, CertificateError> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end()))
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        let mut r = Reader { lines, pos: 0 };
        if r.next() != Some(HEADER) {
            r.pos = 0;
            return r.err(format!("expected `{HEADER}`"));
        }
        let claim: Claim = match r.field("claim")?.parse() {
            Ok(c) => c,
            Err(e) => {
                r.pos -= 1;
                return r.err(e);
            }
        };
        let k: usize = match r.field("k")?.parse() {
            Ok(k) => k,
            Err(_) => {
                r.pos -= 1;
                return r.err("k must be a non-negative integer");
            }
        };
        let holds = match r.field("verdict")? {
            "holds" => true,
            "fails" => false,
            _ => {
                r.pos -= 1;
                return r.err("verdict must be `holds` or `fails`");
            }
        };
        if r.next() != Some("instance:") {
            r.pos -= 1;
            return r.err("expected `instance:`");
        }
        let start = r.pos;
        while r.peek().is_some_and(|l| l != "end") {
            r.pos += 1;
        }
        if r.peek().is_none() {
            return r.err("unterminated instance section");
        }
        let body: Vec<&str> = r.lines[start..r.pos].iter().map(|l| l.1).collect();
        let instance = match format::parse(&body.join("\n")) {
            Ok(i) => i,
            Err(e) => {
                r.pos = start;
                return r.err(format!("embedded instance: {e}"));
            }
        };
        r.pos += 1;
        let kind = r.field("witness")?.to_string();
        let mut matching = None;
        let mut families: Vec<PathFamily> = Vec::new();
        let mut alternating: Vec<AlternatingFamily> = Vec::new();
        let mut fields: Vec<(String, String)> = Vec::new();
        loop {
            let Some(line) = r.peek() else {
                return r.err("unterminated witness section");
            };
            if line == "end" {
                r.pos += 1;
                break;
            }
            let Some((key, value)) = line.split_once(':') else {
                return r.err("expected `key: value`");
            };
            let value = value.trim();
            let bad = |r: &Reader| r.err::<()>(format!("malformed `{key}` line"));
            match key {
                "matching" => match parse_all(value, parse_edge) {
                    Some(m) => matching = Some(m),
                    None => bad(&r)?,
                },
                "pair" => match parse_all(value, |t| parse_label(t, 'v')).filter(|p| p.len() == 2) {
                    Some(p) => families.push(((p[0], p[1]), Vec::new())),
                    None => bad(&r)?,
                },
                "path" => match (parse_all(value, |t| parse_label(t, 'v')), families.last_mut()) {
                    (Some(p), Some(fam)) => fam.1.push(p),
                    _ => bad(&r)?,
                },
                "alternating" => match parse_all(value, parse_vertex).filter(|p| p.len() == 2) {
                    Some(p) => match (p[0], p[1]) {
                        (Vertex::U(u), Vertex::W(w)) => alternating.push(((u, w), Vec::new())),
                        _ => bad(&r)?,
                    },
                    None => bad(&r)?,
                },
                "apath" => match (parse_all(value, parse_vertex), alternating.last_mut()) {
                    (Some(p), Some(fam)) => fam.1.push(p),
                    _ => bad(&r)?,
                },
                _ => fields.push((key.to_string(), value.to_string())),
            }
            r.pos += 1;
        }
        if r.peek().is_some() {
            return r.err("trailing content after the witness");
        }
        let get = |key: &str| fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str());
        let malformed = || CertificateError::Parse { line: 0, message: format!("malformed {kind} witness") };
        let witness = match kind.as_str() {
            "path-systems" => Witness::PathSystems { matching, families, alternating },
            "perfect-matching" => Witness::PerfectMatching(get("edges").and_then(|v| parse_all(v, parse_edge)).ok_or_else(malformed)?),
            "nonextendable-matching" => {
                Witness::NonExtendableMatching(get("edges").and_then(|v| parse_all(v, parse_edge)).ok_or_else(malformed)?)
            }
            "no-admissible-block" => Witness::NoAdmissibleBlock,
            "too-few-vertices" => Witness::TooFewVertices,
            "separator" => Witness::Separator {
                matching,
                vertices: get("vertices").and_then(|v| parse_all(v, |t| parse_label(t, 'v'))).ok_or_else(malformed)?,
            },
            "deficient-set" => {
                Witness::DeficientSet(get("set").and_then(|v| parse_all(v, |t| parse_label(t, 'u'))).ok_or_else(malformed)?)
            }
            "no-perfect-matching" => {
                Witness::NoPerfectMatching(get("set").and_then(|v| parse_all(v, |t| parse_label(t, 'u'))).ok_or_else(malformed)?)
            }
            "disconnected" => Witness::Disconnected(get("component").and_then(|v| parse_all(v, parse_vertex)).ok_or_else(malformed)?),
            "zero-block" => {
                let idx = |t: &str| t.parse::<usize>().ok().and_then(|v| v.checked_sub(1));
                Witness::ZeroBlock {
                    rows: get("rows").and_then(|v| parse_all(v, idx)).ok_or_else(malformed)?,
                    cols: get("cols").and_then(|v| parse_all(v, idx)).ok_or_else(malformed)?,
                }
            }
            other => return Err(CertificateError::Parse { line: 0, message: format!("unknown witness `{other}`") }),
        };
        Ok(Certificate { claim, k, holds, instance, witness })
    }
}

// ---- independent checking -------------------------------------------------

/// Simple augmenting-path matching restricted to alive vertices; returns its size.
fn matching_size(g: &BipartiteGraph, u_alive: &[bool], w_alive: &[bool]) -> usize {
    let n = g.n();
    let mut mate_w: Vec<Option<usize>> = vec![None; n];
    fn augment(g: &BipartiteGraph, u: usize, w_alive: &[bool], seen: &mut [bool], mate_w: &mut [Option<usize>]) -> bool {
        for &w in g.neighbors_of_u(u) {
            if !w_alive[w] || seen[w] {
                continue;
            }
            seen[w] = true;
            if mate_w[w].map_or(true, |u2| augment(g, u2, w_alive, seen, mate_w)) {
                mate_w[w] = Some(u);
                return true;
            }
        }
        false
    }
    (0..n)
        .filter(|&u| u_alive[u])
        .filter(|&u| augment(g, u, w_alive, &mut vec![false; n], &mut mate_w))
        .count()
}

fn reachable(d: &Digraph, from: usize, alive: &[bool]) -> Vec<bool> {
    let mut seen = vec![false; d.n()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &y in d.out_neighbors(x) {
            if alive[y] && !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// `D - removed` is non-empty and some alive vertex cannot reach another.
fn not_strong_after_removal(d: &Digraph, removed: &[usize]) -> bool {
    let n = d.n();
    let mut alive = vec![true; n];
    for &v in removed {
        alive[v] = false;
    }
    let Some(first) = (0..n).find(|&v| alive[v]) else { return false };
    let forward = reachable(d, first, &alive);
    if (0..n).any(|v| alive[v] && !forward[v]) {
        return true;
    }
    (0..n).filter(|&v| alive[v]).any(|v| !reachable(d, v, &alive)[first])
}

/// `D(G, M)` rebuilt from scratch: vertex `i` is the matching edge at `u_i`.
fn contract(g: &BipartiteGraph, m: &[Edge]) -> Result<Digraph, CertificateError> {
    let n = g.n();
    let mut owner_of_w = vec![usize::MAX; n];
    let mut partner = vec![usize::MAX; n];
    for e in m {
        if e.u >= n || e.w >= n || !g.has_edge(*e) || partner[e.u] != usize::MAX || owner_of_w[e.w] != usize::MAX {
            return reject(format!("{e} breaks the recorded matching"));
        }
        partner[e.u] = e.w;
        owner_of_w[e.w] = e.u;
    }
    if m.len() != n {
        return reject("recorded matching is not perfect");
    }
    let arcs = g.edges().filter(|e| partner[e.u] != e.w).map(|e| (e.u, owner_of_w[e.w]));
    Ok(Digraph::loop_free(n, arcs.collect::<Vec<_>>()).expect("contraction"))
}

fn check_path_families(d: &Digraph, k: usize, families: &[PathFamily]) -> Result<(), CertificateError> {
    let n = d.n();
    if n < k + 1 {
        return reject(format!("{n} vertices cannot be {k}-strong"));
    }
    let pairs: BTreeSet<(usize, usize)> = families.iter().map(|f| f.0).collect();
    let expected: BTreeSet<(usize, usize)> =
        (0..n).flat_map(|s| (0..n).filter(move |&t| t != s).map(move |t| (s, t))).collect();
    if pairs != expected || families.len() != expected.len() {
        return reject("path systems must cover every ordered pair exactly once");
    }
    for ((s, t), paths) in families {
        if paths.len() < k {
            return reject(format!("v{} -> v{}: {} paths, need {k}", s + 1, t + 1, paths.len()));
        }
        let mut inner = BTreeSet::new();
        let mut seen_paths = BTreeSet::new();
        for p in paths {
            if p.len() < 2 || p[0] != *s || p[p.len() - 1] != *t || !seen_paths.insert(p.clone()) {
                return reject(format!("bad path {} for v{} -> v{}", v_list(p), s + 1, t + 1));
            }
            if p.iter().any(|&v| v >= n) || p.windows(2).any(|w| w[0] == w[1] || !d.has_arc(w[0], w[1])) {
                return reject(format!("path {} uses a missing arc", v_list(p)));
            }
            for &v in &p[1..p.len() - 1] {
                if v == *s || v == *t || !inner.insert(v) {
                    return reject(format!("paths for v{} -> v{} share v{}", s + 1, t + 1, v + 1));
                }
            }
        }
    }
    Ok(())
}

fn check_alternating(g: &BipartiteGraph, m: &[Edge], k: usize, fams: &[AlternatingFamily]) -> Result<(), CertificateError> {
    let matching = Matching::new(g, m.iter().copied()).map_err(|e| CertificateError::Rejected(e.to_string()))?;
    for ((u, w), paths) in fams {
        let system = extendability::AltPathSystem { matching: matching.clone(), u: *u, w: *w, paths: paths.clone() };
        if *u >= g.n() || *w >= g.n() {
            return reject("alternating pair out of range");
        }
        system.verify(g, k).map_err(|e| CertificateError::Rejected(format!("alternating u{} w{}: {e}", u + 1, w + 1)))?;
    }
    Ok(())
}

fn check_extendable(g: &BipartiteGraph, k: usize, holds: bool, witness: &Witness) -> Result<(), CertificateError> {
    let n = g.n();
    let all = vec![true; n];
    match (holds, witness) {
        (true, Witness::PerfectMatching(m)) => {
            if !(k == 0 || (n == 1 && k == 1)) {
                return reject("a perfect matching alone certifies only k = 0 (or K_2)");
            }
            contract(g, m).map(|_| ())
        }
        (true, Witness::PathSystems { matching: Some(m), families, alternating }) => {
            if k >= n {
                return reject(format!("k = {k} out of range"));
            }
            let d = contract(g, m)?;
            check_path_families(&d, k, families)?;
            check_alternating(g, m, k, alternating)
        }
        (false, Witness::NoPerfectMatching(x)) => {
            let nx: BTreeSet<usize> = x.iter().flat_map(|&u| g.neighbors_of_u(u).iter().copied()).collect();
            let distinct: BTreeSet<&usize> = x.iter().collect();
            if x.iter().any(|&u| u >= n) || distinct.len() != x.len() || nx.len() >= x.len() {
                return reject("set satisfies Hall's condition");
            }
            Ok(())
        }
        (false, Witness::Disconnected(vs)) => {
            if k == 0 {
                return reject("connectivity is not required for k = 0");
            }
            let set: BTreeSet<Vertex> = vs.iter().copied().collect();
            if set.is_empty() || set.len() == 2 * n || vs.iter().any(|v| v.index() >= n) {
                return reject("component must be a proper non-empty vertex set");
            }
            let crossing = g.edges().any(|e| set.contains(&Vertex::U(e.u)) != set.contains(&Vertex::W(e.w)));
            if crossing {
                return reject("an edge leaves the component");
            }
            Ok(())
        }
        (false, Witness::NonExtendableMatching(m)) => {
            if m.len() != k {
                return reject(format!("matching has {} edges, expected {k}", m.len()));
            }
            Matching::new(g, m.iter().copied()).map_err(|e| CertificateError::Rejected(e.to_string()))?;
            let mut u_alive = all.clone();
            let mut w_alive = all.clone();
            for e in m {
                u_alive[e.u] = false;
                w_alive[e.w] = false;
            }
            if matching_size(g, &u_alive, &w_alive) == n - k {
                return reject("matching extends to a perfect matching");
            }
            Ok(())
        }
        (false, Witness::DeficientSet(x)) => {
            let distinct: BTreeSet<&usize> = x.iter().collect();
            if x.is_empty() || x.len() + k > n || distinct.len() != x.len() || x.iter().any(|&u| u >= n) {
                return reject("deficient set has the wrong size");
            }
            let nx: BTreeSet<usize> = x.iter().flat_map(|&u| g.neighbors_of_u(u).iter().copied()).collect();
            if nx.len() >= x.len() + k {
                return reject("set is not deficient");
            }
            Ok(())
        }
        (false, Witness::Separator { matching: Some(m), vertices }) => {
            let d = contract(g, m)?;
            check_separator(&d, k, vertices)
        }
        (false, Witness::TooFewVertices) if k >= n && !(n == 1 && k == 1) => Ok(()),
        _ => reject("witness does not fit the claim and verdict"),
    }
}

fn check_separator(d: &Digraph, k: usize, vertices: &[usize]) -> Result<(), CertificateError> {
    let distinct: BTreeSet<&usize> = vertices.iter().collect();
    if vertices.len() >= k || distinct.len() != vertices.len() || vertices.iter().any(|&v| v >= d.n()) {
        return reject(format!("separator must have fewer than {k} distinct vertices"));
    }
    if !not_strong_after_removal(d, vertices) {
        return reject("removing the vertices leaves a strong digraph");
    }
    Ok(())
}

fn check_zero_block(a: &ZeroOneMatrix, k: usize, symmetric: bool, rows: &[usize], cols: &[usize]) -> Result<(), CertificateError> {
    let n = a.n();
    let (l, c) = (rows.len(), cols.len());
    if l == 0 || c == 0 || l + c + k != n + 1 {
        return reject(format!("block {l}x{c} does not have size l x (n - k + 1 - l)"));
    }
    let r: BTreeSet<&usize> = rows.iter().collect();
    let cs: BTreeSet<&usize> = cols.iter().collect();
    if r.len() != l || cs.len() != c || rows.iter().chain(cols).any(|&x| x >= n) {
        return reject("block indices must be distinct and in range");
    }
    if symmetric && rows.iter().any(|x| cs.contains(x)) {
        return reject("a symmetric block needs disjoint row and column indices");
    }
    if rows.iter().any(|&i| cols.iter().any(|&j| a.get(i, j))) {
        return reject("block contains a one");
    }
    Ok(())
}

/// Re-checks a certificate against its embedded instance.
pub fn verify(cert: &Certificate) -> Result<(), CertificateError> {
    if !cert.claim.applies_to(cert.instance.kind()) {
        return Err(CertificateError::Inapplicable { claim: cert.claim, kind: cert.instance.kind() });
    }
    let k = cert.k;
    match (&cert.instance, cert.claim) {
        (Instance::Bipartite(g), _) => check_extendable(g, k, cert.holds, &cert.witness),
        (Instance::Digraph(d), _) => match (cert.holds, &cert.witness) {
            (true, Witness::PathSystems { matching: None, families, .. }) => check_path_families(d, k, families),
            (false, Witness::Separator { matching: None, vertices }) => check_separator(d, k, vertices),
            (false, Witness::TooFewVertices) if d.n() < k + 1 => Ok(()),
            _ => reject("witness does not fit the claim and verdict"),
        },
        (Instance::Matrix(a), claim) => {
            let n = a.n();
            let symmetric = claim == Claim::KIrreducible;
            let in_range = if symmetric { (1..=n).contains(&k) } else { k < n };
            if !in_range {
                return reject(format!("k = {k} out of range for order {n}"));
            }
            match (cert.holds, &cert.witness) {
                (false, Witness::ZeroBlock { rows, cols }) => check_zero_block(a, k, symmetric, rows, cols),
                (true, Witness::NoAdmissibleBlock) if symmetric && k == n => Ok(()),
                (true, Witness::PathSystems { matching: None, families, .. }) if symmetric => {
                    check_path_families(&a.digraph().without_loops(), k, families)
                }
                (true, w) if !symmetric => check_extendable(&bipartite_of_matrix(a), k, true, w),
                _ => reject("witness does not fit the claim and verdict"),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(cert: &Certificate) -> Certificate {
        let text = cert.to_string();
        let back: Certificate = text.parse().unwrap();
        assert_eq!(&back, cert, "{text}");
        back
    }

    #[test]
    fn k33_two_extendable() {
        let cert = certify(&Instance::Bipartite(BipartiteGraph::complete(3)), Claim::KExtendable, 2).unwrap();
        assert!(cert.holds);
        verify(&round_trip(&cert)).unwrap();
    }

    #[test]
    fn c6_not_two_extendable() {
        let cert = certify(&Instance::Bipartite(BipartiteGraph::cycle(3)), Claim::KExtendable, 2).unwrap();
        assert!(!cert.holds);
        assert_eq!(cert.witness, Witness::NonExtendableMatching(vec![Edge::new(0, 0), Edge::new(1, 2)]));
        verify(&round_trip(&cert)).unwrap();
    }

    #[test]
    fn three_cycle_not_two_strong() {
        let cert = certify(&Instance::Digraph(Digraph::cycle(3)), Claim::KStrong, 2).unwrap();
        assert_eq!(cert.witness, Witness::Separator { matching: None, vertices: vec![0] });
        let text = cert.to_string();
        assert!(text.contains("witness: separator\nvertices: v1\nend\n"));
        verify(&round_trip(&cert)).unwrap();
    }

    #[test]
    fn matrix_claims() {
        let j3 = Instance::Matrix(ZeroOneMatrix::ones(3));
        for (claim, k) in [(Claim::KIndecomposable, 2), (Claim::KIrreducible, 2), (Claim::KIrreducible, 3), (Claim::KIndecomposable, 0)] {
            let cert = certify(&j3, claim, k).unwrap();
            assert!(cert.holds);
            verify(&round_trip(&cert)).unwrap();
        }
        let swap = Instance::Matrix(ZeroOneMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap());
        let cert = certify(&swap, Claim::KIndecomposable, 1).unwrap();
        assert!(!cert.holds);
        verify(&round_trip(&cert)).unwrap();
    }

    #[test]
    fn tampering_is_detected() {
        let mut cert = certify(&Instance::Digraph(Digraph::cycle(3)), Claim::KStrong, 2).unwrap();
        cert.witness = Witness::Separator { matching: None, vertices: vec![] };
        assert!(verify(&cert).is_err());
        cert.holds = true;
        assert!(verify(&cert).is_err());
        let mut cert = certify(&Instance::Bipartite(BipartiteGraph::cycle(3)), Claim::KExtendable, 1).unwrap();
        cert.k = 2;
        assert!(verify(&cert).is_err());
    }

    #[test]
    fn inapplicable_claims_are_rejected() {
        assert_eq!(
            certify(&Instance::Digraph(Digraph::cycle(3)), Claim::KExtendable, 1),
            Err(CertificateError::Inapplicable { claim: Claim::KExtendable, kind: InstanceKind::Digraph })
        );
    }

    #[test]
    fn parse_errors_report_lines() {
        let err = "extendix-certificate 1\nclaim: k-strong\nk: x\n".parse::<Certificate>().unwrap_err();
        assert_eq!(err, CertificateError::Parse { line: 3, message: "k must be a non-negative integer".into() });
    }
}
