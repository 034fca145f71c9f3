//! Conversions between the three instance kinds, with a sidecar recording the map.
//!
//! ```text
//! extendix-map 1
//! direction: g2d
//! n: 3
//! matching: u1w1 u2w2 u3w3
//! vertex: v1 u1w1
//! arc: v1 v2 u1w2
//! end
//! ```

use std::fmt;

use clap::ValueEnum;
use extendix::correspondence::{self, CorrespondenceMap};
use extendix::format::Instance;
use extendix::graph::{BipartiteGraph, Edge};
use extendix::matching::{self, Matching};

pub const MAP_HEADER: &str = "extendix-map 1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    G2d,
    D2g,
    G2m,
    M2g,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::G2d => "g2d",
            Direction::D2g => "d2g",
            Direction::G2m => "g2m",
            Direction::M2g => "m2g",
        })
    }
}

/// `auto` or a list of edge labels separated by commas or spaces.
pub fn select_matching(g: &BipartiteGraph, selector: &str) -> Result<Matching, String> {
    if selector == "auto" {
        return matching::first_perfect_matching(g).ok_or_else(|| "graph has no perfect matching".to_string());
    }
    let edges = selector
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Edge>())
        .collect::<Result<Vec<_>, _>>()?;
    Matching::perfect(g, edges).map_err(|e| format!("invalid matching: {e}"))
}

pub struct Converted {
    pub instance: Instance,
    pub sidecar: String,
}

fn render_map(direction: Direction, map: &CorrespondenceMap) -> String {
    let mut out = format!("{MAP_HEADER}\ndirection: {direction}\nn: {}\n", map.n());
    let m = map.matching();
    out.push_str(&format!(
        "matching: {}\n",
        m.edges().iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
    ));
    for v in 0..map.n() {
        out.push_str(&format!("vertex: v{} {}\n", v + 1, map.matching_edge_of_vertex(v)));
    }
    for (e, (a, b)) in map.arcs() {
        out.push_str(&format!("arc: v{} v{} {e}\n", a + 1, b + 1));
    }
    out.push_str("end\n");
    out
}

fn render_identity(direction: Direction, n: usize) -> String {
    let mut out = format!("{MAP_HEADER}\ndirection: {direction}\nn: {n}\n");
    for i in 1..=n {
        out.push_str(&format!("row: {i} u{i}\n"));
    }
    for j in 1..=n {
        out.push_str(&format!("col: {j} w{j}\n"));
    }
    out.push_str("end\n");
    out
}

/// Reads the `vertex:` lines of a `g2d` sidecar: entry `v` is the W index of the
/// matching edge represented by `v_{v+1}`.
pub fn parse_vertex_map(text: &str) -> Result<Vec<usize>, String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    if lines.next().map(str::trim) != Some(MAP_HEADER) {
        return Err(format!("sidecar must start with `{MAP_HEADER}`"));
    }
    let mut entries = Vec::new();
    for line in lines {
        let Some(rest) = line.strip_prefix("vertex:") else { continue };
        let toks: Vec<&str> = rest.split_whitespace().collect();
        let [v, e] = toks[..] else {
            return Err(format!("malformed sidecar line `{line}`"));
        };
        let v: usize = v
            .strip_prefix('v')
            .and_then(|x| x.parse().ok())
            .and_then(|x: usize| x.checked_sub(1))
            .ok_or_else(|| format!("malformed vertex `{v}`"))?;
        let e: Edge = e.parse()?;
        if e.u != v {
            return Err(format!("vertex v{} must carry the matching edge at u{}", v + 1, v + 1));
        }
        entries.push((v, e.w));
    }
    entries.sort_unstable();
    let n = entries.len();
    let perm: Vec<usize> = entries.iter().map(|&(_, w)| w).collect();
    let mut seen = vec![false; n];
    for (i, &(v, w)) in entries.iter().enumerate() {
        if v != i || w >= n || std::mem::replace(&mut seen[w], true) {
            return Err("sidecar vertex lines do not describe a perfect matching".into());
        }
    }
    Ok(perm)
}

pub fn convert(
    instance: &Instance,
    direction: Direction,
    selector: &str,
    restore: Option<&[usize]>,
) -> Result<Converted, String> {
    match (direction, instance) {
        (Direction::G2d, Instance::Bipartite(g)) => {
            let m = select_matching(g, selector)?;
            let (d, map) = correspondence::digraph_of(g, &m).map_err(|e| e.to_string())?;
            Ok(Converted { instance: Instance::Digraph(d), sidecar: render_map(direction, &map) })
        }
        (Direction::D2g, Instance::Digraph(d)) => {
            let (g, _, map) = correspondence::bipartite_of_digraph(d).map_err(|e| e.to_string())?;
            let Some(perm) = restore else {
                return Ok(Converted { instance: Instance::Bipartite(g), sidecar: render_map(direction, &map) });
            };
            if perm.len() != g.n() {
                return Err(format!("sidecar has {} vertices, digraph has {}", perm.len(), g.n()));
            }
            let g = g.relabel_w(perm);
            let m = Matching::perfect(&g, perm.iter().enumerate().map(|(i, &w)| Edge::new(i, w)))
                .expect("relabelled canonical matching");
            let (_, map) = correspondence::digraph_of(&g, &m).expect("perfect matching");
            Ok(Converted { instance: Instance::Bipartite(g), sidecar: render_map(direction, &map) })
        }
        (Direction::G2m, Instance::Bipartite(g)) => Ok(Converted {
            instance: Instance::Matrix(correspondence::reduced_adjacency(g)),
            sidecar: render_identity(direction, g.n()),
        }),
        (Direction::M2g, Instance::Matrix(a)) => Ok(Converted {
            instance: Instance::Bipartite(correspondence::bipartite_of_matrix(a)),
            sidecar: render_identity(direction, a.n()),
        }),
        (direction, other) => Err(format!("{direction} does not accept a {} instance", other.kind())),
    }
}
