//! Unit-capacity vertex-disjoint path machinery via vertex splitting.

use std::collections::VecDeque;

use crate::graph::Digraph;

#[derive(Clone, Copy, Debug)]
struct FlowEdge {
    to: usize,
    cap: u32,
    rev: usize,
    original: bool,
}

/// Residual network over the split digraph: vertex `v` becomes `in(v) = 2v` and
/// `out(v) = 2v + 1` joined by a unit edge; arc `a -> b` becomes `out(a) -> in(b)`.
/// Two extra nodes serve as super source and super sink. Arc edges are unbounded so
/// every minimum cut consists of split edges, except for one optional unit arc that
/// stands for a direct `s -> t` path.
pub(crate) struct SplitNetwork {
    adj: Vec<Vec<FlowEdge>>,
    n: usize,
}

const ARC_CAP: u32 = u32::MAX / 4;

impl SplitNetwork {
    pub(crate) fn new(d: &Digraph, removed: &[bool], unit_arc: Option<(usize, usize)>) -> Self {
        let n = d.n();
        let mut net = SplitNetwork { adj: vec![Vec::new(); 2 * n + 2], n };
        for v in 0..n {
            if !removed[v] {
                net.add_edge(2 * v, 2 * v + 1, 1);
            }
        }
        for (a, b) in d.proper_arcs() {
            if !removed[a] && !removed[b] {
                let cap = if unit_arc == Some((a, b)) { 1 } else { ARC_CAP };
                net.add_edge(2 * a + 1, 2 * b, cap);
            }
        }
        net
    }

    pub(crate) fn vin(v: usize) -> usize {
        2 * v
    }

    pub(crate) fn vout(v: usize) -> usize {
        2 * v + 1
    }

    pub(crate) fn source(&self) -> usize {
        2 * self.n
    }

    pub(crate) fn sink(&self) -> usize {
        2 * self.n + 1
    }

    pub(crate) fn add_edge(&mut self, from: usize, to: usize, cap: u32) {
        let rev_from = self.adj[to].len();
        let rev_to = self.adj[from].len();
        self.adj[from].push(FlowEdge { to, cap, rev: rev_from, original: true });
        self.adj[to].push(FlowEdge { to: from, cap: 0, rev: rev_to, original: false });
    }

    /// Augments along shortest paths until `limit` units flow from `s` to `t`.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit {
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.adj.len()];
            let mut seen = vec![false; self.adj.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for (i, e) in self.adj[x].iter().enumerate() {
                    if e.cap > 0 && !seen[e.to] {
                        seen[e.to] = true;
                        prev[e.to] = Some((x, i));
                        queue.push_back(e.to);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut x = t;
            while let Some((p, i)) = prev[x] {
                let rev = self.adj[p][i].rev;
                self.adj[p][i].cap -= 1;
                self.adj[x][rev].cap += 1;
                x = p;
            }
            flow += 1;
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network.
    pub(crate) fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for e in &self.adj[x] {
                if e.cap > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    queue.push_back(e.to);
                }
            }
        }
        seen
    }

    /// Vertices whose split edge crosses the minimum cut after a maximum flow from `s`.
    pub(crate) fn vertex_cut(&self, s: usize) -> Vec<usize> {
        let reach = self.residual_reachable(s);
        (0..self.n)
            .filter(|&v| reach[Self::vin(v)] && !reach[Self::vout(v)])
            .collect()
    }

    fn flow_on(&self, x: usize, i: usize) -> u32 {
        let e = self.adj[x][i];
        if !e.original {
            return 0;
        }
        self.adj[e.to][e.rev].cap
    }

    /// Decomposes the current flow from `s` into node paths ending at `t`; consumes flow.
    pub(crate) fn extract_paths(&mut self, s: usize, t: usize) -> Vec<Vec<usize>> {
        let mut paths = Vec::new();
        loop {
            let mut path = vec![s];
            let mut x = s;
            while x != t {
                let next = (0..self.adj[x].len()).find(|&i| self.flow_on(x, i) > 0);
                let Some(i) = next else { break };
                let e = self.adj[x][i];
                self.adj[e.to][e.rev].cap -= 1;
                self.adj[x][i].cap += 1;
                x = e.to;
                path.push(x);
            }
            if x != t {
                return paths;
            }
            paths.push(path);
        }
    }

    /// Maps a node path of the split network to digraph vertices.
    pub(crate) fn to_vertex_path(&self, nodes: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for &x in nodes {
            if x >= 2 * self.n {
                continue;
            }
            let v = x / 2;
            if out.last() != Some(&v) {
                out.push(v);
            }
        }
        out
    }
}

/// Maximum number of internally disjoint `s -> t` paths (direct arc included), capped
/// at `limit`, plus the paths themselves.
pub(crate) fn disjoint_paths(d: &Digraph, s: usize, t: usize, limit: u32) -> (Vec<Vec<usize>>, Vec<usize>) {
    let removed = vec![false; d.n()];
    let mut net = SplitNetwork::new(d, &removed, Some((s, t)));
    let from = SplitNetwork::vout(s);
    let to = SplitNetwork::vin(t);
    let flow = net.max_flow(from, to, limit);
    let cut = if flow < limit { net.vertex_cut(from) } else { Vec::new() };
    let mut paths: Vec<Vec<usize>> = net
        .extract_paths(from, to)
        .iter()
        .map(|p| net.to_vertex_path(p))
        .collect();
    paths.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    (paths, cut.into_iter().filter(|&v| v != s && v != t).collect())
}

/// Local connectivity `kappa(s, t)` for a non-adjacent ordered pair.
pub(crate) fn local_connectivity(d: &Digraph, s: usize, t: usize) -> usize {
    disjoint_paths(d, s, t, d.n() as u32).0.len()
}
