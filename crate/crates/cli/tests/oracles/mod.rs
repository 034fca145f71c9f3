//! Brute-force reference implementations over bitmasks. Nothing here calls the
//! decision procedures of the library; library types are only read for their edges.

#![allow(dead_code)]

use extendix::graph::{BipartiteGraph, Digraph, ZeroOneMatrix};

pub fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << n).filter(move |s| s.count_ones() as usize == size)
}

/// Bipartite graph as `adj[u]` = bitmask of W-neighbors.
#[derive(Clone, Debug)]
pub struct Bg {
    pub n: usize,
    pub adj: Vec<u32>,
}

impl Bg {
    pub fn of(g: &BipartiteGraph) -> Self {
        let mut adj = vec![0u32; g.n()];
        for e in g.edges() {
            adj[e.u] |= 1 << e.w;
        }
        Bg { n: g.n(), adj }
    }

    pub fn has(&self, u: usize, w: usize) -> bool {
        self.adj[u] >> w & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| bits(self.adj[u]).map(move |w| (u, w))).collect()
    }

    pub fn without(&self, u: usize, w: usize) -> Bg {
        let mut h = self.clone();
        h.adj[u] &= !(1 << w);
        h
    }

    /// Perfect matchings of the subgraph on the unused vertices, as `p[u] = w`
    /// over all `u` (used vertices keep `usize::MAX`).
    fn complete(&self, u_used: u32, w_used: u32, limit: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
        if out.len() >= limit {
            return;
        }
        let Some(u) = (0..self.n).find(|&u| u_used >> u & 1 == 0) else {
            out.push(cur.clone());
            return;
        };
        for w in bits(self.adj[u] & !w_used) {
            cur[u] = w;
            self.complete(u_used | 1 << u, w_used | 1 << w, limit, out, cur);
            cur[u] = usize::MAX;
        }
    }

    pub fn perfect_matchings(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.complete(0, 0, usize::MAX, &mut out, &mut vec![usize::MAX; self.n]);
        out
    }

    pub fn extends(&self, u_used: u32, w_used: u32) -> bool {
        let mut out = Vec::new();
        self.complete(u_used, w_used, 1, &mut out, &mut vec![usize::MAX; self.n]);
        !out.is_empty()
    }

    pub fn has_perfect_matching(&self) -> bool {
        self.extends(0, 0)
    }

    pub fn is_connected(&self) -> bool {
        // vertices 0..n are U, n..2n are W
        let mut seen_u = 1u32;
        let mut seen_w = 0u32;
        loop {
            let mut w = seen_w;
            for u in bits(seen_u) {
                w |= self.adj[u];
            }
            let mut u = seen_u;
            for x in 0..self.n {
                if self.adj[x] & w != 0 {
                    u |= 1 << x;
                }
            }
            if (u, w) == (seen_u, seen_w) {
                break;
            }
            (seen_u, seen_w) = (u, w);
        }
        let full = (1u32 << self.n) - 1;
        seen_u == full && seen_w == full
    }

    /// Every matching of size `k` extends to a perfect matching, the graph is
    /// connected and has a perfect matching.
    pub fn is_k_extendable(&self, k: usize) -> bool {
        if !self.has_perfect_matching() || !self.is_connected() {
            return false;
        }
        self.all_extend(0, 0, 0, k)
    }

    fn all_extend(&self, from: usize, u_used: u32, w_used: u32, left: usize) -> bool {
        if left == 0 {
            return self.extends(u_used, w_used);
        }
        for u in from..self.n {
            for w in bits(self.adj[u] & !w_used) {
                if !self.all_extend(u + 1, u_used | 1 << u, w_used | 1 << w, left - 1) {
                    return false;
                }
            }
        }
        true
    }

    /// `|N(X)| >= |X| + k` for every nonempty `X ⊆ U` with `|X| <= n - k`.
    pub fn neighborhood_condition(&self, k: usize) -> bool {
        (1u32..1 << self.n).filter(|x| x.count_ones() as usize <= self.n - k).all(|x| {
            let nb = bits(x).fold(0u32, |m, u| m | self.adj[u]);
            nb.count_ones() as usize >= x.count_ones() as usize + k
        })
    }

    /// `D(G, M)` for `M = {u_i w_p[i]}`.
    pub fn digraph(&self, p: &[usize]) -> Dg {
        let mut owner = vec![0; self.n];
        for (i, &w) in p.iter().enumerate() {
            owner[w] = i;
        }
        let mut out = vec![0u32; self.n];
        for i in 0..self.n {
            for w in bits(self.adj[i]) {
                if w != p[i] {
                    out[i] |= 1 << owner[w];
                }
            }
        }
        Dg { n: self.n, out }
    }
}

/// Loop-free digraph as `out[a]` = bitmask of out-neighbors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dg {
    pub n: usize,
    pub out: Vec<u32>,
}

impl Dg {
    pub fn of(d: &Digraph) -> Self {
        let mut out = vec![0u32; d.n()];
        for (a, b) in d.arcs() {
            if a != b {
                out[a] |= 1 << b;
            }
        }
        Dg { n: d.n(), out }
    }

    pub fn has(&self, a: usize, b: usize) -> bool {
        self.out[a] >> b & 1 == 1
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|a| bits(self.out[a]).map(move |b| (a, b))).collect()
    }

    pub fn without(&self, a: usize, b: usize) -> Dg {
        let mut h = self.clone();
        h.out[a] &= !(1 << b);
        h
    }

    pub fn all(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    pub fn reach(&self, alive: u32, s: usize) -> u32 {
        let mut seen = 1u32 << s;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.out[v] & alive;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn reverse(&self) -> Dg {
        let mut out = vec![0u32; self.n];
        for (a, b) in self.arcs() {
            out[b] |= 1 << a;
        }
        Dg { n: self.n, out }
    }

    pub fn strong_on(&self, alive: u32) -> bool {
        let Some(s) = bits(alive).next() else { return false };
        self.reach(alive, s) == alive && self.reverse().reach(alive, s) == alive
    }

    pub fn is_strong(&self) -> bool {
        self.strong_on(self.all())
    }

    /// At least `k + 1` vertices and strong after deleting any fewer than `k`.
    pub fn is_k_strong(&self, k: usize) -> bool {
        self.n > k && (0..k).all(|size| subsets_of_size(self.n, size).all(|s| self.strong_on(self.all() & !s)))
    }

    pub fn connectivity(&self) -> usize {
        (0..self.n).take_while(|&k| self.is_k_strong(k + 1)).count()
    }

    pub fn sccs(&self) -> Vec<u32> {
        let rev = self.reverse();
        let mut out: Vec<u32> = (0..self.n).map(|v| self.reach(self.all(), v) & rev.reach(self.all(), v)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_acyclic(&self) -> bool {
        let mut alive = self.all();
        loop {
            let source = bits(alive).find(|&v| (0..self.n).all(|a| alive >> a & 1 == 0 || !self.has(a, v)));
            match source {
                Some(v) => alive &= !(1 << v),
                None => return alive == 0,
            }
        }
    }

    pub fn is_minimal_k_strong(&self, k: usize) -> bool {
        self.is_k_strong(k) && self.arcs().iter().all(|&(a, b)| !self.without(a, b).is_k_strong(k))
    }

    /// `B(D)`: the canonical matching plus `u_a w_b` for every arc.
    pub fn bipartite(&self) -> Bg {
        Bg { n: self.n, adj: (0..self.n).map(|a| self.out[a] | 1 << a).collect() }
    }
}

/// `(0,1)`-matrix as row bitmasks.
#[derive(Clone, Debug)]
pub struct Mat {
    pub n: usize,
    pub rows: Vec<u32>,
}

impl Mat {
    pub fn of(a: &ZeroOneMatrix) -> Self {
        let n = a.n();
        Mat { n, rows: (0..n).map(|i| (0..n).filter(|&j| a.get(i, j)).fold(0, |m, j| m | 1 << j)).collect() }
    }

    fn zero_block(&self, s: u32, t: u32) -> bool {
        bits(s).all(|i| self.rows[i] & t == 0)
    }

    /// Rows `S`, columns `T` with `|S| + |T| = n - k + 1`, `1 <= |S| <= n - k` and
    /// `A[S, T] = 0`, optionally insisting on `S ∩ T = ∅`.
    fn block(&self, k: usize, disjoint: bool) -> bool {
        let n = self.n;
        if k >= n {
            return false;
        }
        let total = n - k + 1;
        (1u32..1 << n).filter(|s| (s.count_ones() as usize) <= n - k).any(|s| {
            let width = total - s.count_ones() as usize;
            (1u32..1 << n)
                .filter(|t| t.count_ones() as usize == width && (!disjoint || s & t == 0))
                .any(|t| self.zero_block(s, t))
        })
    }

    pub fn k_reducible(&self, k: usize) -> bool {
        self.block(k, true)
    }

    pub fn reducible(&self) -> bool {
        self.k_reducible(1)
    }

    pub fn k_partly_decomposable(&self, k: usize) -> bool {
        self.block(k, false)
    }

    pub fn partly_decomposable(&self) -> bool {
        self.n >= 2 && self.k_partly_decomposable(1)
    }

    pub fn nonzero_diagonals(&self) -> usize {
        fn go(m: &Mat, i: usize, used: u32) -> usize {
            if i == m.n {
                return 1;
            }
            bits(m.rows[i] & !used).map(|j| go(m, i + 1, used | 1 << j)).sum()
        }
        go(self, 0, 0)
    }

    pub fn plus_identity(&self) -> Mat {
        Mat { n: self.n, rows: (0..self.n).map(|i| self.rows[i] | 1 << i).collect() }
    }

    pub fn positive_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.rows[i] >> i & 1 == 1)
    }

    pub fn digraph(&self) -> Dg {
        Dg { n: self.n, out: (0..self.n).map(|i| self.rows[i] & !(1 << i)).collect() }
    }

    pub fn bipartite(&self) -> Bg {
        Bg { n: self.n, adj: self.rows.clone() }
    }
}
