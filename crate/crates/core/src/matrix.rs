//! Reducibility and decomposability of (0,1)-matrices, their k-generalizations, and
//! diagonals, decided through the associated digraph and bipartite graph.
//!
//! A matrix is `k`-reducible when some simultaneous row/column permutation exposes an
//! `l x (n - k + 1 - l)` zero block in the upper right corner, and `k`-partly
//! decomposable when independent permutations do. With `k = 1` these are the classical
//! reducible and partly decomposable matrices.

use std::fmt;

use thiserror::Error;

use crate::connectivity::{self, StrongWitness};
use crate::correspondence::{bipartite_of_matrix, digraph_of};
use crate::extendability::{self, ExtendWitness};
use crate::graph::{Digraph, ZeroOneMatrix};
use crate::matching::{count_perfect_matchings, first_perfect_matching, hall_violator, has_perfect_matching_restricted};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("k = {k} out of range for order {n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("order {n} exceeds the exhaustive limit {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Reducible,
    KReducible,
    PartlyDecomposable,
    KPartlyDecomposable,
}

impl WitnessKind {
    pub fn symmetric(self) -> bool {
        matches!(self, WitnessKind::Reducible | WitnessKind::KReducible)
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessKind::Reducible => "reducible",
            WitnessKind::KReducible => "k_reducible",
            WitnessKind::PartlyDecomposable => "partly_decomposable",
            WitnessKind::KPartlyDecomposable => "k_partly_decomposable",
        })
    }
}

/// A zero block `rows x cols` and permutations `p`, `q` moving it to the upper right
/// corner: entry `(i, j)` of the permuted matrix is `A[p[i], q[j]]`. Symmetric kinds
/// have `p == q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionWitness {
    pub kind: WitnessKind,
    pub k: usize,
    pub l: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub p: Vec<usize>,
    pub q: Vec<usize>,
}

impl DecompositionWitness {
    fn new(kind: WitnessKind, k: usize, n: usize, rows: Vec<usize>, cols: Vec<usize>) -> Self {
        let mut p = rows.clone();
        let q;
        if kind.symmetric() {
            p.extend((0..n).filter(|v| !rows.contains(v) && !cols.contains(v)));
            p.extend(cols.iter().copied());
            q = p.clone();
        } else {
            p.extend((0..n).filter(|v| !rows.contains(v)));
            let mut qq: Vec<usize> = (0..n).filter(|v| !cols.contains(v)).collect();
            qq.extend(cols.iter().copied());
            q = qq;
        }
        DecompositionWitness { kind, k, l: rows.len(), rows, cols, p, q }
    }

    /// Re-checks block shape, zero entries and that `p`, `q` expose the block.
    pub fn verify(&self, a: &ZeroOneMatrix) -> Result<(), String> {
        let n = a.n();
        let width = (n + 1).checked_sub(self.k + self.l).unwrap_or(0);
        if self.l == 0 || self.l != self.rows.len() || width == 0 || self.cols.len() != width {
            return Err(format!("block {}x{} has the wrong shape", self.rows.len(), self.cols.len()));
        }
        if self.rows.iter().chain(&self.cols).any(|&x| x >= n) {
            return Err("index out of range".into());
        }
        if self.kind.symmetric() && self.rows.iter().any(|r| self.cols.contains(r)) {
            return Err("rows and columns overlap in a symmetric witness".into());
        }
        if !a.is_zero_block(&self.rows, &self.cols) {
            return Err("block is not zero".into());
        }
        let is_perm = |p: &[usize]| {
            let mut s = p.to_vec();
            s.sort_unstable();
            s == (0..n).collect::<Vec<_>>()
        };
        if !is_perm(&self.p) || !is_perm(&self.q) || (self.kind.symmetric() && self.p != self.q) {
            return Err("invalid permutations".into());
        }
        let b = a.permuted(&self.p, &self.q);
        let top: Vec<usize> = (0..self.l).collect();
        let right: Vec<usize> = (n - width..n).collect();
        if !b.is_zero_block(&top, &right) {
            return Err("permutations do not expose the block".into());
        }
        Ok(())
    }
}

/// Outcome of a reducibility or decomposability test; `holds` means reducible or
/// partly decomposable (in the relevant `k` sense).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixCheck {
    pub holds: bool,
    pub witness: Option<DecompositionWitness>,
}

pub const SUBSET_SEARCH_LIMIT: usize = 16;
pub const PERMUTATION_SEARCH_LIMIT: usize = 8;

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

/// The zero block minimizing `(l, row subset)` lexicographically, with the
/// lexicographically first columns.
fn smallest_zero_block(a: &ZeroOneMatrix, k: usize, symmetric: bool) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = a.n();
    for l in 1..=n.saturating_sub(k) {
        let width = n + 1 - k - l;
        let mut rows: Vec<usize> = (0..l).collect();
        loop {
            let cols: Vec<usize> = (0..n)
                .filter(|&j| !(symmetric && rows.contains(&j)))
                .filter(|&j| rows.iter().all(|&i| !a.get(i, j)))
                .take(width)
                .collect();
            if cols.len() == width {
                return Some((rows, cols));
            }
            if !next_combination(&mut rows, n) {
                break;
            }
        }
    }
    None
}

/// Trims rows `x` and columns `t` of a zero block to total `n - k + 1`, both non-empty.
fn trim(mut x: Vec<usize>, mut t: Vec<usize>, n: usize, k: usize) -> (Vec<usize>, Vec<usize>) {
    x.sort_unstable();
    t.sort_unstable();
    let total = n + 1 - k;
    let l = x.len().min(total - 1);
    x.truncate(l);
    t.truncate(total - l);
    (x, t)
}

/// Rows/columns of a zero block read off a separator `s` of a digraph whose arc
/// `i -> j` means entry `(i, col(j))` is one: a sink component `X` of `D - S` has no
/// arcs to the remaining vertices `T`.
fn block_from_separator(d: &Digraph, s: &[usize], k: usize, col: impl Fn(usize) -> usize) -> (Vec<usize>, Vec<usize>) {
    let n = d.n();
    let keep: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
    let sub = d.induced(&keep);
    let comps = connectivity::strong_components(&sub);
    let sink: Vec<usize> = comps.last().expect("non-empty").iter().map(|&i| keep[i]).collect();
    let rest: Vec<usize> = keep.iter().copied().filter(|v| !sink.contains(v)).map(&col).collect();
    trim(sink, rest, n, k)
}

fn check_reducible_k(n: usize, k: usize) -> Result<(), MatrixError> {
    if k == 0 || k > n {
        return Err(MatrixError::KOutOfRange { k, n });
    }
    Ok(())
}

/// `k`-reducibility through `D(A)` (loops ignored): for `k < n`, `A` is `k`-irreducible
/// exactly when `D(A)` is `k`-strong; for `k = n` no block shape is admissible, so no
/// matrix is `n`-reducible.
pub fn is_k_reducible(a: &ZeroOneMatrix, k: usize) -> Result<MatrixCheck, MatrixError> {
    let n = a.n();
    check_reducible_k(n, k)?;
    if k == n {
        return Ok(MatrixCheck { holds: false, witness: None });
    }
    let d = a.digraph().without_loops();
    let check = connectivity::is_k_strong(&d, k);
    if check.holds {
        return Ok(MatrixCheck { holds: false, witness: None });
    }
    let kind = if k == 1 { WitnessKind::Reducible } else { WitnessKind::KReducible };
    let (rows, cols) = if n <= SUBSET_SEARCH_LIMIT {
        smallest_zero_block(a, k, true).expect("a separator below k yields a block")
    } else {
        let StrongWitness::Separator(s) = check.witness else {
            unreachable!("n > k so the witness is a separator")
        };
        block_from_separator(&d, &s, k, |j| j)
    };
    Ok(MatrixCheck { holds: true, witness: Some(DecompositionWitness::new(kind, k, n, rows, cols)) })
}

/// Reducibility through strong connectivity of `D(A)`.
pub fn is_reducible(a: &ZeroOneMatrix) -> MatrixCheck {
    is_k_reducible(a, 1).expect("k = 1 is always in range")
}

/// Definitional `k`-reducibility: tries every simultaneous permutation and every block
/// shape.
pub fn is_k_reducible_oracle(a: &ZeroOneMatrix, k: usize) -> Result<MatrixCheck, MatrixError> {
    let n = a.n();
    check_reducible_k(n, k)?;
    if n > PERMUTATION_SEARCH_LIMIT {
        return Err(MatrixError::TooLarge { n, limit: PERMUTATION_SEARCH_LIMIT });
    }
    let kind = if k == 1 { WitnessKind::Reducible } else { WitnessKind::KReducible };
    for p in Permutations::new(n) {
        for l in 1..=n - k {
            let width = n + 1 - k - l;
            let rows = &p[..l];
            let cols = &p[n - width..];
            if a.is_zero_block(rows, cols) {
                let mut w = DecompositionWitness::new(kind, k, n, rows.to_vec(), cols.to_vec());
                w.p = p.clone();
                w.q = p;
                return Ok(MatrixCheck { holds: true, witness: Some(w) });
            }
        }
    }
    Ok(MatrixCheck { holds: false, witness: None })
}

fn check_decomposable_k(n: usize, k: usize) -> Result<(), MatrixError> {
    if k >= n {
        return Err(MatrixError::KOutOfRange { k, n });
    }
    Ok(())
}

/// `k`-partial decomposability through `k`-extendability of `B(A)`, for `0 <= k <= n - 1`.
pub fn is_k_partly_decomposable(a: &ZeroOneMatrix, k: usize) -> Result<MatrixCheck, MatrixError> {
    let n = a.n();
    check_decomposable_k(n, k)?;
    let g = bipartite_of_matrix(a);
    let check = extendability::is_k_extendable(&g, k).expect("k checked against n");
    if check.holds {
        return Ok(MatrixCheck { holds: false, witness: None });
    }
    let kind = if k == 1 { WitnessKind::PartlyDecomposable } else { WitnessKind::KPartlyDecomposable };
    let (rows, cols) = if n <= SUBSET_SEARCH_LIMIT {
        smallest_zero_block(a, k, false).expect("a non-extendable B(A) yields a block")
    } else {
        constructive_block(a, k, &check.witness)
    };
    Ok(MatrixCheck { holds: true, witness: Some(DecompositionWitness::new(kind, k, n, rows, cols)) })
}

/// A zero block from a Hall violator (no perfect matching) or from a separator of
/// `D(B(A), M)`.
fn constructive_block(a: &ZeroOneMatrix, k: usize, witness: &ExtendWitness) -> (Vec<usize>, Vec<usize>) {
    let n = a.n();
    let g = bipartite_of_matrix(a);
    let Some(m) = first_perfect_matching(&g) else {
        let alive = vec![true; n];
        let x = hall_violator(&g, &alive, &alive).expect("no perfect matching");
        let cols: Vec<usize> = (0..n).filter(|&j| x.iter().all(|&i| !a.get(i, j))).collect();
        return trim(x, cols, n, k);
    };
    let (d, map) = digraph_of(&g, &m).expect("perfect matching");
    let s = match witness {
        ExtendWitness::Separator(s) => s.clone(),
        _ => Vec::new(),
    };
    block_from_separator(&d, &s, k, |v| map.matching_edge_of_vertex(v).w)
}

/// Partial decomposability (`k = 1`) through 1-extendability of `B(A)`. A matrix of
/// order one admits no block and is fully indecomposable.
pub fn is_partly_decomposable(a: &ZeroOneMatrix) -> MatrixCheck {
    if a.n() == 1 {
        return MatrixCheck { holds: false, witness: None };
    }
    is_k_partly_decomposable(a, 1).expect("k = 1 < n")
}

/// Definitional `k`-partial decomposability by row/column subset search, `0 <= k <= n - 1`.
pub fn is_k_partly_decomposable_oracle(a: &ZeroOneMatrix, k: usize) -> Result<MatrixCheck, MatrixError> {
    let n = a.n();
    if k >= n && !(k == 1 && n == 1) {
        return Err(MatrixError::KOutOfRange { k, n });
    }
    if n > SUBSET_SEARCH_LIMIT {
        return Err(MatrixError::TooLarge { n, limit: SUBSET_SEARCH_LIMIT });
    }
    let kind = if k == 1 { WitnessKind::PartlyDecomposable } else { WitnessKind::KPartlyDecomposable };
    Ok(match smallest_zero_block(a, k, false) {
        Some((rows, cols)) => {
            MatrixCheck { holds: true, witness: Some(DecompositionWitness::new(kind, k, n, rows, cols)) }
        }
        None => MatrixCheck { holds: false, witness: None },
    })
}

/// The diagonal criterion for full indecomposability: every one entry lies on a
/// nonzero diagonal and every zero entry on a diagonal whose only zero it is. Entry
/// `(i, j)` lies on such a diagonal iff `B(A)` minus `u_i`, `w_j` has a perfect matching.
/// Returns `true` when `A` is partly decomposable.
pub fn is_partly_decomposable_by_diagonals(a: &ZeroOneMatrix) -> bool {
    let n = a.n();
    let g = bipartite_of_matrix(a);
    for i in 0..n {
        for j in 0..n {
            let mut u_alive = vec![true; n];
            let mut w_alive = vec![true; n];
            u_alive[i] = false;
            w_alive[j] = false;
            if !has_perfect_matching_restricted(&g, &u_alive, &w_alive, None) {
                return true;
            }
        }
    }
    false
}

/// The three decisions for partial decomposability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposabilityRoutes {
    pub zero_block: bool,
    pub diagonal: bool,
    pub extendability: bool,
}

impl DecomposabilityRoutes {
    pub fn agree(&self) -> bool {
        self.zero_block == self.diagonal && self.diagonal == self.extendability
    }
}

pub fn partly_decomposable_routes(a: &ZeroOneMatrix) -> Result<DecomposabilityRoutes, MatrixError> {
    Ok(DecomposabilityRoutes {
        zero_block: is_k_partly_decomposable_oracle(a, 1)?.holds,
        diagonal: is_partly_decomposable_by_diagonals(a),
        extendability: is_partly_decomposable(a).holds,
    })
}

/// Lexicographic permutations of `0..n`.
pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations { current: Some((0..n).collect()) }
    }
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut p = out.clone();
        let n = p.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
                p.swap(i, j);
                p[i + 1..].reverse();
                self.current = Some(p);
            }
        }
        Some(out)
    }
}

/// Entries `a[j, cols[j]]`, one per row and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagonal {
    pub cols: Vec<usize>,
    pub zero_count: usize,
}

impl Diagonal {
    pub fn is_main(&self) -> bool {
        self.cols.iter().enumerate().all(|(i, &c)| i == c)
    }

    pub fn is_nonzero(&self) -> bool {
        self.zero_count == 0
    }
}

pub const DIAGONAL_LIMIT: usize = 9;

/// Every diagonal of `a` in lexicographic order of column choices.
pub fn diagonals(a: &ZeroOneMatrix) -> Result<impl Iterator<Item = Diagonal> + '_, MatrixError> {
    let n = a.n();
    if n > DIAGONAL_LIMIT {
        return Err(MatrixError::TooLarge { n, limit: DIAGONAL_LIMIT });
    }
    Ok(Permutations::new(n).map(move |cols| {
        let zero_count = cols.iter().enumerate().filter(|&(i, &c)| !a.get(i, c)).count();
        Diagonal { cols, zero_count }
    }))
}

/// Diagonals with exactly `zeros` zero entries.
pub fn diagonals_with_zeros(a: &ZeroOneMatrix, zeros: usize) -> Result<Vec<Diagonal>, MatrixError> {
    Ok(diagonals(a)?.filter(|d| d.zero_count == zeros).collect())
}

/// Number of nonzero diagonals via the perfect matchings of `B(A)`.
pub fn count_nonzero_diagonals(a: &ZeroOneMatrix) -> Option<u64> {
    count_perfect_matchings(&bipartite_of_matrix(a)).ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub k: usize,
    pub k_indecomposable: bool,
    pub k_irreducible: bool,
    pub plus_identity_k_indecomposable: bool,
    /// `D(A)` `k`-strong, reported only for a positive main diagonal.
    pub digraph_k_strong: Option<bool>,
    pub violations: Vec<String>,
}

impl CrossCheckReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `k`-indecomposable ⟹ `k`-irreducible, `k`-irreducible ⟺ `A + I`
/// `k`-indecomposable and, with a positive main diagonal, `k`-indecomposable ⟺
/// `D(A)` `k`-strong.
pub fn inde_irre_cross_check(a: &ZeroOneMatrix, k: usize) -> Result<CrossCheckReport, MatrixError> {
    let n = a.n();
    if k == 0 || k >= n {
        return Err(MatrixError::KOutOfRange { k, n });
    }
    let k_indecomposable = !is_k_partly_decomposable(a, k)?.holds;
    let k_irreducible = !is_k_reducible(a, k)?.holds;
    let plus_identity_k_indecomposable = !is_k_partly_decomposable(&a.plus_identity(), k)?.holds;
    let digraph_k_strong = a
        .has_positive_main_diagonal()
        .then(|| connectivity::is_k_strong(&a.digraph().without_loops(), k).holds);
    let mut violations = Vec::new();
    if k_indecomposable && !k_irreducible {
        violations.push(format!("{k}-indecomposable but {k}-reducible"));
    }
    if k_irreducible != plus_identity_k_indecomposable {
        violations.push(format!("{k}-irreducibility of A differs from {k}-indecomposability of A + I"));
    }
    if digraph_k_strong.is_some_and(|s| s != k_indecomposable) {
        violations.push(format!("positive diagonal: {k}-indecomposability differs from {k}-strong D(A)"));
    }
    Ok(CrossCheckReport {
        k,
        k_indecomposable,
        k_irreducible,
        plus_identity_k_indecomposable,
        digraph_k_strong,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[u8]]) -> ZeroOneMatrix {
        ZeroOneMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn reducibility_examples() {
        let upper = mat(&[&[1, 1], &[0, 1]]);
        let c = is_reducible(&upper);
        assert!(c.holds);
        let w = c.witness.unwrap();
        assert_eq!((w.l, w.rows.clone(), w.cols.clone()), (1, vec![1], vec![0]));
        w.verify(&upper).unwrap();
        assert!(!is_reducible(&mat(&[&[0, 1], &[1, 0]])).holds);
        for n in 2..=4 {
            assert!(is_reducible(&ZeroOneMatrix::identity(n)).holds);
        }
        assert!(!is_reducible(&ZeroOneMatrix::identity(1)).holds);
    }

    #[test]
    fn k_reducibility_examples() {
        assert!(!is_k_reducible(&ZeroOneMatrix::ones(3), 2).unwrap().holds);
        let cycle = mat(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let c = is_k_reducible(&cycle, 2).unwrap();
        assert!(c.holds);
        c.witness.unwrap().verify(&cycle).unwrap();
        assert_eq!(is_k_reducible(&cycle, 0), Err(MatrixError::KOutOfRange { k: 0, n: 3 }));
        assert!(!is_k_reducible(&cycle, 3).unwrap().holds);
    }

    #[test]
    fn decomposability_examples() {
        let swap = mat(&[&[0, 1], &[1, 0]]);
        let c = is_partly_decomposable(&swap);
        assert!(c.holds);
        let w = c.witness.unwrap();
        assert_eq!((w.rows.clone(), w.cols.clone()), (vec![0], vec![0]));
        w.verify(&swap).unwrap();
        assert!(!is_partly_decomposable(&ZeroOneMatrix::ones(2)).holds);
        assert!(is_partly_decomposable(&mat(&[&[1, 1], &[0, 1]])).holds);
        for a in [swap, ZeroOneMatrix::ones(2), mat(&[&[1, 1], &[0, 1]])] {
            assert!(partly_decomposable_routes(&a).unwrap().agree());
        }
    }

    #[test]
    fn k_decomposability_examples() {
        assert!(!is_k_partly_decomposable(&ZeroOneMatrix::ones(3), 2).unwrap().holds);
        let rc6 = mat(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert!(!is_k_partly_decomposable(&rc6, 1).unwrap().holds);
        assert!(is_k_partly_decomposable(&rc6, 2).unwrap().holds);
        let zero_row = mat(&[&[1, 1], &[0, 0]]);
        let c = is_k_partly_decomposable(&zero_row, 0).unwrap();
        assert!(c.holds);
        let w = c.witness.unwrap();
        assert_eq!((w.rows.clone(), w.cols.clone()), (vec![1], vec![0, 1]));
        assert_eq!(is_k_partly_decomposable(&zero_row, 2), Err(MatrixError::KOutOfRange { k: 2, n: 2 }));
    }

    #[test]
    fn diagonal_examples() {
        let nonzero = |a: &ZeroOneMatrix| diagonals_with_zeros(a, 0).unwrap();
        let i3 = nonzero(&ZeroOneMatrix::identity(3));
        assert_eq!(i3.len(), 1);
        assert!(i3[0].is_main());
        assert_eq!(nonzero(&ZeroOneMatrix::ones(3)).len(), 6);
        let swap = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(nonzero(&swap), vec![Diagonal { cols: vec![1, 0], zero_count: 0 }]);
        let main = diagonals(&swap).unwrap().find(|d| d.is_main()).unwrap();
        assert_eq!(main.zero_count, 2);
        assert_eq!(count_nonzero_diagonals(&ZeroOneMatrix::ones(3)), Some(6));
    }

    #[test]
    fn cross_check_examples() {
        let swap = mat(&[&[0, 1], &[1, 0]]);
        let r = inde_irre_cross_check(&swap, 1).unwrap();
        assert!(r.holds());
        assert!(r.k_irreducible && !r.k_indecomposable && r.plus_identity_k_indecomposable);
        let r = inde_irre_cross_check(&ZeroOneMatrix::ones(3), 2).unwrap();
        assert!(r.holds() && r.k_indecomposable && r.k_irreducible);
    }

    #[test]
    fn oracle_matches_on_small_examples() {
        let cycle = mat(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert!(is_k_reducible_oracle(&cycle, 2).unwrap().holds);
        assert!(!is_k_reducible_oracle(&cycle, 1).unwrap().holds);
        let w = is_k_reducible_oracle(&ZeroOneMatrix::identity(3), 1).unwrap().witness.unwrap();
        w.verify(&ZeroOneMatrix::identity(3)).unwrap();
    }

    #[test]
    fn permutations_are_lexicographic() {
        let all: Vec<Vec<usize>> = Permutations::new(3).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[5], vec![2, 1, 0]);
        assert_eq!(Permutations::new(1).count(), 1);
    }
}
