//! Seeded random instances and exhaustive enumerators used by the sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{BipartiteGraph, Digraph, Edge, ZeroOneMatrix};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("order must be at least 1")]
    EmptyOrder,
    #[error("probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("order {n} too large for exhaustive enumeration (limit {limit})")]
    TooLarge { n: usize, limit: usize },
}

fn check(n: usize, p: f64) -> Result<(), GenerateError> {
    if n < 1 {
        return Err(GenerateError::EmptyOrder);
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GenerateError::BadProbability(p));
    }
    Ok(())
}

/// The canonical matching `{u_i w_i}` plus every other edge with probability `p`.
pub fn random_bipartite_with_pm(n: usize, p: f64, seed: u64) -> Result<BipartiteGraph, GenerateError> {
    check(n, p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Edge> = (0..n).map(|i| Edge::new(i, i)).collect();
    for u in 0..n {
        for w in 0..n {
            if u != w && rng.gen_bool(p) {
                edges.push(Edge::new(u, w));
            }
        }
    }
    Ok(BipartiteGraph::new(n, edges).expect("generated edges are valid"))
}

/// Loop-free digraph with each arc present independently with probability `p`.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Result<Digraph, GenerateError> {
    check(n, p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && rng.gen_bool(p) {
                arcs.push((a, b));
            }
        }
    }
    Ok(Digraph::loop_free(n, arcs).expect("generated arcs are valid"))
}

/// Matrix in `B_n` with each entry one with probability `p`.
pub fn random_matrix(n: usize, p: f64, seed: u64) -> Result<ZeroOneMatrix, GenerateError> {
    check(n, p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bits: Vec<bool> = (0..n * n).map(|_| rng.gen_bool(p)).collect();
    Ok(ZeroOneMatrix::from_fn(n, |i, j| bits[i * n + j]))
}

fn off_diagonal(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect()
}

const MAX_OFF_DIAGONAL_BITS: usize = 30;

/// All `2^(n^2 - n)` bipartite graphs on `n + n` vertices containing `{u_i w_i}`.
pub fn all_bipartite_with_canonical_pm(
    n: usize,
) -> Result<impl Iterator<Item = BipartiteGraph>, GenerateError> {
    if n < 1 {
        return Err(GenerateError::EmptyOrder);
    }
    let slots = off_diagonal(n);
    if slots.len() > MAX_OFF_DIAGONAL_BITS {
        return Err(GenerateError::TooLarge { n, limit: 6 });
    }
    Ok((0u64..1 << slots.len()).map(move |mask| {
        let extra = slots
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &(u, w))| Edge::new(u, w));
        BipartiteGraph::new(n, (0..n).map(|i| Edge::new(i, i)).chain(extra)).expect("valid")
    }))
}

/// All `2^(n^2 - n)` loop-free digraphs on `n` labeled vertices.
pub fn all_digraphs(n: usize) -> Result<impl Iterator<Item = Digraph>, GenerateError> {
    if n < 1 {
        return Err(GenerateError::EmptyOrder);
    }
    let slots = off_diagonal(n);
    if slots.len() > MAX_OFF_DIAGONAL_BITS {
        return Err(GenerateError::TooLarge { n, limit: 6 });
    }
    Ok((0u64..1 << slots.len()).map(move |mask| {
        let arcs = slots
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &arc)| arc);
        Digraph::loop_free(n, arcs).expect("valid")
    }))
}

/// All `2^(n^2)` matrices of order `n`.
pub fn all_matrices(n: usize) -> Result<impl Iterator<Item = ZeroOneMatrix>, GenerateError> {
    if n < 1 {
        return Err(GenerateError::EmptyOrder);
    }
    if n * n > 25 {
        return Err(GenerateError::TooLarge { n, limit: 5 });
    }
    Ok((0u64..1 << (n * n)).map(move |bits| ZeroOneMatrix::from_bits(n, bits)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_probability_gives_the_matching() {
        let g = random_bipartite_with_pm(3, 0.0, 99).unwrap();
        assert_eq!(g, BipartiteGraph::perfect_matching(3));
    }

    #[test]
    fn unit_probability_gives_complete_graph() {
        assert_eq!(random_bipartite_with_pm(3, 1.0, 5).unwrap(), BipartiteGraph::complete(3));
        assert_eq!(random_digraph(4, 1.0, 5).unwrap().arc_count(), 12);
        assert_eq!(random_digraph(4, 0.0, 5).unwrap().arc_count(), 0);
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(
            random_bipartite_with_pm(5, 0.4, 7).unwrap(),
            random_bipartite_with_pm(5, 0.4, 7).unwrap()
        );
        assert_eq!(random_digraph(6, 0.3, 1).unwrap(), random_digraph(6, 0.3, 1).unwrap());
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert_eq!(random_bipartite_with_pm(0, 0.5, 1), Err(GenerateError::EmptyOrder));
        assert_eq!(random_digraph(3, 1.5, 1), Err(GenerateError::BadProbability(1.5)));
    }

    #[test]
    fn enumerators_have_expected_sizes() {
        use std::collections::HashSet;
        for n in 1..=3 {
            let graphs: HashSet<_> = all_bipartite_with_canonical_pm(n).unwrap().collect();
            assert_eq!(graphs.len(), 1 << (n * n - n));
        }
        for n in 1..=4 {
            let digraphs: HashSet<_> = all_digraphs(n).unwrap().collect();
            assert_eq!(digraphs.len(), 1 << (n * n - n));
        }
        assert_eq!(all_matrices(3).unwrap().count(), 512);
    }
}
