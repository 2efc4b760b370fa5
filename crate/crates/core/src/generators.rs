//! Small deterministic graph families and seeded random graphs.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator produced an invalid edge")
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    build(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v)))
}

/// Star with center `0` and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// Disjoint union, vertices of `b` shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let edges = a
        .edges()
        .iter()
        .map(|&(u, v)| (u as usize, v as usize))
        .chain(b.edges().iter().map(|&(u, v)| (u as usize + shift, v as usize + shift)));
    build(a.n() + b.n(), edges)
}

/// Erdős–Rényi `G(n, p)` from a seeded ChaCha stream.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Uniform random graph with exactly `m` edges, `G(n, m)`.
pub fn gnm(n: usize, m: usize, seed: u64) -> Graph {
    let total = n * (n - 1) / 2;
    assert!(m <= total, "too many edges requested");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picks = sample(&mut rng, total, m);
    // map a linear index onto the pair (u, v), u < v
    let mut offsets = Vec::with_capacity(n);
    let mut acc = 0;
    for u in 0..n {
        offsets.push(acc);
        acc += n - 1 - u;
    }
    let edges = picks.into_iter().map(|k| {
        let u = offsets.partition_point(|&o| o <= k) - 1;
        (u, u + 1 + (k - offsets[u]))
    });
    build(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(complete(5).m(), 10);
        assert_eq!(cycle(9).m(), 9);
        assert_eq!(path(5).m(), 4);
        assert_eq!(star(3).m(), 3);
        assert_eq!(complete_bipartite(2, 3).m(), 6);
        let p = petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn random_graphs_are_seeded() {
        assert_eq!(erdos_renyi(8, 0.4, 7), erdos_renyi(8, 0.4, 7));
        let g = gnm(50, 120, 3);
        assert_eq!((g.n(), g.m()), (50, 120));
        assert_eq!(g, gnm(50, 120, 3));
    }
}
