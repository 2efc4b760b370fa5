//! Brute-force ground truth: rooted subgraph copies and simple cycles.
//!
//! A copy of `[F, r, s]` at locations `(i, j)` is a subgraph `F'` of the host
//! together with an isomorphism `F -> F'` sending `r` to `i` and `s` to `j`.
//! Copies are counted as embeddings divided by the automorphisms of `F` that
//! fix every root, and independently by deduplicating image subgraphs.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{DirectedEdgeIndex, Graph};
use crate::matrix::{EdgeVector, VertexVector};
use crate::pattern::RootedGraph;

/// Size limits beyond which the oracle refuses to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_vertices: usize,
    pub max_pattern_order: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: 16,
            max_pattern_order: 7,
        }
    }
}

impl OracleConfig {
    pub fn check(&self, pattern_order: usize, host: &Graph) -> Result<()> {
        if self.max_vertices == 0 || self.max_pattern_order == 0 {
            return Err(Error::Invalid("oracle guards must be positive".into()));
        }
        if host.n() > self.max_vertices {
            return Err(Error::Guard(format!(
                "oracle limited to {} host vertices, graph has {}",
                self.max_vertices,
                host.n()
            )));
        }
        if pattern_order > self.max_pattern_order {
            return Err(Error::Guard(format!(
                "oracle limited to patterns of order {}, got {pattern_order}",
                self.max_pattern_order
            )));
        }
        Ok(())
    }
}

struct Plan {
    order: Vec<usize>,
    /// Pattern neighbors of `order[k]` among `order[..k]`.
    back: Vec<Vec<usize>>,
}

fn plan(pattern: &Graph, first: &[usize]) -> Plan {
    let k = pattern.n();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    for &v in first {
        if !placed[v] {
            placed[v] = true;
            order.push(v);
        }
    }
    while order.len() < k {
        // most already-placed neighbors first, lowest id on ties
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let c = pattern.neighbors(v).iter().filter(|&&w| placed[w as usize]).count();
                (c, std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let pos: Vec<usize> = {
        let mut pos = vec![0; k];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    };
    let back = order
        .iter()
        .map(|&v| {
            pattern
                .neighbors(v)
                .iter()
                .map(|&w| w as usize)
                .filter(|&w| pos[w] < pos[v])
                .collect()
        })
        .collect();
    Plan { order, back }
}

/// Calls `visit` with `phi` for every injective edge-preserving map
/// `phi: V(pattern) -> V(host)` with `phi[a] = x` for each `(a, x)` in
/// `fixed`.
pub fn for_each_embedding(pattern: &Graph, host: &Graph, fixed: &[(usize, usize)], mut visit: impl FnMut(&[usize])) {
    let k = pattern.n();
    if k > host.n() {
        return;
    }
    let first: Vec<usize> = fixed.iter().map(|&(a, _)| a).collect();
    let plan = plan(pattern, &first);
    let mut target = vec![usize::MAX; k];
    for &(a, x) in fixed {
        if x >= host.n() || (target[a] != usize::MAX && target[a] != x) {
            return;
        }
        target[a] = x;
    }
    let mut phi = vec![usize::MAX; k];
    let mut used = vec![false; host.n()];
    extend(host, &plan, &target, 0, &mut phi, &mut used, &mut visit);
}

fn extend(
    host: &Graph,
    plan: &Plan,
    target: &[usize],
    depth: usize,
    phi: &mut [usize],
    used: &mut [bool],
    visit: &mut impl FnMut(&[usize]),
) {
    if depth == plan.order.len() {
        visit(phi);
        return;
    }
    let v = plan.order[depth];
    let back = &plan.back[depth];
    let mut try_vertex = |x: usize, phi: &mut [usize], used: &mut [bool]| {
        if used[x] || !back.iter().all(|&w| host.has_edge(phi[w], x)) {
            return;
        }
        phi[v] = x;
        used[x] = true;
        extend(host, plan, target, depth + 1, phi, used, visit);
        used[x] = false;
        phi[v] = usize::MAX;
    };
    if target[v] != usize::MAX {
        try_vertex(target[v], phi, used);
    } else if let Some(&w) = back.first() {
        let anchor = phi[w];
        for &x in host.neighbors(anchor) {
            try_vertex(x as usize, phi, used);
        }
    } else {
        for x in 0..host.n() {
            try_vertex(x, phi, used);
        }
    }
}

/// Automorphisms of `pattern` fixing each vertex of `fixed`.
pub fn automorphisms_fixing(pattern: &Graph, fixed: &[usize]) -> u64 {
    let pins: Vec<(usize, usize)> = fixed.iter().map(|&v| (v, v)).collect();
    let mut count = 0;
    for_each_embedding(pattern, pattern, &pins, |_| count += 1);
    count
}

fn roots_of(p: &RootedGraph) -> Vec<usize> {
    p.r.iter().chain(&p.s).copied().collect()
}

/// Number of copies of `p` with `r` at `i` and `s` at `j`.
pub fn count_rooted_copies(
    p: &RootedGraph,
    host: &Graph,
    i: &[usize],
    j: &[usize],
    config: &OracleConfig,
) -> Result<u64> {
    config.check(p.order(), host)?;
    if i.len() != p.r.len() || j.len() != p.s.len() {
        return Err(Error::Invalid(format!(
            "location arity ({}, {}) does not match root arity ({}, {})",
            i.len(),
            j.len(),
            p.r.len(),
            p.s.len()
        )));
    }
    let fixed: Vec<(usize, usize)> =
        p.r.iter()
            .zip(i)
            .chain(p.s.iter().zip(j))
            .map(|(&a, &x)| (a, x))
            .collect();
    let mut embeddings = 0u64;
    for_each_embedding(&p.graph, host, &fixed, |_| embeddings += 1);
    Ok(embeddings / automorphisms_fixing(&p.graph, &roots_of(p)))
}

/// Copy counts at every location tuple `(i, j)` with a nonzero count, keyed
/// by the concatenation of `i` and `j`.
pub fn location_counts(p: &RootedGraph, host: &Graph, config: &OracleConfig) -> Result<BTreeMap<Vec<usize>, u64>> {
    config.check(p.order(), host)?;
    let roots = roots_of(p);
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for_each_embedding(&p.graph, host, &[], |phi| {
        let key: Vec<usize> = roots.iter().map(|&a| phi[a]).collect();
        *counts.entry(key).or_default() += 1;
    });
    let aut = automorphisms_fixing(&p.graph, &roots);
    for c in counts.values_mut() {
        debug_assert_eq!(*c % aut, 0);
        *c /= aut;
    }
    Ok(counts)
}

/// Same as [`location_counts`], counting distinct image subgraphs instead of
/// dividing by automorphisms.
pub fn location_counts_dedup(
    p: &RootedGraph,
    host: &Graph,
    config: &OracleConfig,
) -> Result<BTreeMap<Vec<usize>, u64>> {
    config.check(p.order(), host)?;
    let roots = roots_of(p);
    let edges: Vec<(usize, usize)> = p.graph.edges().iter().map(|&(u, v)| (u as usize, v as usize)).collect();
    let mut copies = BTreeSet::new();
    for_each_embedding(&p.graph, host, &[], |phi| {
        let key: Vec<usize> = roots.iter().map(|&a| phi[a]).collect();
        let mut verts: Vec<usize> = phi.to_vec();
        verts.sort_unstable();
        let mut img: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| (phi[u].min(phi[v]), phi[u].max(phi[v])))
            .collect();
        img.sort_unstable();
        copies.insert((key, verts, img));
    });
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for (key, _, _) in copies {
        *counts.entry(key).or_default() += 1;
    }
    Ok(counts)
}

/// Edge-rooted counts of a pattern with `r = (a1, a2)` and empty `s`, at
/// every directed edge of the host.
pub fn edge_rooted_counts(
    p: &RootedGraph,
    host: &Graph,
    idx: &DirectedEdgeIndex,
    config: &OracleConfig,
) -> Result<EdgeVector> {
    if p.r.len() != 2 || !p.s.is_empty() || !p.graph.has_edge(p.r[0], p.r[1]) {
        return Err(Error::Invalid(
            "edge-rooted counts need r = (a1, a2) with a1a2 an edge and empty s".into(),
        ));
    }
    let counts = location_counts(p, host, config)?;
    let mut out = vec![0i64; idx.len()];
    for (key, c) in counts {
        let e = idx.id(key[0], key[1]).expect("root edge maps onto a host edge");
        out[e] = c as i64;
    }
    Ok(EdgeVector::from_vec(out))
}

/// Vertex-rooted counts of a pattern with `r = (a)` and empty `s`.
pub fn vertex_rooted_counts(p: &RootedGraph, host: &Graph, config: &OracleConfig) -> Result<VertexVector> {
    if p.r.len() != 1 || !p.s.is_empty() {
        return Err(Error::Invalid("vertex-rooted counts need r = (a) and empty s".into()));
    }
    let counts = location_counts(p, host, config)?;
    let mut out = vec![0i64; host.n()];
    for (key, c) in counts {
        out[key[0]] = c as i64;
    }
    Ok(VertexVector::from_vec(out))
}

/// Unrooted copies of `p` (roots ignored).
pub fn total_copies(p: &RootedGraph, host: &Graph, config: &OracleConfig) -> Result<u64> {
    let bare = RootedGraph::new(p.graph.clone(), Vec::new(), Vec::new())?;
    count_rooted_copies(&bare, host, &[], &[], config)
}

/// Number of simple cycles of length `k` in `g`.
pub fn count_simple_cycles(g: &Graph, k: usize, config: &OracleConfig) -> Result<u64> {
    if k < 3 {
        return Err(Error::Invalid(format!("cycle length {k} is below 3")));
    }
    config.check(0, g)?;
    let mut total = 0u64;
    let mut on_path = vec![false; g.n()];
    for start in 0..g.n() {
        on_path[start] = true;
        walk(g, start, start, 1, k, &mut on_path, &mut total);
        on_path[start] = false;
    }
    // each cycle is found once per direction from its smallest vertex
    Ok(total / 2)
}

fn walk(g: &Graph, start: usize, v: usize, len: usize, k: usize, on_path: &mut [bool], total: &mut u64) {
    for &w in g.neighbors(v) {
        let w = w as usize;
        if len == k {
            if w == start {
                *total += 1;
            }
            continue;
        }
        if w <= start || on_path[w] {
            continue;
        }
        on_path[w] = true;
        walk(g, start, w, len + 1, k, on_path, total);
        on_path[w] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, erdos_renyi, petersen};

    const CFG: OracleConfig = OracleConfig {
        max_vertices: 16,
        max_pattern_order: 7,
    };

    fn triangle_at_vertex() -> RootedGraph {
        RootedGraph::vertex_rooted(3, &[(0, 1), (1, 2), (0, 2)], 0).unwrap()
    }

    #[test]
    fn triangles_through_a_vertex_of_k4() {
        let k4 = complete(4);
        for v in 0..4 {
            assert_eq!(
                count_rooted_copies(&triangle_at_vertex(), &k4, &[v], &[], &CFG).unwrap(),
                3
            );
        }
    }

    #[test]
    fn triangle_per_directed_edge_of_k3() {
        let k3 = complete(3);
        let p = RootedGraph::edge_rooted(3, &[(0, 1), (1, 2), (0, 2)], 0, 1).unwrap();
        let idx = k3.directed_index();
        let v = edge_rooted_counts(&p, &k3, &idx, &CFG).unwrap();
        assert_eq!(v, EdgeVector::constant(6, 1));
    }

    #[test]
    fn too_few_host_vertices() {
        let p = RootedGraph::vertex_rooted(4, &[(0, 1), (1, 2), (2, 3)], 0).unwrap();
        assert_eq!(count_rooted_copies(&p, &complete(3), &[0], &[], &CFG).unwrap(), 0);
    }

    #[test]
    fn automorphism_groups() {
        let k4 = complete(4);
        assert_eq!(automorphisms_fixing(&k4, &[]), 24);
        assert_eq!(automorphisms_fixing(&k4, &[0]), 6);
        assert_eq!(automorphisms_fixing(&cycle(5), &[]), 10);
        assert_eq!(automorphisms_fixing(&petersen(), &[]), 120);
    }

    #[test]
    fn strategies_agree() {
        let patterns = [
            RootedGraph::edge_rooted(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], 0, 1).unwrap(),
            RootedGraph::vertex_rooted(4, &[(0, 1), (0, 2), (0, 3)], 1).unwrap(),
            RootedGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)], &[0], &[3]).unwrap(),
            RootedGraph::from_edges(4, &[(0, 1), (2, 3)], &[], &[]).unwrap(),
        ];
        for seed in 0..4 {
            let g = erdos_renyi(7, 0.5, seed);
            for p in &patterns {
                assert_eq!(
                    location_counts(p, &g, &CFG).unwrap(),
                    location_counts_dedup(p, &g, &CFG).unwrap()
                );
            }
        }
    }

    #[test]
    fn simple_cycles() {
        let k4 = complete(4);
        assert_eq!(count_simple_cycles(&k4, 3, &CFG).unwrap(), 4);
        assert_eq!(count_simple_cycles(&k4, 4, &CFG).unwrap(), 3);
        assert_eq!(count_simple_cycles(&cycle(9), 9, &CFG).unwrap(), 1);
        let kb = complete_bipartite(3, 4);
        for k in [3, 5, 7] {
            assert_eq!(count_simple_cycles(&kb, k, &CFG).unwrap(), 0);
        }
        let p = petersen();
        let counts: Vec<u64> = (3..=9).map(|k| count_simple_cycles(&p, k, &CFG).unwrap()).collect();
        assert_eq!(counts, [0, 0, 12, 10, 0, 15, 20]);
    }

    #[test]
    fn cycles_match_unrooted_pattern_copies() {
        for seed in 0..3 {
            let g = erdos_renyi(7, 0.6, seed);
            for k in 3..=6 {
                let edges: Vec<(usize, usize)> = (0..k).map(|v| (v, (v + 1) % k)).collect();
                let ck = RootedGraph::from_edges(k, &edges, &[], &[]).unwrap();
                assert_eq!(
                    total_copies(&ck, &g, &CFG).unwrap(),
                    count_simple_cycles(&g, k, &CFG).unwrap()
                );
            }
        }
    }

    #[test]
    fn guards_refuse_large_inputs() {
        let cfg = OracleConfig {
            max_vertices: 5,
            max_pattern_order: 3,
        };
        let p = triangle_at_vertex();
        assert!(matches!(
            count_rooted_copies(&p, &complete(6), &[0], &[], &cfg),
            Err(Error::Guard(_))
        ));
        assert!(matches!(
            count_simple_cycles(&complete(6), 4, &cfg),
            Err(Error::Guard(_))
        ));
    }
}
