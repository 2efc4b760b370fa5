//! Bi-rooted patterns `[F, r, s]` and small-pattern utilities.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A pattern graph with two ordered root tuples.
///
/// Tuples may share vertices. A copy of the pattern in a host graph is a
/// (not necessarily induced) subgraph together with the images of `r` and
/// `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    pub graph: Graph,
    pub r: Vec<usize>,
    pub s: Vec<usize>,
}

impl RootedGraph {
    pub fn new(graph: Graph, r: Vec<usize>, s: Vec<usize>) -> Result<RootedGraph> {
        let n = graph.n();
        if let Some(&v) = r.iter().chain(&s).find(|&&v| v >= n) {
            return Err(Error::Invalid(format!(
                "root {v} is not a vertex of a pattern of order {n}"
            )));
        }
        Ok(RootedGraph { graph, r, s })
    }

    /// Pattern on `order` vertices with the given edges.
    pub fn from_edges(order: usize, edges: &[(usize, usize)], r: &[usize], s: &[usize]) -> Result<RootedGraph> {
        RootedGraph::new(Graph::from_edges(order, edges.iter().copied())?, r.to_vec(), s.to_vec())
    }

    /// Pattern rooted at the directed edge `a1 -> a2`, with `r = (a1, a2)`.
    pub fn edge_rooted(order: usize, edges: &[(usize, usize)], a1: usize, a2: usize) -> Result<RootedGraph> {
        RootedGraph::from_edges(order, edges, &[a1, a2], &[])
    }

    pub fn vertex_rooted(order: usize, edges: &[(usize, usize)], a: usize) -> Result<RootedGraph> {
        RootedGraph::from_edges(order, edges, &[a], &[])
    }

    pub fn order(&self) -> usize {
        self.graph.n()
    }

    /// Parses a pattern file: an edge list preceded by `r:` and `s:` lines.
    ///
    /// Vertex tokens are integers `0..k`; the order is one more than the
    /// largest id mentioned anywhere, roots included.
    pub fn parse(text: &str) -> Result<RootedGraph> {
        let mut r = None;
        let mut s = None;
        let mut edges = Vec::new();
        let mut max_id = None::<usize>;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_ids = |body: &str| -> Result<Vec<usize>> {
                body.split_whitespace()
                    .map(|tok| {
                        tok.parse::<usize>().map_err(|_| Error::Parse {
                            line: lineno + 1,
                            message: format!("pattern vertex `{tok}` is not an integer"),
                        })
                    })
                    .collect()
            };
            let ids = if let Some(body) = line.strip_prefix("r:") {
                let ids = parse_ids(body)?;
                r = Some(ids.clone());
                ids
            } else if let Some(body) = line.strip_prefix("s:") {
                let ids = parse_ids(body)?;
                s = Some(ids.clone());
                ids
            } else {
                let ids = parse_ids(line)?;
                if ids.len() != 2 {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        message: format!("expected two vertex tokens, found {}", ids.len()),
                    });
                }
                if ids[0] == ids[1] {
                    return Err(Error::SelfLoop {
                        line: lineno + 1,
                        vertex: ids[0].to_string(),
                    });
                }
                edges.push((ids[0], ids[1]));
                ids
            };
            if let Some(&m) = ids.iter().max() {
                max_id = Some(max_id.map_or(m, |x| x.max(m)));
            }
        }
        let r = r.ok_or_else(|| Error::Invalid("pattern file lacks an `r:` line".into()))?;
        let s = s.unwrap_or_default();
        let order = max_id.map_or(0, |m| m + 1);
        RootedGraph::from_edges(order, &edges, &r, &s)
    }

    /// Edge set as a bitmask over pairs `(u, v)`, `u < v`, in lexicographic
    /// order. Only meaningful for orders up to 11.
    pub fn edge_mask(&self) -> u64 {
        edge_mask(
            self.order(),
            self.graph.edges().iter().map(|&(u, v)| (u as usize, v as usize)),
        )
    }

    /// Canonical form under vertex relabelling: two rooted patterns are
    /// isomorphic exactly when their canonical forms are equal.
    pub fn canonical(&self) -> CanonicalForm {
        let k = self.order();
        assert!(k <= 8, "canonical forms are computed by brute force");
        let edges: Vec<(usize, usize)> = self
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| (u as usize, v as usize))
            .collect();
        let mut best: Option<CanonicalForm> = None;
        for perm in permutations(k) {
            let r: Vec<usize> = self.r.iter().map(|&v| perm[v]).collect();
            let s: Vec<usize> = self.s.iter().map(|&v| perm[v]).collect();
            let mask = edge_mask(k, edges.iter().map(|&(u, v)| (perm[u], perm[v])));
            let cand = CanonicalForm { order: k, r, s, mask };
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        best.unwrap_or(CanonicalForm {
            order: 0,
            r: Vec::new(),
            s: Vec::new(),
            mask: 0,
        })
    }
}

/// Result of [`RootedGraph::canonical`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    pub r: Vec<usize>,
    pub s: Vec<usize>,
    pub mask: u64,
}

impl CanonicalForm {
    pub fn to_rooted(&self) -> RootedGraph {
        let edges = mask_edges(self.order, self.mask);
        RootedGraph::from_edges(self.order, &edges, &self.r, &self.s).expect("canonical forms hold valid patterns")
    }
}

fn pair_index(k: usize, u: usize, v: usize) -> usize {
    let (u, v) = (u.min(v), u.max(v));
    // pairs (0,1), (0,2), ..., (0,k-1), (1,2), ...
    u * (2 * k - u - 1) / 2 + (v - u - 1)
}

fn edge_mask(k: usize, edges: impl Iterator<Item = (usize, usize)>) -> u64 {
    edges.fold(0, |m, (u, v)| m | 1 << pair_index(k, u, v))
}

/// Edges encoded by a mask from [`RootedGraph::edge_mask`].
pub fn mask_edges(k: usize, mask: u64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            if mask >> pair_index(k, u, v) & 1 == 1 {
                out.push((u, v));
            }
        }
    }
    out
}

/// All permutations of `0..k`, in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// One representative per isomorphism class of rooted graphs of order `k`
/// whose root tuples have the given lengths. Entries within one tuple are
/// distinct; the two tuples may share vertices.
pub fn rooted_classes(k: usize, r_len: usize, s_len: usize, connected_only: bool) -> Vec<RootedGraph> {
    let pairs = k * k.saturating_sub(1) / 2;
    let tuples_r = tuples(k, r_len);
    let tuples_s = tuples(k, s_len);
    let mut seen = BTreeSet::new();
    for mask in 0..1u64 << pairs {
        let edges = mask_edges(k, mask);
        let g = Graph::from_edges(k, edges.iter().copied()).expect("valid pattern");
        if connected_only && !is_connected(&g) {
            continue;
        }
        for r in &tuples_r {
            for s in &tuples_s {
                let p = RootedGraph {
                    graph: g.clone(),
                    r: r.clone(),
                    s: s.clone(),
                };
                seen.insert(p.canonical());
            }
        }
    }
    seen.into_iter().map(|c| c.to_rooted()).collect()
}

fn tuples(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for t in &out {
            for v in (0..k).filter(|v| !t.contains(v)) {
                let mut t = t.clone();
                t.push(v);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                stack.push(w as usize);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0).len(), 1);
    }

    #[test]
    fn canonical_forms_identify_isomorphic_patterns() {
        let a = RootedGraph::edge_rooted(3, &[(0, 1), (1, 2)], 0, 1).unwrap();
        let b = RootedGraph::edge_rooted(3, &[(2, 0), (0, 1)], 2, 0).unwrap();
        let c = RootedGraph::edge_rooted(3, &[(0, 1), (1, 2)], 1, 0).unwrap();
        assert_eq!(a.canonical(), b.canonical());
        assert_ne!(a.canonical(), c.canonical());
    }

    #[test]
    fn class_counts() {
        // graphs on 4 vertices: 11 classes, 6 connected
        assert_eq!(rooted_classes(4, 0, 0, false).len(), 11);
        assert_eq!(rooted_classes(4, 0, 0, true).len(), 6);
        // P3 rooted at (center, leaf), (leaf, center), (leaf, leaf); K3 once
        let classes = rooted_classes(3, 2, 0, true);
        assert_eq!(classes.len(), 4);
    }

    #[test]
    fn parses_pattern_files() {
        let p = RootedGraph::parse("# triangle\nr: 0 1\ns:\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!((p.order(), p.graph.m()), (3, 3));
        assert_eq!(p.r, vec![0, 1]);
        assert!(p.s.is_empty());
        assert!(RootedGraph::parse("0 1\n").is_err());
    }
}
