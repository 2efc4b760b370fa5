//! Simple undirected graphs and the directed-edge index.
//!
//! Every edge matrix in the crate is indexed by directed edges. The two
//! orientations of undirected edge `k` always sit at ids `2k` and `2k + 1`,
//! so the reversal involution is `id ^ 1`.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A simple undirected graph with dense vertex ids `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<u32>>,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `0..n`.
    ///
    /// Duplicate edges are collapsed; a self-loop is an error.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let labels = (0..n).map(|v| v.to_string()).collect();
        let mut pairs = Vec::new();
        for (line, (u, v)) in edges.into_iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::Invalid(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::SelfLoop {
                    line: line + 1,
                    vertex: u.to_string(),
                });
            }
            pairs.push((u.min(v) as u32, u.max(v) as u32));
        }
        Ok(Self::assemble(labels, pairs))
    }

    fn assemble(labels: Vec<String>, mut pairs: Vec<(u32, u32)>) -> Graph {
        pairs.sort_unstable();
        pairs.dedup();
        let mut adj = vec![Vec::new(); labels.len()];
        for &(u, v) in &pairs {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            labels,
            adj,
            edges: pairs,
        }
    }

    /// Parses a whitespace-separated edge list. Lines starting with `#` and
    /// blank lines are skipped. Vertex tokens are arbitrary strings, numbered
    /// in order of first appearance.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut ids: HashMap<String, u32> = HashMap::new();
        let mut labels = Vec::new();
        let mut pairs = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected two vertex tokens, found {}", tokens.len()),
                });
            }
            if tokens[0] == tokens[1] {
                return Err(Error::SelfLoop {
                    line: lineno + 1,
                    vertex: tokens[0].to_string(),
                });
            }
            let mut id = |tok: &str| -> u32 {
                if let Some(&id) = ids.get(tok) {
                    return id;
                }
                let id = labels.len() as u32;
                labels.push(tok.to_string());
                ids.insert(tok.to_string(), id);
                id
            };
            let (u, v) = (id(tokens[0]), id(tokens[1]));
            pairs.push((u.min(v), u.max(v)));
        }
        Ok(Self::assemble(labels, pairs))
    }

    /// Adds `extra` isolated vertices, labelled after the existing ones.
    pub fn with_isolated(mut self, extra: usize) -> Graph {
        let start = self.labels.len();
        for v in start..start + extra {
            self.labels.push(v.to_string());
            self.adj.push(Vec::new());
        }
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Undirected edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Number of ordered paths of length two, `sum_v deg(v) (deg(v) - 1)`.
    ///
    /// This is the number of nonzeros of the non-backtracking matrix.
    pub fn path2_count(&self) -> u64 {
        self.adj
            .iter()
            .map(|a| {
                let d = a.len() as u64;
                d * d.saturating_sub(1)
            })
            .sum()
    }

    /// Graph with the undirected edge `k` removed.
    pub fn without_edge(&self, k: usize) -> Graph {
        let mut pairs = self.edges.clone();
        pairs.remove(k);
        Self::assemble(self.labels.clone(), pairs)
    }

    /// Builds the directed-edge index of this graph.
    pub fn directed_index(&self) -> DirectedEdgeIndex {
        DirectedEdgeIndex::new(self)
    }
}

/// Directed edges of a graph, `2m` of them, paired by orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedEdgeIndex {
    tails: Vec<u32>,
    heads: Vec<u32>,
    /// For each vertex, `(head, id)` of its out-edges sorted by head.
    out: Vec<Vec<(u32, u32)>>,
}

impl DirectedEdgeIndex {
    pub fn new(g: &Graph) -> DirectedEdgeIndex {
        let mut tails = Vec::with_capacity(2 * g.m());
        let mut heads = Vec::with_capacity(2 * g.m());
        let mut out = vec![Vec::new(); g.n()];
        for (k, &(u, v)) in g.edges().iter().enumerate() {
            let id = 2 * k as u32;
            tails.extend([u, v]);
            heads.extend([v, u]);
            out[u as usize].push((v, id));
            out[v as usize].push((u, id + 1));
        }
        for list in &mut out {
            list.sort_unstable();
        }
        DirectedEdgeIndex { tails, heads, out }
    }

    /// Number of directed edges (`2m`).
    pub fn len(&self) -> usize {
        self.tails.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tails.is_empty()
    }

    pub fn num_vertices(&self) -> usize {
        self.out.len()
    }

    pub fn tail(&self, e: usize) -> usize {
        self.tails[e] as usize
    }

    pub fn head(&self, e: usize) -> usize {
        self.heads[e] as usize
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.tail(e), self.head(e))
    }

    /// The reversed edge.
    #[inline]
    pub fn rev(e: usize) -> usize {
        e ^ 1
    }

    /// Id of the directed edge `u -> v`, if `uv` is an edge.
    pub fn id(&self, u: usize, v: usize) -> Option<usize> {
        let list = self.out.get(u)?;
        list.binary_search_by_key(&(v as u32), |&(h, _)| h)
            .ok()
            .map(|pos| list[pos].1 as usize)
    }

    /// Out-edges of `v` as `(head, id)` pairs sorted by head.
    pub fn out_edges(&self, v: usize) -> &[(u32, u32)] {
        &self.out[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let g = Graph::parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn collapses_duplicates_and_keeps_labels() {
        let g = Graph::parse_edge_list("a b\nb a\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!(g.labels(), ["a", "b"]);
    }

    #[test]
    fn rejects_self_loop() {
        let err = Graph::parse_edge_list("0 0").unwrap_err();
        assert!(matches!(err, Error::SelfLoop { line: 1, .. }));
        assert!(Graph::from_edges(2, [(1, 1)]).is_err());
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = Graph::parse_edge_list("# header\n0 1\n1 2 3\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "expected two vertex tokens, found 3".into()
            }
        );
    }

    #[test]
    fn comments_and_blank_lines_skipped() {
        let g = Graph::parse_edge_list("# c\n\n  x y  \n#y z\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn directed_index_pairs_orientations() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let idx = k3.directed_index();
        assert_eq!(idx.len(), 6);
        for e in 0..idx.len() {
            let (u, v) = idx.endpoints(e);
            assert_eq!(idx.endpoints(DirectedEdgeIndex::rev(e)), (v, u));
            assert_eq!(idx.id(u, v), Some(e));
        }
        let single = Graph::from_edges(2, [(0, 1)]).unwrap().directed_index();
        assert_eq!(single.len(), 2);
        assert_eq!(DirectedEdgeIndex::rev(0), 1);
        let empty = Graph::from_edges(4, []).unwrap().directed_index();
        assert!(empty.is_empty());
    }

    #[test]
    fn path2_counts() {
        // brute-force ordered triples u - v - w with u != w
        let brute = |g: &Graph| {
            let mut c = 0u64;
            for v in 0..g.n() {
                for &u in g.neighbors(v) {
                    for &w in g.neighbors(v) {
                        if u != w {
                            c += 1;
                        }
                    }
                }
            }
            c
        };
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(brute(&k3), 6);
        assert_eq!(k3.path2_count(), 6);
        assert_eq!(brute(&star), 6);
        assert_eq!(star.path2_count(), 6);
        assert_eq!(edge.path2_count(), 0);
    }
}
