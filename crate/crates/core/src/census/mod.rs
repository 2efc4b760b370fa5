//! Cycle census for lengths 3 to 9 through closed non-backtracking walks.
//!
//! `Tr(B^k)` counts closed walks of length `k` that never backtrack, not even
//! across the wrap-around step. Each such walk covers some subgraph `H`, so
//! `Tr(B^k) = sum_H w_k(H) * copies(H)`, where `w_k(H)` is the number of
//! closed walks in `H` covering all of it. For `k <= 9` there are 40 possible
//! `H`: the seven cycles and the 35 correction subgraphs `F1..F35` (the
//! triangle and the square appear in both lists). Each `F` is counted by a
//! closed form over `B`, and `C_k` follows by subtraction.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::eval::Evaluator;
use crate::expr::Expr;
use crate::graph::Graph;
use crate::matrix::EdgeMatrix;
use crate::oracle::{for_each_embedding, OracleConfig};

mod table;

pub use table::{CYCLE_FORMULAS, WALK_CORRECTIONS};

/// A correction subgraph `F_k` and its closed form.
#[derive(Debug, Clone, Copy)]
pub struct WalkCorrection {
    pub id: &'static str,
    pub printed: &'static str,
    /// Replacement for `printed` where the printed form miscounts.
    pub corrected: Option<&'static str>,
    /// Edge list of the subgraph counted.
    pub shape: &'static [(usize, usize)],
}

impl WalkCorrection {
    pub fn formula(&self) -> &'static str {
        self.corrected.unwrap_or(self.printed)
    }

    pub fn shape_graph(&self) -> Graph {
        let order = self.shape.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Graph::from_edges(order, self.shape.iter().copied()).expect("shapes are simple graphs")
    }
}

/// `C_k` in terms of traces and the corrections.
#[derive(Debug, Clone, Copy)]
pub struct CycleFormula {
    pub id: &'static str,
    pub length: usize,
    pub formula: &'static str,
}

/// Named integer counts, in table order.
pub type Counts = Vec<(&'static str, i64)>;

/// Correction and cycle counts of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub f_counts: Counts,
    pub cycle_counts: Counts,
}

impl CensusReport {
    pub fn cycles(&self, k: usize) -> Option<i64> {
        CYCLE_FORMULAS
            .iter()
            .position(|c| c.length == k)
            .map(|i| self.cycle_counts[i].1)
    }
}

fn scalar(ev: &mut Evaluator<'_>, id: &'static str) -> Result<i64> {
    let v = ev.value_of(id)?;
    let x = v.as_scalar().ok_or_else(|| Error::Formula {
        formula: id.to_string(),
        message: format!("evaluates to {}", v.kind()),
    })?;
    if x < 0 {
        return Err(Error::Formula {
            formula: id.to_string(),
            message: format!("negative count {x}"),
        });
    }
    Ok(x)
}

/// Evaluates `F1..F35`. Every division must be exact.
pub fn eval_walk_corrections(ev: &mut Evaluator<'_>) -> Result<Counts> {
    for f in WALK_CORRECTIONS {
        ev.define(f.id, Expr::parse(f.formula()).map_err(|e| e.in_formula(f.id))?);
    }
    WALK_CORRECTIONS.iter().map(|f| Ok((f.id, scalar(ev, f.id)?))).collect()
}

/// Evaluates `C3..C9` from already computed corrections.
pub fn eval_cycles(ev: &mut Evaluator<'_>, corrections: &[(&'static str, i64)]) -> Result<Counts> {
    for &(id, x) in corrections {
        ev.define(id, Expr::Int(x));
    }
    for c in CYCLE_FORMULAS {
        ev.define(c.id, Expr::parse(c.formula).map_err(|e| e.in_formula(c.id))?);
    }
    CYCLE_FORMULAS.iter().map(|c| Ok((c.id, scalar(ev, c.id)?))).collect()
}

/// Full census of simple cycles of lengths 3 to 9.
pub fn census(ev: &mut Evaluator<'_>) -> Result<CensusReport> {
    let f_counts = eval_walk_corrections(ev)?;
    let cycle_counts = eval_cycles(ev, &f_counts)?;
    Ok(CensusReport { f_counts, cycle_counts })
}

/// Whether `a` and `b` are isomorphic.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let degrees = |g: &Graph| {
        let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(a) != degrees(b) {
        return false;
    }
    let mut found = false;
    // an injective edge-preserving map between graphs of equal size is an
    // isomorphism; stop at the first one
    for_each_embedding(a, b, &[], |_| found = true);
    found
}

/// Isomorphism classes seen so far, one representative each.
#[derive(Debug, Clone, Default)]
pub struct ClassRegistry {
    reps: Vec<Graph>,
}

impl ClassRegistry {
    pub fn new() -> ClassRegistry {
        ClassRegistry::default()
    }

    pub fn from_reps(reps: Vec<Graph>) -> ClassRegistry {
        ClassRegistry { reps }
    }

    pub fn find(&self, g: &Graph) -> Option<usize> {
        self.reps.iter().position(|h| is_isomorphic(h, g))
    }

    pub fn find_or_insert(&mut self, g: Graph) -> usize {
        if let Some(i) = self.find(&g) {
            return i;
        }
        self.reps.push(g);
        self.reps.len() - 1
    }

    pub fn reps(&self) -> &[Graph] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

/// Subgraph covered by a set of undirected edges, vertices relabelled `0..`.
fn covered(edges: &BTreeSet<(usize, usize)>) -> Graph {
    let mut ids = BTreeMap::new();
    for &(u, v) in edges {
        let next = ids.len();
        ids.entry(u).or_insert(next);
        let next = ids.len();
        ids.entry(v).or_insert(next);
    }
    Graph::from_edges(ids.len(), edges.iter().map(|(u, v)| (ids[u], ids[v])))
        .expect("covered edges form a simple graph")
}

/// Every subgraph shape a closed non-backtracking walk of length `k` can
/// cover, one representative per class.
///
/// Walks are enumerated abstractly: vertices are numbered by first visit,
/// so each shape arises from finitely many vertex sequences.
pub fn closed_walk_shapes(k: usize) -> Vec<Graph> {
    let mut edge_sets = BTreeSet::new();
    let mut seq = vec![0usize];
    shapes_rec(k, &mut seq, 0, &mut edge_sets);
    let mut reg = ClassRegistry::new();
    for es in edge_sets {
        reg.find_or_insert(covered(&es));
    }
    reg.reps
}

fn shapes_rec(k: usize, seq: &mut Vec<usize>, max: usize, out: &mut BTreeSet<BTreeSet<(usize, usize)>>) {
    let i = seq.len();
    if i == k {
        let (first, last) = (seq[0], seq[k - 1]);
        if last == first || seq[k - 2] == first || last == seq[1] {
            return;
        }
        let es = (0..k)
            .map(|j| {
                let (u, v) = (seq[j], seq[(j + 1) % k]);
                (u.min(v), u.max(v))
            })
            .collect();
        out.insert(es);
        return;
    }
    for v in 0..=max + 1 {
        if v == seq[i - 1] || (i >= 2 && v == seq[i - 2]) {
            continue;
        }
        seq.push(v);
        shapes_rec(k, seq, max.max(v), out);
        seq.pop();
    }
}

/// Directed-edge sequences of every closed non-backtracking walk of length
/// `k` in `g`, passed to `visit`. A walk is a sequence `e_1..e_k` with
/// `B[e_i, e_{i+1}] = 1` and `B[e_k, e_1] = 1`.
fn for_each_closed_walk(b: &EdgeMatrix, k: usize, mut visit: impl FnMut(&[usize])) {
    let mut walk = Vec::with_capacity(k);
    for e in 0..b.dim() {
        walk.push(e);
        walk_rec(b, k, &mut walk, &mut visit);
        walk.pop();
    }
}

fn walk_rec(b: &EdgeMatrix, k: usize, walk: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    let last = *walk.last().unwrap();
    if walk.len() == k {
        if b.get(last, walk[0]) != 0 {
            visit(walk);
        }
        return;
    }
    let (cols, _) = b.row(last);
    for &f in cols {
        walk.push(f as usize);
        walk_rec(b, k, walk, visit);
        walk.pop();
    }
}

/// `w_k(h)`: closed non-backtracking walks of length `k` in `h` that use
/// every edge of `h`.
pub fn walk_multiplicity(h: &Graph, k: usize) -> u64 {
    if h.m() > k {
        return 0;
    }
    let idx = h.directed_index();
    let b = EdgeMatrix::nonbacktracking(h, &idx);
    let mut count = 0;
    let mut used = vec![0u32; h.m()];
    for_each_closed_walk(&b, k, |walk| {
        used.iter_mut().for_each(|u| *u = 0);
        for &e in walk {
            used[e / 2] = 1;
        }
        if used.iter().all(|&u| u == 1) {
            count += 1;
        }
    });
    count
}

/// Groups the closed non-backtracking walks of length `k` in `g` by the
/// class of the subgraph they cover. Class ids index into `registry`, which
/// grows as new shapes are met.
pub fn walk_class_oracle(
    g: &Graph,
    k: usize,
    registry: &mut ClassRegistry,
    config: &OracleConfig,
) -> Result<BTreeMap<usize, u64>> {
    if !(3..=9).contains(&k) {
        return Err(Error::Invalid(format!("walk length {k} outside 3..=9")));
    }
    config.check(0, g)?;
    let idx = g.directed_index();
    let b = EdgeMatrix::nonbacktracking(g, &idx);
    let mut by_edges: BTreeMap<BTreeSet<(usize, usize)>, u64> = BTreeMap::new();
    for_each_closed_walk(&b, k, |walk| {
        let es = walk.iter().map(|&e| {
            let (u, v) = idx.endpoints(e);
            (u.min(v), u.max(v))
        });
        *by_edges.entry(es.collect()).or_default() += 1;
    });
    let mut out = BTreeMap::new();
    for (es, c) in by_edges {
        *out.entry(registry.find_or_insert(covered(&es))).or_default() += c;
    }
    Ok(out)
}
