//! Closed-form rooted subgraph counts of order 3 to 6 over `B`.
//!
//! Orders 3 to 5 are a table of formulas in the expression language of
//! [`crate::expr`]. Edge-rooted entries are registered as named definitions,
//! so later formulas can refer to earlier ones by id; vertex-rooted entries
//! aggregate them through `gamma`. Order 6 is built from three fully rooted
//! order-4 connection matrices.

mod table;

use std::fmt;

pub use table::ENTRIES;

use crate::error::{Error, Result};
use crate::eval::{Evaluator, Value};
use crate::expr::Expr;
use crate::graph::Graph;
use crate::kappa::{build_formula, eval_formula, TupleMatrix};
use crate::matrix::{EdgeVector, VertexVector};
use crate::oracle::automorphisms_fixing;
use crate::pattern::RootedGraph;

/// Where a motif is rooted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rooting {
    Edge,
    Vertex,
}

/// One catalog formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Entry {
    pub order: usize,
    pub id: &'static str,
    pub rooting: Rooting,
    /// The formula as transcribed.
    pub printed: &'static str,
    /// Replacement for `printed` where the transcription does not count the
    /// motif.
    pub corrected: Option<&'static str>,
    /// Edges of the motif; the root is `0 -> 1` or vertex `0`.
    pub shape: &'static [(usize, usize)],
}

pub(crate) const fn edge(
    order: usize,
    id: &'static str,
    printed: &'static str,
    corrected: Option<&'static str>,
    shape: &'static [(usize, usize)],
) -> Entry {
    Entry {
        order,
        id,
        rooting: Rooting::Edge,
        printed,
        corrected,
        shape,
    }
}

pub(crate) const fn vertex(
    order: usize,
    id: &'static str,
    printed: &'static str,
    corrected: Option<&'static str>,
    shape: &'static [(usize, usize)],
) -> Entry {
    Entry {
        order,
        id,
        rooting: Rooting::Vertex,
        printed,
        corrected,
        shape,
    }
}

impl Entry {
    /// The formula that is evaluated.
    pub fn formula(&self) -> &'static str {
        self.corrected.unwrap_or(self.printed)
    }

    pub fn motif(&self) -> MotifId {
        MotifId {
            order: self.order,
            family: self.id.to_string(),
            rooting: self.rooting,
        }
    }

    /// The rooted pattern this entry counts.
    pub fn pattern(&self) -> RootedGraph {
        let roots: &[usize] = match self.rooting {
            Rooting::Edge => &[0, 1],
            Rooting::Vertex => &[0],
        };
        RootedGraph::from_edges(self.order, self.shape, roots, &[]).expect("catalog shapes are simple graphs")
    }
}

/// A derived matrix whose transcribed definition was replaced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivedCorrection {
    pub name: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
}

/// `Bjoin[e, f]` counts vertices adjacent to all four endpoints of `e` and
/// `f`; the transcribed product counts a different structure.
pub const DERIVED_CORRECTIONS: &[DerivedCorrection] = &[DerivedCorrection {
    name: "Bjoin",
    printed: "Barr @ under(Btri)",
    corrected: "over(Btri) @ Barr",
}];

/// Identifies a catalog motif.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MotifId {
    pub order: usize,
    pub family: String,
    pub rooting: Rooting,
}

impl fmt::Display for MotifId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rooting {
            Rooting::Edge => write!(f, "{}", self.family),
            Rooting::Vertex => write!(f, "{}*", self.family),
        }
    }
}

/// Per-location counts of one motif.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MotifValues {
    Edge(EdgeVector),
    Vertex(VertexVector),
}

impl MotifValues {
    pub fn as_slice(&self) -> &[i64] {
        match self {
            MotifValues::Edge(v) => v.as_slice(),
            MotifValues::Vertex(v) => v.as_slice(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotifResult {
    pub motif: MotifId,
    pub values: MotifValues,
    /// Sum of `values`, with no symmetry normalization.
    pub total: i64,
}

impl MotifResult {
    fn new(motif: MotifId, values: MotifValues) -> Result<MotifResult> {
        let slice = values.as_slice();
        let total = slice
            .iter()
            .try_fold(0i64, |acc, &x| acc.checked_add(x))
            .ok_or_else(|| Error::Overflow {
                context: format!("total of {motif}"),
            })?;
        if let Some(x) = slice.iter().find(|&&x| x < 0) {
            return Err(Error::Formula {
                formula: motif.to_string(),
                message: format!("negative count {x}"),
            });
        }
        Ok(MotifResult { motif, values, total })
    }
}

/// Catalog entries of one order, edge-rooted first.
pub fn entries(order: usize) -> impl Iterator<Item = &'static Entry> {
    let edges = ENTRIES
        .iter()
        .filter(move |e| e.order == order && e.rooting == Rooting::Edge);
    let vertices = ENTRIES
        .iter()
        .filter(move |e| e.order == order && e.rooting == Rooting::Vertex);
    edges.chain(vertices)
}

/// Looks up an entry by rooting and id.
pub fn entry(rooting: Rooting, id: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.rooting == rooting && e.id == id)
}

/// Registers every edge-rooted formula of order `<= max_order` as a named
/// definition. Vertex formulas refer to these names.
pub fn define_edge_formulas(ev: &mut Evaluator<'_>, max_order: usize) -> Result<()> {
    for e in ENTRIES
        .iter()
        .filter(|e| e.rooting == Rooting::Edge && e.order <= max_order)
    {
        ev.define(e.id, Expr::parse(e.formula()).map_err(|err| err.in_formula(e.id))?);
    }
    Ok(())
}

/// Evaluates one entry. Edge formulas must already be defined.
pub fn eval_entry(ev: &mut Evaluator<'_>, e: &Entry) -> Result<MotifResult> {
    let value = match e.rooting {
        Rooting::Edge => ev.value_of(e.id)?,
        Rooting::Vertex => ev
            .eval(&Expr::parse(e.formula())?)
            .map_err(|err| err.in_formula(e.id))?,
    };
    let values = match (e.rooting, value) {
        (Rooting::Edge, Value::Edge(v)) => MotifValues::Edge(v),
        (Rooting::Vertex, Value::Vertex(v)) => MotifValues::Vertex(v),
        (_, other) => {
            return Err(Error::Formula {
                formula: e.id.to_string(),
                message: format!("evaluates to {}", other.kind()),
            })
        }
    };
    MotifResult::new(e.motif(), values)
}

fn eval_order(ev: &mut Evaluator<'_>, order: usize) -> Result<Vec<MotifResult>> {
    if !ev.is_defined(entries(order).next().expect("order has entries").id) {
        define_edge_formulas(ev, 5)?;
    }
    entries(order).map(|e| eval_entry(ev, e)).collect()
}

/// All order-3 counts: edge-rooted then vertex-rooted.
pub fn eval_order3(ev: &mut Evaluator<'_>) -> Result<Vec<MotifResult>> {
    eval_order(ev, 3)
}

pub fn eval_order4(ev: &mut Evaluator<'_>) -> Result<Vec<MotifResult>> {
    eval_order(ev, 4)
}

pub fn eval_order5(ev: &mut Evaluator<'_>) -> Result<Vec<MotifResult>> {
    eval_order(ev, 5)
}

/// Edge-rooted 6-cliques: `rowsum((Bx @ Bx) * Bx) / 4!`, where `Bx` is the
/// 4-clique connection matrix between directed edges.
pub fn eval_k6_edge(ev: &mut Evaluator<'_>) -> Result<MotifResult> {
    let expr = Expr::parse("rowsum((Bx @ Bx) * Bx) / 24").expect("valid formula");
    let v = ev.eval(&expr).map_err(|err| err.in_formula("K6"))?;
    let v = v.as_edge().cloned().expect("rowsum yields an edge vector");
    MotifResult::new(k6_id(), MotifValues::Edge(v))
}

fn k6_id() -> MotifId {
    MotifId {
        order: 6,
        family: "K6".into(),
        rooting: Rooting::Edge,
    }
}

/// Edge-rooted counts of an arbitrary order-6 pattern rooted at `r = (a1, a2)`.
///
/// The remaining vertices are split into `{b1, b2}` and `{c1, c2}` in
/// increasing order. With `f_a`, `f_b`, `f_c` the connection matrices of
/// the induced patterns on `a ∪ b`, `b ∪ c` and `a ∪ c`, all four vertices
/// rooted, the entry `((f_a f_b) * f_c) 1` counts embeddings of `F` with
/// the root at a directed edge, so it is divided by the automorphisms of
/// `F` fixing `a1` and `a2`.
pub fn eval_order6_edge(g: &Graph, f: &RootedGraph) -> Result<MotifResult> {
    if f.order() != 6 || f.r.len() != 2 || !f.s.is_empty() {
        return Err(Error::Invalid(
            "order-6 patterns need six vertices, r = (a1, a2), empty s".into(),
        ));
    }
    let (a1, a2) = (f.r[0], f.r[1]);
    if !f.graph.has_edge(a1, a2) {
        return Err(Error::Invalid(format!("root {a1}{a2} is not an edge of the pattern")));
    }
    let rest: Vec<usize> = (0..6).filter(|&v| v != a1 && v != a2).collect();
    let (a, b, c) = ([a1, a2], [rest[0], rest[1]], [rest[2], rest[3]]);
    let fa = connection(g, f, a, b)?;
    let fb = connection(g, f, b, c)?;
    let fc = connection(g, f, a, c)?;
    let counts = fa.matmul(&fb)?.hadamard(&fc)?.row_sums()?;
    let divisor = automorphisms_fixing(&f.graph, &[a1, a2]) as i64;
    let idx = g.directed_index();
    let n = g.n();
    let values: Vec<i64> = (0..idx.len())
        .map(|e| {
            let (u, v) = idx.endpoints(e);
            counts[u * n + v]
        })
        .collect();
    let values = EdgeVector::from_vec(values).div_exact(divisor, "order-6 pattern")?;
    let motif = MotifId {
        order: 6,
        family: format!("F6[{}]", edge_list(f)),
        rooting: Rooting::Edge,
    };
    MotifResult::new(motif, MotifValues::Edge(values))
}

/// Connection matrix of the subgraph of `f` induced on `r ∪ s`, rooted at
/// the two pairs.
fn connection(g: &Graph, f: &RootedGraph, r: [usize; 2], s: [usize; 2]) -> Result<TupleMatrix> {
    let verts = [r[0], r[1], s[0], s[1]];
    let edges: Vec<(usize, usize)> = f
        .graph
        .edges()
        .iter()
        .filter_map(|&(u, v)| {
            let pu = verts.iter().position(|&x| x == u as usize)?;
            let pv = verts.iter().position(|&x| x == v as usize)?;
            Some((pu, pv))
        })
        .collect();
    let induced = RootedGraph::from_edges(4, &edges, &[0, 1], &[2, 3])?;
    eval_formula(&build_formula(&induced)?, g)
}

fn edge_list(f: &RootedGraph) -> String {
    f.graph
        .edges()
        .iter()
        .map(|(u, v)| format!("{u}{v}"))
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::generators::{complete, cycle, erdos_renyi, path, petersen, star};
    use crate::oracle::{edge_rooted_counts, vertex_rooted_counts, OracleConfig};
    use crate::pattern::rooted_classes;

    fn oracle_values(e: &Entry, g: &Graph) -> Vec<i64> {
        let cfg = OracleConfig::default();
        let p = e.pattern();
        match e.rooting {
            Rooting::Edge => edge_rooted_counts(&p, g, &g.directed_index(), &cfg).unwrap().into_vec(),
            Rooting::Vertex => vertex_rooted_counts(&p, g, &cfg).unwrap().into_vec(),
        }
    }

    fn corpus() -> Vec<Graph> {
        let mut gs = vec![complete(5), cycle(5), path(5), star(4), petersen()];
        for seed in 0..6 {
            gs.push(erdos_renyi(8, [0.3, 0.5, 0.7][seed as usize % 3], seed));
        }
        gs
    }

    #[test]
    fn ids_are_unique_and_shapes_distinct() {
        let mut ids = BTreeSet::new();
        let mut shapes = BTreeSet::new();
        for e in ENTRIES {
            assert!(ids.insert((e.rooting, e.id)), "duplicate {}", e.id);
            assert!(shapes.insert(e.pattern().canonical()), "repeated shape {}", e.id);
        }
        assert_eq!(ENTRIES.len(), 177);
    }

    #[test]
    fn catalog_covers_small_classes() {
        // every connected rooted class of order 3 and 4 is listed
        for k in 3..=4 {
            let listed: BTreeSet<_> = entries(k).map(|e| e.pattern().canonical()).collect();
            for (r, want) in [(2, Rooting::Edge), (1, Rooting::Vertex)] {
                for c in rooted_classes(k, r, 0, true) {
                    if want == Rooting::Edge && !c.graph.has_edge(c.r[0], c.r[1]) {
                        continue;
                    }
                    assert!(listed.contains(&c.canonical()), "order {k} class missing");
                }
            }
        }
    }

    #[test]
    fn formulas_match_oracle() {
        for g in corpus() {
            let mut ev = Evaluator::new(&g);
            let mut results = eval_order3(&mut ev).unwrap();
            results.extend(eval_order4(&mut ev).unwrap());
            results.extend(eval_order5(&mut ev).unwrap());
            let expected: Vec<&Entry> = (3..=5).flat_map(entries).collect();
            assert_eq!(results.len(), expected.len());
            for (res, e) in results.iter().zip(expected) {
                assert_eq!(res.values.as_slice(), oracle_values(e, &g), "{}", res.motif);
            }
        }
    }

    #[test]
    fn corrected_entries_fail_as_printed() {
        let graphs = corpus();
        for e in ENTRIES.iter().filter(|e| e.corrected.is_some()) {
            let fails = graphs.iter().any(|g| {
                let mut ev = Evaluator::new(g);
                define_edge_formulas(&mut ev, 5).unwrap();
                let printed = Expr::parse(e.printed).unwrap();
                let value = match e.rooting {
                    Rooting::Edge => {
                        ev.define(e.id, printed);
                        ev.value_of(e.id)
                    }
                    Rooting::Vertex => ev.eval(&printed),
                };
                match value {
                    Ok(Value::Edge(v)) => v.into_vec() != oracle_values(e, g),
                    Ok(Value::Vertex(v)) => v.into_vec() != oracle_values(e, g),
                    _ => true,
                }
            });
            assert!(fails, "{} passes as printed", e.id);
        }
    }

    #[test]
    fn printed_bjoin_breaks_its_users() {
        let c = DERIVED_CORRECTIONS[0];
        for id in ["X071", "X101"] {
            let e = entry(Rooting::Edge, id).unwrap();
            let fails = corpus().iter().any(|g| {
                let mut ev = Evaluator::new(g);
                define_edge_formulas(&mut ev, 5).unwrap();
                ev.define(c.name, Expr::parse(c.printed).unwrap());
                match ev.value_of(id) {
                    Ok(v) => v.as_edge().unwrap().as_slice() != oracle_values(e, g),
                    Err(_) => true,
                }
            });
            assert!(fails, "{id} unaffected by the printed {}", c.name);
        }
    }

    #[test]
    fn k6_counts() {
        for (g, want) in [(complete(6), 1), (complete(7), 5), (petersen(), 0)] {
            let mut ev = Evaluator::new(&g);
            let res = eval_k6_edge(&mut ev).unwrap();
            assert!(res.values.as_slice().iter().all(|&x| x == want));
        }
    }

    #[test]
    fn order6_matches_oracle() {
        let cfg = OracleConfig::default();
        let k6: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        let shapes: [&[(usize, usize)]; 3] = [
            &k6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
            &[(0, 1), (0, 2), (2, 3), (3, 1), (1, 4), (4, 5)],
        ];
        for (i, shape) in shapes.iter().enumerate() {
            let p = RootedGraph::edge_rooted(6, shape, 0, 1).unwrap();
            for seed in 0..3 {
                let g = erdos_renyi(8, 0.7, 100 * i as u64 + seed);
                let got = eval_order6_edge(&g, &p).unwrap();
                let want = edge_rooted_counts(&p, &g, &g.directed_index(), &cfg).unwrap();
                assert_eq!(got.values.as_slice(), want.as_slice());
            }
        }
    }
}
