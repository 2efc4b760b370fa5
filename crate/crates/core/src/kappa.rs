//! Connection matrices of arbitrary bi-rooted patterns, built from the
//! adjacency matrix.
//!
//! A [`FormulaExpr`] is a DAG over tuple-indexed matrices. [`build_formula`]
//! constructs one for any pattern by recursion on its order, and
//! [`eval_formula`] evaluates it on a host graph. [`kappa_direct`] is the
//! enumeration reference.
//!
//! Tuples are linearized row-major over vertex ids: `(i_1, .., i_p)` sits at
//! `i_1 n^(p-1) + .. + i_p`.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{automorphisms_fixing, for_each_embedding, location_counts, OracleConfig};
use crate::pattern::RootedGraph;

/// Largest number of cells any tuple matrix may hold.
pub const MAX_CELLS: usize = 1_000_000;

/// Largest pattern order accepted by [`build_formula`].
pub const MAX_ORDER: usize = 8;

fn cells(n: usize, arity: usize) -> Result<usize> {
    u32::try_from(arity)
        .ok()
        .and_then(|a| n.checked_pow(a))
        .filter(|&c| c <= MAX_CELLS)
        .ok_or_else(|| Error::Guard(format!("{n}^{arity} cells exceed the limit of {MAX_CELLS}")))
}

fn encode(n: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * n + x)
}

fn decode(n: usize, mut idx: usize, len: usize, out: &mut [usize]) {
    for slot in out[..len].iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
}

fn ovf(op: &str) -> Error {
    Error::Overflow {
        context: format!("tuple matrix {op}"),
    }
}

/// Exact-integer matrix indexed by `[n]^p x [n]^q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleMatrix {
    n: usize,
    p: usize,
    q: usize,
    data: Vec<i64>,
}

impl TupleMatrix {
    pub fn zeros(n: usize, p: usize, q: usize) -> Result<TupleMatrix> {
        cells(n, p + q)?;
        let (rows, cols) = (n.pow(p as u32), n.pow(q as u32));
        Ok(TupleMatrix {
            n,
            p,
            q,
            data: vec![0; rows * cols],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn rows(&self) -> usize {
        self.n.pow(self.p as u32)
    }

    pub fn cols(&self) -> usize {
        self.n.pow(self.q as u32)
    }

    /// Row-major cell values.
    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn get(&self, i: &[usize], j: &[usize]) -> i64 {
        assert_eq!((i.len(), j.len()), (self.p, self.q), "tuple arity");
        self.data[encode(self.n, i) * self.cols() + encode(self.n, j)]
    }

    pub fn set(&mut self, i: &[usize], j: &[usize], value: i64) {
        assert_eq!((i.len(), j.len()), (self.p, self.q), "tuple arity");
        let c = self.cols();
        self.data[encode(self.n, i) * c + encode(self.n, j)] = value;
    }

    fn same_shape(&self, other: &TupleMatrix, op: &'static str) -> Result<()> {
        if (self.n, self.p, self.q) != (other.n, other.p, other.q) {
            return Err(Error::DimensionMismatch {
                op,
                left: format!("{:?}", (self.n, self.p, self.q)),
                right: format!("{:?}", (other.n, other.p, other.q)),
            });
        }
        Ok(())
    }

    pub fn transpose(&self) -> TupleMatrix {
        let (rows, cols) = (self.rows(), self.cols());
        let mut data = vec![0; self.data.len()];
        for r in 0..rows {
            for c in 0..cols {
                data[c * rows + r] = self.data[r * cols + c];
            }
        }
        TupleMatrix {
            n: self.n,
            p: self.q,
            q: self.p,
            data,
        }
    }

    /// Reinterprets the cells with `q` column coordinates; the data is
    /// unchanged by row-major linearization.
    pub fn reshape(&self, p: usize, q: usize) -> Result<TupleMatrix> {
        if p + q != self.p + self.q {
            return Err(Error::Invalid(format!(
                "cannot reshape arity ({}, {}) to ({p}, {q})",
                self.p, self.q
            )));
        }
        Ok(TupleMatrix {
            n: self.n,
            p,
            q,
            data: self.data.clone(),
        })
    }

    pub fn matmul(&self, other: &TupleMatrix) -> Result<TupleMatrix> {
        if self.n != other.n || self.q != other.p {
            return Err(Error::DimensionMismatch {
                op: "tuple product",
                left: format!("{:?}", (self.n, self.p, self.q)),
                right: format!("{:?}", (other.n, other.p, other.q)),
            });
        }
        let mut out = TupleMatrix::zeros(self.n, self.p, other.q)?;
        let (rows, mid, cols) = (self.rows(), self.cols(), other.cols());
        for r in 0..rows {
            for k in 0..mid {
                let a = self.data[r * mid + k];
                if a == 0 {
                    continue;
                }
                let row = &other.data[k * cols..(k + 1) * cols];
                let dst = &mut out.data[r * cols..(r + 1) * cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    if b != 0 {
                        *d = a
                            .checked_mul(b)
                            .and_then(|x| d.checked_add(x))
                            .ok_or_else(|| ovf("product"))?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hadamard(&self, other: &TupleMatrix) -> Result<TupleMatrix> {
        self.same_shape(other, "tuple entrywise product")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a.checked_mul(b).ok_or_else(|| ovf("entrywise product")))
            .collect::<Result<_>>()?;
        Ok(TupleMatrix { data, ..*self })
    }

    pub fn kronecker(&self, other: &TupleMatrix) -> Result<TupleMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                op: "tuple kronecker",
                left: self.n.to_string(),
                right: other.n.to_string(),
            });
        }
        let mut out = TupleMatrix::zeros(self.n, self.p + other.p, self.q + other.q)?;
        let (r2, c2) = (other.rows(), other.cols());
        let cols = out.cols();
        for r1 in 0..self.rows() {
            for c1 in 0..self.cols() {
                let a = self.data[r1 * self.cols() + c1];
                if a == 0 {
                    continue;
                }
                for r in 0..r2 {
                    for c in 0..c2 {
                        let b = other.data[r * c2 + c];
                        out.data[(r1 * r2 + r) * cols + c1 * c2 + c] =
                            a.checked_mul(b).ok_or_else(|| ovf("kronecker"))?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn div_exact(&self, d: i64) -> Result<TupleMatrix> {
        if let Some(&x) = self.data.iter().find(|&&x| x % d != 0) {
            return Err(Error::InexactDivision {
                context: format!("tuple matrix cell {x}"),
                divisor: d,
            });
        }
        let data = self.data.iter().map(|&x| x / d).collect();
        Ok(TupleMatrix { data, ..*self })
    }

    /// Sum of each row, indexed like the rows.
    pub fn row_sums(&self) -> Result<Vec<i64>> {
        self.data
            .chunks(self.cols().max(1))
            .take(self.rows())
            .map(|row| {
                row.iter()
                    .try_fold(0i64, |acc, &x| acc.checked_add(x))
                    .ok_or_else(|| ovf("row sum"))
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Nonzero cells as `(i, j, value)`, in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (Vec<usize>, Vec<usize>, i64)> + '_ {
        let cols = self.cols();
        self.data
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(move |(k, &x)| {
                let mut i = vec![0; self.p];
                let mut j = vec![0; self.q];
                decode(self.n, k / cols, self.p, &mut i);
                decode(self.n, k % cols, self.q, &mut j);
                (i, j, x)
            })
    }
}

/// Constant 0/1 matrix over `[n]^p x [n]^q`. Coordinates `0..p` are the row
/// tuple and `p..p+q` the column tuple; a cell is 1 when every `eq` pair of
/// coordinates agrees and every `ne` pair differs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Indicator {
    pub p: usize,
    pub q: usize,
    pub eq: Vec<(usize, usize)>,
    pub ne: Vec<(usize, usize)>,
}

impl Indicator {
    /// The all-ones matrix.
    pub fn ones(p: usize, q: usize) -> Indicator {
        Indicator {
            p,
            q,
            eq: Vec::new(),
            ne: Vec::new(),
        }
    }

    fn holds(&self, coords: &[usize]) -> bool {
        self.eq.iter().all(|&(a, b)| coords[a] == coords[b]) && self.ne.iter().all(|&(a, b)| coords[a] != coords[b])
    }

    fn transpose(&self) -> Indicator {
        let (p, q) = (self.p, self.q);
        let map = |c: usize| if c < p { c + q } else { c - p };
        let pairs = |v: &[(usize, usize)]| v.iter().map(|&(a, b)| (map(a), map(b))).collect();
        Indicator {
            p: q,
            q: p,
            eq: pairs(&self.eq),
            ne: pairs(&self.ne),
        }
    }

    fn materialize(&self, n: usize) -> Result<TupleMatrix> {
        let mut out = TupleMatrix::zeros(n, self.p, self.q)?;
        let mut coords = vec![0; self.p + self.q];
        for (cell, slot) in out.data.iter_mut().enumerate() {
            decode(n, cell, self.p + self.q, &mut coords);
            *slot = self.holds(&coords) as i64;
        }
        Ok(out)
    }

    /// `self · x` without materializing `self`. Column coordinates tied to a
    /// row coordinate by `eq` are fixed; the others are enumerated.
    fn left_product(&self, x: &TupleMatrix) -> Result<TupleMatrix> {
        let n = x.n;
        let (p, q) = (self.p, self.q);
        let mut out = TupleMatrix::zeros(n, p, x.q)?;
        let tied: Vec<Option<usize>> = (p..p + q)
            .map(|c| {
                self.eq.iter().find_map(|&(a, b)| match (a < p, b < p) {
                    (true, false) if b == c => Some(a),
                    (false, true) if a == c => Some(b),
                    _ => None,
                })
            })
            .collect();
        let free: Vec<usize> = (0..q).filter(|&w| tied[w].is_none()).collect();
        let combos = cells(n, free.len())?;
        let cols = x.cols();
        let mut coords = vec![0; p + q];
        let mut free_vals = vec![0; free.len()];
        for r in 0..out.rows() {
            decode(n, r, p, &mut coords);
            for combo in 0..combos {
                decode(n, combo, free.len(), &mut free_vals);
                for (w, t) in tied.iter().enumerate() {
                    if let Some(a) = t {
                        coords[p + w] = coords[*a];
                    }
                }
                for (&w, &v) in free.iter().zip(&free_vals) {
                    coords[p + w] = v;
                }
                if !self.holds(&coords) {
                    continue;
                }
                let k = encode(n, &coords[p..]);
                let src = &x.data[k * cols..(k + 1) * cols];
                let dst = &mut out.data[r * cols..(r + 1) * cols];
                for (d, &s) in dst.iter_mut().zip(src) {
                    *d = d.checked_add(s).ok_or_else(|| ovf("selection"))?;
                }
            }
        }
        Ok(out)
    }

    fn mask(&self, x: &TupleMatrix) -> TupleMatrix {
        let mut out = x.clone();
        let mut coords = vec![0; self.p + self.q];
        let len = self.p + self.q;
        for (cell, slot) in out.data.iter_mut().enumerate() {
            if *slot != 0 {
                decode(x.n, cell, len, &mut coords);
                if !self.holds(&coords) {
                    *slot = 0;
                }
            }
        }
        out
    }
}

#[derive(Debug)]
enum Node {
    Adjacency,
    Indicator(Indicator),
    Product(FormulaExpr, FormulaExpr),
    Hadamard(FormulaExpr, FormulaExpr),
    Kronecker(FormulaExpr, FormulaExpr),
    Transpose(FormulaExpr),
    Vectorize(FormulaExpr),
    /// Inverse of `Vectorize`, keeping `q` column coordinates.
    Unvectorize(FormulaExpr, usize),
    Divide(FormulaExpr, i64),
}

#[derive(Debug)]
struct NodeData {
    node: Node,
    p: usize,
    q: usize,
}

/// A node of a formula DAG. Cloning shares the node.
#[derive(Debug, Clone)]
pub struct FormulaExpr(Arc<NodeData>);

impl FormulaExpr {
    fn new(node: Node, p: usize, q: usize) -> FormulaExpr {
        FormulaExpr(Arc::new(NodeData { node, p, q }))
    }

    /// `A(G)`, of arity `(1, 1)`.
    pub fn adjacency() -> FormulaExpr {
        FormulaExpr::new(Node::Adjacency, 1, 1)
    }

    pub fn indicator(ind: Indicator) -> FormulaExpr {
        let (p, q) = (ind.p, ind.q);
        FormulaExpr::new(Node::Indicator(ind), p, q)
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.0.p, self.0.q)
    }

    fn arity_error(op: &str, a: &FormulaExpr, b: &FormulaExpr) -> Error {
        Error::Invalid(format!("{op} of arities {:?} and {:?}", a.arity(), b.arity()))
    }

    pub fn product(&self, other: &FormulaExpr) -> Result<FormulaExpr> {
        if self.0.q != other.0.p {
            return Err(FormulaExpr::arity_error("product", self, other));
        }
        Ok(FormulaExpr::new(
            Node::Product(self.clone(), other.clone()),
            self.0.p,
            other.0.q,
        ))
    }

    pub fn hadamard(&self, other: &FormulaExpr) -> Result<FormulaExpr> {
        if self.arity() != other.arity() {
            return Err(FormulaExpr::arity_error("entrywise product", self, other));
        }
        Ok(FormulaExpr::new(
            Node::Hadamard(self.clone(), other.clone()),
            self.0.p,
            self.0.q,
        ))
    }

    pub fn kronecker(&self, other: &FormulaExpr) -> FormulaExpr {
        FormulaExpr::new(
            Node::Kronecker(self.clone(), other.clone()),
            self.0.p + other.0.p,
            self.0.q + other.0.q,
        )
    }

    pub fn transpose(&self) -> FormulaExpr {
        FormulaExpr::new(Node::Transpose(self.clone()), self.0.q, self.0.p)
    }

    pub fn vectorize(&self) -> FormulaExpr {
        FormulaExpr::new(Node::Vectorize(self.clone()), self.0.p + self.0.q, 0)
    }

    pub fn unvectorize(&self, q: usize) -> Result<FormulaExpr> {
        if self.0.q != 0 || q > self.0.p {
            return Err(Error::Invalid(format!(
                "cannot split arity {:?} into {q} column coordinates",
                self.arity()
            )));
        }
        Ok(FormulaExpr::new(Node::Unvectorize(self.clone(), q), self.0.p - q, q))
    }

    pub fn divide(&self, c: i64) -> FormulaExpr {
        if c == 1 {
            return self.clone();
        }
        FormulaExpr::new(Node::Divide(self.clone(), c), self.0.p, self.0.q)
    }

    /// Distinct nodes in the DAG.
    pub fn node_count(&self) -> usize {
        let mut seen = BTreeSet::new();
        let mut stack = vec![self.clone()];
        while let Some(e) = stack.pop() {
            if !seen.insert(Arc::as_ptr(&e.0) as usize) {
                continue;
            }
            match &e.0.node {
                Node::Adjacency | Node::Indicator(_) => {}
                Node::Product(a, b) | Node::Hadamard(a, b) | Node::Kronecker(a, b) => {
                    stack.push(a.clone());
                    stack.push(b.clone());
                }
                Node::Transpose(a) | Node::Vectorize(a) | Node::Unvectorize(a, _) | Node::Divide(a, _) => {
                    stack.push(a.clone())
                }
            }
        }
        seen.len()
    }

    fn as_indicator(&self) -> Option<&Indicator> {
        match &self.0.node {
            Node::Indicator(ind) => Some(ind),
            _ => None,
        }
    }
}

/// Evaluates `expr` on the adjacency matrix of `g`.
pub fn eval_formula(expr: &FormulaExpr, g: &Graph) -> Result<TupleMatrix> {
    let mut memo = HashMap::new();
    eval_node(expr, g, &mut memo)
}

fn eval_node(e: &FormulaExpr, g: &Graph, memo: &mut HashMap<usize, TupleMatrix>) -> Result<TupleMatrix> {
    let key = Arc::as_ptr(&e.0) as usize;
    if let Some(m) = memo.get(&key) {
        return Ok(m.clone());
    }
    let n = g.n();
    let out = match &e.0.node {
        Node::Adjacency => {
            let mut a = TupleMatrix::zeros(n, 1, 1)?;
            for &(u, v) in g.edges() {
                a.set(&[u as usize], &[v as usize], 1);
                a.set(&[v as usize], &[u as usize], 1);
            }
            a
        }
        Node::Indicator(ind) => ind.materialize(n)?,
        Node::Product(a, b) => match (a.as_indicator(), b.as_indicator()) {
            (Some(ind), _) => ind.left_product(&eval_node(b, g, memo)?)?,
            (None, Some(ind)) => ind
                .transpose()
                .left_product(&eval_node(a, g, memo)?.transpose())?
                .transpose(),
            (None, None) => eval_node(a, g, memo)?.matmul(&eval_node(b, g, memo)?)?,
        },
        Node::Hadamard(a, b) => match (a.as_indicator(), b.as_indicator()) {
            (Some(ind), _) => ind.mask(&eval_node(b, g, memo)?),
            (None, Some(ind)) => ind.mask(&eval_node(a, g, memo)?),
            (None, None) => eval_node(a, g, memo)?.hadamard(&eval_node(b, g, memo)?)?,
        },
        Node::Kronecker(a, b) => eval_node(a, g, memo)?.kronecker(&eval_node(b, g, memo)?)?,
        Node::Transpose(a) => eval_node(a, g, memo)?.transpose(),
        Node::Vectorize(a) => {
            let m = eval_node(a, g, memo)?;
            m.reshape(m.p + m.q, 0)?
        }
        Node::Unvectorize(a, q) => {
            let m = eval_node(a, g, memo)?;
            m.reshape(m.p - q, *q)?
        }
        Node::Divide(a, c) => eval_node(a, g, memo)?.div_exact(*c)?,
    };
    memo.insert(key, out.clone());
    Ok(out)
}

/// Connection matrix of `f` in `g` by enumerating embeddings.
pub fn kappa_direct(f: &RootedGraph, g: &Graph) -> Result<TupleMatrix> {
    let mut out = TupleMatrix::zeros(g.n(), f.r.len(), f.s.len())?;
    let config = OracleConfig {
        max_vertices: g.n().max(1),
        max_pattern_order: f.order().max(1),
    };
    let p = f.r.len();
    for (key, c) in location_counts(f, g, &config)? {
        out.set(&key[..p], &key[p..], c as i64);
    }
    Ok(out)
}

/// A formula together with the rooted pattern whose connection matrix it
/// computes.
#[derive(Debug, Clone)]
pub struct Built {
    pub pattern: RootedGraph,
    pub expr: FormulaExpr,
}

impl Built {
    fn with(&self, r: Vec<usize>, s: Vec<usize>, expr: FormulaExpr) -> Built {
        Built {
            pattern: RootedGraph {
                graph: self.pattern.graph.clone(),
                r,
                s,
            },
            expr,
        }
    }

    /// Renames pattern vertex `v` to `map[v]`; the formula is unchanged.
    fn relabel(&self, map: &[usize]) -> Built {
        let g = &self.pattern.graph;
        let edges = g.edges().iter().map(|&(u, v)| (map[u as usize], map[v as usize]));
        let graph = Graph::from_edges(g.n(), edges).expect("relabelling keeps the graph simple");
        let r = self.pattern.r.iter().map(|&v| map[v]).collect();
        let s = self.pattern.s.iter().map(|&v| map[v]).collect();
        Built {
            pattern: RootedGraph { graph, r, s },
            expr: self.expr.clone(),
        }
    }
}

fn covers_all(p: &RootedGraph) -> bool {
    let roots: BTreeSet<usize> = p.r.iter().chain(&p.s).copied().collect();
    roots.len() == p.order()
}

fn sub_tuple(r: &[usize], k: &[usize]) -> Result<Vec<usize>> {
    let distinct: BTreeSet<usize> = k.iter().copied().collect();
    if distinct.len() != k.len() || k.iter().any(|&x| x >= r.len()) {
        return Err(Error::Invalid(format!(
            "index tuple {k:?} is not a sub-tuple of length {}",
            r.len()
        )));
    }
    Ok(k.iter().map(|&x| r[x]).collect())
}

fn automorphisms(p: &RootedGraph, fixed: impl IntoIterator<Item = usize>) -> u64 {
    let fixed: BTreeSet<usize> = fixed.into_iter().collect();
    automorphisms_fixing(&p.graph, &fixed.into_iter().collect::<Vec<_>>())
}

/// `[F, s, r]`: the transpose.
pub fn lemma1_transpose(b: &Built) -> Built {
    b.with(b.pattern.s.clone(), b.pattern.r.clone(), b.expr.transpose())
}

/// `[F, rs, ()]`: the vectorization.
pub fn lemma1_vectorize(b: &Built) -> Built {
    let rs = b.pattern.r.iter().chain(&b.pattern.s).copied().collect();
    b.with(rs, Vec::new(), b.expr.vectorize())
}

/// `[F, r_|k, s]`: left multiplication by the selection `1{i = w_|k}`.
///
/// The selection sums over every placement of the dropped roots, so each
/// copy is seen once per image of `r` under the automorphisms fixing the
/// kept roots; that orbit size is divided out.
pub fn lemma1_project(b: &Built, k: &[usize]) -> Result<Built> {
    let p = &b.pattern;
    let t = sub_tuple(&p.r, k)?;
    let sel = Indicator {
        p: k.len(),
        q: p.r.len(),
        eq: k.iter().enumerate().map(|(a, &x)| (a, k.len() + x)).collect(),
        ne: Vec::new(),
    };
    let kept = automorphisms(p, t.iter().chain(&p.s).copied());
    let all = automorphisms(p, p.r.iter().chain(&p.s).copied());
    let expr = FormulaExpr::indicator(sel)
        .product(&b.expr)?
        .divide((kept / all) as i64);
    Ok(b.with(t, p.s.clone(), expr))
}

/// `[F, r, r_|k]` from `[F, r, ()]`: `1{j = i_|k} · (1^T x kappa)`.
pub fn lemma1_inflate(b: &Built, k: &[usize]) -> Result<Built> {
    let p = &b.pattern;
    if !p.s.is_empty() {
        return Err(Error::Invalid("inflation needs an empty column tuple".into()));
    }
    let s = sub_tuple(&p.r, k)?;
    let sel = Indicator {
        p: p.r.len(),
        q: k.len(),
        eq: k.iter().enumerate().map(|(a, &x)| (x, p.r.len() + a)).collect(),
        ne: Vec::new(),
    };
    let spread = FormulaExpr::indicator(Indicator::ones(0, k.len())).kronecker(&b.expr);
    let expr = FormulaExpr::indicator(sel).hadamard(&spread)?;
    Ok(b.with(p.r.clone(), s, expr))
}

/// `[F, r2, s2]` for root tuples drawn from `r ∪ s`.
pub fn prop1_restrict(b: &Built, r2: &[usize], s2: &[usize]) -> Result<Built> {
    let flat = lemma1_vectorize(b);
    let rs = flat.pattern.r.clone();
    let position = |v: &usize| {
        rs.iter()
            .position(|x| x == v)
            .ok_or_else(|| Error::Invalid(format!("vertex {v} is not a root")))
    };
    let pos_r: Vec<usize> = r2.iter().map(position).collect::<Result<_>>()?;
    let pos_s: Vec<usize> = s2.iter().map(position).collect::<Result<_>>()?;
    if s2.is_empty() {
        return lemma1_project(&flat, &pos_r);
    }
    if r2.iter().all(|v| !s2.contains(v)) {
        // project onto r2 s2, then split the vector back into a matrix
        let joined: Vec<usize> = pos_r.iter().chain(&pos_s).copied().collect();
        let proj = lemma1_project(&flat, &joined)?;
        let expr = proj.expr.unvectorize(s2.len())?;
        return Ok(b.with(r2.to_vec(), s2.to_vec(), expr));
    }
    let inflated = lemma1_inflate(&flat, &pos_s)?;
    lemma1_project(&inflated, &pos_r)
}

/// `[F ∪ F', r, s]` for patterns on the same vertices with the same roots
/// covering every vertex: the entrywise product.
pub fn prop1_union(a: &Built, b: &Built) -> Result<Built> {
    let (pa, pb) = (&a.pattern, &b.pattern);
    if pa.order() != pb.order() || pa.r != pb.r || pa.s != pb.s || !covers_all(pa) {
        return Err(Error::Invalid(
            "union needs equal root tuples covering the vertex set".into(),
        ));
    }
    let edges = pa
        .graph
        .edges()
        .iter()
        .chain(pb.graph.edges())
        .map(|&(u, v)| (u as usize, v as usize));
    let graph = Graph::from_edges(pa.order(), edges)?;
    Ok(Built {
        pattern: RootedGraph {
            graph,
            r: pa.r.clone(),
            s: pa.s.clone(),
        },
        expr: a.expr.hadamard(&b.expr)?,
    })
}

/// `[F ∪ F'', r, t]` from `[F, r, s]` and `[F'', s, t]`: the operator
/// product divided by `c`, the number of ways a copy of the union splits
/// into the two operands.
///
/// The column roots of `a` are identified with the row roots of `b`; the
/// other vertices of `b` are appended after those of `a`. The product alone
/// also pairs copies that collide outside the shared roots, so it is masked
/// to tuples that are distinct where the union's vertices are.
pub fn prop1_chain(a: &Built, b: &Built) -> Result<Built> {
    let (pa, pb) = (&a.pattern, &b.pattern);
    if pa.s.len() != pb.r.len() || !covers_all(pa) || !covers_all(pb) {
        return Err(Error::Invalid(
            "chain needs matching middle tuples and roots covering both vertex sets".into(),
        ));
    }
    let mut map = vec![usize::MAX; pb.order()];
    for (&x, &y) in pb.r.iter().zip(&pa.s) {
        map[x] = y;
    }
    let mut next = pa.order();
    for slot in map.iter_mut().filter(|m| **m == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let edges: Vec<(usize, usize)> = pa
        .graph
        .edges()
        .iter()
        .map(|&(u, v)| (u as usize, v as usize))
        .chain(
            pb.graph
                .edges()
                .iter()
                .map(|&(u, v)| (map[u as usize], map[v as usize])),
        )
        .collect();
    let t: Vec<usize> = pb.s.iter().map(|&v| map[v]).collect();
    let union = RootedGraph::from_edges(next, &edges, &pa.r, &t)?;
    let c = chain_multiplicity(pa, pb, &union, &map);
    let (p, q) = (pa.r.len(), t.len());
    let mut distinct = Indicator::ones(p, q);
    for (x, &u) in pa.r.iter().enumerate() {
        for (y, &v) in t.iter().enumerate() {
            let pair = (x, p + y);
            if u == v {
                distinct.eq.push(pair);
            } else {
                distinct.ne.push(pair);
            }
        }
    }
    let expr = a
        .expr
        .product(&b.expr)?
        .hadamard(&FormulaExpr::indicator(distinct))?
        .divide(c as i64);
    Ok(Built { pattern: union, expr })
}

type Piece = (Vec<usize>, Vec<(usize, usize)>);

fn image(p: &RootedGraph, phi: &[usize]) -> Piece {
    let mut verts: Vec<usize> = phi.to_vec();
    verts.sort_unstable();
    let mut edges: Vec<(usize, usize)> = p
        .graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (x, y) = (phi[u as usize], phi[v as usize]);
            (x.min(y), x.max(y))
        })
        .collect();
    edges.sort_unstable();
    (verts, edges)
}

/// Decompositions of `union` into a copy of `pa` at `(r, w)` and a copy of
/// `pb` at `(w, t)` whose union is all of it, summed over `w`.
fn chain_multiplicity(pa: &RootedGraph, pb: &RootedGraph, union: &RootedGraph, map: &[usize]) -> u64 {
    let h = &union.graph;
    let all_edges: BTreeSet<(usize, usize)> = h.edges().iter().map(|&(u, v)| (u as usize, v as usize)).collect();
    let pins_a: Vec<(usize, usize)> = pa.r.iter().map(|&v| (v, v)).collect();
    let mut splits = BTreeSet::new();
    for_each_embedding(&pa.graph, h, &pins_a, |phi_a| {
        let w: Vec<usize> = pa.s.iter().map(|&v| phi_a[v]).collect();
        let piece_a = image(pa, phi_a);
        let mut pins_b: Vec<(usize, usize)> = pb.r.iter().zip(&w).map(|(&x, &y)| (x, y)).collect();
        pins_b.extend(pb.s.iter().map(|&v| (v, map[v])));
        for_each_embedding(&pb.graph, h, &pins_b, |phi_b| {
            let piece_b = image(pb, phi_b);
            let verts: BTreeSet<usize> = piece_a.0.iter().chain(&piece_b.0).copied().collect();
            let edges: BTreeSet<(usize, usize)> = piece_a.1.iter().chain(&piece_b.1).copied().collect();
            if verts.len() == h.n() && edges == all_edges {
                splits.insert((w.clone(), piece_a.clone(), piece_b));
            }
        });
    });
    splits.len() as u64
}

fn pair_pattern(edge: bool) -> Built {
    let graph = Graph::from_edges(2, edge.then_some((0, 1))).expect("order-2 pattern");
    let expr = if edge {
        FormulaExpr::adjacency()
    } else {
        FormulaExpr::indicator(Indicator {
            p: 1,
            q: 1,
            eq: Vec::new(),
            ne: vec![(0, 1)],
        })
    };
    Built {
        pattern: RootedGraph {
            graph,
            r: vec![0],
            s: vec![1],
        },
        expr,
    }
}

/// `[F, tau, ()]` with `tau` an ordering of every vertex of `g`.
///
/// Removes a minimum-degree vertex `t`, builds the rest recursively, and
/// reattaches `t` one vertex `s` at a time: the rest rooted at all of its
/// vertices and at `s` is chained with the pair `{s, t}` (an edge or not),
/// and the chains over all `s` are combined by union.
fn build_full(g: &Graph) -> Result<Built> {
    let k = g.n();
    match k {
        0 => return Err(Error::Invalid("patterns need at least one vertex".into())),
        1 => {
            return Ok(Built {
                pattern: RootedGraph {
                    graph: g.clone(),
                    r: vec![0],
                    s: Vec::new(),
                },
                expr: FormulaExpr::indicator(Indicator::ones(1, 0)),
            })
        }
        2 => return Ok(lemma1_vectorize(&pair_pattern(g.m() == 1))),
        _ => {}
    }
    let t = (0..k).min_by_key(|&v| (g.degree(v), v)).expect("nonempty pattern");
    let rest: Vec<usize> = (0..k).filter(|&v| v != t).collect();
    let pos = |v: usize| rest.iter().position(|&x| x == v);
    let sub_edges = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| Some((pos(u as usize)?, pos(v as usize)?)));
    let sub = build_full(&Graph::from_edges(k - 1, sub_edges)?)?;
    let mut joined: Option<Built> = None;
    for (a, &s) in rest.iter().enumerate() {
        let at = sub.pattern.r.iter().position(|&x| x == a).expect("full tuple");
        let left = lemma1_inflate(&sub, &[at])?;
        let chained = prop1_chain(&left, &pair_pattern(g.has_edge(s, t)))?;
        joined = Some(match joined {
            None => chained,
            Some(prev) => prop1_union(&prev, &chained)?,
        });
    }
    let flat = lemma1_vectorize(&joined.expect("at least two other vertices"));
    // back to the labels of g: sub vertex a is rest[a], the appended vertex is t
    let mut map = rest.clone();
    map.push(t);
    let built = flat.relabel(&map);
    debug_assert_eq!(built.pattern.graph.edges(), g.edges());
    Ok(built)
}

/// A formula computing the connection matrix of `f`.
pub fn build_formula(f: &RootedGraph) -> Result<FormulaExpr> {
    Ok(build(f)?.expr)
}

/// [`build_formula`], keeping the pattern alongside.
pub fn build(f: &RootedGraph) -> Result<Built> {
    if f.order() > MAX_ORDER {
        return Err(Error::Guard(format!("pattern order {} exceeds {MAX_ORDER}", f.order())));
    }
    let full = build_full(&f.graph)?;
    prop1_restrict(&full, &f.r, &f.s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, erdos_renyi};
    use crate::matrix::EdgeMatrix;
    use crate::pattern::rooted_classes;

    fn leaf(edges: &[(usize, usize)], order: usize, r: &[usize], s: &[usize]) -> Built {
        let pattern = RootedGraph::from_edges(order, edges, r, s).unwrap();
        let expr = build_formula(&pattern).unwrap();
        Built { pattern, expr }
    }

    #[test]
    fn adjacency_is_the_edge_pattern() {
        let g = erdos_renyi(6, 0.5, 1);
        let p = RootedGraph::from_edges(2, &[(0, 1)], &[0], &[1]).unwrap();
        let a = eval_formula(&FormulaExpr::adjacency(), &g).unwrap();
        assert_eq!(kappa_direct(&p, &g).unwrap(), a);
        assert_eq!(eval_formula(&build_formula(&p).unwrap(), &g).unwrap(), a);
    }

    #[test]
    fn two_path_pattern_is_nonbacktracking() {
        let g = erdos_renyi(7, 0.5, 2);
        let p = RootedGraph::from_edges(3, &[(0, 1), (1, 2)], &[0, 1], &[1, 2]).unwrap();
        let k = kappa_direct(&p, &g).unwrap();
        let idx = g.directed_index();
        let b = EdgeMatrix::nonbacktracking(&g, &idx);
        for e in 0..idx.len() {
            for f in 0..idx.len() {
                let (a, bb) = idx.endpoints(e);
                let (c, d) = idx.endpoints(f);
                assert_eq!(k.get(&[a, bb], &[c, d]), b.get(e, f));
            }
        }
    }

    #[test]
    fn rooted_triangle_on_k4() {
        let p = RootedGraph::vertex_rooted(3, &[(0, 1), (1, 2), (0, 2)], 0).unwrap();
        let k = kappa_direct(&p, &complete(4)).unwrap();
        assert!(k.data().iter().all(|&x| x == 3));
        let unrooted = RootedGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)], &[], &[]).unwrap();
        let total = eval_formula(&build_formula(&unrooted).unwrap(), &complete(4)).unwrap();
        assert_eq!(total.data(), [4]);
    }

    #[test]
    fn chain_of_edges_is_the_two_path() {
        let e1 = leaf(&[(0, 1)], 2, &[0], &[1]);
        let e2 = leaf(&[(0, 1)], 2, &[0], &[1]);
        let chained = prop1_chain(&e1, &e2).unwrap();
        assert_eq!(chained.pattern.order(), 3);
        for seed in 0..3 {
            let g = erdos_renyi(6, 0.5, seed);
            assert_eq!(
                eval_formula(&chained.expr, &g).unwrap(),
                kappa_direct(&chained.pattern, &g).unwrap()
            );
        }
    }

    #[test]
    fn chain_constant_counts_splits() {
        // two triangles glued along the shared root pair split in two ways
        // once the middle vertex may be swapped
        let left = leaf(&[(0, 1), (0, 2), (1, 2)], 3, &[0], &[1, 2]);
        let right = leaf(&[(0, 1), (0, 2), (1, 2)], 3, &[0, 1], &[2]);
        let chained = prop1_chain(&left, &right).unwrap();
        for seed in 0..3 {
            let g = erdos_renyi(7, 0.7, seed);
            assert_eq!(
                eval_formula(&chained.expr, &g).unwrap(),
                kappa_direct(&chained.pattern, &g).unwrap()
            );
        }
    }

    #[test]
    fn square_from_two_paths() {
        // [P4, 01, 32] and its mirror [P4', 01, 32] unite into [C4, 01, 32]
        let p = leaf(&[(0, 1), (1, 2), (2, 3)], 4, &[0, 1], &[3, 2]);
        let q = leaf(&[(1, 0), (0, 3), (3, 2)], 4, &[0, 1], &[3, 2]);
        let c4 = prop1_union(&p, &q).unwrap();
        for seed in 0..3 {
            let g = erdos_renyi(6, 0.6, seed);
            assert_eq!(
                eval_formula(&c4.expr, &g).unwrap(),
                kappa_direct(&c4.pattern, &g).unwrap()
            );
        }
    }

    #[test]
    fn lemma1_identities() {
        let b = leaf(&[(0, 1), (1, 2)], 3, &[0, 2], &[1]);
        let g = erdos_renyi(6, 0.5, 3);
        let m = eval_formula(&b.expr, &g).unwrap();
        let tt = lemma1_transpose(&lemma1_transpose(&b));
        assert_eq!(eval_formula(&tt.expr, &g).unwrap(), m);
        let v = lemma1_vectorize(&b);
        assert_eq!(
            eval_formula(&v.expr, &g).unwrap(),
            kappa_direct(&v.pattern, &g).unwrap()
        );
        let id = lemma1_project(&b, &[0, 1]).unwrap();
        assert_eq!(eval_formula(&id.expr, &g).unwrap(), m);
        let proj = lemma1_project(&b, &[1]).unwrap();
        assert_eq!(
            eval_formula(&proj.expr, &g).unwrap(),
            kappa_direct(&proj.pattern, &g).unwrap()
        );
        let flat = leaf(&[(0, 1), (1, 2)], 3, &[1, 0, 2], &[]);
        let infl = lemma1_inflate(&flat, &[2, 0]).unwrap();
        assert_eq!(
            eval_formula(&infl.expr, &g).unwrap(),
            kappa_direct(&infl.pattern, &g).unwrap()
        );
    }

    #[test]
    fn vectorized_edge_on_k3() {
        let p = RootedGraph::from_edges(2, &[(0, 1)], &[0, 1], &[]).unwrap();
        let v = eval_formula(&build_formula(&p).unwrap(), &complete(3)).unwrap();
        assert_eq!(v.arity(), (2, 0));
        assert_eq!(v.data().iter().filter(|&&x| x == 1).count(), 6);
        assert_eq!(v.data().len(), 9);
    }

    #[test]
    fn all_small_classes() {
        let graphs: Vec<Graph> = (0..4).map(|s| erdos_renyi(5, 0.5, s)).collect();
        for k in 1..=3 {
            for (rl, sl) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (2, 1), (1, 2)] {
                if rl > k || sl > k {
                    continue;
                }
                for p in rooted_classes(k, rl, sl, false) {
                    let f = build_formula(&p).unwrap();
                    for g in &graphs {
                        assert_eq!(eval_formula(&f, g).unwrap(), kappa_direct(&p, g).unwrap(), "{p:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn guard_refuses_large_tuples() {
        let g = erdos_renyi(40, 0.1, 0);
        let p = RootedGraph::from_edges(4, &[(0, 1)], &[0, 1], &[2, 3]).unwrap();
        assert!(matches!(kappa_direct(&p, &g), Err(Error::Guard(_))));
        assert!(matches!(
            eval_formula(&build_formula(&p).unwrap(), &g),
            Err(Error::Guard(_))
        ));
    }

    #[test]
    fn empty_host_gives_zero() {
        let g = Graph::from_edges(4, std::iter::empty()).unwrap();
        let p = RootedGraph::from_edges(3, &[(0, 1), (1, 2)], &[0], &[2]).unwrap();
        assert!(eval_formula(&build_formula(&p).unwrap(), &g).unwrap().is_zero());
    }
}
