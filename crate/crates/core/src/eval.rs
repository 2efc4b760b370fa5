//! Exact evaluation of [`Expr`] trees over one graph's non-backtracking matrix.
//!
//! Matrix values are kept as a sparse part plus a list of rank-one terms
//! `x yᵀ`, which lets `(1 - M)` complements and outer products such as
//! `diag(B^3) diag(B^3)ᵀ` stay implicit: the all-ones matrix is never
//! materialized. Operator products whose result is only needed on the
//! support of a sparse mask, or only through its traces and sums, are not
//! stored either (see [`EdgeMatrix::masked_product`]).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::expr::{BinOp, Expr, Func};
use crate::graph::{DirectedEdgeIndex, Graph};
use crate::matrix::{gamma, EdgeMatrix, EdgeVector, VertexVector};

/// Dense fallback is refused above this many directed edges.
const DENSE_LIMIT: usize = 4096;

/// A matrix `sparse + sum_k x_k y_kᵀ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatVal {
    sparse: EdgeMatrix,
    outer: Vec<(EdgeVector, EdgeVector)>,
}

impl MatVal {
    pub fn sparse(m: EdgeMatrix) -> MatVal {
        MatVal {
            sparse: m,
            outer: Vec::new(),
        }
    }

    fn constant(dim: usize, c: i64) -> MatVal {
        MatVal {
            sparse: EdgeMatrix::zeros(dim),
            outer: vec![(EdgeVector::constant(dim, c), EdgeVector::constant(dim, 1))],
        }
    }

    pub fn dim(&self) -> usize {
        self.sparse.dim()
    }

    pub fn is_sparse(&self) -> bool {
        self.outer.is_empty()
    }

    /// Sparse part; `None` while rank-one terms remain.
    pub fn as_sparse(&self) -> Option<&EdgeMatrix> {
        self.is_sparse().then_some(&self.sparse)
    }

    /// Materializes the rank-one terms on small graphs.
    pub fn densify(&self) -> Result<EdgeMatrix> {
        if self.outer.is_empty() {
            return Ok(self.sparse.clone());
        }
        let dim = self.dim();
        if dim > DENSE_LIMIT {
            return Err(Error::Guard(format!("dense fallback on {dim} directed edges")));
        }
        let mut triplets = Vec::new();
        for (x, y) in &self.outer {
            for r in 0..dim {
                if x[r] == 0 {
                    continue;
                }
                for c in 0..dim {
                    let v = x[r].checked_mul(y[c]).ok_or_else(|| Error::Overflow {
                        context: "dense fallback".into(),
                    })?;
                    if v != 0 {
                        triplets.push((r, c, v));
                    }
                }
            }
        }
        triplets.extend(self.sparse.entries());
        EdgeMatrix::from_triplets(dim, triplets)
    }

    fn neg_outer(&self) -> Result<Vec<(EdgeVector, EdgeVector)>> {
        self.outer.iter().map(|(x, y)| Ok((x.scale(-1)?, y.clone()))).collect()
    }

    fn add(&self, other: &MatVal) -> Result<MatVal> {
        let mut outer = self.outer.clone();
        outer.extend(other.outer.iter().cloned());
        Ok(MatVal {
            sparse: self.sparse.add(&other.sparse)?,
            outer,
        })
    }

    fn sub(&self, other: &MatVal) -> Result<MatVal> {
        let mut outer = self.outer.clone();
        outer.extend(other.neg_outer()?);
        Ok(MatVal {
            sparse: self.sparse.sub(&other.sparse)?,
            outer,
        })
    }

    fn scale(&self, c: i64) -> Result<MatVal> {
        Ok(MatVal {
            sparse: self.sparse.scale(c)?,
            outer: self
                .outer
                .iter()
                .map(|(x, y)| Ok((x.scale(c)?, y.clone())))
                .collect::<Result<_>>()?,
        })
    }

    fn hadamard(&self, other: &MatVal) -> Result<MatVal> {
        let mut sparse = self.sparse.hadamard(&other.sparse)?;
        for (x, y) in &other.outer {
            sparse = sparse.add(&self.sparse.scale_rows_cols(x, y)?)?;
        }
        for (x, y) in &self.outer {
            sparse = sparse.add(&other.sparse.scale_rows_cols(x, y)?)?;
        }
        let mut outer = Vec::new();
        for (x1, y1) in &self.outer {
            for (x2, y2) in &other.outer {
                outer.push((x1.hadamard(x2)?, y1.hadamard(y2)?));
            }
        }
        Ok(MatVal { sparse, outer })
    }

    fn matmul(&self, other: &MatVal) -> Result<MatVal> {
        let sparse = self.sparse.matmul(&other.sparse)?;
        let mut outer = Vec::new();
        for (u, v) in &other.outer {
            outer.push((self.sparse.mul_vec(u)?, v.clone()));
        }
        for (x, y) in &self.outer {
            outer.push((x.clone(), other.sparse.vec_mul(y)?));
            for (u, v) in &other.outer {
                outer.push((x.scale(y.dot(u)?)?, v.clone()));
            }
        }
        Ok(MatVal { sparse, outer })
    }

    fn mul_vec(&self, v: &EdgeVector) -> Result<EdgeVector> {
        let mut out = self.sparse.mul_vec(v)?;
        for (x, y) in &self.outer {
            out = out.add(&x.scale(y.dot(v)?)?)?;
        }
        Ok(out)
    }

    fn vec_mul(&self, v: &EdgeVector) -> Result<EdgeVector> {
        let mut out = self.sparse.vec_mul(v)?;
        for (x, y) in &self.outer {
            out = out.add(&y.scale(x.dot(v)?)?)?;
        }
        Ok(out)
    }

    fn transpose(&self) -> MatVal {
        MatVal {
            sparse: self.sparse.transpose(),
            outer: self.outer.iter().map(|(x, y)| (y.clone(), x.clone())).collect(),
        }
    }

    fn over(&self) -> MatVal {
        MatVal {
            sparse: self.sparse.reverse_cols(),
            outer: self.outer.iter().map(|(x, y)| (x.clone(), y.reversed())).collect(),
        }
    }

    fn under(&self) -> MatVal {
        MatVal {
            sparse: self.sparse.reverse_rows(),
            outer: self.outer.iter().map(|(x, y)| (x.reversed(), y.clone())).collect(),
        }
    }

    fn row_sums(&self) -> Result<EdgeVector> {
        let mut out = self.sparse.row_sums()?;
        for (x, y) in &self.outer {
            out = out.add(&x.scale(y.sum()?)?)?;
        }
        Ok(out)
    }

    fn col_sums(&self) -> Result<EdgeVector> {
        let mut out = self.sparse.col_sums()?;
        for (x, y) in &self.outer {
            out = out.add(&y.scale(x.sum()?)?)?;
        }
        Ok(out)
    }

    fn total(&self) -> Result<i64> {
        let mut t = self.sparse.total()?;
        for (x, y) in &self.outer {
            t = t
                .checked_add(x.sum()?.checked_mul(y.sum()?).ok_or_else(ovf)?)
                .ok_or_else(ovf)?;
        }
        Ok(t)
    }

    fn diag(&self) -> Result<EdgeVector> {
        let mut out = self.sparse.diag();
        for (x, y) in &self.outer {
            out = out.add(&x.hadamard(y)?)?;
        }
        Ok(out)
    }
}

fn ovf() -> Error {
    Error::Overflow {
        context: "rank-one term".into(),
    }
}

/// Result of evaluating an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(i64),
    Edge(EdgeVector),
    Vertex(VertexVector),
    Matrix(MatVal),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Edge(_) => "edge vector",
            Value::Vertex(_) => "vertex vector",
            Value::Matrix(_) => "matrix",
        }
    }

    pub fn as_scalar(&self) -> Option<i64> {
        match self {
            Value::Scalar(x) => Some(*x),
            _ => None,
        }
    }

    pub fn as_edge(&self) -> Option<&EdgeVector> {
        match self {
            Value::Edge(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_vertex(&self) -> Option<&VertexVector> {
        match self {
            Value::Vertex(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_matrix(&self) -> Option<&MatVal> {
        match self {
            Value::Matrix(m) => Some(m),
            _ => None,
        }
    }
}

/// An operator product kept unevaluated until its consumer is known.
enum Form {
    Eager(Value),
    Product(EdgeMatrix, EdgeMatrix),
}

/// Named matrices defined on top of `B`.
pub const DERIVED: &[(&str, &str)] = &[
    ("Btri", "B^2 * B'"),
    ("Bcap", "B^2 - Btri"),
    ("Bsq", "B^2 * (B^2)'"),
    ("Bx", "Bsq * over(Bsq)"),
    ("Barr", "B^2 * over(B^2)"),
    ("Bp4", "B^3 * (1 - B') * (1 - over(B)) * (1 - under(B))"),
    ("Bjoin", "over(Btri) @ Barr"),
    ("Btr", "B * (B^2)'"),
    ("Bpn", "B^2 * (B^3)'"),
    ("Btrtr", "outer(diag(B^3), diag(B^3))"),
    ("Bsqtr", "outer(diag(B^3), diag(B^4))"),
    ("Bsql", "Bsq * under(B^2)"),
    ("Bsqr", "Bsq * over(B^2)"),
    ("Bsqtt", "over(Bsq) * B^3"),
    ("Bsqd", "outer(diag(over(B^4)), 1)"),
    ("Bpnt", "Bpn * under(B^2) * over(B^2)"),
];

/// Evaluation statistics, reported by the CLI.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvalStats {
    /// Largest number of stored entries in any materialized sparse matrix.
    pub peak_nnz: usize,
}

/// Evaluates expressions against one graph, caching powers of `B` and named
/// definitions.
pub struct Evaluator<'g> {
    graph: &'g Graph,
    index: DirectedEdgeIndex,
    powers: Vec<EdgeMatrix>,
    max_power: u32,
    definitions: HashMap<String, Expr>,
    cache: HashMap<String, Value>,
    in_progress: Vec<String>,
    stats: EvalStats,
}

impl<'g> Evaluator<'g> {
    pub fn new(graph: &'g Graph) -> Evaluator<'g> {
        let index = graph.directed_index();
        let b = EdgeMatrix::nonbacktracking(graph, &index);
        let mut ev = Evaluator {
            graph,
            index,
            stats: EvalStats { peak_nnz: b.nnz() },
            powers: vec![EdgeMatrix::identity(b.dim()), b],
            max_power: 3,
            definitions: HashMap::new(),
            cache: HashMap::new(),
            in_progress: Vec::new(),
        };
        for (name, text) in DERIVED {
            ev.define(name, Expr::parse(text).expect("derived matrix definitions parse"));
        }
        ev
    }

    /// Highest power of `B` that is stored; larger powers are evaluated
    /// through masked products and traces.
    pub fn with_max_power(mut self, k: u32) -> Self {
        self.max_power = k.max(2);
        self
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn index(&self) -> &DirectedEdgeIndex {
        &self.index
    }

    pub fn b(&self) -> &EdgeMatrix {
        &self.powers[1]
    }

    pub fn stats(&self) -> EvalStats {
        self.stats
    }

    /// Registers (or replaces) a named definition. Cached values that may
    /// depend on the old definition are dropped.
    pub fn define(&mut self, name: &str, expr: Expr) {
        self.definitions.insert(name.to_string(), expr);
        self.cache.clear();
    }

    pub fn is_defined(&self, name: &str) -> bool {
        name == "B" || self.definitions.contains_key(name)
    }

    /// Value of a named definition, evaluated on first use.
    pub fn value_of(&mut self, name: &str) -> Result<Value> {
        if let Some(v) = self.cache.get(name) {
            return Ok(v.clone());
        }
        if name == "B" {
            return Ok(Value::Matrix(MatVal::sparse(self.powers[1].clone())));
        }
        let expr = self.definitions.get(name).cloned().ok_or_else(|| Error::Formula {
            formula: name.to_string(),
            message: "undefined name".into(),
        })?;
        if self.in_progress.iter().any(|n| n == name) {
            return Err(Error::Formula {
                formula: name.to_string(),
                message: format!("cyclic definition via {}", self.in_progress.join(" -> ")),
            });
        }
        self.in_progress.push(name.to_string());
        let result = self.eval(&expr).map_err(|e| e.in_formula(name));
        self.in_progress.pop();
        let v = result?;
        self.cache.insert(name.to_string(), v.clone());
        Ok(v)
    }

    fn track(&mut self, m: &EdgeMatrix) {
        self.stats.peak_nnz = self.stats.peak_nnz.max(m.nnz());
    }

    /// `B^k`, materialized.
    pub fn power(&mut self, k: u32) -> Result<EdgeMatrix> {
        while self.powers.len() <= k as usize {
            let next = self.powers.last().unwrap().matmul(&self.powers[1])?;
            self.track(&next);
            self.powers.push(next);
        }
        Ok(self.powers[k as usize].clone())
    }

    pub fn eval(&mut self, e: &Expr) -> Result<Value> {
        let form = self.form(e)?;
        self.force(form)
    }

    fn force(&mut self, form: Form) -> Result<Value> {
        match form {
            Form::Eager(v) => Ok(v),
            Form::Product(p, q) => {
                let m = p.matmul(&q)?;
                self.track(&m);
                Ok(Value::Matrix(MatVal::sparse(m)))
            }
        }
    }

    fn matrix(&mut self, e: &Expr) -> Result<MatVal> {
        match self.eval(e)? {
            Value::Matrix(m) => Ok(m),
            other => Err(type_error(e, "matrix", &other)),
        }
    }

    fn sparse_matrix(&mut self, e: &Expr) -> Result<EdgeMatrix> {
        self.matrix(e)?.densify()
    }

    fn form(&mut self, e: &Expr) -> Result<Form> {
        match e {
            Expr::Pow(base, k) if matches!(**base, Expr::Name(ref n) if n == "B") => {
                if *k <= self.max_power || *k > 2 * self.max_power {
                    return Ok(Form::Eager(Value::Matrix(MatVal::sparse(self.power(*k)?))));
                }
                let left = *k - self.max_power;
                Ok(Form::Product(self.power(self.max_power)?, self.power(left)?))
            }
            Expr::Bin(BinOp::MatMul, a, b) => {
                let lhs = self.eval(a)?;
                let rhs = self.eval(b)?;
                match (lhs, rhs) {
                    (Value::Matrix(p), Value::Matrix(q)) if p.is_sparse() && q.is_sparse() => {
                        Ok(Form::Product(p.sparse, q.sparse))
                    }
                    (Value::Matrix(p), Value::Matrix(q)) => Ok(Form::Eager(Value::Matrix(p.matmul(&q)?))),
                    (Value::Matrix(p), Value::Edge(v)) => Ok(Form::Eager(Value::Edge(p.mul_vec(&v)?))),
                    (Value::Edge(v), Value::Matrix(p)) => Ok(Form::Eager(Value::Edge(p.vec_mul(&v)?))),
                    (Value::Scalar(c), other) | (other, Value::Scalar(c)) => Ok(Form::Eager(scale(other, c)?)),
                    (l, r) => Err(Error::Formula {
                        formula: e.to_string(),
                        message: format!("cannot multiply {} by {}", l.kind(), r.kind()),
                    }),
                }
            }
            Expr::Transpose(x) => match self.form(x)? {
                Form::Product(p, q) => Ok(Form::Product(q.transpose(), p.transpose())),
                Form::Eager(Value::Matrix(m)) => Ok(Form::Eager(Value::Matrix(m.transpose()))),
                Form::Eager(other) => Err(type_error(x, "matrix", &other)),
            },
            Expr::Bin(BinOp::Hadamard, a, b) => self.hadamard(e, a, b).map(Form::Eager),
            Expr::Call(func, args) => self.call(e, *func, args).map(Form::Eager),
            _ => self.eval_plain(e).map(Form::Eager),
        }
    }

    fn hadamard(&mut self, e: &Expr, a: &Expr, b: &Expr) -> Result<Value> {
        let fa = self.form(a)?;
        let fb = self.form(b)?;
        match (fa, fb) {
            (Form::Product(p, q), Form::Eager(Value::Matrix(m)))
            | (Form::Eager(Value::Matrix(m)), Form::Product(p, q))
                if m.is_sparse() =>
            {
                let masked = m.sparse.masked_product(&p, &q)?;
                Ok(Value::Matrix(MatVal::sparse(masked.hadamard(&m.sparse)?)))
            }
            (fa, fb) => {
                let va = self.force(fa)?;
                let vb = self.force(fb)?;
                entrywise(e, va, vb, BinOp::Hadamard)
            }
        }
    }

    fn call(&mut self, e: &Expr, func: Func, args: &[Expr]) -> Result<Value> {
        match func {
            Func::RowSum | Func::ColSum | Func::Sum | Func::Diag => {
                let form = self.form(&args[0])?;
                if let Form::Product(p, q) = form {
                    return Ok(match func {
                        Func::RowSum => Value::Edge(p.mul_vec(&q.row_sums()?)?),
                        Func::ColSum => Value::Edge(q.vec_mul(&p.col_sums()?)?),
                        Func::Sum => Value::Scalar(p.col_sums()?.dot(&q.row_sums()?)?),
                        _ => Value::Edge(p.hadamard(&q.transpose())?.row_sums()?),
                    });
                }
                let v = self.force(form)?;
                match (func, v) {
                    (Func::RowSum, Value::Matrix(m)) => Ok(Value::Edge(m.row_sums()?)),
                    (Func::ColSum, Value::Matrix(m)) => Ok(Value::Edge(m.col_sums()?)),
                    (Func::Diag, Value::Matrix(m)) => Ok(Value::Edge(m.diag()?)),
                    (Func::Sum, Value::Matrix(m)) => Ok(Value::Scalar(m.total()?)),
                    (Func::Sum, Value::Edge(x)) => Ok(Value::Scalar(x.sum()?)),
                    (Func::Sum, Value::Vertex(x)) => Ok(Value::Scalar(x.sum()?)),
                    (Func::Sum, Value::Scalar(x)) => Ok(Value::Scalar(x)),
                    (_, other) => Err(type_error(&args[0], "matrix", &other)),
                }
            }
            Func::Under | Func::Over => match (func, self.eval(&args[0])?) {
                (Func::Under, Value::Matrix(m)) => Ok(Value::Matrix(m.under())),
                (Func::Over, Value::Matrix(m)) => Ok(Value::Matrix(m.over())),
                (Func::Under, Value::Edge(x)) => Ok(Value::Edge(x.reversed())),
                (_, other) => Err(type_error(&args[0], "matrix", &other)),
            },
            Func::Binom => {
                let k = match self.eval(&args[1])? {
                    Value::Scalar(k) if (1..=16).contains(&k) => k as u32,
                    other => return Err(type_error(&args[1], "small positive integer", &other)),
                };
                match self.eval(&args[0])? {
                    Value::Scalar(x) => Ok(Value::Scalar(crate::matrix::binom(x, k)?)),
                    Value::Edge(x) => Ok(Value::Edge(x.binom(k)?)),
                    Value::Vertex(x) => Ok(Value::Vertex(x.binom(k)?)),
                    Value::Matrix(m) => Ok(Value::Matrix(MatVal::sparse(m.densify()?.binom_entrywise(k)?))),
                }
            }
            Func::Gamma => match self.eval(&args[0])? {
                Value::Edge(x) => Ok(Value::Vertex(gamma(&x, &self.index)?)),
                other => Err(type_error(&args[0], "edge vector", &other)),
            },
            Func::Outer => {
                let dim = self.index.len();
                let x = self.edge_vector(&args[0], dim)?;
                let y = self.edge_vector(&args[1], dim)?;
                let _ = e;
                Ok(Value::Matrix(MatVal {
                    sparse: EdgeMatrix::zeros(dim),
                    outer: vec![(x, y)],
                }))
            }
        }
    }

    fn edge_vector(&mut self, e: &Expr, dim: usize) -> Result<EdgeVector> {
        match self.eval(e)? {
            Value::Edge(x) => Ok(x),
            Value::Scalar(c) => Ok(EdgeVector::constant(dim, c)),
            other => Err(type_error(e, "edge vector", &other)),
        }
    }

    fn eval_plain(&mut self, e: &Expr) -> Result<Value> {
        match e {
            Expr::Int(k) => Ok(Value::Scalar(*k)),
            Expr::Name(n) => self.value_of(n),
            Expr::Pow(base, k) => {
                let m = self.sparse_matrix(base)?;
                let mut acc = m.clone();
                for _ in 1..*k {
                    acc = acc.matmul(&m)?;
                    self.track(&acc);
                }
                Ok(Value::Matrix(MatVal::sparse(acc)))
            }
            Expr::Neg(x) => scale(self.eval(x)?, -1),
            Expr::Bin(BinOp::Div, a, b) => {
                let d = match self.eval(b)? {
                    Value::Scalar(d) => d,
                    other => return Err(type_error(b, "integer divisor", &other)),
                };
                let ctx = e.to_string();
                match self.eval(a)? {
                    Value::Scalar(x) => {
                        if d == 0 || x % d != 0 {
                            Err(Error::InexactDivision {
                                context: ctx,
                                divisor: d,
                            })
                        } else {
                            Ok(Value::Scalar(x / d))
                        }
                    }
                    Value::Edge(x) => Ok(Value::Edge(x.div_exact(d, &ctx)?)),
                    Value::Vertex(x) => Ok(Value::Vertex(x.div_exact(d, &ctx)?)),
                    Value::Matrix(m) => Ok(Value::Matrix(MatVal::sparse(m.densify()?.div_exact(d, &ctx)?))),
                }
            }
            Expr::Bin(op, a, b) => {
                let va = self.eval(a)?;
                let vb = self.eval(b)?;
                entrywise(e, va, vb, *op)
            }
            Expr::Transpose(_) | Expr::Call(..) => self.eval(e),
        }
    }
}

fn type_error(e: &Expr, want: &str, got: &Value) -> Error {
    Error::Formula {
        formula: e.to_string(),
        message: format!("expected {want}, found {}", got.kind()),
    }
}

fn scale(v: Value, c: i64) -> Result<Value> {
    Ok(match v {
        Value::Scalar(x) => Value::Scalar(x.checked_mul(c).ok_or_else(ovf)?),
        Value::Edge(x) => Value::Edge(x.scale(c)?),
        Value::Vertex(x) => Value::Vertex(x.scale(c)?),
        Value::Matrix(m) => Value::Matrix(m.scale(c)?),
    })
}

/// `+`, `-` and `*` between values of compatible shapes, broadcasting
/// scalars.
fn entrywise(e: &Expr, a: Value, b: Value, op: BinOp) -> Result<Value> {
    use Value::*;
    let sc = |x: i64, y: i64| -> Result<i64> {
        match op {
            BinOp::Add => x.checked_add(y),
            BinOp::Sub => x.checked_sub(y),
            _ => x.checked_mul(y),
        }
        .ok_or_else(ovf)
    };
    Ok(match (a, b) {
        (Scalar(x), Scalar(y)) => Scalar(sc(x, y)?),
        (Scalar(c), other) | (other, Scalar(c)) if op == BinOp::Hadamard => scale(other, c)?,
        (Edge(x), Scalar(c)) => Edge(match op {
            BinOp::Add => x.offset(c)?,
            _ => x.offset(-c)?,
        }),
        (Scalar(c), Edge(x)) => Edge(match op {
            BinOp::Add => x.offset(c)?,
            _ => x.scale(-1)?.offset(c)?,
        }),
        (Vertex(x), Scalar(c)) => Vertex(match op {
            BinOp::Add => x.offset(c)?,
            _ => x.offset(-c)?,
        }),
        (Scalar(c), Vertex(x)) => Vertex(match op {
            BinOp::Add => x.offset(c)?,
            _ => x.scale(-1)?.offset(c)?,
        }),
        (Edge(x), Edge(y)) => Edge(match op {
            BinOp::Add => x.add(&y)?,
            BinOp::Sub => x.sub(&y)?,
            _ => x.hadamard(&y)?,
        }),
        (Vertex(x), Vertex(y)) => Vertex(match op {
            BinOp::Add => x.add(&y)?,
            BinOp::Sub => x.sub(&y)?,
            _ => x.hadamard(&y)?,
        }),
        (Matrix(m), Scalar(c)) => {
            let j = MatVal::constant(m.dim(), c);
            Matrix(if op == BinOp::Add { m.add(&j)? } else { m.sub(&j)? })
        }
        (Scalar(c), Matrix(m)) => {
            let j = MatVal::constant(m.dim(), c);
            Matrix(if op == BinOp::Add { j.add(&m)? } else { j.sub(&m)? })
        }
        (Matrix(x), Matrix(y)) => Matrix(match op {
            BinOp::Add => x.add(&y)?,
            BinOp::Sub => x.sub(&y)?,
            _ => x.hadamard(&y)?,
        }),
        (l, r) => {
            return Err(Error::Formula {
                formula: e.to_string(),
                message: format!("incompatible operands: {} and {}", l.kind(), r.kind()),
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, erdos_renyi};

    fn eval(g: &Graph, text: &str) -> Value {
        Evaluator::new(g).eval(&Expr::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn triangle_rooted_counts_on_k3() {
        let k3 = complete(3);
        assert_eq!(eval(&k3, "rowsum(Btri)"), Value::Edge(EdgeVector::constant(6, 1)));
        assert!(eval(&k3, "Bcap").as_matrix().unwrap().as_sparse().unwrap().is_zero());
    }

    #[test]
    fn square_rooted_counts_on_c4() {
        let c4 = cycle(4);
        assert_eq!(eval(&c4, "rowsum(Bsq)"), Value::Edge(EdgeVector::constant(8, 1)));
    }

    #[test]
    fn b_squared_splits_into_triangles_and_paths() {
        for seed in 0..5 {
            let g = erdos_renyi(9, 0.5, seed);
            let lhs = eval(&g, "B^2");
            let rhs = eval(&g, "Btri + Bcap");
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn complement_never_expands_support() {
        let g = erdos_renyi(9, 0.6, 3);
        let mut ev = Evaluator::new(&g);
        let lazy = ev.eval(&Expr::parse("B^3 * (1 - B')").unwrap()).unwrap();
        let direct = ev.eval(&Expr::parse("B^3 - B^3 * B'").unwrap()).unwrap();
        assert_eq!(lazy, direct);
        assert!(lazy.as_matrix().unwrap().is_sparse());
        // applying the complement twice to a 0/1 matrix is idempotent
        let twice = ev.eval(&Expr::parse("B * (1 - B') * (1 - B')").unwrap()).unwrap();
        let once = ev.eval(&Expr::parse("B * (1 - B')").unwrap()).unwrap();
        assert_eq!(twice, once);
    }

    #[test]
    fn lazy_traces_match_materialized_ones() {
        let g = erdos_renyi(10, 0.5, 8);
        let mut lazy = Evaluator::new(&g).with_max_power(2);
        let mut full = Evaluator::new(&g).with_max_power(9);
        for text in [
            "sum(B^4 * (B^3)')",
            "diag(B^4)",
            "sum(B^3)",
            "rowsum(B^4)",
            "colsum(B^3)",
            "sum(Bsq * binom(B^4, 2))",
            "sum((B^3)' * B)",
        ] {
            let e = Expr::parse(text).unwrap();
            assert_eq!(lazy.eval(&e).unwrap(), full.eval(&e).unwrap(), "{text}");
        }
    }

    #[test]
    fn outer_products_stay_implicit() {
        let g = erdos_renyi(8, 0.6, 4);
        let mut ev = Evaluator::new(&g);
        let a = ev.eval(&Expr::parse("sum(B * Btrtr)").unwrap()).unwrap();
        let t = ev.eval(&Expr::parse("diag(B^3)").unwrap()).unwrap();
        let t = t.as_edge().unwrap();
        let direct = ev.b().mul_vec(t).unwrap().dot(t).unwrap();
        assert_eq!(a, Value::Scalar(direct));
    }

    #[test]
    fn cyclic_definitions_are_errors() {
        let g = complete(4);
        let mut ev = Evaluator::new(&g);
        ev.define("X45", Expr::parse("under(X45)").unwrap());
        let err = ev.value_of("X45").unwrap_err();
        assert!(matches!(err, Error::Formula { .. }), "{err:?}");
    }

    #[test]
    fn inexact_division_is_reported() {
        let g = complete(3);
        let mut ev = Evaluator::new(&g);
        let err = ev.eval(&Expr::parse("sum(diag(B^3)) / 4").unwrap()).unwrap_err();
        assert!(matches!(err, Error::InexactDivision { divisor: 4, .. }));
    }
}
