//! Exact-integer sparse matrices and vectors over the directed-edge index.
//!
//! Storage is row-major compressed with sorted column indices and no
//! explicit zeros. All arithmetic is checked `i64`; an overflow surfaces as
//! [`Error::Overflow`] instead of wrapping.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::graph::{DirectedEdgeIndex, Graph};

#[inline]
fn add(a: i64, b: i64, op: &str) -> Result<i64> {
    a.checked_add(b).ok_or_else(|| overflow(op))
}

#[inline]
fn mul(a: i64, b: i64, op: &str) -> Result<i64> {
    a.checked_mul(b).ok_or_else(|| overflow(op))
}

fn overflow(op: &str) -> Error {
    Error::Overflow {
        context: op.to_string(),
    }
}

/// Binomial coefficient `C(x, k)`, zero when `x < k`.
pub fn binom(x: i64, k: u32) -> Result<i64> {
    if x < k as i64 {
        return Ok(0);
    }
    let k = k as i64;
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (x - i) as i128 / (i + 1) as i128;
        if acc > i64::MAX as i128 {
            return Err(overflow("binom"));
        }
    }
    Ok(acc as i64)
}

fn exact_div(x: i64, d: i64, op: &str) -> Result<i64> {
    if d == 0 || x % d != 0 {
        return Err(Error::InexactDivision {
            context: op.to_string(),
            divisor: d,
        });
    }
    Ok(x / d)
}

/// Dense exact-integer vector indexed by directed edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeVector(Vec<i64>);

/// Dense exact-integer vector indexed by vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexVector(Vec<i64>);

macro_rules! dense_vector {
    ($ty:ident) => {
        impl $ty {
            pub fn from_vec(values: Vec<i64>) -> Self {
                $ty(values)
            }

            pub fn zeros(len: usize) -> Self {
                $ty(vec![0; len])
            }

            pub fn constant(len: usize, value: i64) -> Self {
                $ty(vec![value; len])
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn as_slice(&self) -> &[i64] {
                &self.0
            }

            pub fn into_vec(self) -> Vec<i64> {
                self.0
            }

            pub fn iter(&self) -> std::slice::Iter<'_, i64> {
                self.0.iter()
            }

            fn check_len(&self, other: &Self, op: &'static str) -> Result<()> {
                if self.len() != other.len() {
                    return Err(Error::DimensionMismatch {
                        op,
                        left: self.len().to_string(),
                        right: other.len().to_string(),
                    });
                }
                Ok(())
            }

            fn zip_with(&self, other: &Self, op: &'static str, f: impl Fn(i64, i64) -> Option<i64>) -> Result<Self> {
                self.check_len(other, op)?;
                self.0
                    .iter()
                    .zip(&other.0)
                    .map(|(&a, &b)| f(a, b).ok_or_else(|| overflow(op)))
                    .collect::<Result<Vec<_>>>()
                    .map($ty)
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                self.zip_with(other, "vector add", i64::checked_add)
            }

            pub fn sub(&self, other: &Self) -> Result<Self> {
                self.zip_with(other, "vector subtract", i64::checked_sub)
            }

            /// Entry-wise product.
            pub fn hadamard(&self, other: &Self) -> Result<Self> {
                self.zip_with(other, "vector hadamard", i64::checked_mul)
            }

            pub fn scale(&self, c: i64) -> Result<Self> {
                self.map(|x| x.checked_mul(c), "vector scale")
            }

            /// Adds a constant to every entry.
            pub fn offset(&self, c: i64) -> Result<Self> {
                self.map(|x| x.checked_add(c), "vector offset")
            }

            pub fn binom(&self, k: u32) -> Result<Self> {
                self.0
                    .iter()
                    .map(|&x| binom(x, k))
                    .collect::<Result<Vec<_>>>()
                    .map($ty)
            }

            /// Divides every entry by `d`, failing on any remainder.
            pub fn div_exact(&self, d: i64, context: &str) -> Result<Self> {
                self.0
                    .iter()
                    .map(|&x| exact_div(x, d, context))
                    .collect::<Result<Vec<_>>>()
                    .map($ty)
            }

            pub fn sum(&self) -> Result<i64> {
                self.0.iter().try_fold(0i64, |acc, &x| add(acc, x, "vector sum"))
            }

            pub fn dot(&self, other: &Self) -> Result<i64> {
                self.check_len(other, "dot")?;
                self.0
                    .iter()
                    .zip(&other.0)
                    .try_fold(0i64, |acc, (&a, &b)| add(acc, mul(a, b, "dot")?, "dot"))
            }

            fn map(&self, f: impl Fn(i64) -> Option<i64>, op: &str) -> Result<Self> {
                self.0
                    .iter()
                    .map(|&x| f(x).ok_or_else(|| overflow(op)))
                    .collect::<Result<Vec<_>>>()
                    .map($ty)
            }
        }

        impl Index<usize> for $ty {
            type Output = i64;
            fn index(&self, i: usize) -> &i64 {
                &self.0[i]
            }
        }
    };
}

dense_vector!(EdgeVector);
dense_vector!(VertexVector);

impl EdgeVector {
    /// `x[rev(e)]` at every `e`; the vector form of row reversal.
    pub fn reversed(&self) -> EdgeVector {
        EdgeVector((0..self.len()).map(|e| self.0[e ^ 1]).collect())
    }
}

/// Sums a directed-edge vector over the out-edges of each vertex.
pub fn gamma(x: &EdgeVector, idx: &DirectedEdgeIndex) -> Result<VertexVector> {
    if x.len() != idx.len() {
        return Err(Error::DimensionMismatch {
            op: "gamma",
            left: x.len().to_string(),
            right: idx.len().to_string(),
        });
    }
    (0..idx.num_vertices())
        .map(|v| {
            idx.out_edges(v)
                .iter()
                .try_fold(0i64, |acc, &(_, e)| add(acc, x[e as usize], "gamma"))
        })
        .collect::<Result<Vec<_>>>()
        .map(VertexVector)
}

/// Square sparse matrix of exact integers indexed by directed edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMatrix {
    dim: usize,
    row_ptr: Vec<usize>,
    cols: Vec<u32>,
    vals: Vec<i64>,
}

impl EdgeMatrix {
    pub fn zeros(dim: usize) -> EdgeMatrix {
        EdgeMatrix {
            dim,
            row_ptr: vec![0; dim + 1],
            cols: Vec::new(),
            vals: Vec::new(),
        }
    }

    pub fn identity(dim: usize) -> EdgeMatrix {
        EdgeMatrix {
            dim,
            row_ptr: (0..=dim).collect(),
            cols: (0..dim as u32).collect(),
            vals: vec![1; dim],
        }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed and
    /// zeros dropped.
    pub fn from_triplets(dim: usize, triplets: impl IntoIterator<Item = (usize, usize, i64)>) -> Result<EdgeMatrix> {
        let mut rows: Vec<Vec<(u32, i64)>> = vec![Vec::new(); dim];
        for (r, c, v) in triplets {
            if r >= dim || c >= dim {
                return Err(Error::DimensionMismatch {
                    op: "from_triplets",
                    left: format!("({r}, {c})"),
                    right: dim.to_string(),
                });
            }
            rows[r].push((c as u32, v));
        }
        let mut b = RowBuilder::new(dim);
        for mut row in rows {
            row.sort_unstable_by_key(|&(c, _)| c);
            let mut merged: Vec<(u32, i64)> = Vec::with_capacity(row.len());
            for (c, v) in row {
                match merged.last_mut() {
                    Some(last) if last.0 == c => last.1 = add(last.1, v, "from_triplets")?,
                    _ => merged.push((c, v)),
                }
            }
            b.push_row(merged);
        }
        Ok(b.finish())
    }

    /// Dense row-major construction, used by tests and small examples.
    pub fn from_dense(rows: &[Vec<i64>]) -> EdgeMatrix {
        let dim = rows.len();
        let mut b = RowBuilder::new(dim);
        for row in rows {
            assert_eq!(row.len(), dim, "dense matrix must be square");
            b.push_row(
                row.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(c, &v)| (c as u32, v)),
            );
        }
        b.finish()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.dim]; self.dim];
        for (r, row) in out.iter_mut().enumerate() {
            let (cols, vals) = self.row(r);
            for (&c, &v) in cols.iter().zip(vals) {
                row[c as usize] = v;
            }
        }
        out
    }

    /// The non-backtracking (Hashimoto) matrix: `B[e, f] = 1` iff
    /// `head(e) = tail(f)` and `f != rev(e)`.
    pub fn nonbacktracking(g: &Graph, idx: &DirectedEdgeIndex) -> EdgeMatrix {
        let dim = idx.len();
        let mut b = RowBuilder::with_capacity(dim, g.path2_count() as usize);
        for e in 0..dim {
            let back = DirectedEdgeIndex::rev(e) as u32;
            let mut row: Vec<(u32, i64)> = idx
                .out_edges(idx.head(e))
                .iter()
                .filter(|&&(_, f)| f != back)
                .map(|&(_, f)| (f, 1))
                .collect();
            row.sort_unstable_by_key(|&(c, _)| c);
            b.push_row(row);
        }
        b.finish()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.cols.len()
    }

    pub fn row(&self, r: usize) -> (&[u32], &[i64]) {
        let (a, b) = (self.row_ptr[r], self.row_ptr[r + 1]);
        (&self.cols[a..b], &self.vals[a..b])
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        let (cols, vals) = self.row(r);
        cols.binary_search(&(c as u32)).map_or(0, |p| vals[p])
    }

    /// Iterates stored entries as `(row, col, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..self.dim).flat_map(move |r| {
            let (cols, vals) = self.row(r);
            cols.iter().zip(vals).map(move |(&c, &v)| (r, c as usize, v))
        })
    }

    fn check_dim(&self, other: &EdgeMatrix, op: &'static str) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                op,
                left: self.dim.to_string(),
                right: other.dim.to_string(),
            });
        }
        Ok(())
    }

    pub fn transpose(&self) -> EdgeMatrix {
        let mut counts = vec![0usize; self.dim + 1];
        for &c in &self.cols {
            counts[c as usize + 1] += 1;
        }
        for i in 0..self.dim {
            counts[i + 1] += counts[i];
        }
        let row_ptr = counts.clone();
        let mut next = counts;
        let mut cols = vec![0u32; self.nnz()];
        let mut vals = vec![0i64; self.nnz()];
        for r in 0..self.dim {
            let (rc, rv) = self.row(r);
            for (&c, &v) in rc.iter().zip(rv) {
                let slot = next[c as usize];
                cols[slot] = r as u32;
                vals[slot] = v;
                next[c as usize] += 1;
            }
        }
        EdgeMatrix {
            dim: self.dim,
            row_ptr,
            cols,
            vals,
        }
    }

    /// Operator product, Gustavson row-by-row with a dense accumulator.
    pub fn matmul(&self, other: &EdgeMatrix) -> Result<EdgeMatrix> {
        self.check_dim(other, "matmul")?;
        let mut acc = Accumulator::new(self.dim);
        let mut b = RowBuilder::new(self.dim);
        for r in 0..self.dim {
            let (ac, av) = self.row(r);
            for (&k, &a) in ac.iter().zip(av) {
                let (bc, bv) = other.row(k as usize);
                for (&c, &x) in bc.iter().zip(bv) {
                    acc.add(c, mul(a, x, "matmul")?, "matmul")?;
                }
            }
            b.push_row(acc.drain_sorted());
        }
        Ok(b.finish())
    }

    /// The entries of `left @ right` restricted to the support of `self`.
    ///
    /// Each row picks between a dense accumulator and per-entry sparse dot
    /// products, whichever touches fewer entries.
    pub fn masked_product(&self, left: &EdgeMatrix, right: &EdgeMatrix) -> Result<EdgeMatrix> {
        self.check_dim(left, "masked product")?;
        self.check_dim(right, "masked product")?;
        let right_t = right.transpose();
        let avg_col = right.nnz() / self.dim.max(1) + 1;
        let mut acc = Accumulator::new(self.dim);
        let mut b = RowBuilder::new(self.dim);
        for r in 0..self.dim {
            let (mc, _) = self.row(r);
            if mc.is_empty() {
                b.push_row(std::iter::empty());
                continue;
            }
            let (lc, lv) = left.row(r);
            let dense_cost: usize = lc.iter().map(|&k| right.row(k as usize).0.len()).sum();
            let dot_cost = mc.len() * (lc.len() + avg_col);
            let mut row = Vec::with_capacity(mc.len());
            if dot_cost < dense_cost {
                for &c in mc {
                    let (tc, tv) = right_t.row(c as usize);
                    let v = sorted_dot(lc, lv, tc, tv, "masked product")?;
                    if v != 0 {
                        row.push((c, v));
                    }
                }
            } else {
                for (&k, &a) in lc.iter().zip(lv) {
                    let (bc, bv) = right.row(k as usize);
                    for (&c, &x) in bc.iter().zip(bv) {
                        acc.add(c, mul(a, x, "masked product")?, "masked product")?;
                    }
                }
                for &c in mc {
                    let v = acc.value(c);
                    if v != 0 {
                        row.push((c, v));
                    }
                }
                acc.clear();
            }
            b.push_row(row);
        }
        Ok(b.finish())
    }

    /// `sum((left @ right) . mask)` without storing the product.
    pub fn product_dot(left: &EdgeMatrix, right: &EdgeMatrix, mask: &EdgeMatrix) -> Result<i64> {
        mask.masked_product(left, right)?.hadamard(mask)?.total()
    }

    fn zip_rows(
        &self,
        other: &EdgeMatrix,
        op: &'static str,
        keep_union: bool,
        f: impl Fn(i64, i64) -> Option<i64>,
    ) -> Result<EdgeMatrix> {
        self.check_dim(other, op)?;
        let mut b = RowBuilder::new(self.dim);
        for r in 0..self.dim {
            let (ac, av) = self.row(r);
            let (bc, bv) = other.row(r);
            let (mut i, mut j) = (0, 0);
            let mut row = Vec::with_capacity(if keep_union {
                ac.len() + bc.len()
            } else {
                ac.len().min(bc.len())
            });
            while i < ac.len() || j < bc.len() {
                let (c, x, y) = match (ac.get(i), bc.get(j)) {
                    (Some(&ci), Some(&cj)) if ci == cj => {
                        i += 1;
                        j += 1;
                        (ci, av[i - 1], bv[j - 1])
                    }
                    (Some(&ci), Some(&cj)) if ci < cj => {
                        i += 1;
                        (ci, av[i - 1], 0)
                    }
                    (Some(&ci), None) => {
                        i += 1;
                        (ci, av[i - 1], 0)
                    }
                    (_, Some(&cj)) => {
                        j += 1;
                        (cj, 0, bv[j - 1])
                    }
                    (None, None) => unreachable!(),
                };
                if !keep_union && (x == 0 || y == 0) {
                    continue;
                }
                let v = f(x, y).ok_or_else(|| overflow(op))?;
                if v != 0 {
                    row.push((c, v));
                }
            }
            b.push_row(row);
        }
        Ok(b.finish())
    }

    /// Entry-wise (Hadamard) product.
    pub fn hadamard(&self, other: &EdgeMatrix) -> Result<EdgeMatrix> {
        self.zip_rows(other, "hadamard", false, i64::checked_mul)
    }

    pub fn add(&self, other: &EdgeMatrix) -> Result<EdgeMatrix> {
        self.zip_rows(other, "add", true, i64::checked_add)
    }

    pub fn sub(&self, other: &EdgeMatrix) -> Result<EdgeMatrix> {
        self.zip_rows(other, "subtract", true, i64::checked_sub)
    }

    pub fn scale(&self, c: i64) -> Result<EdgeMatrix> {
        self.map_values(|v| mul(v, c, "scale"))
    }

    pub fn div_exact(&self, d: i64, context: &str) -> Result<EdgeMatrix> {
        self.map_values(|v| exact_div(v, d, context))
    }

    /// Entry-wise `C(M[p, q], k)`; entries below `k` become zero.
    pub fn binom_entrywise(&self, k: u32) -> Result<EdgeMatrix> {
        if k == 0 {
            return Err(Error::Invalid("binom(M, 0) would fill the matrix with ones".into()));
        }
        self.map_values(|v| binom(v, k))
    }

    fn map_values(&self, f: impl Fn(i64) -> Result<i64>) -> Result<EdgeMatrix> {
        let mut b = RowBuilder::with_capacity(self.dim, self.nnz());
        for r in 0..self.dim {
            let (cols, vals) = self.row(r);
            let mut row = Vec::with_capacity(cols.len());
            for (&c, &v) in cols.iter().zip(vals) {
                let x = f(v)?;
                if x != 0 {
                    row.push((c, x));
                }
            }
            b.push_row(row);
        }
        Ok(b.finish())
    }

    /// Column reversal: `out[e, f] = M[e, rev(f)]`.
    pub fn reverse_cols(&self) -> EdgeMatrix {
        let mut b = RowBuilder::with_capacity(self.dim, self.nnz());
        let mut row = Vec::new();
        for r in 0..self.dim {
            let (cols, vals) = self.row(r);
            row.clear();
            // rev is c ^ 1, which only swaps the order inside each (2k, 2k+1)
            // pair, so one pass fixes the ordering
            let mut i = 0;
            while i < cols.len() {
                let c = cols[i];
                if c % 2 == 0 && i + 1 < cols.len() && cols[i + 1] == c + 1 {
                    row.push((c, vals[i + 1]));
                    row.push((c + 1, vals[i]));
                    i += 2;
                } else {
                    row.push((c ^ 1, vals[i]));
                    i += 1;
                }
            }
            b.push_row(row.iter().copied());
        }
        b.finish()
    }

    /// Row reversal: `out[e, f] = M[rev(e), f]`.
    pub fn reverse_rows(&self) -> EdgeMatrix {
        let mut b = RowBuilder::with_capacity(self.dim, self.nnz());
        for r in 0..self.dim {
            let (cols, vals) = self.row(r ^ 1);
            b.push_row(cols.iter().copied().zip(vals.iter().copied()));
        }
        b.finish()
    }

    /// `diag(x) M diag(y)`, the Hadamard product with the outer product `x yᵀ`.
    pub fn scale_rows_cols(&self, x: &EdgeVector, y: &EdgeVector) -> Result<EdgeMatrix> {
        let mut b = RowBuilder::with_capacity(self.dim, self.nnz());
        for r in 0..self.dim {
            let (cols, vals) = self.row(r);
            let mut row = Vec::with_capacity(cols.len());
            for (&c, &v) in cols.iter().zip(vals) {
                let z = mul(mul(v, x[r], "outer hadamard")?, y[c as usize], "outer hadamard")?;
                if z != 0 {
                    row.push((c, z));
                }
            }
            b.push_row(row);
        }
        Ok(b.finish())
    }

    pub fn diag(&self) -> EdgeVector {
        EdgeVector((0..self.dim).map(|r| self.get(r, r)).collect())
    }

    /// `M 1`.
    pub fn row_sums(&self) -> Result<EdgeVector> {
        (0..self.dim)
            .map(|r| self.row(r).1.iter().try_fold(0i64, |acc, &v| add(acc, v, "row sums")))
            .collect::<Result<Vec<_>>>()
            .map(EdgeVector)
    }

    /// `1ᵀ M`, stored as a vector indexed by the column edge.
    pub fn col_sums(&self) -> Result<EdgeVector> {
        let mut out = vec![0i64; self.dim];
        for (&c, &v) in self.cols.iter().zip(&self.vals) {
            out[c as usize] = add(out[c as usize], v, "column sums")?;
        }
        Ok(EdgeVector(out))
    }

    /// `sum(M)`.
    pub fn total(&self) -> Result<i64> {
        self.vals.iter().try_fold(0i64, |acc, &v| add(acc, v, "total"))
    }

    /// `M x`.
    pub fn mul_vec(&self, x: &EdgeVector) -> Result<EdgeVector> {
        (0..self.dim)
            .map(|r| {
                let (cols, vals) = self.row(r);
                cols.iter().zip(vals).try_fold(0i64, |acc, (&c, &v)| {
                    add(acc, mul(v, x[c as usize], "matrix-vector")?, "matrix-vector")
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(EdgeVector)
    }

    /// `xᵀ M` as a vector.
    pub fn vec_mul(&self, x: &EdgeVector) -> Result<EdgeVector> {
        let mut out = vec![0i64; self.dim];
        for r in 0..self.dim {
            let (cols, vals) = self.row(r);
            for (&c, &v) in cols.iter().zip(vals) {
                let slot = &mut out[c as usize];
                *slot = add(*slot, mul(x[r], v, "vector-matrix")?, "vector-matrix")?;
            }
        }
        Ok(EdgeVector(out))
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }
}

fn sorted_dot(ac: &[u32], av: &[i64], bc: &[u32], bv: &[i64], op: &str) -> Result<i64> {
    let (mut i, mut j, mut acc) = (0, 0, 0i64);
    while i < ac.len() && j < bc.len() {
        match ac[i].cmp(&bc[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc = add(acc, mul(av[i], bv[j], op)?, op)?;
                i += 1;
                j += 1;
            }
        }
    }
    Ok(acc)
}

struct RowBuilder {
    dim: usize,
    row_ptr: Vec<usize>,
    cols: Vec<u32>,
    vals: Vec<i64>,
}

impl RowBuilder {
    fn new(dim: usize) -> Self {
        Self::with_capacity(dim, 0)
    }

    fn with_capacity(dim: usize, nnz: usize) -> Self {
        let mut row_ptr = Vec::with_capacity(dim + 1);
        row_ptr.push(0);
        RowBuilder {
            dim,
            row_ptr,
            cols: Vec::with_capacity(nnz),
            vals: Vec::with_capacity(nnz),
        }
    }

    /// Entries must be sorted by column and nonzero.
    fn push_row(&mut self, row: impl IntoIterator<Item = (u32, i64)>) {
        for (c, v) in row {
            debug_assert!(v != 0);
            self.cols.push(c);
            self.vals.push(v);
        }
        self.row_ptr.push(self.cols.len());
    }

    fn finish(self) -> EdgeMatrix {
        debug_assert_eq!(self.row_ptr.len(), self.dim + 1);
        EdgeMatrix {
            dim: self.dim,
            row_ptr: self.row_ptr,
            cols: self.cols,
            vals: self.vals,
        }
    }
}

struct Accumulator {
    values: Vec<i64>,
    seen: Vec<bool>,
    touched: Vec<u32>,
}

impl Accumulator {
    fn new(dim: usize) -> Self {
        Accumulator {
            values: vec![0; dim],
            seen: vec![false; dim],
            touched: Vec::new(),
        }
    }

    #[inline]
    fn add(&mut self, c: u32, v: i64, op: &str) -> Result<()> {
        let i = c as usize;
        if !self.seen[i] {
            self.seen[i] = true;
            self.touched.push(c);
        }
        self.values[i] = add(self.values[i], v, op)?;
        Ok(())
    }

    fn value(&self, c: u32) -> i64 {
        self.values[c as usize]
    }

    fn clear(&mut self) {
        for &c in &self.touched {
            self.values[c as usize] = 0;
            self.seen[c as usize] = false;
        }
        self.touched.clear();
    }

    fn drain_sorted(&mut self) -> Vec<(u32, i64)> {
        self.touched.sort_unstable();
        let row = self
            .touched
            .iter()
            .map(|&c| (c, self.values[c as usize]))
            .filter(|&(_, v)| v != 0)
            .collect();
        self.clear();
        row
    }
}
