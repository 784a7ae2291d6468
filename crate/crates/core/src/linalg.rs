//! Exact linear algebra over the rationals.
//!
//! Two matrix types live here. [`Matrix`] is dense and used for the small
//! systems that show up per weight space (kernels, ranks, row spaces).
//! [`SparseMatrix`] stores columns and holds representation generators,
//! which are overwhelmingly zero.
//!
//! Every elimination uses the same pivot rule (first nonzero entry, scanning
//! columns left to right and rows top to bottom), so reduced forms and the
//! bases derived from them are reproducible bit for bit.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        if self.rows == 0 {
            return other.clone();
        }
        if other.rows == 0 {
            return self.clone();
        }
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form, in place. Returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..self.cols {
            if prow >= self.rows {
                break;
            }
            let Some(found) = (prow..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if found != prow {
                for c in 0..self.cols {
                    self.data.swap(found * self.cols + c, prow * self.cols + c);
                }
            }
            let inv = self.get(prow, col).recip();
            for c in col..self.cols {
                let idx = prow * self.cols + c;
                if !self.data[idx].is_zero() {
                    self.data[idx] *= &inv;
                }
            }
            for r in 0..self.rows {
                if r == prow || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let p = self.get(prow, c);
                    if p.is_zero() {
                        continue;
                    }
                    let delta = &factor * p;
                    self.data[r * self.cols + c] -= delta;
                }
            }
            pivots.push(col);
            prow += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right kernel `{x : A x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let mut a = self.clone();
        let pivots = a.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Canonical basis (nonzero RREF rows) of the row space.
    pub fn row_space(&self) -> Matrix {
        let mut a = self.clone();
        let r = a.rref_in_place().len();
        a.data.truncate(r * a.cols);
        a.rows = r;
        a
    }

    /// Inverse of a square matrix, or `None` if it is singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Q::one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Some(out)
    }

    /// Solve `A x = b`; `None` when inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(row, self.cols).clone();
        }
        Some(x)
    }
}

/// Incrementally maintained reduced echelon basis of a subspace of `Q^dim`.
///
/// Used for span closures: feed vectors one at a time and learn whether each
/// enlarged the span.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    /// Rows in echelon form, each normalised so its pivot entry is 1.
    rows: Vec<(usize, Vec<Q>)>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Reduce `v` against the current basis; the residue is zero iff `v` is in the span.
    pub fn reduce(&self, v: &mut [Q]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Insert `v`; returns `true` if the span grew.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&w) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        let pos = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(pos, (p, w));
        true
    }

    /// The basis vectors in pivot order (this is the RREF of the span).
    pub fn vectors(&self) -> impl Iterator<Item = &[Q]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// Pivot column of each basis vector, in basis order.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is outside the span.
    /// The basis is fully reduced, so the coordinates are the pivot entries.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        let coords: Vec<Q> = self.rows.iter().map(|(p, _)| v[*p].clone()).collect();
        let mut w = v.to_vec();
        for ((_, row), c) in self.rows.iter().zip(&coords) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= c * r;
                }
            }
        }
        w.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows.len(), self.dim);
        for (i, (_, r)) in self.rows.iter().enumerate() {
            for (c, x) in r.iter().enumerate() {
                m.set(i, c, x.clone());
            }
        }
        m
    }
}

/// A sparse vector: sorted `(index, value)` pairs without explicit zeros.
pub type SparseVec = Vec<(usize, Q)>;

/// Column-major sparse matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SparseMatrix {}x{} nnz={}",
            self.rows,
            self.cols,
            self.nnz()
        )
    }
}

fn push_nonzero(v: &mut SparseVec, i: usize, x: Q) {
    if !x.is_zero() {
        v.push((i, x));
    }
}

/// `a + s*b` for sorted sparse vectors.
pub fn sparse_axpy(a: &SparseVec, s: &Q, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ia, xa)), Some((ib, xb))) if ia == ib => {
                push_nonzero(&mut out, *ia, xa + s * xb);
                i += 1;
                j += 1;
            }
            (Some((ia, xa)), Some((ib, _))) if ia < ib => {
                out.push((*ia, xa.clone()));
                i += 1;
            }
            (Some((ia, xa)), None) => {
                out.push((*ia, xa.clone()));
                i += 1;
            }
            (_, Some((ib, xb))) => {
                push_nonzero(&mut out, *ib, s * xb);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, Q::one())]).collect(),
        }
    }

    /// Build from columns; entries in each column are sorted and zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.sort_by_key(|(i, _)| *i);
                let mut merged: SparseVec = Vec::with_capacity(c.len());
                for (i, x) in c {
                    assert!(i < rows, "row index out of range");
                    match merged.last_mut() {
                        Some((j, y)) if *j == i => *y += x,
                        _ => merged.push((i, x)),
                    }
                }
                merged.retain(|(_, x)| !x.is_zero());
                merged
            })
            .collect::<Vec<_>>();
        SparseMatrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        let columns = (0..m.cols())
            .map(|c| {
                (0..m.rows())
                    .filter(|&r| !m.get(r, c).is_zero())
                    .map(|r| (r, m.get(r, c).clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: m.rows(),
            cols: m.cols(),
            columns,
        }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                m.set(*r, c, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.columns[c]
            .binary_search_by_key(&r, |(i, _)| *i)
            .map_or_else(|_| Q::zero(), |k| self.columns[c][k].1.clone())
    }

    /// `M x` for a sparse `x`.
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut acc: SparseVec = Vec::new();
        for (j, s) in x {
            acc = sparse_axpy(&acc, s, &self.columns[*j]);
        }
        acc
    }

    pub fn apply_dense(&self, x: &[Q]) -> Vec<Q> {
        assert_eq!(x.len(), self.cols);
        let mut out = vec![Q::zero(); self.rows];
        for (j, s) in x.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for (i, m) in &self.columns[j] {
                out[*i] += s * m;
            }
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.axpy(&Q::one(), other)
    }

    /// `self + s * other`.
    pub fn axpy(&self, s: &Q, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| sparse_axpy(a, s, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> SparseMatrix {
        if s.is_zero() {
            return SparseMatrix::zeros(self.rows, self.cols);
        }
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .map(|c| c.iter().map(|(i, x)| (*i, x * s)).collect())
                .collect(),
        }
    }

    pub fn neg(&self) -> SparseMatrix {
        self.scale(&-Q::one())
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                cols[*r].push((c, x.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            columns: cols,
        }
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).axpy(&-Q::one(), &other.mul(self))
    }

    /// `A ⊗ I_k` in the index convention `(i, j) ↦ i * k + j`.
    pub fn kron_identity_right(&self, k: usize) -> SparseMatrix {
        let mut columns = Vec::with_capacity(self.cols * k);
        for col in &self.columns {
            for j in 0..k {
                columns.push(col.iter().map(|(i, x)| (i * k + j, x.clone())).collect());
            }
        }
        SparseMatrix {
            rows: self.rows * k,
            cols: self.cols * k,
            columns,
        }
    }

    /// `I_k ⊗ A` in the index convention `(i, j) ↦ i * dim(A) + j`.
    pub fn kron_identity_left(&self, k: usize) -> SparseMatrix {
        let mut columns = Vec::with_capacity(self.cols * k);
        for i in 0..k {
            for col in &self.columns {
                columns.push(
                    col.iter()
                        .map(|(r, x)| (i * self.rows + r, x.clone()))
                        .collect(),
                );
            }
        }
        SparseMatrix {
            rows: self.rows * k,
            cols: self.cols * k,
            columns,
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut columns = self.columns.clone();
        for col in &other.columns {
            columns.push(
                col.iter()
                    .map(|(r, x)| (r + self.rows, x.clone()))
                    .collect(),
            );
        }
        SparseMatrix {
            rows: self.rows + other.rows,
            cols: self.cols + other.cols,
            columns,
        }
    }

    /// Smallest `k >= 1` with `M^k = 0`, or `None` if no such `k <= dim`.
    pub fn nilpotency_index(&self) -> Option<usize> {
        if self.rows != self.cols {
            return None;
        }
        if self.is_zero() {
            return Some(1);
        }
        let mut p = self.clone();
        for k in 2..=self.rows.max(1) {
            p = p.mul(self);
            if p.is_zero() {
                return Some(k);
            }
        }
        None
    }
}

/// Absolute value of the largest numerator or denominator, for diagnostics.
pub fn height(x: &Q) -> BigInt {
    let a = x.numer().abs();
    let b = x.denom().abs();
    if a > b {
        a
    } else {
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_zero_and_full_rank() {
        assert_eq!(Matrix::zeros(2, 3).kernel().len(), 3);
        assert!(Matrix::identity(4).kernel().is_empty());
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = Matrix::from_i64(&[&[1, 1], &[1, -1]]);
        assert_eq!(m.solve(&[q(3), q(1)]).unwrap(), vec![q(2), q(1)]);
        let s = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert!(s.solve(&[q(1), q(3)]).is_none());
    }

    #[test]
    fn echelon_insert_tracks_span() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(&[q(1), q(2), q(0)]));
        assert!(e.insert(&[q(0), q(1), q(1)]));
        assert!(!e.insert(&[q(1), q(3), q(1)]));
        assert!(e.contains(&[q(2), q(5), q(1)]));
        assert_eq!(e.dim(), 2);
        let rows = e.to_matrix();
        assert_eq!(
            rows,
            Matrix::from_rows(vec![vec![q(1), q(0), q(-2)], vec![q(0), q(1), q(1)]])
        );
    }

    #[test]
    fn sparse_products_match_dense() {
        let a = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 2], &[0, 0, 0]]);
        let b = Matrix::from_i64(&[&[1, 0, 0], &[3, 0, 0], &[0, 0, -1]]);
        let (sa, sb) = (SparseMatrix::from_dense(&a), SparseMatrix::from_dense(&b));
        assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
        assert_eq!(sa.transpose().to_dense(), a.transpose());
        assert_eq!(
            sa.commutator(&sb).to_dense(),
            a.mul(&b).add(&b.mul(&a).scale(&q(-1)))
        );
        assert_eq!(sa.nilpotency_index(), Some(3));
        assert_eq!(sb.nilpotency_index(), None);
    }

    #[test]
    fn kron_conventions() {
        let a = SparseMatrix::from_dense(&Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        let r = a.kron_identity_right(2).to_dense();
        // e_{(1,j)} -> e_{(0,j)}
        assert_eq!(r.get(0, 2), &q(1));
        assert_eq!(r.get(1, 3), &q(1));
        let l = a.kron_identity_left(2).to_dense();
        assert_eq!(l.get(0, 1), &q(1));
        assert_eq!(l.get(2, 3), &q(1));
    }
}
