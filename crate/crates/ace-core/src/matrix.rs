//! Exact linear algebra over the integers.
//!
//! Matrices are stored in sparse triplet form (a sorted map from coordinates
//! to nonzero entries) with arbitrary-precision arithmetic throughout; the
//! Smith normal form reduction works on a dense scratch copy, which is the
//! right trade-off for the small blocks produced by resolutions. Unimodular
//! transforms and their inverses are tracked exactly, so kernels, integer
//! solves and lattice arithmetic are all exact.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Errors from checked matrix construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    EntryOutOfBounds { row: usize, col: usize, rows: usize, cols: usize },
    DuplicateEntry { row: usize, col: usize },
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::EntryOutOfBounds { row, col, rows, cols } => write!(
                f,
                "entry ({row}, {col}) outside a {rows}x{cols} matrix"
            ),
            MatrixError::DuplicateEntry { row, col } => {
                write!(f, "duplicate entry at ({row}, {col})")
            }
        }
    }
}

/// Sparse integer matrix in triplet normal form.
///
/// Only nonzero entries are stored. Values are immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = BTreeMap::new();
        for i in 0..n {
            entries.insert((i, i), BigInt::one());
        }
        IntMatrix { rows: n, cols: n, entries }
    }

    /// Checked construction from triplets; rejects out-of-range coordinates
    /// and duplicates.
    pub fn from_triplets<I, T>(rows: usize, cols: usize, triplets: I) -> Result<Self, MatrixError>
    where
        I: IntoIterator<Item = (usize, usize, T)>,
        T: Into<BigInt>,
    {
        let mut entries = BTreeMap::new();
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(MatrixError::EntryOutOfBounds { row: r, col: c, rows, cols });
            }
            let v: BigInt = v.into();
            if v.is_zero() {
                continue;
            }
            if entries.insert((r, c), v).is_some() {
                return Err(MatrixError::DuplicateEntry { row: r, col: c });
            }
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    /// Row-major construction from integer literals; panics on ragged rows.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[&[T]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows in matrix literal");
            for (j, v) in row.iter().enumerate() {
                let v: BigInt = v.clone().into();
                if !v.is_zero() {
                    entries.insert((i, j), v);
                }
            }
        }
        IntMatrix { rows: r, cols: c, entries }
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[BigInt]) -> Self {
        let mut m = IntMatrix::zero(rows, cols);
        for (i, d) in diag.iter().enumerate() {
            if i < rows && i < cols && !d.is_zero() {
                m.entries.insert((i, i), d.clone());
            }
        }
        m
    }

    pub fn scalar(n: usize, v: impl Into<BigInt>) -> Self {
        let v: BigInt = v.into();
        let mut m = IntMatrix::zero(n, n);
        if !v.is_zero() {
            for i in 0..n {
                m.entries.insert((i, i), v.clone());
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

    pub fn get(&self, row: usize, col: usize) -> BigInt {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut entries = BTreeMap::new();
        for (&(r, c), v) in &self.entries {
            entries.insert((c, r), v.clone());
        }
        IntMatrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn neg(&self) -> IntMatrix {
        let entries = self.entries.iter().map(|(&k, v)| (k, -v.clone())).collect();
        IntMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        if c.is_zero() {
            return IntMatrix::zero(self.rows, self.cols);
        }
        let entries = self.entries.iter().map(|(&k, v)| (k, c * v)).collect();
        IntMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let mut entries = self.entries.clone();
        for (&k, v) in &other.entries {
            let e = entries.entry(k).or_insert_with(BigInt::zero);
            *e += v;
            if e.is_zero() {
                entries.remove(&k);
            }
        }
        IntMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (&(i, k), v) in &self.entries {
            let lo = (k, 0usize);
            let hi = (k, usize::MAX);
            for (&(_, j), w) in other.entries.range(lo..=hi) {
                let e = acc.entry((i, j)).or_insert_with(BigInt::zero);
                *e += v * w;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        IntMatrix { rows: self.rows, cols: other.cols, entries: acc }
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut entries = self.entries.clone();
        for (&(r, c), v) in &other.entries {
            entries.insert((r, c + self.cols), v.clone());
        }
        IntMatrix { rows: self.rows, cols: self.cols + other.cols, entries }
    }

    /// Vertical concatenation [self; other].
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "col mismatch in vstack");
        let mut entries = self.entries.clone();
        for (&(r, c), v) in &other.entries {
            entries.insert((r + self.rows, c), v.clone());
        }
        IntMatrix { rows: self.rows + other.rows, cols: self.cols, entries }
    }

    pub fn block_diag(&self, other: &IntMatrix) -> IntMatrix {
        let mut entries = self.entries.clone();
        for (&(r, c), v) in &other.entries {
            entries.insert((r + self.rows, c + self.cols), v.clone());
        }
        IntMatrix { rows: self.rows + other.rows, cols: self.cols + other.cols, entries }
    }

    pub fn column(&self, j: usize) -> IntMatrix {
        assert!(j < self.cols);
        let mut entries = BTreeMap::new();
        for i in 0..self.rows {
            if let Some(v) = self.entries.get(&(i, j)) {
                entries.insert((i, 0), v.clone());
            }
        }
        IntMatrix { rows: self.rows, cols: 1, entries }
    }

    pub fn submatrix_cols(&self, cols: &[usize]) -> IntMatrix {
        let mut entries = BTreeMap::new();
        for (new_j, &j) in cols.iter().enumerate() {
            assert!(j < self.cols);
            for i in 0..self.rows {
                if let Some(v) = self.entries.get(&(i, j)) {
                    entries.insert((i, new_j), v.clone());
                }
            }
        }
        IntMatrix { rows: self.rows, cols: cols.len(), entries }
    }

    pub fn submatrix_rows(&self, rows: &[usize]) -> IntMatrix {
        let t = self.transpose().submatrix_cols(rows);
        t.transpose()
    }

    /// Kronecker product, with blocks ordered row-major in both factors.
    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let mut entries = BTreeMap::new();
        for (&(i, j), v) in &self.entries {
            for (&(k, l), w) in &other.entries {
                entries.insert((i * other.rows + k, j * other.cols + l), v * w);
            }
        }
        IntMatrix {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            entries,
        }
    }

    fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            d[r][c] = v.clone();
        }
        d
    }

    fn from_dense(d: Vec<Vec<BigInt>>) -> IntMatrix {
        let rows = d.len();
        let cols = d.first().map_or(0, |r| r.len());
        let mut entries = BTreeMap::new();
        for (i, row) in d.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    entries.insert((i, j), v);
                }
            }
        }
        IntMatrix { rows, cols, entries }
    }

    /// Smith normal form with tracked unimodular transforms and inverses.
    pub fn smith_normal_form(&self) -> SmithDecomposition {
        let mut w = SnfWorker::new(self);
        w.reduce();
        w.finish()
    }

    /// Invariant factors only (no transform tracking); the diagonal of the
    /// Smith form including trailing zeros, length `min(rows, cols)`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut w = SnfWorker::new_untracked(self);
        w.reduce();
        w.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().iter().filter(|d| !d.is_zero()).count()
    }

    /// Basis of the integral kernel, as matrix columns.
    pub fn kernel_basis(&self) -> IntMatrix {
        let snf = self.smith_normal_form();
        let mut free = Vec::new();
        for j in 0..self.cols {
            let dj = snf.diagonal.get(j).cloned().unwrap_or_else(BigInt::zero);
            if dj.is_zero() {
                free.push(j);
            }
        }
        snf.right.submatrix_cols(&free)
    }

    /// Solve `self * X = rhs` over the integers; `None` when no integral
    /// solution exists. Free coordinates are set to zero.
    pub fn solve(&self, rhs: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve");
        let snf = self.smith_normal_form();
        let c = snf.left.mul(rhs);
        let k = rhs.cols;
        let dlen = snf.diagonal.len();
        let mut y = IntMatrix::zero(self.cols, k);
        for i in 0..self.rows {
            for j in 0..k {
                let cij = c.get(i, j);
                if i < dlen && !snf.diagonal[i].is_zero() {
                    let (q, r) = cij.div_rem(&snf.diagonal[i]);
                    if !r.is_zero() {
                        return None;
                    }
                    if !q.is_zero() {
                        y.entries.insert((i, j), q);
                    }
                } else if !cij.is_zero() {
                    return None;
                }
            }
        }
        Some(snf.right.mul(&y))
    }

    /// Does the column span of `self` contain every column of `other`?
    pub fn lattice_contains(&self, other: &IntMatrix) -> bool {
        self.solve(other).is_some()
    }

    pub fn lattice_eq(&self, other: &IntMatrix) -> bool {
        self.lattice_contains(other) && other.lattice_contains(self)
    }

    /// Generators of the intersection of the two column spans.
    pub fn lattice_intersection(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let stacked = self.hstack(&other.neg());
        let ker = stacked.kernel_basis();
        let first = ker.submatrix_rows(&(0..self.cols).collect::<Vec<_>>());
        self.mul(&first)
    }

    /// Generators of the preimage lattice `{x : self * x in colspan(lat)}`.
    pub fn preimage_lattice(&self, lat: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, lat.rows);
        let stacked = self.hstack(&lat.neg());
        let ker = stacked.kernel_basis();
        ker.submatrix_rows(&(0..self.cols).collect::<Vec<_>>())
    }

    /// A basis (linearly independent columns) for the column lattice.
    pub fn lattice_basis(&self) -> IntMatrix {
        let snf = self.smith_normal_form();
        let linv = &snf.left_inv;
        let mut cols = Vec::new();
        for (i, d) in snf.diagonal.iter().enumerate() {
            if !d.is_zero() {
                cols.push(linv.column(i).scale(d));
            }
        }
        let mut out = IntMatrix::zero(self.rows, 0);
        for c in cols {
            out = out.hstack(&c);
        }
        out
    }

    /// Basis of the saturation of the column lattice: all `x` with
    /// `k * x in colspan(self)` for some `k != 0`.
    pub fn saturation_basis(&self) -> IntMatrix {
        let snf = self.smith_normal_form();
        let linv = &snf.left_inv;
        let mut cols = Vec::new();
        for (i, d) in snf.diagonal.iter().enumerate() {
            if !d.is_zero() {
                cols.push(i);
            }
        }
        linv.submatrix_cols(&cols)
    }

    pub fn format_triplets(&self) -> String {
        let mut s = String::new();
        for (&(r, c), v) in &self.entries {
            s.push_str(&format!("{} {} {}\n", r, c, v));
        }
        s
    }
}

/// Smith decomposition `left * m * right = diag`, with `left`, `right`
/// unimodular; `diagonal` has length `min(rows, cols)` and satisfies the
/// divisibility chain d_1 | d_2 | ... with nonnegative entries.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub left_inv: IntMatrix,
    pub right_inv: IntMatrix,
}

impl SmithDecomposition {
    /// The diagonal as a full matrix of the original shape.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        IntMatrix::diagonal(rows, cols, &self.diagonal)
    }

    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

struct SnfWorker {
    rows: usize,
    cols: usize,
    m: Vec<Vec<BigInt>>,
    // transform tracking; empty when untracked
    left: Vec<Vec<BigInt>>,
    left_inv: Vec<Vec<BigInt>>,
    right: Vec<Vec<BigInt>>,
    right_inv: Vec<Vec<BigInt>>,
    tracked: bool,
}

impl SnfWorker {
    fn new(m: &IntMatrix) -> Self {
        let id_r = IntMatrix::identity(m.rows).to_dense();
        let id_c = IntMatrix::identity(m.cols).to_dense();
        SnfWorker {
            rows: m.rows,
            cols: m.cols,
            m: m.to_dense(),
            left: id_r.clone(),
            left_inv: id_r,
            right: id_c.clone(),
            right_inv: id_c,
            tracked: true,
        }
    }

    fn new_untracked(m: &IntMatrix) -> Self {
        SnfWorker {
            rows: m.rows,
            cols: m.cols,
            m: m.to_dense(),
            left: Vec::new(),
            left_inv: Vec::new(),
            right: Vec::new(),
            right_inv: Vec::new(),
            tracked: false,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.m.swap(a, b);
        if self.tracked {
            self.left.swap(a, b);
            for row in self.left_inv.iter_mut() {
                row.swap(a, b);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in self.m.iter_mut() {
            row.swap(a, b);
        }
        if self.tracked {
            for row in self.right.iter_mut() {
                row.swap(a, b);
            }
            self.right_inv.swap(a, b);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            if !self.m[src][j].is_zero() {
                let t = c * &self.m[src][j];
                self.m[dst][j] += t;
            }
        }
        if self.tracked {
            for j in 0..self.rows {
                if !self.left[src][j].is_zero() {
                    let t = c * &self.left[src][j];
                    self.left[dst][j] += t;
                }
            }
            // inverse update: col[src] -= c * col[dst]
            for i in 0..self.rows {
                if !self.left_inv[i][dst].is_zero() {
                    let t = c * &self.left_inv[i][dst];
                    self.left_inv[i][src] -= t;
                }
            }
        }
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            if !self.m[i][src].is_zero() {
                let t = c * &self.m[i][src];
                self.m[i][dst] += t;
            }
        }
        if self.tracked {
            for i in 0..self.cols {
                if !self.right[i][src].is_zero() {
                    let t = c * &self.right[i][src];
                    self.right[i][dst] += t;
                }
            }
            // inverse update: row[src] -= c * row[dst]
            for j in 0..self.cols {
                if !self.right_inv[dst][j].is_zero() {
                    let t = c * &self.right_inv[dst][j];
                    self.right_inv[src][j] -= t;
                }
            }
        }
    }

    fn neg_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = core::mem::take(&mut self.m[r][j]);
            self.m[r][j] = -v;
        }
        if self.tracked {
            for j in 0..self.rows {
                let v = core::mem::take(&mut self.left[r][j]);
                self.left[r][j] = -v;
            }
            for i in 0..self.rows {
                let v = core::mem::take(&mut self.left_inv[i][r]);
                self.left_inv[i][r] = -v;
            }
        }
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut best_abs = BigInt::zero();
        for i in t..self.rows {
            for j in t..self.cols {
                if self.m[i][j].is_zero() {
                    continue;
                }
                let a = self.m[i][j].abs();
                if best.is_none() || a < best_abs {
                    if a.is_one() {
                        return Some((i, j));
                    }
                    best_abs = a;
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn reduce(&mut self) {
        let n = core::cmp::min(self.rows, self.cols);
        let mut t = 0;
        while t < n {
            let Some((pi, pj)) = self.find_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            // gcd cascade: clear row t and column t
            'clear: loop {
                // column below pivot
                let mut changed = false;
                for i in (t + 1)..self.rows {
                    if !self.m[i][t].is_zero() {
                        let q = rounded_quotient(&self.m[i][t], &self.m[t][t]);
                        self.add_row(i, t, &(-q));
                        if !self.m[i][t].is_zero() {
                            // remainder smaller than pivot: promote it
                            self.swap_rows(t, i);
                            changed = true;
                        }
                    }
                }
                for j in (t + 1)..self.cols {
                    if !self.m[t][j].is_zero() {
                        let q = rounded_quotient(&self.m[t][j], &self.m[t][t]);
                        self.add_col(j, t, &(-q));
                        if !self.m[t][j].is_zero() {
                            self.swap_cols(t, j);
                            changed = true;
                        }
                    }
                }
                if changed {
                    continue 'clear;
                }
                // ensure the pivot divides the rest of the submatrix
                let mut fix: Option<usize> = None;
                'scan: for i in (t + 1)..self.rows {
                    for j in (t + 1)..self.cols {
                        if !self.m[i][j].is_zero() && !(&self.m[i][j] % &self.m[t][t]).is_zero() {
                            fix = Some(i);
                            break 'scan;
                        }
                    }
                }
                match fix {
                    Some(i) => {
                        let one = BigInt::one();
                        self.add_row(t, i, &one);
                    }
                    None => break 'clear,
                }
            }
            if self.m[t][t].is_negative() {
                self.neg_row(t);
            }
            t += 1;
        }
    }

    fn diagonal(&self) -> Vec<BigInt> {
        let n = core::cmp::min(self.rows, self.cols);
        (0..n).map(|i| self.m[i][i].clone()).collect()
    }

    fn finish(self) -> SmithDecomposition {
        let diagonal = self.diagonal();
        SmithDecomposition {
            diagonal,
            left: IntMatrix::from_dense(self.left),
            right: IntMatrix::from_dense(self.right),
            left_inv: IntMatrix::from_dense(self.left_inv),
            right_inv: IntMatrix::from_dense(self.right_inv),
        }
    }
}

/// Quotient rounding to nearest, which keeps remainders at most half the
/// divisor during the gcd cascade.
fn rounded_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    let two_r = r.abs() * 2;
    if two_r > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn check_snf(a: &IntMatrix) {
        let snf = a.smith_normal_form();
        // left * a * right == diag
        let lhs = snf.left.mul(a).mul(&snf.right);
        let d = snf.diagonal_matrix(a.rows(), a.cols());
        assert_eq!(lhs, d, "L*A*R != D");
        // transforms unimodular: inverse tracking consistent
        assert_eq!(snf.left.mul(&snf.left_inv), IntMatrix::identity(a.rows()));
        assert_eq!(snf.left_inv.mul(&snf.left), IntMatrix::identity(a.rows()));
        assert_eq!(snf.right.mul(&snf.right_inv), IntMatrix::identity(a.cols()));
        assert_eq!(snf.right_inv.mul(&snf.right), IntMatrix::identity(a.cols()));
        // divisibility chain, nonnegative
        for w in snf.diagonal.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zero before nonzero in diagonal");
            } else {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken");
            }
        }
    }

    #[test]
    fn snf_worked_example() {
        let a = m(&[&[2, 4], &[6, 8]]);
        let snf = a.smith_normal_form();
        assert_eq!(snf.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
        check_snf(&a);
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(3);
        let snf = a.smith_normal_form();
        assert_eq!(snf.diagonal, vec![BigInt::one(); 3]);
        check_snf(&a);
    }

    #[test]
    fn snf_zero_matrix() {
        let a = IntMatrix::zero(2, 3);
        let snf = a.smith_normal_form();
        assert_eq!(snf.diagonal, vec![BigInt::zero(), BigInt::zero()]);
        check_snf(&a);
    }

    #[test]
    fn snf_empty_shapes() {
        check_snf(&IntMatrix::zero(0, 0));
        check_snf(&IntMatrix::zero(0, 4));
        check_snf(&IntMatrix::zero(4, 0));
    }

    #[test]
    fn kernel_examples() {
        // multiply-by-p has trivial kernel
        let a = m(&[&[5]]);
        assert_eq!(a.kernel_basis().cols(), 0);
        // [1, -1] has kernel spanned by (1,1)
        let a = m(&[&[1, -1]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        let diag = m(&[&[1], &[1]]);
        assert!(k.lattice_eq(&diag));
        // full-rank square matrix has empty kernel
        let a = m(&[&[2, 4], &[6, 8]]);
        assert_eq!(a.kernel_basis().cols(), 0);
    }

    #[test]
    fn solve_and_membership() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let b = m(&[&[4], &[9]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        assert!(a.solve(&m(&[&[1], &[0]])).is_none());
    }

    #[test]
    fn lattice_ops() {
        let a = m(&[&[2, 0], &[0, 2]]);
        let b = m(&[&[3, 0], &[0, 3]]);
        let i = a.lattice_intersection(&b);
        let expected = m(&[&[6, 0], &[0, 6]]);
        assert!(i.lattice_eq(&expected));
        // preimage of even lattice under doubling map is everything
        let f = m(&[&[2, 0], &[0, 2]]);
        let pre = f.preimage_lattice(&expected);
        assert!(pre.lattice_eq(&m(&[&[3, 0], &[0, 3]])));
        // saturation of 2Z inside Z^1
        let s = m(&[&[2]]).saturation_basis();
        assert!(s.lattice_eq(&m(&[&[1]])));
    }

    #[test]
    fn kronecker_shape() {
        let a = m(&[&[1, 2]]);
        let b = m(&[&[3], &[4]]);
        let k = a.kronecker(&b);
        assert_eq!((k.rows(), k.cols()), (2, 2));
        assert_eq!(k.get(0, 0), BigInt::from(3));
        assert_eq!(k.get(1, 1), BigInt::from(8));
    }

    proptest! {
        #[test]
        fn snf_random(rows in 0usize..5, cols in 0usize..5, seed in any::<u64>()) {
            // small pseudo-random matrices with entries in [-9, 9]
            let mut state = seed;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % 19) as i64 - 9
            };
            let mut trips = alloc::vec::Vec::new();
            for i in 0..rows {
                for j in 0..cols {
                    trips.push((i, j, next()));
                }
            }
            let a = IntMatrix::from_triplets(rows, cols, trips).unwrap();
            check_snf(&a);
            // kernel columns really are in the kernel, and complete
            let k = a.kernel_basis();
            prop_assert!(a.mul(&k).is_zero());
            prop_assert_eq!(k.cols(), cols - a.rank());
        }

        #[test]
        fn rank_transpose_duality(rows in 0usize..5, cols in 0usize..5, seed in any::<u64>()) {
            let mut state = seed;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % 7) as i64 - 3
            };
            let mut trips = alloc::vec::Vec::new();
            for i in 0..rows {
                for j in 0..cols {
                    trips.push((i, j, next()));
                }
            }
            let a = IntMatrix::from_triplets(rows, cols, trips).unwrap();
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }
    }
}
