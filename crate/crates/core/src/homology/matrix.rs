//! Exact integer matrices.
//!
//! [`SparseIntMatrix`] carries boundary maps; [`DenseIntMatrix`] is the working
//! storage of the Smith reduction and of the unimodular transforms.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Column-major sparse matrix of nonzero arbitrary-precision integers.
///
/// Each column keeps its entries sorted by row with no duplicates and no
/// stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets. Repeated keys are
    /// summed and zero results dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut columns: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::Format(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            columns[c].push((r, v));
        }
        for col in &mut columns {
            normalize_column(col);
        }
        Ok(SparseIntMatrix { rows, columns })
    }

    /// Builds a matrix from per-column entry lists.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, BigInt)>>) -> Result<Self> {
        let cols = columns.len();
        let triplets = columns
            .into_iter()
            .enumerate()
            .flat_map(|(c, col)| col.into_iter().map(move |(r, v)| (r, c, v)));
        Self::from_triplets(rows, cols, triplets)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn column(&self, c: usize) -> &[(usize, BigInt)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        match self.columns[c].binary_search_by_key(&r, |e| e.0) {
            Ok(k) => self.columns[c][k].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Overwrites one entry; a zero value removes it.
    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(
            r < self.rows && c < self.cols(),
            "entry ({r}, {c}) out of bounds"
        );
        let col = &mut self.columns[c];
        match col.binary_search_by_key(&r, |e| e.0) {
            Ok(k) if v.is_zero() => {
                col.remove(k);
            }
            Ok(k) => col[k].1 = v,
            Err(_) if v.is_zero() => {}
            Err(k) => col.insert(k, (r, v)),
        }
    }

    /// Triplets in column-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn transpose(&self) -> SparseIntMatrix {
        let mut columns: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.triplets() {
            columns[r].push((c, v.clone()));
        }
        SparseIntMatrix {
            rows: self.cols(),
            columns,
        }
    }

    /// Exact product `self · rhs`.
    pub fn mul(&self, rhs: &SparseIntMatrix) -> Result<SparseIntMatrix> {
        if self.cols() != rhs.rows {
            return Err(Error::Format(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols(),
                rhs.rows,
                rhs.cols()
            )));
        }
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc = Vec::new();
                for (k, v) in col {
                    for (r, w) in &self.columns[*k] {
                        acc.push((*r, v * w));
                    }
                }
                normalize_column(&mut acc);
                acc
            })
            .collect();
        Ok(SparseIntMatrix {
            rows: self.rows,
            columns,
        })
    }

    pub fn add(&self, rhs: &SparseIntMatrix) -> Result<SparseIntMatrix> {
        if self.rows != rhs.rows || self.cols() != rhs.cols() {
            return Err(Error::Format(
                "cannot add matrices of different shapes".into(),
            ));
        }
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(a, b)| {
                let mut acc: Vec<_> = a.iter().chain(b).cloned().collect();
                normalize_column(&mut acc);
                acc
            })
            .collect();
        Ok(SparseIntMatrix {
            rows: self.rows,
            columns,
        })
    }

    pub fn scale(&self, k: &BigInt) -> SparseIntMatrix {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(r, v)| (*r, v * k))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        SparseIntMatrix {
            rows: self.rows,
            columns,
        }
    }

    /// `self · x` for a dense vector `x`.
    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols(), "vector length mismatch");
        let mut out = vec![BigInt::zero(); self.rows];
        for (c, xc) in x.iter().enumerate() {
            if xc.is_zero() {
                continue;
            }
            for (r, v) in &self.columns[c] {
                out[*r] += v * xc;
            }
        }
        out
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> SparseIntMatrix {
        let mut new_row = vec![usize::MAX; self.rows];
        for (i, &r) in rows.iter().enumerate() {
            new_row[r] = i;
        }
        let columns = cols
            .iter()
            .map(|&c| {
                let mut col: Vec<_> = self.columns[c]
                    .iter()
                    .filter(|(r, _)| new_row[*r] != usize::MAX)
                    .map(|(r, v)| (new_row[*r], v.clone()))
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        SparseIntMatrix {
            rows: rows.len(),
            columns,
        }
    }

    pub fn to_dense(&self) -> DenseIntMatrix {
        let mut d = DenseIntMatrix::zeros(self.rows, self.cols());
        for (r, c, v) in self.triplets() {
            d[(r, c)] = v.clone();
        }
        d
    }
}

fn normalize_column(col: &mut Vec<(usize, BigInt)>) {
    col.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(col.len());
    for (r, v) in col.drain(..) {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv += v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    *col = out;
}

/// Row-major dense integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseIntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl DenseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseIntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        DenseIntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
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

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &DenseIntMatrix) -> DenseIntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn transpose(&self) -> DenseIntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += k · row[source]`.
    pub fn add_row_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[source * self.cols + j];
            if !s.is_zero() {
                let delta = s * k;
                self.data[target * self.cols + j] += delta;
            }
        }
    }

    /// `col[target] += k · col[source]`.
    pub fn add_col_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + source];
            if !s.is_zero() {
                let delta = s * k;
                self.data[i * self.cols + target] += delta;
            }
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for v in &mut self.data[i * self.cols..(i + 1) * self.cols] {
            *v = -std::mem::take(v);
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }

    pub fn to_sparse(&self) -> SparseIntMatrix {
        let triplets = (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !self[(i, j)].is_zero())
            .map(|(i, j)| (i, j, self[(i, j)].clone()));
        SparseIntMatrix::from_triplets(self.rows, self.cols, triplets).expect("indices in range")
    }
}

impl Index<(usize, usize)> for DenseIntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for DenseIntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for DenseIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseIntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
