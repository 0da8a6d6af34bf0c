//! Sparse elimination of unit pivots.
//!
//! A `±1` entry can be cleared from its row and column by unimodular
//! operations without changing the remaining invariant factors, so each
//! such pivot contributes one factor `1` and deletes a row and a column.
//! Pivots are taken from the sparsest eligible column, and within it from
//! the shortest row. Whatever has no unit entry left is handed back as a
//! dense residual.
//!
//! Arithmetic first runs on checked `i64`; on overflow the whole elimination
//! restarts on `BigInt`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::{DenseIntMatrix, SparseIntMatrix};

/// Returns the number of unit pivots eliminated and the residual matrix.
pub fn eliminate_unit_pivots(m: &SparseIntMatrix) -> (usize, DenseIntMatrix) {
    if let Some(small) = Elimination::<i64>::load(m) {
        if let Some(done) = small.run() {
            return done;
        }
    }
    Elimination::<BigInt>::load(m)
        .expect("BigInt load is infallible")
        .run()
        .expect("BigInt cannot overflow")
}

trait Coeff: Clone + Sized {
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn is_unit(&self) -> bool;
    fn is_zero(&self) -> bool;
    /// `self * other`
    fn mul(&self, other: &Self) -> Option<Self>;
    /// `self - f * other`
    fn sub_mul(&self, f: &Self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Coeff for i64 {
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub_mul(&self, f: &Self, other: &Self) -> Option<Self> {
        self.checked_sub(f.checked_mul(*other)?)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Coeff for BigInt {
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub_mul(&self, f: &Self, other: &Self) -> Option<Self> {
        Some(self - f * other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ColState {
    Queued,
    Deferred,
    Done,
}

struct Elimination<T> {
    /// Live rows, entries sorted by column.
    rows: Vec<Vec<(u32, T)>>,
    row_live: Vec<bool>,
    /// Rows holding a nonzero entry in each column (unordered).
    col_rows: Vec<Vec<u32>>,
    state: Vec<ColState>,
    queue: BTreeSet<(usize, u32)>,
}

impl<T: Coeff> Elimination<T> {
    fn load(m: &SparseIntMatrix) -> Option<Self> {
        let mut rows: Vec<Vec<(u32, T)>> = vec![Vec::new(); m.rows()];
        let mut col_rows = vec![Vec::new(); m.cols()];
        for (r, c, v) in m.triplets() {
            rows[r].push((c as u32, T::from_big(v)?));
            col_rows[c].push(r as u32);
        }
        for row in &mut rows {
            row.sort_unstable_by_key(|e| e.0);
        }
        let queue = col_rows
            .iter()
            .enumerate()
            .map(|(c, rs)| (rs.len(), c as u32))
            .collect();
        Some(Elimination {
            rows,
            row_live: vec![true; m.rows()],
            state: vec![ColState::Queued; m.cols()],
            col_rows,
            queue,
        })
    }

    fn run(mut self) -> Option<(usize, DenseIntMatrix)> {
        let mut pivots = 0;
        while let Some((count, col)) = self.queue.pop_first() {
            if count == 0 {
                self.state[col as usize] = ColState::Done;
                continue;
            }
            match self.pick_row(col) {
                Some(row) => {
                    self.pivot(row, col)?;
                    pivots += 1;
                }
                None => self.state[col as usize] = ColState::Deferred,
            }
        }
        Some((pivots, self.residual()))
    }

    fn entry(&self, row: u32, col: u32) -> &T {
        let r = &self.rows[row as usize];
        let k = r
            .binary_search_by_key(&col, |e| e.0)
            .expect("entry indexed by col_rows");
        &r[k].1
    }

    fn pick_row(&self, col: u32) -> Option<u32> {
        self.col_rows[col as usize]
            .iter()
            .copied()
            .filter(|&r| self.entry(r, col).is_unit())
            .min_by_key(|&r| (self.rows[r as usize].len(), r))
    }

    fn pivot(&mut self, prow: u32, pcol: u32) -> Option<()> {
        let pivot_row = std::mem::take(&mut self.rows[prow as usize]);
        self.row_live[prow as usize] = false;
        let pv = self.entry_in(&pivot_row, pcol).clone();
        let targets: Vec<u32> = self.col_rows[pcol as usize]
            .iter()
            .copied()
            .filter(|&r| r != prow)
            .collect();
        for target in targets {
            // pv = ±1, so pv is its own inverse
            let f = self.entry(target, pcol).mul(&pv)?;
            self.subtract_row(target, &f, &pivot_row)?;
        }
        // drop the pivot row from every column it touched
        for (c, _) in &pivot_row {
            self.remove_from_col(*c, prow);
        }
        self.state[pcol as usize] = ColState::Done;
        self.queue
            .remove(&(self.col_rows[pcol as usize].len(), pcol));
        debug_assert!(self.col_rows[pcol as usize].is_empty());
        Some(())
    }

    fn entry_in<'a>(&self, row: &'a [(u32, T)], col: u32) -> &'a T {
        let k = row
            .binary_search_by_key(&col, |e| e.0)
            .expect("pivot entry present");
        &row[k].1
    }

    /// `row[target] -= f · pivot_row`, keeping the column index in sync.
    fn subtract_row(&mut self, target: u32, f: &T, pivot_row: &[(u32, T)]) -> Option<()> {
        let old = std::mem::take(&mut self.rows[target as usize]);
        let mut merged = Vec::with_capacity(old.len() + pivot_row.len());
        let (mut i, mut j) = (0, 0);
        let mut added = Vec::new();
        let mut removed = Vec::new();
        while i < old.len() || j < pivot_row.len() {
            let oc = old.get(i).map(|e| e.0);
            let pc = pivot_row.get(j).map(|e| e.0);
            match (oc, pc) {
                (Some(a), Some(b)) if a == b => {
                    let v = old[i].1.sub_mul(f, &pivot_row[j].1)?;
                    if v.is_zero() {
                        removed.push(a);
                    } else {
                        merged.push((a, v));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a < b => {
                    merged.push(old[i].clone());
                    i += 1;
                }
                (Some(_), None) => {
                    merged.push(old[i].clone());
                    i += 1;
                }
                (_, Some(b)) => {
                    let v = pivot_row[j].1.mul(f)?.neg()?;
                    merged.push((b, v));
                    added.push(b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        self.rows[target as usize] = merged;
        for c in removed {
            self.remove_from_col(c, target);
        }
        for c in added {
            let len = self.col_rows[c as usize].len();
            self.col_rows[c as usize].push(target);
            self.requeue(c, len);
        }
        // values changed in every column of the pivot row: a deferred column may
        // have gained a unit
        for (c, _) in pivot_row {
            if self.state[*c as usize] == ColState::Deferred {
                self.state[*c as usize] = ColState::Queued;
                self.queue.insert((self.col_rows[*c as usize].len(), *c));
            }
        }
        Some(())
    }

    fn remove_from_col(&mut self, c: u32, row: u32) {
        let rows = &mut self.col_rows[c as usize];
        let Some(k) = rows.iter().position(|&r| r == row) else {
            return;
        };
        let len = rows.len();
        rows.swap_remove(k);
        self.requeue(c, len);
    }

    fn requeue(&mut self, c: u32, old_len: usize) {
        if self.state[c as usize] == ColState::Queued && self.queue.remove(&(old_len, c)) {
            self.queue.insert((self.col_rows[c as usize].len(), c));
        }
    }

    fn residual(&self) -> DenseIntMatrix {
        let live_rows: Vec<usize> = (0..self.rows.len())
            .filter(|&r| self.row_live[r] && !self.rows[r].is_empty())
            .collect();
        let live_cols: Vec<usize> = (0..self.state.len())
            .filter(|&c| self.state[c] == ColState::Deferred && !self.col_rows[c].is_empty())
            .collect();
        let mut col_pos = vec![usize::MAX; self.state.len()];
        for (k, &c) in live_cols.iter().enumerate() {
            col_pos[c] = k;
        }
        let mut out = DenseIntMatrix::zeros(live_rows.len(), live_cols.len());
        for (i, &r) in live_rows.iter().enumerate() {
            for (c, v) in &self.rows[r] {
                let k = col_pos[*c as usize];
                debug_assert!(k != usize::MAX, "entry left in an eliminated column");
                out[(i, k)] = v.to_big();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_unit_pivots_leave_an_empty_residual() {
        let m = DenseIntMatrix::from_i64_rows(&[&[1, 1, 0], &[0, -1, 1], &[1, 0, 1]]).to_sparse();
        let (pivots, residual) = eliminate_unit_pivots(&m);
        // rank 2: third row is the sum of the first two
        assert_eq!(pivots, 2);
        assert_eq!(residual.rows() * residual.cols(), 0);
    }

    #[test]
    fn non_unit_block_is_returned() {
        let m = DenseIntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]).to_sparse();
        let (pivots, residual) = eliminate_unit_pivots(&m);
        assert_eq!(pivots, 0);
        assert_eq!(residual, DenseIntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]));
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2 + 7;
        let m = DenseIntMatrix::from_i64_rows(&[&[1, big, 0], &[1, -big, 5]]).to_sparse();
        let (pivots, residual) = eliminate_unit_pivots(&m);
        assert_eq!(pivots, 1);
        let mut remaining: Vec<BigInt> = (0..residual.cols())
            .map(|j| residual[(0, j)].clone())
            .collect();
        remaining.sort();
        assert_eq!(
            remaining,
            vec![BigInt::from(-2) * BigInt::from(big), BigInt::from(5)]
        );
    }
}
