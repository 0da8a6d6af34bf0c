//! Smith normal form over the integers.
//!
//! Two routes share one result type. The dense route diagonalizes by
//! elementary row and column operations, always pivoting on a nonzero entry
//! of least absolute value (ties broken by row, then column), and can record
//! the unimodular transforms `U`, `V` with `U·M·V = diag`. The sparse route
//! (used when no transforms are requested) first eliminates `±1` pivots
//! directly on the sparse structure and only densifies what is left.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{DenseIntMatrix, SparseIntMatrix};
use super::sparse_elim;

/// Unimodular transforms of a Smith reduction together with their inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transforms {
    pub u: DenseIntMatrix,
    pub u_inv: DenseIntMatrix,
    pub v: DenseIntMatrix,
    pub v_inv: DenseIntMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Positive invariant factors `d_1 | d_2 | … | d_k`.
    pub diag: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
    pub transforms: Option<Transforms>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diag.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn divisibility_chain_holds(&self) -> bool {
        self.diag.iter().all(Signed::is_positive)
            && self.diag.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
    }

    /// The `rows × cols` diagonal matrix carrying the invariant factors.
    pub fn diagonal_matrix(&self) -> DenseIntMatrix {
        let mut d = DenseIntMatrix::zeros(self.rows, self.cols);
        for (i, v) in self.diag.iter().enumerate() {
            d[(i, i)] = v.clone();
        }
        d
    }

    /// Checks `U·M·V = diag` exactly, `det U, det V = ±1`, and that the stored
    /// inverses are inverses. Returns `false` when no transforms were kept.
    pub fn verify_transforms(&self, m: &SparseIntMatrix) -> bool {
        let Some(t) = &self.transforms else {
            return false;
        };
        let dense = m.to_dense();
        let unit = |x: BigInt| x.abs().is_one();
        t.u.mul(&dense).mul(&t.v) == self.diagonal_matrix()
            && unit(t.u.determinant())
            && unit(t.v.determinant())
            && t.u.mul(&t.u_inv) == DenseIntMatrix::identity(self.rows)
            && t.v.mul(&t.v_inv) == DenseIntMatrix::identity(self.cols)
    }
}

/// Smith normal form of `m`. With `want_transforms` the dense route runs on
/// the whole matrix and records `U`, `V` and their inverses.
pub fn smith_normal_form(m: &SparseIntMatrix, want_transforms: bool) -> SmithForm {
    if want_transforms {
        smith_dense(m.to_dense(), true)
    } else {
        let (unit_pivots, residual) = sparse_elim::eliminate_unit_pivots(m);
        let mut diag = vec![BigInt::one(); unit_pivots];
        diag.extend(smith_dense(residual, false).diag);
        SmithForm {
            diag,
            rows: m.rows(),
            cols: m.cols(),
            transforms: None,
        }
    }
}

/// Dense Smith reduction.
pub fn smith_dense(mut a: DenseIntMatrix, track: bool) -> SmithForm {
    let (rows, cols) = (a.rows(), a.cols());
    let mut t = track.then(|| Transforms {
        u: DenseIntMatrix::identity(rows),
        u_inv: DenseIntMatrix::identity(rows),
        v: DenseIntMatrix::identity(cols),
        v_inv: DenseIntMatrix::identity(cols),
    });
    let mut ops = Ops {
        a: &mut a,
        t: t.as_mut(),
    };
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = least_entry(ops.a, k) else {
            break;
        };
        ops.swap_rows(k, pi);
        ops.swap_cols(k, pj);
        loop {
            let mut remainder = false;
            for i in k + 1..rows {
                if ops.a[(i, k)].is_zero() {
                    continue;
                }
                let q = ops.a[(i, k)].div_floor(&ops.a[(k, k)]);
                ops.add_row_multiple(i, k, &-q);
                remainder |= !ops.a[(i, k)].is_zero();
            }
            for j in k + 1..cols {
                if ops.a[(k, j)].is_zero() {
                    continue;
                }
                let q = ops.a[(k, j)].div_floor(&ops.a[(k, k)]);
                ops.add_col_multiple(j, k, &-q);
                remainder |= !ops.a[(k, j)].is_zero();
            }
            if remainder {
                // a remainder smaller than the pivot survived: re-pivot
                let (pi, pj) = least_entry(ops.a, k).expect("submatrix is nonzero");
                ops.swap_rows(k, pi);
                ops.swap_cols(k, pj);
                continue;
            }
            match first_non_multiple(ops.a, k) {
                Some(i) => ops.add_row_multiple(k, i, &BigInt::one()),
                None => break,
            }
        }
        if ops.a[(k, k)].is_negative() {
            ops.negate_row(k);
        }
        k += 1;
    }
    let diag = (0..k).map(|i| a[(i, i)].clone()).collect();
    SmithForm {
        diag,
        rows,
        cols,
        transforms: t,
    }
}

/// Nonzero entry of least absolute value in the trailing submatrix from
/// `(k, k)`; ties go to the smallest row, then column.
fn least_entry(a: &DenseIntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, b)| abs < *b) {
                let done = abs.is_one();
                best = Some(((i, j), abs));
                if done {
                    return best.map(|b| b.0);
                }
            }
        }
    }
    best.map(|b| b.0)
}

/// A row below `k` holding an entry not divisible by the pivot `a[k][k]`.
fn first_non_multiple(a: &DenseIntMatrix, k: usize) -> Option<usize> {
    let pivot = &a[(k, k)];
    if pivot.abs().is_one() {
        return None;
    }
    (k + 1..a.rows()).find(|&i| (k + 1..a.cols()).any(|j| !a[(i, j)].is_multiple_of(pivot)))
}

/// Elementary operations applied to the working matrix and mirrored on the
/// transforms.
struct Ops<'a> {
    a: &'a mut DenseIntMatrix,
    t: Option<&'a mut Transforms>,
}

impl Ops<'_> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(t) = self.t.as_deref_mut() {
            t.u.swap_rows(i, j);
            t.u_inv.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(t) = self.t.as_deref_mut() {
            t.v.swap_cols(i, j);
            t.v_inv.swap_rows(i, j);
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        self.a.add_row_multiple(target, source, q);
        if let Some(t) = self.t.as_deref_mut() {
            t.u.add_row_multiple(target, source, q);
            t.u_inv.add_col_multiple(source, target, &-q);
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        self.a.add_col_multiple(target, source, q);
        if let Some(t) = self.t.as_deref_mut() {
            t.v.add_col_multiple(target, source, q);
            t.v_inv.add_row_multiple(source, target, &-q);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(t) = self.t.as_deref_mut() {
            t.u.negate_row(i);
            t.u_inv.negate_col(i);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sparse(rows: &[&[i64]]) -> SparseIntMatrix {
        DenseIntMatrix::from_i64_rows(rows).to_sparse()
    }

    fn diag_of(rows: &[&[i64]]) -> Vec<i64> {
        let m = sparse(rows);
        let f = smith_normal_form(&m, true);
        assert!(f.verify_transforms(&m));
        let g = smith_normal_form(&m, false);
        assert_eq!(f.diag, g.diag, "dense and sparse routes disagree");
        f.diag.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn two_by_two_example() {
        // d1 = gcd of entries = 2, d1·d2 = |det| = 8
        assert_eq!(diag_of(&[&[2, 4], &[6, 8]]), vec![2, 4]);
    }

    #[test]
    fn identity_and_ones_row() {
        assert_eq!(
            diag_of(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            vec![1, 1, 1]
        );
        assert_eq!(diag_of(&[&[1, 1, 1, 1, 1]]), vec![1]);
    }

    #[test]
    fn zero_and_empty_matrices() {
        assert!(diag_of(&[&[0, 0], &[0, 0]]).is_empty());
        let empty = SparseIntMatrix::zeros(0, 4);
        let f = smith_normal_form(&empty, true);
        assert_eq!(f.rank(), 0);
        assert!(f.verify_transforms(&empty));
        let f = smith_normal_form(&SparseIntMatrix::zeros(3, 0), false);
        assert_eq!(f.rank(), 0);
    }

    #[test]
    fn divisibility_fixup_is_applied() {
        // diag(2, 3) is not in Smith form; the form is diag(1, 6)
        assert_eq!(diag_of(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(
            diag_of(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]),
            vec![2, 2, 60]
        );
    }

    #[test]
    fn torsion_of_a_klein_bottle_style_relation() {
        assert_eq!(diag_of(&[&[1, 1], &[1, -1]]), vec![1, 2]);
    }
}
