//! Dense exact linear algebra over `Q(eps)`.
//!
//! The solvers in this crate reduce to small linear systems whose entries
//! are rational functions. This module provides the one kernel they share:
//! Gauss-Jordan elimination with exact field arithmetic, exposed as
//! [`Matrix`] with [`Matrix::rref`], [`Matrix::kernel_basis`], and
//! [`Matrix::solve`]. No pivots are compared by magnitude (there is no
//! magnitude); any nonzero entry is a valid pivot.

use crate::scalars::RatFunc;

/// A dense row-major matrix over `Q(eps)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
}

impl Matrix {
    /// A `rows x cols` zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![RatFunc::zero(); rows * cols],
        }
    }

    /// The `n x n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = RatFunc::one();
        }
        m
    }

    /// Builds a matrix from rows.
    ///
    /// # Panics
    ///
    /// Panics if the rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The entry at `(i, j)`.
    pub fn at(&self, i: usize, j: usize) -> &RatFunc {
        &self.data[i * self.cols + j]
    }

    /// Mutable access to the entry at `(i, j)`.
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut RatFunc {
        &mut self.data[i * self.cols + j]
    }

    /// Matrix product `self * rhs`.
    ///
    /// # Panics
    ///
    /// Panics on dimension mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    *out.at_mut(i, j) += &t;
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = RatFunc::zero();
                for (j, vj) in v.iter().enumerate() {
                    let a = self.at(i, j);
                    if !a.is_zero() && !vj.is_zero() {
                        acc += &(a * vj);
                    }
                }
                acc
            })
            .collect()
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// column of each pivot row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) = (pivot_row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, found);
            let inv = self.at(pivot_row, col).inverse().expect("pivot is nonzero");
            for j in col..self.cols {
                let scaled = self.at(pivot_row, j) * &inv;
                *self.at_mut(pivot_row, j) = scaled;
            }
            for r in 0..self.rows {
                if r == pivot_row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for j in col..self.cols {
                    let t = self.at(pivot_row, j) * &factor;
                    *self.at_mut(r, j) -= &t;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    /// A basis of the right kernel `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<RatFunc>> {
        let mut reduced = self.clone();
        let pivots = reduced.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![RatFunc::zero(); self.cols];
            v[free] = RatFunc::one();
            for (row, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -reduced.at(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b`, returning any solution, or `None` when the
    /// system is inconsistent.
    pub fn solve(&self, b: &[RatFunc]) -> Option<Vec<RatFunc>> {
        assert_eq!(self.rows, b.len(), "dimension mismatch");
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = bi.clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![RatFunc::zero(); self.cols];
        for (row, &pcol) in pivots.iter().enumerate() {
            x[pcol] = aug.at(row, self.cols).clone();
        }
        Some(x)
    }

    /// Rank via elimination on a copy.
    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}
