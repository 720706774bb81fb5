//! Dense row-reduction over `F_p`.
//!
//! Backs the finite-dimensional computations: graded slices of modules,
//! kernels of Frobenius-twisted maps, and the brute-force homomorphism
//! spaces of the oracle. Matrices are small (hundreds of rows), so plain
//! Gauss-Jordan elimination with exact field arithmetic is enough.

use crate::error::AlgebraError;
use crate::field::{Fp, PrimeField};

/// A dense matrix over `F_p`, stored by rows. The column count is fixed at
/// construction; rows are appended as they are produced.
#[derive(Debug, Clone)]
pub struct MatFp {
    field: PrimeField,
    cols: usize,
    rows: Vec<Vec<Fp>>,
}

impl MatFp {
    pub fn new(field: PrimeField, cols: usize) -> MatFp {
        MatFp {
            field,
            cols,
            rows: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Fp>] {
        &self.rows
    }

    pub fn push_row(&mut self, row: Vec<Fp>) {
        assert_eq!(row.len(), self.cols, "row length must match column count");
        self.rows.push(row);
    }

    /// Reduced row echelon form in place. Zero rows are dropped, so the
    /// surviving rows are a canonical basis of the row space. Returns the
    /// pivot column of each surviving row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut next_row = 0usize;
        for col in 0..self.cols {
            let Some(src) = (next_row..self.rows.len()).find(|&r| self.rows[r][col] != f.zero())
            else {
                continue;
            };
            self.rows.swap(next_row, src);
            let inv = f
                .inv(self.rows[next_row][col])
                .expect("pivot entry is nonzero");
            for entry in &mut self.rows[next_row] {
                *entry = f.mul(*entry, inv);
            }
            let pivot_row = self.rows[next_row].clone();
            for (r, row) in self.rows.iter_mut().enumerate() {
                if r == next_row || row[col] == f.zero() {
                    continue;
                }
                let factor = row[col];
                for (entry, &p) in row.iter_mut().zip(&pivot_row) {
                    *entry = f.sub(*entry, f.mul(factor, p));
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == self.rows.len() {
                break;
            }
        }
        self.rows.truncate(next_row);
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut copy = self.clone();
        copy.rref().len()
    }

    /// Whether `v` lies in the row space. The receiver must already be in
    /// reduced row echelon form with the given pivot columns.
    pub fn row_space_contains(&self, pivots: &[usize], v: &[Fp]) -> bool {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        let mut residual = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(pivots) {
            let factor = residual[pc];
            if factor == f.zero() {
                continue;
            }
            for (entry, &p) in residual.iter_mut().zip(row) {
                *entry = f.sub(*entry, f.mul(factor, p));
            }
        }
        residual.iter().all(|&c| c == f.zero())
    }

    /// A basis of the right kernel `{v : Av = 0}`, one vector per free
    /// column of the echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<Fp>> {
        let f = self.field;
        let mut copy = self.clone();
        let pivots = copy.rref();
        let is_pivot = {
            let mut flags = vec![false; self.cols];
            for &p in &pivots {
                flags[p] = true;
            }
            flags
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &pc) in copy.rows.iter().zip(&pivots) {
                v[pc] = f.neg(row[free]);
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `Ax = b`; `None` when inconsistent. Used for change-of-basis
    /// computations where a witness is needed, not just membership.
    pub fn solve(&self, b: &[Fp]) -> Result<Option<Vec<Fp>>, AlgebraError> {
        assert_eq!(b.len(), self.rows.len(), "b length must match row count");
        let f = self.field;
        // Augment [A | b] transposed into row form: work on A with b carried
        // along as an extra column, then read the particular solution off
        // the pivots.
        let mut aug = MatFp::new(f, self.cols + 1);
        for (row, &bi) in self.rows.iter().zip(b) {
            let mut r = row.clone();
            r.push(bi);
            aug.push_row(r);
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &pc) in aug.rows.iter().zip(&pivots) {
            x[pc] = row[self.cols];
        }
        Ok(Some(x))
    }
}

/// Whether two collections of vectors span the same subspace.
pub fn same_span(field: PrimeField, cols: usize, a: &[Vec<Fp>], b: &[Vec<Fp>]) -> bool {
    let mut ma = MatFp::new(field, cols);
    for r in a {
        ma.push_row(r.clone());
    }
    let mut mb = MatFp::new(field, cols);
    for r in b {
        mb.push_row(r.clone());
    }
    ma.rref();
    mb.rref();
    ma.rows == mb.rows
}

/// Whether span(a) contains span(b).
pub fn span_contains(field: PrimeField, cols: usize, a: &[Vec<Fp>], b: &[Vec<Fp>]) -> bool {
    let mut ma = MatFp::new(field, cols);
    for r in a {
        ma.push_row(r.clone());
    }
    let pivots = ma.rref();
    b.iter().all(|v| ma.row_space_contains(&pivots, v))
}
