//! Dense matrices over a finite field: arithmetic, reduced row echelon form,
//! kernels, and the circulant-style constructors that group-ring images and
//! two-dimensional cyclic codes are made of.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use std::fmt;

/// A rows x cols matrix over one field, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{} over {:?})", self.rows, self.cols, self.field)
    }
}

impl Matrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from explicit rows; all rows must have equal length and every
    /// element must belong to `field`.
    pub fn from_rows(field: &Field, rows: &[Vec<FieldElement>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape { reason: "rows of unequal length".into() });
        }
        let mut m = Matrix::zero(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if !field.owns(v) {
                    return Err(Error::FieldMismatch);
                }
                m.data[r * cols + c] = field.raw(v);
            }
        }
        Ok(m)
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Matrix {
        let mut m = Matrix::zero(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = field.raw(f(r, c));
            }
        }
        m
    }

    /// Circulant with the given first row: each row is the previous one
    /// shifted one step to the right.
    pub fn circulant(field: &Field, first: &[FieldElement]) -> Matrix {
        let n = first.len();
        Matrix::from_fn(field, n, n, |r, c| first[(c + n - r) % n])
    }

    /// Reverse circulant with the given first row: each row is the previous
    /// one shifted one step to the left.
    pub fn rev_circulant(field: &Field, first: &[FieldElement]) -> Matrix {
        let n = first.len();
        Matrix::from_fn(field, n, n, |r, c| first[(r + c) % n])
    }

    /// Block circulant over the given first block row (all square, same size):
    /// block (R, C) = blocks[(C - R) mod k].
    pub fn block_circulant(blocks: &[Matrix]) -> Result<Matrix> {
        Self::block_pattern(blocks, |r, c, k| (c + k - r) % k)
    }

    /// Reverse block circulant: block (R, C) = blocks[(R + C) mod k].
    pub fn block_rev_circulant(blocks: &[Matrix]) -> Result<Matrix> {
        Self::block_pattern(blocks, |r, c, k| (r + c) % k)
    }

    fn block_pattern(
        blocks: &[Matrix],
        which: impl Fn(usize, usize, usize) -> usize,
    ) -> Result<Matrix> {
        let k = blocks.len();
        let first = blocks.first().ok_or_else(|| Error::Shape {
            reason: "a block matrix needs at least one block".into(),
        })?;
        let s = first.rows;
        if blocks.iter().any(|b| b.rows != s || b.cols != s || b.field != first.field) {
            return Err(Error::Shape {
                reason: "blocks must be square, equal-sized, and over one field".into(),
            });
        }
        let mut m = Matrix::zero(&first.field, k * s, k * s);
        for br in 0..k {
            for bc in 0..k {
                let b = &blocks[which(br, bc, k)];
                for r in 0..s {
                    for c in 0..s {
                        m.data[(br * s + r) * m.cols + bc * s + c] = b.data[r * s + c];
                    }
                }
            }
        }
        Ok(m)
    }

    /// The 2n x 2n symplectic form [[O, I], [-I, O]].
    pub fn omega(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, 2 * n, 2 * n);
        for i in 0..n {
            m.data[i * 2 * n + n + i] = 1;
            m.data[(n + i) * 2 * n + i] = field.negv(1);
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.field.el(self.data[r * self.cols + c])
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = self.field.raw(v);
    }

    #[inline]
    pub(crate) fn raw_row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row(&self, r: usize) -> Vec<FieldElement> {
        self.raw_row(r).iter().map(|&v| self.field.el(v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn count_nonzero(&self) -> usize {
        self.data.iter().filter(|&&v| v != 0).count()
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zero(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        m
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape {
                reason: format!(
                    "cannot add {}x{} to {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let mut m = self.clone();
        for (a, &b) in m.data.iter_mut().zip(&other.data) {
            *a = self.field.addv(*a, b);
        }
        Ok(m)
    }

    pub fn neg(&self) -> Matrix {
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a = self.field.negv(*a);
        }
        m
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: FieldElement) -> Matrix {
        let s = self.field.raw(s);
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a = self.field.mulv(*a, s);
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Shape {
                reason: format!(
                    "cannot multiply {}x{} by {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let f = &self.field;
        let mut m = Matrix::zero(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == 0 {
                    continue;
                }
                let (orow, mrow) = (other.raw_row(k), &mut m.data[r * other.cols..]);
                for (mo, &b) in mrow.iter_mut().zip(orow) {
                    if b != 0 {
                        *mo = f.addv(*mo, f.mulv(a, b));
                    }
                }
            }
        }
        Ok(m)
    }

    /// Stack side by side: [self | other].
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows {
            return Err(Error::Shape {
                reason: format!("cannot join {} rows with {} rows", self.rows, other.rows),
            });
        }
        let mut m = Matrix::zero(&self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            m.data[r * m.cols..r * m.cols + self.cols].copy_from_slice(self.raw_row(r));
            m.data[r * m.cols + self.cols..(r + 1) * m.cols].copy_from_slice(other.raw_row(r));
        }
        Ok(m)
    }

    /// Apply a -> a^p to every entry.
    pub fn entrywise_frobenius(&self) -> Matrix {
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a = self.field.frobv(*a);
        }
        m
    }

    /// Reduced row echelon form with pivot bookkeeping.
    pub fn rref(&self) -> RowEchelon {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..cols {
            let Some(pr) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
                continue;
            };
            if pr != rank {
                for c in 0..cols {
                    a.swap(rank * cols + c, pr * cols + c);
                }
            }
            let inv = f.invv(a[rank * cols + col]);
            for c in col..cols {
                a[rank * cols + c] = f.mulv(a[rank * cols + c], inv);
            }
            for r in 0..rows {
                if r == rank {
                    continue;
                }
                let factor = a[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let sub = f.mulv(factor, a[rank * cols + c]);
                    a[r * cols + c] = f.subv(a[r * cols + c], sub);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows {
                break;
            }
        }
        a.truncate(rank * cols);
        RowEchelon {
            mat: Matrix { field: f, rows: rank, cols, data: a },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// A matrix K whose rows form a basis of the right kernel
    /// {x : self * x^T = 0}; K has cols() columns and cols() - rank() rows.
    pub fn right_kernel(&self) -> Matrix {
        self.rref().right_kernel()
    }

    /// Entries rendered as field literals, row by row.
    pub fn to_literals(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.raw_row(r).iter().map(|&v| self.field.literal(self.field.el(v))).collect())
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lits = self.to_literals();
        let width = lits.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in &lits {
            let mut first = true;
            for v in row {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{v:>width$}")?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The RREF of some matrix: a full-rank matrix in reduced row echelon form
/// plus the pivot column of each row. Supports fast membership tests for the
/// row space.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    mat: Matrix,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn rank(&self) -> usize {
        self.mat.rows
    }

    pub fn cols(&self) -> usize {
        self.mat.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The echelon basis itself (rank() rows).
    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    /// Is the vector in the row space?
    pub fn contains(&self, v: &[FieldElement]) -> Result<bool> {
        if v.len() != self.mat.cols {
            return Err(Error::Shape {
                reason: format!("vector length {} against width {}", v.len(), self.mat.cols),
            });
        }
        let f = &self.mat.field;
        let mut raw = Vec::with_capacity(v.len());
        for &x in v {
            if !f.owns(x) {
                return Err(Error::FieldMismatch);
            }
            raw.push(f.raw(x));
        }
        Ok(self.contains_raw(&raw))
    }

    pub(crate) fn contains_raw(&self, v: &[u32]) -> bool {
        let mut v = v.to_vec();
        self.reduce_raw(&mut v);
        v.iter().all(|&x| x == 0)
    }

    /// Subtract off the projection onto the row space in place.
    pub(crate) fn reduce_raw(&self, v: &mut [u32]) {
        let f = &self.mat.field;
        for (r, &p) in self.pivots.iter().enumerate() {
            let factor = v[p];
            if factor == 0 {
                continue;
            }
            for (x, &b) in v[p..].iter_mut().zip(&self.mat.raw_row(r)[p..]) {
                if b != 0 {
                    *x = f.subv(*x, f.mulv(factor, b));
                }
            }
        }
    }

    /// Basis of {x : M x^T = 0} for the original matrix M, one row per free
    /// column.
    pub fn right_kernel(&self) -> Matrix {
        let f = &self.mat.field;
        let cols = self.mat.cols;
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; cols];
            for &p in &self.pivots {
                s[p] = true;
            }
            s
        };
        let free: Vec<usize> = (0..cols).filter(|&c| !pivot_set[c]).collect();
        let mut k = Matrix::zero(f, free.len(), cols);
        for (row, &fc) in free.iter().enumerate() {
            k.data[row * cols + fc] = 1;
            for (r, &p) in self.pivots.iter().enumerate() {
                k.data[row * cols + p] = f.negv(self.mat.data[r * cols + fc]);
            }
        }
        k
    }
}
