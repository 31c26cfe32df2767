//! Dense complex matrices with the operations the rest of the crate builds
//! on: products, conjugate transpose, submatrix extraction, and a pivoted
//! determinant.

use std::ops::Index;

use num_complex::Complex64;

use crate::combinatorics::Combination;
use crate::error::{Error, Result};

/// Dense row-major matrix over complex double-precision scalars.
///
/// Real matrices are the zero-imaginary special case, so a single storage
/// type serves the real, unitary, and Hermitian code paths alike. Entries
/// are validated to be finite at construction; NaN and infinity never enter.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    /// Wraps row-major `data` as a `rows x cols` matrix.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        let expected = rows
            .checked_mul(cols)
            .ok_or_else(|| Error::Capacity(format!("{rows}x{cols} entries overflow usize")))?;
        if data.len() != expected {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {expected} entries, got {}",
                data.len()
            )));
        }
        for (i, v) in data.iter().enumerate() {
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFinite(format!(
                    "entry at flat index {i} is {v}; matrices must be finite"
                )));
            }
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds entry `(r, c)` from a closure.
    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Complex64,
    {
        let mut data = Vec::with_capacity(rows.saturating_mul(cols));
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self::new(rows, cols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![Complex64::new(0.0, 0.0); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |r, c| {
            Complex64::new(if r == c { 1.0 } else { 0.0 }, 0.0)
        })
    }

    /// Rows given top to bottom; all must have equal length.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Dimension("matrix needs at least one row".into()));
        }
        let cols = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    /// Real rows, promoted to complex entries with zero imaginary part.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let lifted: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|row| row.iter().map(|&v| Complex64::new(v, 0.0)).collect())
            .collect();
        Self::from_rows(&lifted)
    }

    /// Column vectors packed left to right.
    pub fn from_columns(columns: &[Vec<Complex64>]) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::Dimension("matrix needs at least one column".into()));
        }
        let rows = columns[0].len();
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Dimension(format!(
                    "column {} has {} entries, expected {rows}",
                    j + 1,
                    col.len()
                )));
            }
        }
        if rows == 0 {
            return Err(Error::Dimension("columns cannot be empty".into()));
        }
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major backing slice.
    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Entry at 0-based `(r, c)`; panics out of range.
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) outside {}x{}",
            self.rows,
            self.cols
        );
        self.data[r * self.cols + c]
    }

    /// Column `c` as an owned vector.
    pub fn column(&self, c: usize) -> Vec<Complex64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// Standard matrix product.
    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut data = vec![Complex64::new(0.0, 0.0); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    data[i * rhs.cols + j] += a * rhs.data[k * rhs.cols + j];
                }
            }
        }
        Self::new(self.rows, rhs.cols, data)
    }

    /// Entrywise conjugate of the transpose; an involution.
    pub fn conjugate_transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.data[r * self.cols + c].conj());
            }
        }
        // Entries stay finite under conjugation.
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// The submatrix selected by 1-based row and column combinations.
    pub fn submatrix(&self, row_sel: &Combination, col_sel: &Combination) -> Result<Matrix> {
        let max_row = *row_sel
            .indices()
            .last()
            .expect("combinations are non-empty");
        if max_row > self.rows {
            return Err(Error::Index(format!(
                "row index {max_row} outside [1, {}]",
                self.rows
            )));
        }
        let max_col = *col_sel
            .indices()
            .last()
            .expect("combinations are non-empty");
        if max_col > self.cols {
            return Err(Error::Index(format!(
                "column index {max_col} outside [1, {}]",
                self.cols
            )));
        }
        let mut data = Vec::with_capacity(row_sel.len() * col_sel.len());
        for &r in row_sel.indices() {
            for &c in col_sel.indices() {
                data.push(self.data[(r - 1) * self.cols + (c - 1)]);
            }
        }
        Self::new(row_sel.len(), col_sel.len(), data)
    }

    /// Determinant by elimination with partial pivoting on a working copy.
    ///
    /// The pivot is the remaining entry of maximum modulus; row swaps flip
    /// the sign. A singular matrix is not an error: the computed value is
    /// simply (near) zero.
    pub fn determinant(&self) -> Result<Complex64> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut work = self.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..n {
            let mut pivot_row = col;
            let mut pivot_mag = work[col * n + col].norm();
            for r in col + 1..n {
                let mag = work[r * n + col].norm();
                if mag > pivot_mag {
                    pivot_mag = mag;
                    pivot_row = r;
                }
            }
            if pivot_mag == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            if pivot_row != col {
                for j in 0..n {
                    work.swap(col * n + j, pivot_row * n + j);
                }
                det = -det;
            }
            let pivot = work[col * n + col];
            det *= pivot;
            for r in col + 1..n {
                let factor = work[r * n + col] / pivot;
                if factor == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in col + 1..n {
                    let sub = factor * work[col * n + j];
                    work[r * n + j] -= sub;
                }
            }
        }
        Ok(det)
    }

    /// Whether the matrix equals its conjugate transpose within
    /// `tol * (1 + max_norm)`. Non-square matrices are never Hermitian.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        let scale = tol * (1.0 + self.max_norm());
        for r in 0..self.rows {
            for c in r..self.cols {
                let gap = (self.get(r, c) - self.get(c, r).conj()).norm();
                if gap > scale {
                    return false;
                }
            }
        }
        true
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) outside {}x{}",
            self.rows,
            self.cols
        );
        &self.data[r * self.cols + c]
    }
}
