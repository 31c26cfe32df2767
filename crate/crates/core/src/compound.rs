//! Minors, the row-minor vector, compound matrices, and the
//! product-determinant identity that ties them together.
//!
//! The k-th compound of a matrix collects every k-by-k minor, with rows and
//! columns indexed by k-combinations in lexicographic order. Compounds are
//! multiplicative: the compound of a product equals the product of the
//! compounds, which is what lets cross vectors transform consistently under
//! a change of frame.

use num_complex::Complex64;

use crate::combinatorics::{enumerate_combinations, Combination};
use crate::crossprod::CrossVector;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Default cap on source dimensions when materializing a compound matrix.
/// C(n, k) grows combinatorially and the result is stored densely.
pub const DEFAULT_DIMENSION_CAP: usize = 20;

/// Determinant of the submatrix selected by equal-size row and column sets.
pub fn minor(a: &Matrix, row_sel: &Combination, col_sel: &Combination) -> Result<Complex64> {
    if row_sel.len() != col_sel.len() {
        return Err(Error::Dimension(format!(
            "minor selections must have equal size, got {} rows and {} columns",
            row_sel.len(),
            col_sel.len()
        )));
    }
    a.submatrix(row_sel, col_sel)?.determinant()
}

/// The vector of all m-by-m row minors of an n-by-m matrix, in lexicographic
/// order of the row selections.
///
/// When the columns of `x` are m vectors, this is their cross product; when
/// m = n it collapses to the single component `determinant(x)`.
pub fn row_minor_vector(x: &Matrix) -> Result<CrossVector> {
    let (n, m) = (x.rows(), x.cols());
    if m > n {
        return Err(Error::Dimension(format!(
            "row minors need at least as many rows as columns, got {n}x{m}"
        )));
    }
    let all_cols = Combination::full(m)?;
    let labels = enumerate_combinations(n, m)?;
    let mut components = Vec::with_capacity(labels.len());
    for label in labels {
        let value = minor(x, &label, &all_cols)?;
        components.push((label, value));
    }
    CrossVector::from_components(n, m, components)
}

/// All k-by-k minors of a source matrix, indexed by k-combinations of its
/// rows and columns in lexicographic order.
#[derive(Debug, Clone)]
pub struct CompoundMatrix {
    k: usize,
    source_rows: usize,
    source_cols: usize,
    matrix: Matrix,
    row_labels: Vec<Combination>,
    col_labels: Vec<Combination>,
}

impl CompoundMatrix {
    /// Minor order.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn source_rows(&self) -> usize {
        self.source_rows
    }

    pub fn source_cols(&self) -> usize {
        self.source_cols
    }

    /// The dense `C(source_rows, k) x C(source_cols, k)` matrix of minors.
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Row labels; the lexicographic k-combinations of the source rows.
    pub fn row_labels(&self) -> &[Combination] {
        &self.row_labels
    }

    /// Column labels; the lexicographic k-combinations of the source columns.
    pub fn col_labels(&self) -> &[Combination] {
        &self.col_labels
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.matrix.get(i, j)
    }

    /// Applies the compound to a minor vector whose labels match this
    /// compound's column labels, producing one labeled by its row labels.
    pub fn apply(&self, v: &CrossVector) -> Result<CrossVector> {
        if v.n() != self.source_cols || v.m() != self.k {
            return Err(Error::Dimension(format!(
                "compound of order {} on {} columns cannot act on a ({}, {}) cross vector",
                self.k,
                self.source_cols,
                v.n(),
                v.m()
            )));
        }
        let mut components = Vec::with_capacity(self.row_labels.len());
        for (i, label) in self.row_labels.iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, (_, value)) in v.components().iter().enumerate() {
                acc += self.matrix.get(i, j) * value;
            }
            components.push((label.clone(), acc));
        }
        CrossVector::from_components(self.source_rows, self.k, components)
    }
}

/// The k-th compound of `a` under the default dimension cap.
pub fn compound_matrix(a: &Matrix, k: usize) -> Result<CompoundMatrix> {
    compound_matrix_with_cap(a, k, DEFAULT_DIMENSION_CAP)
}

/// The k-th compound of `a`, refusing sources larger than `cap` in either
/// dimension so memory use stays predictable.
pub fn compound_matrix_with_cap(a: &Matrix, k: usize, cap: usize) -> Result<CompoundMatrix> {
    if k < 1 || k > a.rows().min(a.cols()) {
        return Err(Error::Dimension(format!(
            "minor order must be in [1, {}] for a {}x{} source, got {k}",
            a.rows().min(a.cols()),
            a.rows(),
            a.cols()
        )));
    }
    if a.rows() > cap || a.cols() > cap {
        return Err(Error::Capacity(format!(
            "compound of a {}x{} source exceeds the dimension cap of {cap}",
            a.rows(),
            a.cols()
        )));
    }
    let row_labels = enumerate_combinations(a.rows(), k)?;
    let col_labels = enumerate_combinations(a.cols(), k)?;
    let mut data = Vec::with_capacity(row_labels.len() * col_labels.len());
    for rl in &row_labels {
        for cl in &col_labels {
            data.push(minor(a, rl, cl)?);
        }
    }
    let matrix = Matrix::new(row_labels.len(), col_labels.len(), data)?;
    Ok(CompoundMatrix {
        k,
        source_rows: a.rows(),
        source_cols: a.cols(),
        matrix,
        row_labels,
        col_labels,
    })
}

/// Both sides of the product-determinant identity for an m-by-n, n-by-m pair:
/// `det(AB)` on the left and the sum of products of matched m-by-m minors on
/// the right (zero when m > n, where AB is always singular).
///
/// Both sides are returned rather than compared so that callers choose their
/// own tolerance.
pub fn cauchy_binet(a: &Matrix, b: &Matrix) -> Result<(Complex64, Complex64)> {
    let (m, n) = (a.rows(), a.cols());
    if b.rows() != n || b.cols() != m {
        return Err(Error::Dimension(format!(
            "need an mxn by nxm pair, got {m}x{n} and {}x{}",
            b.rows(),
            b.cols()
        )));
    }
    let lhs = a.matmul(b)?.determinant()?;
    let mut rhs = Complex64::new(0.0, 0.0);
    if m <= n {
        let full = Combination::full(m)?;
        for sel in enumerate_combinations(n, m)? {
            rhs += minor(a, &full, &sel)? * minor(b, &sel, &full)?;
        }
    }
    Ok((lhs, rhs))
}
