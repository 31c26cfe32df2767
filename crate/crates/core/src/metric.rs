//! Volumes under arbitrary Hermitian metric matrices: Gram matrices, the
//! compound of the metric, signed squared volumes, and the volume-element
//! factors of coordinate subspaces.
//!
//! Indefinite metrics are first-class. The squared volume of a parallelotope
//! can then be negative or vanish on a nonzero span (light-like), so volume
//! queries return the signed square together with its magnitude and sign
//! instead of hiding the sign behind an absolute value.

use num_complex::Complex64;

use crate::combinatorics::Combination;
use crate::compound::{compound_matrix, CompoundMatrix};
use crate::crossprod::CrossVector;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Relative bound on the imaginary residue tolerated in a Hermitian-form
/// determinant before it is reported as a numeric failure.
const IMAGINARY_RESIDUE_TOLERANCE: f64 = 1e-8;

/// Base factor of the default zero threshold used to classify volume signs.
const ZERO_THRESHOLD_BASE: f64 = 1e-10;

/// A validated n-dimensional space with a constant Hermitian metric matrix.
///
/// Immutable after validation; freely shareable across threads.
#[derive(Debug, Clone)]
pub struct MetricSpace {
    n: usize,
    g: Matrix,
    hermitian_tol: f64,
}

/// Checks that `g` is square and Hermitian within `tol` and wraps it.
pub fn validate_metric(g: Matrix, tol: f64) -> Result<MetricSpace> {
    if tol < 0.0 {
        return Err(Error::Metric(format!(
            "hermiticity tolerance must be nonnegative, got {tol}"
        )));
    }
    if !g.is_square() {
        return Err(Error::Metric(format!(
            "metric must be square, got {}x{}",
            g.rows(),
            g.cols()
        )));
    }
    if !g.is_hermitian(tol) {
        return Err(Error::Metric(
            "matrix is not Hermitian within tolerance".into(),
        ));
    }
    Ok(MetricSpace {
        n: g.rows(),
        g,
        hermitian_tol: tol,
    })
}

impl MetricSpace {
    /// The identity metric on n dimensions: the Euclidean/unitary case.
    pub fn euclidean(n: usize) -> Result<Self> {
        validate_metric(Matrix::identity(n)?, 0.0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The metric matrix G.
    pub fn metric(&self) -> &Matrix {
        &self.g
    }

    pub fn hermitian_tol(&self) -> f64 {
        self.hermitian_tol
    }

    /// Gram matrix X^H G X of the columns of `x` under this metric.
    pub fn gram(&self, x: &Matrix) -> Result<Matrix> {
        if x.rows() != self.n {
            return Err(Error::Dimension(format!(
                "expected {} rows, got {}",
                self.n,
                x.rows()
            )));
        }
        x.conjugate_transpose().matmul(&self.g.matmul(x)?)
    }

    /// The m-th compound of the metric matrix: the pairwise inner products of
    /// the coordinate m-subspace elements, Hermitian whenever G is.
    pub fn metric_compound(&self, m: usize) -> Result<CompoundMatrix> {
        compound_matrix(&self.g, m)
    }

    /// Signed squared volume det(X^H G X) of the parallelotope spanned by the
    /// columns of `x`, with the default zero threshold.
    pub fn signed_squared_volume(&self, x: &Matrix) -> Result<SignedVolume> {
        self.signed_squared_volume_with_threshold(x, None)
    }

    /// As [`signed_squared_volume`](Self::signed_squared_volume) with an
    /// explicit zero threshold for the sign classification.
    ///
    /// `None` selects `1e-10 * (1 + prod_j |x_j^H G x_j|)`, which scales with
    /// the squared metric seminorms of the columns so that light-like spans
    /// classify as sign 0 regardless of overall scale.
    pub fn signed_squared_volume_with_threshold(
        &self,
        x: &Matrix,
        zero_threshold: Option<f64>,
    ) -> Result<SignedVolume> {
        if x.cols() > x.rows() {
            return Err(Error::Dimension(format!(
                "volume needs m <= n, got {} columns in dimension {}",
                x.cols(),
                x.rows()
            )));
        }
        let gram = self.gram(x)?;
        let det = gram.determinant()?;
        let squared = det.re;
        // The determinant of a Hermitian matrix is real; anything beyond
        // rounding residue signals a broken input.
        if det.im.abs() > IMAGINARY_RESIDUE_TOLERANCE * (1.0 + squared.abs()) {
            return Err(Error::Numeric(format!(
                "Hermitian Gram determinant carries imaginary residue {:e}",
                det.im
            )));
        }
        let zero_threshold = zero_threshold.unwrap_or_else(|| {
            let seminorms: f64 = (0..gram.rows()).map(|j| gram.get(j, j).norm()).product();
            ZERO_THRESHOLD_BASE * (1.0 + seminorms)
        });
        let sign = if squared.abs() <= zero_threshold {
            0
        } else if squared > 0.0 {
            1
        } else {
            -1
        };
        Ok(SignedVolume {
            squared,
            magnitude: squared.abs().sqrt(),
            sign,
            zero_threshold,
        })
    }

    /// Metric inner product of two cross vectors, u^H G~(m) v.
    ///
    /// For u = v this is real within rounding and equals the signed squared
    /// volume of the vectors u was built from.
    pub fn cross_inner(&self, u: &CrossVector, v: &CrossVector) -> Result<Complex64> {
        if u.n() != v.n() || u.m() != v.m() {
            return Err(Error::Dimension(format!(
                "cross vectors have mismatched shapes ({}, {}) and ({}, {})",
                u.n(),
                u.m(),
                v.n(),
                v.m()
            )));
        }
        if u.n() != self.n {
            return Err(Error::Dimension(format!(
                "cross vectors live in dimension {}, metric in {}",
                u.n(),
                self.n
            )));
        }
        let gc = self.metric_compound(u.m())?;
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, (_, ui)) in u.components().iter().enumerate() {
            let ui_conj = ui.conj();
            if ui_conj == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (j, (_, vj)) in v.components().iter().enumerate() {
                acc += ui_conj * gc.entry(i, j) * vj;
            }
        }
        Ok(acc)
    }

    /// The volume of the parallelotope spanned by the selected basis vectors:
    /// the square root of |det G_JJ| over the principal block picked by
    /// `sel`. This is the factor converting coordinate volume to metric
    /// volume on that coordinate subspace.
    pub fn subspace_volume_element(&self, sel: &Combination) -> Result<f64> {
        let block = self.g.submatrix(sel, sel)?;
        Ok(block.determinant()?.norm().sqrt())
    }

    /// Sylvester test: every leading principal minor strictly positive.
    /// Callers that need the Euclidean guarantee (nonnegative squared
    /// volumes) can gate on this.
    pub fn is_positive_definite(&self) -> Result<bool> {
        for k in 1..=self.n {
            let sel = Combination::full(k)?;
            let d = self.g.submatrix(&sel, &sel)?.determinant()?;
            if d.re <= 0.0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Squared volume under a possibly indefinite metric, with its magnitude
/// and sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedVolume {
    /// det(X^H G X); real for Hermitian G.
    pub squared: f64,
    /// sqrt(|squared|).
    pub magnitude: f64,
    /// -1, 0 or +1; zero when |squared| falls below the threshold, marking a
    /// degenerate or light-like span.
    pub sign: i32,
    /// Threshold under which the squared volume classifies as zero.
    pub zero_threshold: f64,
}
