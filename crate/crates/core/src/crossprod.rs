//! Cross products of m vectors in n-dimensional space under the identity
//! metric: the vector of row minors, its norm-as-volume reading, the
//! per-subspace decomposition of that volume, and the bridge back to the
//! classical signed cross product.

use num_complex::Complex64;

use crate::combinatorics::{enumerate_combinations, Combination};
use crate::compound::row_minor_vector;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Relative tolerance for clamping tiny negative Gram determinants, which
/// are nonnegative in exact arithmetic.
const GRAM_CLAMP_TOLERANCE: f64 = 1e-9;

/// The cross product of m vectors in n dimensions: one complex component per
/// m-combination of coordinate axes, in lexicographic label order.
///
/// Component values are signed minors; their moduli are per-subspace volume
/// projections and their Euclidean norm is the spanned parallelotope volume.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossVector {
    n: usize,
    m: usize,
    components: Vec<(Combination, Complex64)>,
}

impl CrossVector {
    /// Wraps labeled components, validating that the labels are exactly the
    /// lexicographic m-combinations of `{1..=n}` and every value is finite.
    pub fn from_components(
        n: usize,
        m: usize,
        components: Vec<(Combination, Complex64)>,
    ) -> Result<Self> {
        let expected = enumerate_combinations(n, m)?;
        if components.len() != expected.len() {
            return Err(Error::Dimension(format!(
                "expected {} components for (n, m) = ({n}, {m}), got {}",
                expected.len(),
                components.len()
            )));
        }
        for ((label, value), want) in components.iter().zip(&expected) {
            if label != want {
                return Err(Error::Dimension(format!(
                    "component labels must be the lexicographic enumeration; found {label}, expected {want}"
                )));
            }
            if !value.re.is_finite() || !value.im.is_finite() {
                return Err(Error::NonFinite(format!("component {label} is {value}")));
            }
        }
        Ok(Self { n, m, components })
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of crossed vectors.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of components, `C(n, m)`.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Labeled components in lexicographic label order.
    pub fn components(&self) -> &[(Combination, Complex64)] {
        &self.components
    }

    /// The component carrying `label`, if valid for this shape.
    pub fn get(&self, label: &Combination) -> Option<Complex64> {
        self.components
            .binary_search_by(|(l, _)| l.cmp(label))
            .ok()
            .map(|i| self.components[i].1)
    }

    /// Sum of squared component moduli.
    pub fn norm_squared(&self) -> f64 {
        self.components.iter().map(|(_, v)| v.norm_sqr()).sum()
    }

    /// Euclidean norm; the volume of the spanned parallelotope under the
    /// identity metric.
    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }
}

fn pack_columns(vectors: &[Vec<Complex64>]) -> Result<Matrix> {
    if vectors.is_empty() {
        return Err(Error::Dimension("need at least one vector".into()));
    }
    let n = vectors[0].len();
    for (i, v) in vectors.iter().enumerate() {
        if v.len() != n {
            return Err(Error::Dimension(format!(
                "vector {} has dimension {}, expected {n}",
                i + 1,
                v.len()
            )));
        }
    }
    if vectors.len() > n {
        return Err(Error::Dimension(format!(
            "cannot cross {} vectors in dimension {n}",
            vectors.len()
        )));
    }
    Matrix::from_columns(vectors)
}

/// Cross product of m column vectors of dimension n, with m <= n.
///
/// The vectors become the columns of an n-by-m matrix whose m-row minors are
/// the components. For m = n the single component is the determinant of that
/// square matrix. m = 1 is accepted as the degenerate limit: the product of
/// one vector is the vector itself, component i carrying label `{i}`.
pub fn cross(vectors: &[Vec<Complex64>]) -> Result<CrossVector> {
    let x = pack_columns(vectors)?;
    row_minor_vector(&x)
}

/// The m-dimensional volume of the parallelotope spanned by `vectors`,
/// computed as the square root of the Gram determinant det(X^H X).
///
/// A determinant that is negative within rounding of zero is clamped to
/// zero; one below `-tol * scale` (scale being the product of squared column
/// norms) reports a numeric failure instead of a silent NaN.
pub fn euclidean_volume(vectors: &[Vec<Complex64>]) -> Result<f64> {
    let x = pack_columns(vectors)?;
    let gram = x.conjugate_transpose().matmul(&x)?;
    let q = gram.determinant()?.re;
    let scale: f64 = (0..x.cols())
        .map(|j| (0..x.rows()).map(|i| x.get(i, j).norm_sqr()).sum::<f64>())
        .product();
    if q < -(GRAM_CLAMP_TOLERANCE * scale) {
        return Err(Error::Numeric(format!(
            "Gram determinant {q:e} is negative beyond the clamp window"
        )));
    }
    Ok(q.max(0.0).sqrt())
}

/// Per-subspace volume components: the modulus of each cross component,
/// labeled by the coordinate axes spanning the subspace it projects onto.
///
/// Under the identity metric the squares sum to the squared volume.
pub fn pythagorean_decomposition(v: &CrossVector) -> Vec<(Combination, f64)> {
    v.components()
        .iter()
        .map(|(label, value)| (label.clone(), value.norm()))
        .collect()
}

/// Sign-corrected reindexing of an (n-1)-vector cross product onto the n
/// coordinate directions.
///
/// Axis i receives the component whose label omits i, with sign
/// `(-1)^(i-1)`; for n = 3 this reproduces the right-handed classical cross
/// product, and the result is orthogonal to every input vector.
pub fn hodge_dual(v: &CrossVector) -> Result<Vec<Complex64>> {
    if v.m() + 1 != v.n() {
        return Err(Error::Shape(format!(
            "dual needs m = n - 1, got m = {}, n = {}",
            v.m(),
            v.n()
        )));
    }
    let n = v.n();
    let mut dual = vec![Complex64::new(0.0, 0.0); n];
    for (label, value) in v.components() {
        // Each label omits exactly one axis; that axis receives this minor.
        let missing = (1..=n)
            .find(|i| !label.contains(*i))
            .expect("an (n-1)-combination omits one axis");
        let sign = if missing % 2 == 1 { 1.0 } else { -1.0 };
        dual[missing - 1] = sign * value;
    }
    Ok(dual)
}
