//! Brute-force reference implementations and randomized identity checkers.
//!
//! Nothing here is fast: the permutation-sum determinant visits all n! terms
//! and minors are regathered entry by entry, so dimensions are hard-capped.
//! These paths share only the combination and permutation utilities with the
//! main code; the fast paths get validated against independent arithmetic.

use itertools::Itertools;
use num_complex::Complex64;
use rand::Rng;

use crate::combinatorics::{enumerate_combinations, Combination, Permutation};
use crate::crossprod::CrossVector;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Hard cap on oracle dimensions; the permutation sum is O(n * n!).
pub const ORACLE_MAX_DIM: usize = 9;

fn check_cap(dim: usize, what: &str) -> Result<()> {
    if dim > ORACLE_MAX_DIM {
        return Err(Error::Capacity(format!(
            "{what} {dim} exceeds the oracle cap of {ORACLE_MAX_DIM}"
        )));
    }
    Ok(())
}

/// Permutation-sum determinant: the sum over all column permutations of the
/// signed entry products, with signs from inversion parity. No pivoting, no
/// elimination.
pub fn det_naive(a: &Matrix) -> Result<Complex64> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "determinant needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    check_cap(n, "dimension")?;
    let mut acc = Complex64::new(0.0, 0.0);
    for perm in (1..=n).permutations(n) {
        let parity = Permutation::new(perm.clone())?.parity();
        let mut term = Complex64::new(f64::from(parity), 0.0);
        for (row, &col) in perm.iter().enumerate() {
            term *= a.get(row, col - 1);
        }
        acc += term;
    }
    Ok(acc)
}

// Submatrix gathering local to the oracle path; intentionally does not reuse
// `Matrix::submatrix`.
fn gather(a: &Matrix, rows: &Combination, cols: &Combination) -> Matrix {
    let mut data = Vec::with_capacity(rows.len() * cols.len());
    for &r in rows.indices() {
        for &c in cols.indices() {
            data.push(a.get(r - 1, c - 1));
        }
    }
    Matrix::new(rows.len(), cols.len(), data).expect("gathered entries stay finite")
}

/// Cross product computed entirely from [`det_naive`]; the independent
/// reference for [`cross`](crate::crossprod::cross).
pub fn cross_naive(vectors: &[Vec<Complex64>]) -> Result<CrossVector> {
    if vectors.is_empty() {
        return Err(Error::Dimension("need at least one vector".into()));
    }
    let m = vectors.len();
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
    if m > n {
        return Err(Error::Dimension(format!(
            "cannot cross {m} vectors in dimension {n}"
        )));
    }
    check_cap(n, "dimension")?;
    let labels = enumerate_combinations(n, m)?;
    let mut components = Vec::with_capacity(labels.len());
    for label in labels {
        // Selected rows gathered straight from the input vectors.
        let mut data = Vec::with_capacity(m * m);
        for &row in label.indices() {
            for vector in vectors {
                data.push(vector[row - 1]);
            }
        }
        let value = det_naive(&Matrix::new(m, m, data)?)?;
        components.push((label, value));
    }
    CrossVector::from_components(n, m, components)
}

/// Outcome of one product-determinant identity check.
#[derive(Debug, Clone)]
pub struct CauchyBinetReport {
    /// det(AB) by pivoted elimination.
    pub det_product: Complex64,
    /// Sum of products of matched minors, each by the permutation sum.
    pub minor_sum: Complex64,
    /// |det_product - minor_sum|.
    pub gap: f64,
    pub tolerance: f64,
    /// Whether `gap <= tolerance * (1 + |det_product|)`.
    pub passed: bool,
}

/// Checks det(AB) against the explicit combination sum of `det_naive`
/// minors for an m-by-n, n-by-m pair; the sum is empty (zero) when m > n.
pub fn verify_cauchy_binet(a: &Matrix, b: &Matrix, tol: f64) -> Result<CauchyBinetReport> {
    let (m, n) = (a.rows(), a.cols());
    if b.rows() != n || b.cols() != m {
        return Err(Error::Dimension(format!(
            "need an mxn by nxm pair, got {m}x{n} and {}x{}",
            b.rows(),
            b.cols()
        )));
    }
    check_cap(m, "row count")?;
    check_cap(n, "column count")?;
    let det_product = a.matmul(b)?.determinant()?;
    let mut minor_sum = Complex64::new(0.0, 0.0);
    if m <= n {
        let full = Combination::full(m)?;
        for sel in enumerate_combinations(n, m)? {
            let a_minor = det_naive(&gather(a, &full, &sel))?;
            let b_minor = det_naive(&gather(b, &sel, &full))?;
            minor_sum += a_minor * b_minor;
        }
    }
    let gap = (det_product - minor_sum).norm();
    let passed = gap <= tol * (1.0 + det_product.norm());
    Ok(CauchyBinetReport {
        det_product,
        minor_sum,
        gap,
        tolerance: tol,
        passed,
    })
}

/// Outcome of one compound-multiplicativity check at minor order `k`.
#[derive(Debug, Clone)]
pub struct CompoundIdentityReport {
    pub k: usize,
    /// Worst entrywise `|lhs - rhs| / (1 + |lhs|)`.
    pub max_gap: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Builds the k-th compounds of AB, A and B from `det_naive` minors and
/// compares the compound of the product against the product of compounds
/// entrywise.
pub fn verify_compound_multiplicativity(
    a: &Matrix,
    b: &Matrix,
    k: usize,
    tol: f64,
) -> Result<CompoundIdentityReport> {
    if a.cols() != b.rows() {
        return Err(Error::Dimension(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    check_cap(a.rows().max(a.cols()).max(b.cols()), "dimension")?;
    let max_k = a.rows().min(a.cols()).min(b.cols());
    if k < 1 || k > max_k {
        return Err(Error::Dimension(format!(
            "minor order must be in [1, {max_k}], got {k}"
        )));
    }
    let product = a.matmul(b)?;
    let lhs = naive_compound(&product, k)?;
    let rhs = naive_compound(a, k)?.matmul(&naive_compound(b, k)?)?;
    let mut max_gap = 0.0f64;
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            let l = lhs.get(i, j);
            let gap = (l - rhs.get(i, j)).norm() / (1.0 + l.norm());
            max_gap = max_gap.max(gap);
        }
    }
    Ok(CompoundIdentityReport {
        k,
        max_gap,
        tolerance: tol,
        passed: max_gap <= tol,
    })
}

fn naive_compound(a: &Matrix, k: usize) -> Result<Matrix> {
    let row_labels = enumerate_combinations(a.rows(), k)?;
    let col_labels = enumerate_combinations(a.cols(), k)?;
    let mut data = Vec::with_capacity(row_labels.len() * col_labels.len());
    for rl in &row_labels {
        for cl in &col_labels {
            data.push(det_naive(&gather(a, rl, cl))?);
        }
    }
    Matrix::new(row_labels.len(), col_labels.len(), data)
}

/// Matrix with entries uniform on [-1, 1]; complex entries draw independent
/// real and imaginary parts. Callers own the generator, so recording its
/// seed makes any trial reproducible.
pub fn random_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    complex: bool,
) -> Matrix {
    let data = (0..rows * cols)
        .map(|_| {
            let re = rng.gen_range(-1.0..=1.0);
            let im = if complex {
                rng.gen_range(-1.0..=1.0)
            } else {
                0.0
            };
            Complex64::new(re, im)
        })
        .collect();
    Matrix::new(rows, cols, data).expect("sampled entries are finite")
}
