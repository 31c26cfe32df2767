//! Cross products of m vectors in n-dimensional real and complex spaces.
//!
//! The cross product of m vectors packed as the columns of an n-by-m matrix
//! is the vector of all m-by-m row minors, one component per m-combination
//! of coordinate axes in lexicographic order. Its Euclidean norm is the
//! volume of the parallelotope the vectors span, each component modulus is
//! the volume of the projection onto the labeled coordinate subspace, and
//! for m = n the single component is the plain determinant.
//!
//! The same machinery generalizes to spaces with an arbitrary Hermitian
//! metric G: the squared volume becomes det(X^H G X), equivalently the
//! inner product of the minor vector with itself under the compound of G.
//! Indefinite metrics are supported, reporting the sign of the squared
//! volume rather than insisting it be nonnegative.
//!
//! Modules:
//! - [`combinatorics`]: combinations, ranking/unranking, permutation parity.
//! - [`matrix`]: dense complex matrices and a pivoted determinant.
//! - [`compound`]: minors, compound matrices, the product-determinant
//!   (Cauchy-Binet) identity.
//! - [`crossprod`]: the cross product, volumes, the per-subspace
//!   decomposition, and the classical dual.
//! - [`metric`]: Hermitian metric spaces, Gram matrices, signed volumes.
//! - [`oracles`]: brute-force references and randomized identity checkers.

pub mod combinatorics;
pub mod compound;
pub mod crossprod;
pub mod error;
pub mod matrix;
pub mod metric;
pub mod oracles;

pub use combinatorics::{
    binomial, enumerate_combinations, rank_combination, unrank_combination, Combination,
    Permutation,
};
pub use compound::{cauchy_binet, compound_matrix, minor, row_minor_vector, CompoundMatrix};
pub use crossprod::{cross, euclidean_volume, hodge_dual, pythagorean_decomposition, CrossVector};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use metric::{validate_metric, MetricSpace, SignedVolume};
pub use num_complex::Complex64;
