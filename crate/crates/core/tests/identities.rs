//! Randomized cross-module identity checks: the fast paths against the
//! brute-force oracles, compound multiplicativity, frame invariance, and the
//! metric master identity.

use ncross::combinatorics::Combination;
use ncross::compound::{cauchy_binet, compound_matrix, row_minor_vector};
use ncross::crossprod::{cross, euclidean_volume, hodge_dual, pythagorean_decomposition};
use ncross::matrix::Matrix;
use ncross::metric::{validate_metric, MetricSpace};
use ncross::oracles::{
    cross_naive, det_naive, random_matrix, verify_cauchy_binet, verify_compound_multiplicativity,
};
use ncross::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rel_ok(got: Complex64, want: Complex64, tol: f64) -> bool {
    (got - want).norm() <= tol * (1.0 + want.norm())
}

fn columns_of(m: &Matrix) -> Vec<Vec<Complex64>> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

/// Modified Gram-Schmidt on the columns; None when a column degenerates.
fn orthonormalize(a: &Matrix) -> Option<Vec<Vec<Complex64>>> {
    let mut cols = columns_of(a);
    for j in 0..cols.len() {
        let (settled, rest) = cols.split_at_mut(j);
        let target = &mut rest[0];
        for basis in settled.iter() {
            let proj: Complex64 = basis
                .iter()
                .zip(target.iter())
                .map(|(q, v)| q.conj() * v)
                .sum();
            for (t, q) in target.iter_mut().zip(basis) {
                *t -= proj * q;
            }
        }
        let norm: f64 = target.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-6 {
            return None;
        }
        for v in target.iter_mut() {
            *v /= norm;
        }
    }
    Some(cols)
}

/// Random orthogonal/unitary matrix with determinant one.
fn random_special_frame<R: Rng + ?Sized>(rng: &mut R, n: usize, complex: bool) -> Matrix {
    loop {
        let candidate = random_matrix(rng, n, n, complex);
        if let Some(mut cols) = orthonormalize(&candidate) {
            let q = Matrix::from_columns(&cols).unwrap();
            let det = q.determinant().unwrap();
            // |det| = 1 up to rounding; rescaling the first column by
            // conj(det)/|det| normalizes the determinant to one.
            let phase = det.conj() / det.norm();
            for v in &mut cols[0] {
                *v *= phase;
            }
            return Matrix::from_columns(&cols).unwrap();
        }
    }
}

/// Random Hermitian matrix: a +/-1 diagonal plus a scaled Hermitian part of
/// a random square matrix. Exactly Hermitian in floating point.
fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, n: usize, complex: bool) -> Matrix {
    let raw = random_matrix(rng, n, n, complex);
    let signs: Vec<f64> = (0..n)
        .map(|_| if rng.gen_bool(0.5) { 1.0 } else { -1.0 })
        .collect();
    Matrix::from_fn(n, n, |r, c| {
        let sym = 0.3 * (raw.get(r, c) + raw.get(c, r).conj()) / 2.0;
        if r == c {
            Complex64::new(signs[r] + sym.re, 0.0)
        } else {
            sym
        }
    })
    .unwrap()
}

#[test]
fn determinant_is_multiplicative_up_to_dim_7() {
    let mut rng = rng(100);
    for trial in 0..400 {
        let n = rng.gen_range(1..=7);
        let complex = trial % 2 == 1;
        let a = random_matrix(&mut rng, n, n, complex);
        let b = random_matrix(&mut rng, n, n, complex);
        let dab = a.matmul(&b).unwrap().determinant().unwrap();
        let product = a.determinant().unwrap() * b.determinant().unwrap();
        let scale = 1.0f64.max(dab.norm()).max(product.norm());
        assert!(
            (dab - product).norm() <= 1e-9 * scale,
            "trial {trial}: {dab} vs {product}"
        );
    }
}

#[test]
fn elimination_determinant_matches_permutation_sum() {
    let mut rng = rng(101);
    for trial in 0..2000 {
        let n = rng.gen_range(1..=7);
        let complex = trial % 2 == 1;
        let a = random_matrix(&mut rng, n, n, complex);
        let fast = a.determinant().unwrap();
        let slow = det_naive(&a).unwrap();
        assert!(
            (fast - slow).norm() <= 1e-9 * (1.0 + slow.norm()),
            "trial {trial}: {fast} vs {slow}"
        );
    }
}

#[test]
fn cross_matches_cross_naive() {
    let mut rng = rng(102);
    for trial in 0..300 {
        let n = rng.gen_range(1..=7);
        let m = rng.gen_range(1..=n);
        let complex = trial % 2 == 1;
        let x = random_matrix(&mut rng, n, m, complex);
        let cols = columns_of(&x);
        let fast = cross(&cols).unwrap();
        let slow = cross_naive(&cols).unwrap();
        for ((_, a), (_, b)) in fast.components().iter().zip(slow.components()) {
            assert!((a - b).norm() <= 1e-10, "trial {trial}");
        }
    }
}

#[test]
fn product_determinant_identity_holds() {
    let mut rng = rng(103);
    for trial in 0..2000 {
        let m = rng.gen_range(1..=7);
        let n = rng.gen_range(1..=7);
        let complex = trial % 2 == 1;
        let a = random_matrix(&mut rng, m, n, complex);
        let b = random_matrix(&mut rng, n, m, complex);
        let (lhs, rhs) = cauchy_binet(&a, &b).unwrap();
        if m <= n {
            assert!(rel_ok(lhs, rhs, 1e-8), "trial {trial}: {lhs} vs {rhs}");
        } else {
            assert!(lhs.norm() <= 1e-10, "trial {trial}: lhs {lhs}");
            assert_eq!(rhs, Complex64::new(0.0, 0.0));
        }
    }
}

#[test]
fn compound_of_product_is_product_of_compounds() {
    let mut rng = rng(104);
    for trial in 0..150 {
        let m = rng.gen_range(1..=6);
        let n = rng.gen_range(1..=6);
        let s = rng.gen_range(1..=6);
        let complex = trial % 2 == 1;
        let a = random_matrix(&mut rng, m, n, complex);
        let b = random_matrix(&mut rng, n, s, complex);
        let product = a.matmul(&b).unwrap();
        for k in 1..=m.min(n).min(s) {
            let lhs = compound_matrix(&product, k).unwrap();
            let rhs = compound_matrix(&a, k)
                .unwrap()
                .matrix()
                .matmul(compound_matrix(&b, k).unwrap().matrix())
                .unwrap();
            for i in 0..lhs.matrix().rows() {
                for j in 0..lhs.matrix().cols() {
                    assert!(
                        rel_ok(lhs.entry(i, j), rhs.get(i, j), 1e-8),
                        "trial {trial}, k = {k}, entry ({i}, {j})"
                    );
                }
            }
        }
    }
}

#[test]
fn compound_commutes_with_conjugate_transpose() {
    let mut rng = rng(105);
    for trial in 0..100 {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=5);
        let a = random_matrix(&mut rng, rows, cols, true);
        for k in 1..=rows.min(cols) {
            let lhs = compound_matrix(&a.conjugate_transpose(), k).unwrap();
            let rhs = compound_matrix(&a, k)
                .unwrap()
                .matrix()
                .conjugate_transpose();
            assert_eq!(lhs.matrix().rows(), rhs.rows());
            for i in 0..rhs.rows() {
                for j in 0..rhs.cols() {
                    assert!(
                        (lhs.entry(i, j) - rhs.get(i, j)).norm() <= 1e-10,
                        "trial {trial}, k = {k}"
                    );
                }
            }
        }
    }
}

#[test]
fn row_minor_vector_is_full_column_of_compound() {
    let mut rng = rng(106);
    for trial in 0..100 {
        let n = rng.gen_range(1..=6);
        let m = rng.gen_range(1..=n);
        let x = random_matrix(&mut rng, n, m, trial % 2 == 1);
        let v = row_minor_vector(&x).unwrap();
        let comp = compound_matrix(&x, m).unwrap();
        // The single column is labeled by the full selection {1..m}.
        assert_eq!(comp.col_labels().len(), 1);
        assert_eq!(comp.col_labels()[0], Combination::full(m).unwrap());
        for (i, (label, value)) in v.components().iter().enumerate() {
            assert_eq!(label, &comp.row_labels()[i]);
            assert!((value - comp.entry(i, 0)).norm() <= 1e-12);
        }
    }
}

#[test]
fn squared_norm_equals_gram_determinant() {
    let mut rng = rng(107);
    for trial in 0..400 {
        let n = rng.gen_range(1..=8);
        let m = rng.gen_range(1..=n);
        let complex = trial % 2 == 1;
        let x = random_matrix(&mut rng, n, m, complex);
        let cols = columns_of(&x);
        let v = cross(&cols).unwrap();
        let gram_det = x
            .conjugate_transpose()
            .matmul(&x)
            .unwrap()
            .determinant()
            .unwrap()
            .re;
        assert!(
            (v.norm_squared() - gram_det).abs() <= 1e-8 * (1.0 + gram_det.abs()),
            "trial {trial}"
        );
        let vol = euclidean_volume(&cols).unwrap();
        assert!((vol - v.norm()).abs() <= 1e-8 * (1.0 + v.norm()));
        // The squared per-subspace components sum to the same value.
        let parts = pythagorean_decomposition(&v);
        let sum: f64 = parts.iter().map(|(_, mag)| mag * mag).sum();
        assert!((sum - gram_det).abs() <= 1e-8 * (1.0 + gram_det.abs()));
    }
}

#[test]
fn cross_transforms_by_the_frame_compound() {
    let mut rng = rng(108);
    for trial in 0..40 {
        let n = rng.gen_range(2..=6);
        let m = rng.gen_range(1..=n);
        let complex = trial % 2 == 1;
        let x = random_matrix(&mut rng, n, m, complex);
        let s = random_special_frame(&mut rng, n, complex);
        let rotated = cross(&columns_of(&s.matmul(&x).unwrap())).unwrap();
        let pushed = compound_matrix(&s, m)
            .unwrap()
            .apply(&cross(&columns_of(&x)).unwrap())
            .unwrap();
        for ((_, a), (_, b)) in rotated.components().iter().zip(pushed.components()) {
            assert!((a - b).norm() <= 1e-7 * (1.0 + b.norm()), "trial {trial}");
        }
        let original = cross(&columns_of(&x)).unwrap();
        assert!(
            (rotated.norm() - original.norm()).abs() <= 1e-8 * (1.0 + original.norm()),
            "trial {trial}"
        );
    }
}

#[test]
fn hodge_dual_is_orthogonal_to_the_inputs() {
    let mut rng = rng(109);
    for _ in 0..100 {
        let n = rng.gen_range(2..=6);
        let x = random_matrix(&mut rng, n, n - 1, false);
        // Unit-scale the inputs so the absolute bound is meaningful.
        let cols: Vec<Vec<Complex64>> = columns_of(&x)
            .into_iter()
            .map(|col| {
                let norm: f64 = col.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
                if norm < 1e-3 {
                    return col;
                }
                col.into_iter().map(|v| v / norm).collect()
            })
            .collect();
        let dual = hodge_dual(&cross(&cols).unwrap()).unwrap();
        for col in &cols {
            let dot: Complex64 = dual.iter().zip(col).map(|(h, v)| h * v).sum();
            assert!(dot.norm() <= 1e-9);
        }
    }
}

#[test]
fn metric_master_identity_holds() {
    let mut rng = rng(110);
    for trial in 0..300 {
        let n = rng.gen_range(1..=7);
        let m = rng.gen_range(1..=n);
        let complex = trial % 2 == 1;
        let g = random_hermitian(&mut rng, n, complex);
        let space = validate_metric(g, 1e-12).unwrap();
        let x = random_matrix(&mut rng, n, m, complex);
        let v = row_minor_vector(&x).unwrap();
        let inner = space.cross_inner(&v, &v).unwrap();
        let vol = space.signed_squared_volume(&x).unwrap();
        assert!(
            (inner.re - vol.squared).abs() <= 1e-7 * (1.0 + vol.squared.abs()),
            "trial {trial}: {} vs {}",
            inner.re,
            vol.squared
        );
        assert!(inner.im.abs() <= 1e-8 * (1.0 + vol.squared.abs()));
    }
}

#[test]
fn identity_metric_compound_is_identity() {
    for n in 1..=7usize {
        let space = MetricSpace::euclidean(n).unwrap();
        for m in 1..=n {
            let comp = space.metric_compound(m).unwrap();
            let size = comp.matrix().rows();
            assert_eq!(comp.matrix(), &Matrix::identity(size).unwrap());
        }
    }
}

#[test]
fn metric_compound_preserves_hermiticity() {
    let mut rng = rng(111);
    for trial in 0..60 {
        let n = rng.gen_range(1..=6);
        let g = random_hermitian(&mut rng, n, trial % 2 == 1);
        let space = validate_metric(g, 1e-12).unwrap();
        for m in 1..=n {
            assert!(space
                .metric_compound(m)
                .unwrap()
                .matrix()
                .is_hermitian(1e-9));
        }
    }
}

#[test]
fn subspace_volume_elements_match_factored_bases() {
    let mut rng = rng(112);
    for trial in 0..100 {
        let n = rng.gen_range(1..=6);
        let complex = trial % 2 == 1;
        // Basis vectors as the columns of E; their pairwise inner products
        // form a positive semi-definite metric G = E^H E.
        let e = random_matrix(&mut rng, n, n, complex);
        let g = e.conjugate_transpose().matmul(&e).unwrap();
        let space = validate_metric(g, 1e-10).unwrap();
        for m in 1..=n {
            let sel_indices: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
            let sel = if sel_indices.is_empty() {
                Combination::full(m).unwrap()
            } else {
                Combination::new(sel_indices, n).unwrap()
            };
            let element = space.subspace_volume_element(&sel).unwrap();
            let chosen: Vec<Vec<Complex64>> =
                sel.indices().iter().map(|&j| e.column(j - 1)).collect();
            let vol = euclidean_volume(&chosen).unwrap();
            assert!(
                (element - vol).abs() <= 1e-8 * (1.0 + vol),
                "trial {trial}: {element} vs {vol}"
            );
        }
    }
}

#[test]
fn positive_definite_metrics_never_go_negative() {
    let mut rng = rng(113);
    for trial in 0..100 {
        let n = rng.gen_range(1..=6);
        let complex = trial % 2 == 1;
        let e = random_matrix(&mut rng, n, n, complex);
        let g = e.conjugate_transpose().matmul(&e).unwrap();
        let space = validate_metric(g, 1e-10).unwrap();
        if !space.is_positive_definite().unwrap() {
            continue; // E was (numerically) singular; semi-definite case.
        }
        let m = rng.gen_range(1..=n);
        let x = random_matrix(&mut rng, n, m, complex);
        let vol = space.signed_squared_volume(&x).unwrap();
        assert!(vol.sign >= 0, "trial {trial}: {:?}", vol);
    }
}

#[test]
fn oracle_checkers_pass_on_random_instances() {
    let mut rng = rng(114);
    for trial in 0..10_000 {
        let complex = trial % 2 == 1;
        let m = rng.gen_range(1..=6);
        let n = rng.gen_range(1..=6);
        let a = random_matrix(&mut rng, m, n, complex);
        let b = random_matrix(&mut rng, n, m, complex);
        let report = verify_cauchy_binet(&a, &b, 1e-9).unwrap();
        assert!(report.passed, "trial {trial}: gap {}", report.gap);

        let s = rng.gen_range(1..=6);
        let a2 = random_matrix(&mut rng, m, n, complex);
        let b2 = random_matrix(&mut rng, n, s, complex);
        let k = rng.gen_range(1..=m.min(n).min(s));
        let report = verify_compound_multiplicativity(&a2, &b2, k, 1e-9).unwrap();
        assert!(report.passed, "trial {trial}: gap {}", report.max_gap);
    }
}
