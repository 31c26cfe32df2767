//! Index combinatorics: strictly increasing combinations, their lexicographic
//! enumeration, ranking and unranking, and permutation parity.
//!
//! Indices are 1-based throughout, matching the usual row/column numbering of
//! minors; they are converted to 0-based offsets only at storage boundaries.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ambient dimension; keeps every `C(n, m)` representable
/// in a `u64`.
pub const MAX_DIMENSION: usize = 62;

/// Overflow-checked binomial coefficient `C(n, m)`.
///
/// Returns 0 when `m > n` and a capacity error when `n` exceeds
/// [`MAX_DIMENSION`].
pub fn binomial(n: usize, m: usize) -> Result<u64> {
    if n > MAX_DIMENSION {
        return Err(Error::Capacity(format!(
            "dimension {n} exceeds the maximum of {MAX_DIMENSION}"
        )));
    }
    if m > n {
        return Ok(0);
    }
    let m = m.min(n - m);
    // Intermediate products need u128 near the cap; each division is exact.
    let mut acc: u128 = 1;
    for i in 1..=m {
        acc = acc * (n - m + i) as u128 / i as u128;
    }
    u64::try_from(acc).map_err(|_| Error::Capacity(format!("C({n}, {m}) does not fit in u64")))
}

/// A strictly increasing selection of 1-based indices from `{1, ..., n}`.
///
/// Combinations label the rows and columns of minors, the components of cross
/// vectors, and the entries of compound matrices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Combination {
    indices: Vec<usize>,
}

impl Combination {
    /// Validates `indices` as a non-empty, strictly increasing selection from
    /// `{1..=n}`.
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        if !(1..=MAX_DIMENSION).contains(&n) {
            return Err(Error::Dimension(format!(
                "ambient dimension must be in [1, {MAX_DIMENSION}], got {n}"
            )));
        }
        if indices.is_empty() || indices.len() > n {
            return Err(Error::Dimension(format!(
                "selection size must be in [1, {n}], got {}",
                indices.len()
            )));
        }
        let mut prev = 0usize;
        for &idx in &indices {
            if idx < 1 || idx > n {
                return Err(Error::Index(format!("index {idx} outside [1, {n}]")));
            }
            if idx <= prev {
                return Err(Error::Index(format!(
                    "indices must be strictly increasing, saw {prev} then {idx}"
                )));
            }
            prev = idx;
        }
        Ok(Self { indices })
    }

    /// The full selection `{1, ..., m}`.
    pub fn full(m: usize) -> Result<Self> {
        Self::new((1..=m).collect(), m)
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// The 1-based indices, strictly increasing.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    // Enumeration constructs combinations that are valid by construction.
    fn from_sorted_unchecked(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Self { indices }
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, idx) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{idx}")?;
        }
        write!(f, "}}")
    }
}

/// All `C(n, m)` combinations of `{1..=n}` in lexicographic order of their
/// index lists. This order is the canonical one used everywhere in the crate.
pub fn enumerate_combinations(n: usize, m: usize) -> Result<Vec<Combination>> {
    if n < 1 || m < 1 || m > n {
        return Err(Error::Dimension(format!(
            "need 1 <= m <= n, got m = {m}, n = {n}"
        )));
    }
    let count = binomial(n, m)?;
    let count = usize::try_from(count)
        .map_err(|_| Error::Capacity(format!("C({n}, {m}) = {count} is not addressable")))?;
    let mut all = Vec::new();
    all.try_reserve_exact(count)
        .map_err(|_| Error::Capacity(format!("cannot allocate {count} combinations")))?;
    let mut current: Vec<usize> = (1..=m).collect();
    loop {
        all.push(Combination::from_sorted_unchecked(current.clone()));
        // Rightmost position that can still advance.
        let mut p = m;
        while p > 0 && current[p - 1] == n - m + p {
            p -= 1;
        }
        if p == 0 {
            break;
        }
        current[p - 1] += 1;
        for q in p..m {
            current[q] = current[q - 1] + 1;
        }
    }
    debug_assert_eq!(all.len(), count);
    Ok(all)
}

/// 0-based position of `c` within `enumerate_combinations(n, c.len())`.
///
/// Inverse of [`unrank_combination`].
pub fn rank_combination(c: &Combination, n: usize) -> Result<u64> {
    if !(1..=MAX_DIMENSION).contains(&n) {
        return Err(Error::Dimension(format!(
            "ambient dimension must be in [1, {MAX_DIMENSION}], got {n}"
        )));
    }
    let m = c.len();
    if m > n {
        return Err(Error::Dimension(format!(
            "selection of size {m} cannot come from {n} indices"
        )));
    }
    let last = c.indices[m - 1];
    if last > n {
        return Err(Error::Index(format!("index {last} outside [1, {n}]")));
    }
    let mut rank = 0u64;
    let mut prev = 0usize;
    for (pos, &idx) in c.indices.iter().enumerate() {
        for skipped in prev + 1..idx {
            rank += binomial(n - skipped, m - pos - 1)?;
        }
        prev = idx;
    }
    Ok(rank)
}

/// The combination at 0-based position `rank` of the lexicographic
/// enumeration of m-combinations of `{1..=n}`.
pub fn unrank_combination(rank: u64, n: usize, m: usize) -> Result<Combination> {
    if n < 1 || m < 1 || m > n {
        return Err(Error::Dimension(format!(
            "need 1 <= m <= n, got m = {m}, n = {n}"
        )));
    }
    let total = binomial(n, m)?;
    if rank >= total {
        return Err(Error::Rank(format!("rank {rank} outside [0, {total})")));
    }
    let mut remaining = rank;
    let mut indices = Vec::with_capacity(m);
    let mut candidate = 1usize;
    for pos in 0..m {
        loop {
            let below = binomial(n - candidate, m - pos - 1)?;
            if below <= remaining {
                remaining -= below;
                candidate += 1;
            } else {
                indices.push(candidate);
                candidate += 1;
                break;
            }
        }
    }
    Ok(Combination::from_sorted_unchecked(indices))
}

/// A rearrangement of `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    /// Validates that `entries` contains each of `1..=k` exactly once.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let k = entries.len();
        if k == 0 {
            return Err(Error::Permutation("permutation cannot be empty".into()));
        }
        let mut seen = vec![false; k];
        for &e in &entries {
            if e < 1 || e > k {
                return Err(Error::Permutation(format!("entry {e} outside [1, {k}]")));
            }
            if seen[e - 1] {
                return Err(Error::Permutation(format!("entry {e} repeated")));
            }
            seen[e - 1] = true;
        }
        Ok(Self { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `(-1)^tau` where `tau` counts the out-of-order pairs (inversions).
    pub fn parity(&self) -> i32 {
        let mut inversions = 0usize;
        for i in 0..self.entries.len() {
            for j in i + 1..self.entries.len() {
                if self.entries[i] > self.entries[j] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn combo(indices: &[usize], n: usize) -> Combination {
        Combination::new(indices.to_vec(), n).unwrap()
    }

    fn lists(combos: &[Combination]) -> Vec<Vec<usize>> {
        combos.iter().map(|c| c.indices().to_vec()).collect()
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(3, 2).unwrap(), 3);
        assert_eq!(binomial(4, 2).unwrap(), 6);
        assert_eq!(binomial(5, 0).unwrap(), 1);
        assert_eq!(binomial(5, 6).unwrap(), 0);
        assert_eq!(binomial(62, 31).unwrap(), 465_428_353_255_261_088);
        assert!(matches!(binomial(63, 2), Err(Error::Capacity(_))));
    }

    #[test]
    fn enumeration_is_lexicographic() {
        assert_eq!(
            lists(&enumerate_combinations(3, 2).unwrap()),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(
            lists(&enumerate_combinations(4, 1).unwrap()),
            vec![vec![1], vec![2], vec![3], vec![4]]
        );
        assert_eq!(
            lists(&enumerate_combinations(4, 2).unwrap()),
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
    }

    #[test]
    fn enumeration_rejects_bad_dimensions() {
        assert!(matches!(
            enumerate_combinations(3, 0),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            enumerate_combinations(3, 4),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            enumerate_combinations(0, 1),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn enumeration_count_matches_binomial() {
        for n in 1..=10 {
            for m in 1..=n {
                let combos = enumerate_combinations(n, m).unwrap();
                assert_eq!(combos.len() as u64, binomial(n, m).unwrap());
            }
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_combination(&combo(&[2, 3], 3), 3).unwrap(), 2);
        assert_eq!(rank_combination(&combo(&[1, 2], 4), 4).unwrap(), 0);
        // Frozen from the enumerated list for (n = 4, m = 2).
        assert_eq!(rank_combination(&combo(&[2, 4], 4), 4).unwrap(), 4);
    }

    #[test]
    fn rank_rejects_out_of_range_indices() {
        let c = combo(&[2, 5], 5);
        assert!(matches!(rank_combination(&c, 4), Err(Error::Index(_))));
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(unrank_combination(0, 3, 2).unwrap().indices(), &[1, 2]);
        assert_eq!(unrank_combination(2, 3, 2).unwrap().indices(), &[2, 3]);
        assert_eq!(unrank_combination(4, 4, 2).unwrap().indices(), &[2, 4]);
        assert!(matches!(unrank_combination(6, 4, 2), Err(Error::Rank(_))));
    }

    #[test]
    fn rank_unrank_roundtrip_small_dimensions() {
        for n in 1..=12usize {
            for m in 1..=n {
                let combos = enumerate_combinations(n, m).unwrap();
                for (r, c) in combos.iter().enumerate() {
                    assert_eq!(rank_combination(c, n).unwrap(), r as u64);
                    assert_eq!(&unrank_combination(r as u64, n, m).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn combination_validation() {
        assert!(matches!(
            Combination::new(vec![1, 1], 3),
            Err(Error::Index(_))
        ));
        assert!(matches!(
            Combination::new(vec![2, 1], 3),
            Err(Error::Index(_))
        ));
        assert!(matches!(
            Combination::new(vec![0, 1], 3),
            Err(Error::Index(_))
        ));
        assert!(matches!(Combination::new(vec![4], 3), Err(Error::Index(_))));
        assert!(matches!(
            Combination::new(vec![], 3),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn combination_display() {
        assert_eq!(combo(&[1, 3, 4], 5).to_string(), "{1,3,4}");
    }

    #[test]
    fn parity_examples() {
        assert_eq!(Permutation::new(vec![1, 2, 3]).unwrap().parity(), 1);
        assert_eq!(Permutation::new(vec![2, 1, 3]).unwrap().parity(), -1);
        // (3,1,2): inversions (3,1) and (3,2), so tau = 2.
        assert_eq!(Permutation::new(vec![3, 1, 2]).unwrap().parity(), 1);
    }

    #[test]
    fn permutation_validation() {
        assert!(matches!(
            Permutation::new(vec![1, 1, 3]),
            Err(Error::Permutation(_))
        ));
        assert!(matches!(
            Permutation::new(vec![1, 4, 3]),
            Err(Error::Permutation(_))
        ));
        assert!(matches!(
            Permutation::new(vec![]),
            Err(Error::Permutation(_))
        ));
    }

    #[test]
    fn parity_is_multiplicative_under_composition() {
        use itertools::Itertools;

        for k in 1..=5usize {
            let perms: Vec<Vec<usize>> = (1..=k).permutations(k).collect();
            for p in &perms {
                for q in &perms {
                    let composed: Vec<usize> = (0..k).map(|i| p[q[i] - 1]).collect();
                    let pp = Permutation::new(p.clone()).unwrap().parity();
                    let pq = Permutation::new(q.clone()).unwrap().parity();
                    let pc = Permutation::new(composed).unwrap().parity();
                    assert_eq!(pc, pp * pq);
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn unrank_then_rank_is_identity(n in 1usize..=20, seed in any::<u64>()) {
                for m in 1..=n {
                    let total = binomial(n, m).unwrap();
                    let r = seed % total;
                    let c = unrank_combination(r, n, m).unwrap();
                    prop_assert_eq!(rank_combination(&c, n).unwrap(), r);
                    prop_assert!(c.indices().windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
    }
}
