//! Exponent vectors, index subsets and explicit base sets.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// A vector of non-negative integers, read as the exponent of a monomial.
///
/// Indices are 0-based in the API; reports print them 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The canonical basis vector with a one at `i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn modulus(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Sum of the first `i` entries.
    pub fn prefix(&self, i: usize) -> u32 {
        self.0[..i].iter().sum()
    }

    /// Sum of the entries from index `i` on.
    pub fn suffix(&self, i: usize) -> u32 {
        self.0[i..].iter().sum()
    }

    /// `u(A)`, the sum of entries over the subset.
    pub fn sum_over(&self, set: Subset) -> u32 {
        set.iter().map(|i| self.0[i]).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// `self - e_i + e_j`, or `None` if entry `i` is zero.
    pub fn shift(&self, i: usize, j: usize) -> Option<Self> {
        if self.0[i] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        v[j] += 1;
        Some(ExponentVector(v))
    }

    pub fn scale(&self, k: u32) -> Self {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn support(&self) -> Subset {
        Subset::from_indices(self.0.iter().enumerate().filter(|(_, &a)| a > 0).map(|(i, _)| i))
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A subset of a ground set of at most 64 elements, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Self {
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    /// The 0-based index interval `lo..=hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        Subset(Self::full(hi + 1).0 & !Self::full(lo).0)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Subset(it.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Self {
        Subset(self.0 | 1 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(i)
            }
        })
    }

    /// Sorted 1-based indices, for reporting.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

/// Canonical order: by size, then by the sorted index lists.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// A finite non-empty set of exponent vectors of equal modulus, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BaseSet {
    n: usize,
    rank: u32,
    vectors: Vec<ExponentVector>,
}

impl BaseSet {
    /// Validates and canonicalizes (sorts, removes duplicates).
    pub fn new(n: usize, mut vectors: Vec<ExponentVector>) -> Result<Self> {
        let first = vectors
            .first()
            .ok_or_else(|| Error::MalformedBaseSet("empty base set".into()))?;
        let rank = first.modulus();
        for v in &vectors {
            if v.len() != n {
                return Err(Error::MalformedBaseSet(format!(
                    "vector {v} has length {}, expected {n}",
                    v.len()
                )));
            }
            if v.modulus() != rank {
                return Err(Error::MalformedBaseSet(format!(
                    "vector {v} has modulus {}, expected {rank}",
                    v.modulus()
                )));
            }
        }
        vectors.sort_unstable();
        vectors.dedup();
        Ok(BaseSet { n, rank, vectors })
    }

    /// Builds from vectors already known to be sorted, deduplicated and of
    /// equal modulus.
    pub(crate) fn from_sorted_unchecked(n: usize, rank: u32, vectors: Vec<ExponentVector>) -> Self {
        debug_assert!(vectors.windows(2).all(|w| w[0] < w[1]));
        BaseSet { n, rank, vectors }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[ExponentVector] {
        &self.vectors
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ExponentVector> {
        self.vectors.iter()
    }

    pub fn contains(&self, u: &ExponentVector) -> bool {
        self.vectors.binary_search(u).is_ok()
    }

    /// Applies a coordinate permutation: entry `i` of the result is entry
    /// `perm[i]` of the input.
    pub fn permute(&self, perm: &[usize]) -> BaseSet {
        let vectors = self
            .vectors
            .iter()
            .map(|u| ExponentVector::new(perm.iter().map(|&p| u[p]).collect()))
            .collect();
        BaseSet::new(self.n, vectors).expect("permutation preserves validity")
    }
}

impl<'a> IntoIterator for &'a BaseSet {
    type Item = &'a ExponentVector;
    type IntoIter = std::slice::Iter<'a, ExponentVector>;
    fn into_iter(self) -> Self::IntoIter {
        self.vectors.iter()
    }
}

/// The Minkowski sum `{u + v : u in B, v in C}`.
pub fn polymatroidal_sum(b: &BaseSet, c: &BaseSet) -> Result<BaseSet> {
    if b.n != c.n {
        return Err(Error::SizeMismatch { left: b.n, right: c.n });
    }
    let mut seen = HashSet::with_capacity(b.len() * c.len());
    for u in b {
        for v in c {
            seen.insert(u.add(v));
        }
    }
    let mut vectors: Vec<_> = seen.into_iter().collect();
    vectors.sort_unstable();
    Ok(BaseSet::from_sorted_unchecked(b.n, b.rank + c.rank, vectors))
}

/// The `k`-fold sumset `B + ... + B`, for `k >= 1`.
pub fn k_fold_sumset(b: &BaseSet, k: u32) -> BaseSet {
    assert!(k >= 1, "k-fold sumset needs k >= 1");
    let mut acc = b.clone();
    for _ in 1..k {
        acc = polymatroidal_sum(&acc, b).expect("same ground set");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn base_set_rejects_empty_and_mixed_moduli() {
        assert!(BaseSet::new(2, vec![]).is_err());
        assert!(BaseSet::new(2, vec![ev(&[1, 1]), ev(&[1, 0])]).is_err());
        assert!(BaseSet::new(2, vec![ev(&[1, 1, 0])]).is_err());
    }

    #[test]
    fn base_set_deduplicates() {
        let b = BaseSet::new(2, vec![ev(&[0, 2]), ev(&[2, 0]), ev(&[0, 2])]).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b.vectors()[0], ev(&[0, 2]));
    }

    #[test]
    fn sum_with_zero_is_identity() {
        let b = BaseSet::new(3, vec![ev(&[1, 0, 1]), ev(&[0, 1, 1])]).unwrap();
        let z = BaseSet::new(3, vec![ev(&[0, 0, 0])]).unwrap();
        assert_eq!(polymatroidal_sum(&b, &z).unwrap(), b);
    }

    #[test]
    fn squaring_the_simplex() {
        let b = BaseSet::new(2, vec![ev(&[1, 0]), ev(&[0, 1])]).unwrap();
        let s = polymatroidal_sum(&b, &b).unwrap();
        assert_eq!(s.vectors(), &[ev(&[0, 2]), ev(&[1, 1]), ev(&[2, 0])]);
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn sum_rejects_size_mismatch() {
        let b = BaseSet::new(2, vec![ev(&[1, 0])]).unwrap();
        let c = BaseSet::new(3, vec![ev(&[1, 0, 0])]).unwrap();
        assert!(matches!(polymatroidal_sum(&b, &c), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn subset_order_and_display() {
        let a = Subset::from_indices([0, 2]);
        assert_eq!(a.to_string(), "{1,3}");
        assert!(Subset::singleton(4) < a);
        assert_eq!(Subset::interval(1, 3), Subset::from_indices([1, 2, 3]));
    }

    #[test]
    fn shift_moves_one_unit() {
        assert_eq!(ev(&[1, 0]).shift(0, 1), Some(ev(&[0, 1])));
        assert_eq!(ev(&[0, 1]).shift(0, 1), None);
    }
}
