use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

/// An exponent vector `(a_1, ..., a_d)`.
///
/// `Ord` is the graded-lexicographic monomial order: total degree first,
/// then lexicographic on the entries, so `x1 > x2 > ... > xd`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(!entries.is_empty(), "multi-index needs at least one entry");
        MultiIndex(entries)
    }

    pub fn zero(d: usize) -> Self {
        MultiIndex::new(vec![0; d])
    }

    /// The standard basis vector `e_i` (0-based `i`).
    pub fn unit(d: usize, i: usize) -> Self {
        let mut v = vec![0; d];
        v[i] = 1;
        MultiIndex::new(v)
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

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// `|a|`
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// `a! = a_1! ... a_d!`
    pub fn factorial(&self) -> BigUint {
        let mut acc = BigUint::one();
        for &a in &self.0 {
            for k in 2..=a {
                acc *= k;
            }
        }
        acc
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &MultiIndex) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn divides(&self, other: &MultiIndex) -> bool {
        other.dominates(self)
    }

    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if !self.dominates(other) {
            return None;
        }
        Some(MultiIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `a(i) = a + e_i`
    pub fn bump(&self, i: usize) -> MultiIndex {
        let mut v = self.0.clone();
        v[i] += 1;
        MultiIndex(v)
    }

    pub fn lcm(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Reverse-lexicographic tie-break used by degree-reverse orders:
    /// `self > other` iff the last nonzero entry of `self - other` is negative.
    pub fn revlex_cmp(&self, other: &MultiIndex) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }

    /// Position in the enumeration order of [`multiindices`]: degree first,
    /// then `x1`-heavy indices first within a degree.
    pub fn enumeration_cmp(&self, other: &MultiIndex) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }

    pub(crate) fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
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

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All multi-indices of length `d` with exact total degree `k`, `x1`-heavy first.
pub fn multiindices_of_degree(d: usize, k: u32) -> Vec<MultiIndex> {
    fn rec(d: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if prefix.len() + 1 == d {
            prefix.push(k);
            out.push(MultiIndex(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=k).rev() {
            prefix.push(a);
            rec(d, k - a, prefix, out);
            prefix.pop();
        }
    }
    assert!(d >= 1);
    let mut out = Vec::new();
    rec(d, k, &mut Vec::with_capacity(d), &mut out);
    out
}

/// All `a` with `lo <= |a| <= hi`, in the row/column order used for higher
/// Jacobian matrices: by degree, and `x1`-heavy first within a degree.
pub fn multiindices(d: usize, lo: u32, hi: u32) -> Vec<MultiIndex> {
    (lo..=hi)
        .flat_map(|k| multiindices_of_degree(d, k))
        .collect()
}

/// `C(n, k)` for small arguments; panics on overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i).expect("binomial overflow") / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn enumeration_matches_matrix_column_order() {
        let got = multiindices(2, 1, 2);
        let want = vec![
            mi(&[1, 0]),
            mi(&[0, 1]),
            mi(&[2, 0]),
            mi(&[1, 1]),
            mi(&[0, 2]),
        ];
        assert_eq!(got, want);
        assert_eq!(multiindices(4, 0, 0), vec![MultiIndex::zero(4)]);
        assert_eq!(
            multiindices(3, 1, 1),
            vec![mi(&[1, 0, 0]), mi(&[0, 1, 0]), mi(&[0, 0, 1])]
        );
    }

    #[test]
    fn enumeration_lengths() {
        for d in 1..5usize {
            for lo in 0..3u32 {
                for hi in lo..5u32 {
                    let want: u64 = (lo..=hi)
                        .map(|k| binomial(d as u64 - 1 + k as u64, d as u64 - 1))
                        .sum();
                    assert_eq!(multiindices(d, lo, hi).len() as u64, want);
                }
            }
        }
    }

    #[test]
    fn factorial_and_degree() {
        let a = mi(&[3, 0, 2]);
        assert_eq!(a.degree(), 5);
        assert_eq!(a.factorial(), BigUint::from(12u32));
        assert_eq!(MultiIndex::zero(2).factorial(), BigUint::one());
    }

    #[test]
    fn grlex_basics() {
        assert!(mi(&[1, 0]) > mi(&[0, 1]));
        assert!(mi(&[0, 2]) > mi(&[1, 0]));
        assert!(mi(&[2, 0]) > mi(&[1, 1]));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(2, 3), 0);
    }
}
