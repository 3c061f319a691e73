use std::cmp::Ordering;
use std::fmt;

use crate::error::{arg, Result};

/// Largest supported vertex label.
pub const MAX_VERTEX: u32 = 64;

/// A subset of `{1, ..., 64}` stored as a bitmask; label `v` lives in bit `v - 1`.
///
/// `Ord` is the canonical order used everywhere in the crate: lexicographic
/// comparison of the ascending vertex lists (so `{1} < {1,2} < {1,3} < {2}`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: u32) -> Self {
        debug_assert!(n <= MAX_VERTEX);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    /// `{lo, ..., hi}` (empty when `lo > hi`).
    pub fn range(lo: u32, hi: u32) -> Self {
        if lo > hi || hi == 0 {
            return VertexSet::EMPTY;
        }
        let lo = lo.max(1);
        Self::full(hi).difference(Self::full(lo - 1))
    }

    pub fn singleton(v: u32) -> Self {
        debug_assert!((1..=MAX_VERTEX).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    /// Builds a set from labels, rejecting labels outside `1..=64`.
    pub fn try_from_iter<I: IntoIterator<Item = u32>>(it: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in it {
            if v == 0 || v > MAX_VERTEX {
                return arg(format!("vertex label {v} outside 1..={MAX_VERTEX}"));
            }
            bits |= 1u64 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: u32) -> bool {
        v >= 1 && v <= MAX_VERTEX && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: u32) {
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: u32) {
        self.0 &= !(1u64 << (v - 1));
    }

    pub fn with(self, v: u32) -> Self {
        VertexSet(self.0 | (1u64 << (v - 1)))
    }

    pub fn without(self, v: u32) -> Self {
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    /// Largest member.
    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All subsets of `self` with exactly `size` members, in canonical order.
    pub fn subsets_of_size(self, size: u32) -> Vec<VertexSet> {
        let members = self.to_vec();
        let mut out = Vec::new();
        if size as usize > members.len() {
            return out;
        }
        let mut idx: Vec<usize> = (0..size as usize).collect();
        loop {
            out.push(VertexSet(idx.iter().fold(0u64, |acc, &i| {
                acc | (1u64 << (members[i] - 1))
            })));
            // advance to the next combination in lexicographic order
            let m = members.len();
            let s = idx.len();
            let mut pos = s;
            while pos > 0 && idx[pos - 1] == m - s + pos - 1 {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            idx[pos - 1] += 1;
            for j in pos..s {
                idx[j] = idx[j - 1] + 1;
            }
        }
        out
    }

    /// All subsets of `self`, canonical order within each size, sizes ascending.
    pub fn subsets_by_size(self) -> Vec<VertexSet> {
        (0..=self.len()).flat_map(|s| self.subsets_of_size(s)).collect()
    }

    /// All subsets of `self` (bitmask submask enumeration; order unspecified).
    pub fn all_subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let out = cur?;
            cur = if out == full {
                None
            } else {
                Some(((out | !full).wrapping_add(1)) & full)
            };
            Some(VertexSet(out))
        })
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(v + 1)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        // Both lists agree below `low`; whoever holds `low` is smaller unless
        // the other list simply ends there.
        let (holder_is_self, other_bits) = if self.0 & low != 0 {
            (true, other.0)
        } else {
            (false, self.0)
        };
        let other_continues = other_bits & !(low | (low - 1)) != 0;
        match (holder_is_self, other_continues) {
            (true, true) => Ordering::Less,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Greater,
            (false, false) => Ordering::Less,
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<u32> for VertexSet {
    /// Panics on labels outside `1..=64`; use [`VertexSet::try_from_iter`] for untrusted input.
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        VertexSet::try_from_iter(iter).expect("vertex label out of range")
    }
}

/// Shorthand for literal sets in code and tests: `vs(&[1, 2, 3])`.
pub fn vs(members: &[u32]) -> VertexSet {
    members.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lex(a: VertexSet, b: VertexSet) -> Ordering {
        a.to_vec().cmp(&b.to_vec())
    }

    #[test]
    fn canonical_order_matches_vec_lex() {
        let all: Vec<VertexSet> = VertexSet::full(5).all_subsets().collect();
        for &a in &all {
            for &b in &all {
                assert_eq!(a.cmp(&b), lex(a, b), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn subsets_of_size_are_canonical_and_complete() {
        let s = vs(&[2, 3, 5, 7]);
        let subs = s.subsets_of_size(2);
        assert_eq!(subs.len(), 6);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(subs[0], vs(&[2, 3]));
        assert_eq!(VertexSet::EMPTY.subsets_of_size(0), vec![VertexSet::EMPTY]);
        assert!(s.subsets_of_size(5).is_empty());
    }

    #[test]
    fn all_subsets_counts() {
        assert_eq!(vs(&[1, 4, 9]).all_subsets().count(), 8);
        assert_eq!(VertexSet::EMPTY.all_subsets().count(), 1);
    }

    #[test]
    fn labels_out_of_range_rejected() {
        assert!(VertexSet::try_from_iter([0]).is_err());
        assert!(VertexSet::try_from_iter([65]).is_err());
        assert_eq!(VertexSet::try_from_iter([64]).unwrap().max(), Some(64));
    }

    #[test]
    fn range_and_full() {
        assert_eq!(VertexSet::range(2, 4), vs(&[2, 3, 4]));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert!(VertexSet::range(3, 2).is_empty());
    }
}
