use std::fmt;

use super::numeric::binom_u128;
use super::vertex_set::{VertexSet, MAX_VERTEX};
use crate::error::{arg, Result};

/// A `k`-uniform family over a (possibly masked) universe.
///
/// `universe` is the set of labels the family lives on. Fresh families use
/// `{1..n}`; slices keep their original labels and drop the sliced
/// coordinates from `universe`, so nested slicing composes directly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniformFamily {
    n: u32,
    universe: VertexSet,
    k: u32,
    sets: Vec<VertexSet>,
}

impl UniformFamily {
    /// Builds a family over `{1..n}`; rejects wrong sizes, out-of-range labels and duplicates.
    pub fn new(n: u32, k: u32, sets: Vec<VertexSet>) -> Result<Self> {
        check_n(n)?;
        Self::with_universe(n, VertexSet::full(n), k, sets)
    }

    pub fn with_universe(
        n: u32,
        universe: VertexSet,
        k: u32,
        mut sets: Vec<VertexSet>,
    ) -> Result<Self> {
        check_n(n)?;
        if !universe.is_subset(VertexSet::full(n)) {
            return arg(format!("universe {universe} not inside [1..{n}]"));
        }
        for s in &sets {
            if s.len() != k {
                return arg(format!("set {s} has size {} but the family is {k}-uniform", s.len()));
            }
            if !s.is_subset(universe) {
                return arg(format!("set {s} leaves the universe {universe}"));
            }
        }
        sets.sort_unstable();
        if let Some(w) = sets.windows(2).find(|w| w[0] == w[1]) {
            return arg(format!("duplicate set {}", w[0]));
        }
        Ok(UniformFamily { n, universe, k, sets })
    }

    /// Like [`UniformFamily::new`] but silently merges duplicates.
    pub fn from_sets_dedup(n: u32, k: u32, mut sets: Vec<VertexSet>) -> Result<Self> {
        sets.sort_unstable();
        sets.dedup();
        Self::new(n, k, sets)
    }

    pub(crate) fn from_sorted_unchecked(
        n: u32,
        universe: VertexSet,
        k: u32,
        sets: Vec<VertexSet>,
    ) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        UniformFamily { n, universe, k, sets }
    }

    pub fn empty(n: u32, k: u32) -> Self {
        UniformFamily { n, universe: VertexSet::full(n), k, sets: Vec::new() }
    }

    /// All of `C([n], k)` in canonical order.
    pub fn complete(n: u32, k: u32) -> Self {
        let universe = VertexSet::full(n);
        UniformFamily { n, universe, k, sets: universe.subsets_of_size(k) }
    }

    /// Keeps the members of `C(universe, k)` accepted by `keep`.
    pub fn from_predicate(n: u32, k: u32, keep: impl Fn(VertexSet) -> bool) -> Self {
        let universe = VertexSet::full(n);
        let sets = universe.subsets_of_size(k).into_iter().filter(|s| keep(*s)).collect();
        UniformFamily { n, universe, k, sets }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn universe(&self) -> VertexSet {
        self.universe
    }

    /// Number of points in the (possibly masked) universe.
    pub fn universe_size(&self) -> u32 {
        self.universe.len()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.sets.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    /// Index of `s` in canonical order.
    pub fn position(&self, s: VertexSet) -> Option<usize> {
        self.sets.binary_search(&s).ok()
    }

    /// Size of the whole level `C(universe, k)`.
    pub fn level_size(&self) -> u128 {
        binom_u128(self.universe.len(), self.k)
    }

    pub fn is_subfamily_of(&self, other: &UniformFamily) -> bool {
        self.sets.iter().all(|s| other.contains(*s))
    }

    /// Same universe and uniformity, keeping only sets accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(VertexSet) -> bool) -> UniformFamily {
        UniformFamily {
            n: self.n,
            universe: self.universe,
            k: self.k,
            sets: self.sets.iter().copied().filter(|s| keep(*s)).collect(),
        }
    }

    pub fn to_general(&self) -> GeneralFamily {
        GeneralFamily { n: self.n, sets: self.sets.clone() }
    }

    /// Applies a vertex relabeling (`perm[v-1]` is the image of `v`).
    pub fn relabel(&self, perm: &[u32]) -> Result<UniformFamily> {
        let map = |s: VertexSet| -> VertexSet { s.iter().map(|v| perm[v as usize - 1]).collect() };
        let sets = self.sets.iter().map(|s| map(*s)).collect();
        UniformFamily::with_universe(self.n, map(self.universe), self.k, sets)
    }
}

impl fmt::Debug for UniformFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniformFamily(n={}, k={}, universe={}, {:?})", self.n, self.k, self.universe, self.sets)
    }
}

/// A family of subsets of `[n]` of arbitrary sizes, kept in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneralFamily {
    n: u32,
    sets: Vec<VertexSet>,
}

impl GeneralFamily {
    pub fn new(n: u32, mut sets: Vec<VertexSet>) -> Result<Self> {
        check_n(n)?;
        let full = VertexSet::full(n);
        if let Some(s) = sets.iter().find(|s| !s.is_subset(full)) {
            return arg(format!("set {s} leaves [1..{n}]"));
        }
        sets.sort_unstable();
        sets.dedup();
        Ok(GeneralFamily { n, sets })
    }

    pub(crate) fn from_sorted_unchecked(n: u32, sets: Vec<VertexSet>) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        GeneralFamily { n, sets }
    }

    pub fn empty(n: u32) -> Self {
        GeneralFamily { n, sets: Vec::new() }
    }

    /// The whole power set `P([n])`.
    pub fn power_set(n: u32) -> Self {
        Self::from_predicate(n, |_| true)
    }

    pub fn from_predicate(n: u32, keep: impl Fn(VertexSet) -> bool) -> Self {
        let mut sets: Vec<VertexSet> =
            VertexSet::full(n).all_subsets().filter(|s| keep(*s)).collect();
        sets.sort_unstable();
        GeneralFamily { n, sets }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.sets.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    /// The `k`-th level `F^(k)` as a uniform family over `[n]`.
    pub fn level(&self, k: u32) -> UniformFamily {
        let sets = self.sets.iter().copied().filter(|s| s.len() == k).collect();
        UniformFamily::from_sorted_unchecked(self.n, VertexSet::full(self.n), k, sets)
    }

    /// Number of members of each size `0..=n`.
    pub fn level_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.n as usize + 1];
        for s in &self.sets {
            counts[s.len() as usize] += 1;
        }
        counts
    }

    /// `F` is monotone (an up-set).
    pub fn is_monotone(&self) -> bool {
        self.sets.iter().all(|s| {
            VertexSet::full(self.n)
                .difference(*s)
                .iter()
                .all(|v| self.contains(s.with(v)))
        })
    }

    /// `F` is a complex (a down-set).
    pub fn is_complex(&self) -> bool {
        self.sets.iter().all(|s| s.iter().all(|v| self.contains(s.without(v))))
    }

    pub fn is_subfamily_of(&self, other: &GeneralFamily) -> bool {
        self.sets.iter().all(|s| other.contains(*s))
    }
}

impl fmt::Debug for GeneralFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneralFamily(n={}, {:?})", self.n, self.sets)
    }
}

fn check_n(n: u32) -> Result<()> {
    if n > MAX_VERTEX {
        return arg(format!("universe size {n} exceeds {MAX_VERTEX}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfam::vs;

    #[test]
    fn construction_checks() {
        assert!(UniformFamily::new(4, 2, vec![vs(&[1, 2]), vs(&[1, 2])]).is_err());
        assert!(UniformFamily::new(4, 2, vec![vs(&[1, 2, 3])]).is_err());
        assert!(UniformFamily::new(4, 2, vec![vs(&[1, 5])]).is_err());
        let f = UniformFamily::new(4, 2, vec![vs(&[3, 4]), vs(&[1, 2])]).unwrap();
        assert_eq!(f.sets(), &[vs(&[1, 2]), vs(&[3, 4])]);
    }

    #[test]
    fn complete_level_is_canonical() {
        let f = UniformFamily::complete(5, 3);
        assert_eq!(f.len(), 10);
        assert!(f.sets().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn general_levels() {
        let g = GeneralFamily::power_set(4);
        assert_eq!(g.len(), 16);
        assert_eq!(g.level(2).len(), 6);
        assert_eq!(g.level_counts(), vec![1, 4, 6, 4, 1]);
        assert!(g.is_monotone() && g.is_complex());
        assert_eq!(g.sets()[0], VertexSet::EMPTY);
    }
}
