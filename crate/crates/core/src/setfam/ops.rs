use std::collections::BTreeSet;

use num::{One, Zero};

use super::family::{GeneralFamily, UniformFamily};
use super::numeric::{binom_u128, pow, rat_int, Rational};
use super::vertex_set::VertexSet;
use crate::error::{arg, Result};

/// The slice `F_S^B = {A \ B : A in F, A ∩ S = B}`, living on `universe \ S`.
pub fn slice(f: &UniformFamily, s: VertexSet, b: VertexSet) -> Result<UniformFamily> {
    if !b.is_subset(s) {
        return arg(format!("slice: B = {b} is not a subset of S = {s}"));
    }
    if !s.is_subset(f.universe()) {
        return arg(format!("slice: S = {s} leaves the universe {}", f.universe()));
    }
    if b.len() > f.k() {
        return arg(format!("slice: |B| = {} exceeds k = {}", b.len(), f.k()));
    }
    // Removing B from sets that agree on S preserves canonical order.
    let sets = f
        .iter()
        .filter(|a| a.intersection(s) == b)
        .map(|a| a.difference(b))
        .collect();
    Ok(UniformFamily::from_sorted_unchecked(
        f.n(),
        f.universe().difference(s),
        f.k() - b.len(),
        sets,
    ))
}

/// `|F_S^B|` without materialising the slice (zero when `|B| > k`).
pub fn slice_len(f: &UniformFamily, s: VertexSet, b: VertexSet) -> usize {
    f.iter().filter(|a| a.intersection(s) == b).count()
}

/// Uniform measure `|F| / C(|universe|, k)`; an empty level has measure zero.
pub fn uniform_measure(f: &UniformFamily) -> Rational {
    ratio(f.len() as u128, f.level_size())
}

/// Measure of the slice `F_S^B` inside `C(universe \ S, k - |B|)`, zero when that level is empty.
pub fn slice_measure(f: &UniformFamily, s: VertexSet, b: VertexSet) -> Rational {
    if b.len() > f.k() || !b.is_subset(s) {
        return Rational::zero();
    }
    let level = binom_u128(f.universe().difference(s).len(), f.k() - b.len());
    ratio(slice_len(f, s, b) as u128, level)
}

pub(crate) fn ratio(num: u128, den: u128) -> Rational {
    if den == 0 {
        Rational::zero()
    } else {
        Rational::new(num.into(), den.into())
    }
}

/// Weight `p^j (1-p)^(n-j)` of one set of size `j` under `μ_p` on `P([n])`.
pub fn biased_weight(p: &Rational, n: u32, j: u32) -> Rational {
    pow(p, j) * pow(&(Rational::one() - p), n - j)
}

/// p-biased measure `Σ_{A in F} p^|A| (1-p)^(n-|A|)`.
pub fn biased_measure(f: &GeneralFamily, p: &Rational) -> Result<Rational> {
    if p < &Rational::zero() || p > &Rational::one() {
        return arg(format!("biased measure: p = {p} outside [0,1]"));
    }
    let n = f.n();
    Ok(f.level_counts()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(j, &c)| rat_int(c) * biased_weight(p, n, j as u32))
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// Monotone closure `F↑` (up) or the generated complex `F↓` (down).
pub fn closure(f: &GeneralFamily, dir: Direction) -> GeneralFamily {
    let full = VertexSet::full(f.n());
    let mut out: BTreeSet<VertexSet> = BTreeSet::new();
    for s in f.iter() {
        match dir {
            Direction::Up => {
                for extra in full.difference(s).all_subsets() {
                    out.insert(s.union(extra));
                }
            }
            Direction::Down => out.extend(s.all_subsets()),
        }
    }
    GeneralFamily::from_sorted_unchecked(f.n(), out.into_iter().collect())
}

/// Iterated shadow `∂^t F = (F↓)^(k-t)`.
pub fn shadow(f: &UniformFamily, t: u32) -> Result<UniformFamily> {
    if t > f.k() {
        return arg(format!("shadow depth {t} exceeds k = {}", f.k()));
    }
    let mut cur = f.clone();
    for _ in 0..t {
        let mut out: BTreeSet<VertexSet> = BTreeSet::new();
        for s in cur.iter() {
            for v in s.iter() {
                out.insert(s.without(v));
            }
        }
        cur = UniformFamily::from_sorted_unchecked(
            cur.n(),
            cur.universe(),
            cur.k() - 1,
            out.into_iter().collect(),
        );
    }
    Ok(cur)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JuntaMode {
    /// `⟨𝒥⟩ = {A : A ∩ J ∈ 𝒥}`
    Exact,
    /// `(𝒥↑)^(k) = {A : B ⊆ A for some B ∈ 𝒥}`
    Upper,
}

/// The `k`-uniform junta on `[n]` generated by `gens ⊆ P(J)`.
pub fn junta_generate(
    n: u32,
    k: u32,
    j: VertexSet,
    gens: &[VertexSet],
    mode: JuntaMode,
) -> Result<UniformFamily> {
    if !j.is_subset(VertexSet::full(n)) {
        return arg(format!("junta: J = {j} leaves [1..{n}]"));
    }
    if let Some(b) = gens.iter().find(|b| !b.is_subset(j)) {
        return arg(format!("junta: generator {b} is not a subset of J = {j}"));
    }
    let gens: BTreeSet<VertexSet> = gens.iter().copied().collect();
    Ok(match mode {
        JuntaMode::Exact => UniformFamily::from_predicate(n, k, |a| gens.contains(&a.intersection(j))),
        JuntaMode::Upper => UniformFamily::from_predicate(n, k, |a| gens.iter().any(|b| b.is_subset(a))),
    })
}

/// `A ⊔ B`: all unions `D1 ∪ D2` of disjoint `D1 ∈ A`, `D2 ∈ B`.
pub fn disjoint_union_family(a: &GeneralFamily, b: &GeneralFamily) -> Result<GeneralFamily> {
    if a.n() != b.n() {
        return arg(format!("disjoint union: universes {} and {} differ", a.n(), b.n()));
    }
    let mut out: BTreeSet<VertexSet> = BTreeSet::new();
    for x in a.iter() {
        for y in b.iter() {
            if x.is_disjoint(y) {
                out.insert(x.union(y));
            }
        }
    }
    Ok(GeneralFamily::from_sorted_unchecked(a.n(), out.into_iter().collect()))
}

/// Dual family `F† = {A : [n] \ A ∉ F}`.
pub fn dual_family(f: &GeneralFamily) -> GeneralFamily {
    let full = VertexSet::full(f.n());
    GeneralFamily::from_predicate(f.n(), |a| !f.contains(full.difference(a)))
}
