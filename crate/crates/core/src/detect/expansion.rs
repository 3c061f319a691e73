use std::cmp::Ordering;

use super::{CopyWitness, Engine, NodeBudget};
use crate::error::{arg, Result};
use crate::hstruct::BasePattern;
use crate::setfam::{UniformFamily, VertexSet};

/// Center data of a base pattern. Degree-one vertices never appear here: inside
/// a copy they are indistinguishable from fresh expansion vertices.
struct Shape {
    center: Vec<u32>,
    /// Edges through each center vertex, as a bitmask over edge indices.
    profile: Vec<u64>,
    /// Center positions inside each edge, as a bitmask over positions.
    edge_center: Vec<u64>,
    /// Previous center position with the same profile; images of twins increase.
    twin_prev: Vec<Option<usize>>,
    edge_sizes: Vec<u32>,
}

impl Shape {
    fn new(h: &BasePattern) -> Result<Shape> {
        if h.h() > 64 {
            return arg(format!("patterns with more than 64 edges are not supported (h = {})", h.h()));
        }
        let center = h.center().to_vec();
        let profile: Vec<u64> = center
            .iter()
            .map(|&u| {
                h.edges()
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.contains(u))
                    .fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .collect();
        let edge_center = (0..h.h())
            .map(|i| {
                profile
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d >> i & 1 == 1)
                    .fold(0u64, |m, (p, _)| m | 1 << p)
            })
            .collect();
        let twin_prev = (0..center.len())
            .map(|p| (0..p).rev().find(|&q| profile[q] == profile[p]))
            .collect();
        Ok(Shape {
            center,
            profile,
            edge_center,
            twin_prev,
            edge_sizes: h.edges().iter().map(|e| e.len()).collect(),
        })
    }

    fn h(&self) -> usize {
        self.edge_center.len()
    }

    fn images(&self, phi: &[u32]) -> Vec<VertexSet> {
        self.edge_center
            .iter()
            .map(|&m| (0..phi.len()).filter(|&p| m >> p & 1 == 1).map(|p| phi[p]).collect())
            .collect()
    }

    fn witness(&self, sets: Vec<VertexSet>, phi: &[u32]) -> CopyWitness {
        CopyWitness { sets, center_map: self.center.iter().copied().zip(phi.iter().copied()).collect() }
    }
}

/// Per-edge families together with their uniformities.
struct Target<'a> {
    fams: Vec<&'a [VertexSet]>,
    universe: VertexSet,
}

impl<'a> Target<'a> {
    fn new(fams: Vec<&'a UniformFamily>, shape: &Shape) -> Result<Target<'a>> {
        if fams.len() != shape.h() {
            return arg(format!("{} families given for a pattern with {} edges", fams.len(), shape.h()));
        }
        for (i, f) in fams.iter().enumerate() {
            if f.k() < shape.edge_sizes[i] {
                return arg(format!(
                    "edge {} has {} base vertices but its family is {}-uniform",
                    i + 1,
                    shape.edge_sizes[i],
                    f.k()
                ));
            }
        }
        Ok(Target {
            universe: fams.iter().fold(VertexSet::EMPTY, |u, f| u.union(f.universe())),
            fams: fams.into_iter().map(|f| f.sets()).collect(),
        })
    }
}

type Best = Option<(Vec<VertexSet>, Vec<u32>)>;

enum Sink<'c> {
    First(Best),
    All(&'c mut dyn FnMut(&[VertexSet], &[u32]) -> Result<()>),
}

/// Injects the center, then backtracks over edge assignments with disjoint remainders.
struct Fast<'a, 'c> {
    shape: &'a Shape,
    universe: VertexSet,
    forced: Option<&'a [u32]>,
    budget: &'a mut NodeBudget,
    phi: Vec<u32>,
    sink: Sink<'c>,
}

impl Fast<'_, '_> {
    fn inject(&mut self, p: usize, used: VertexSet, cands: &[Vec<VertexSet>]) -> Result<()> {
        if p == self.shape.center.len() {
            let imgs = self.shape.images(&self.phi);
            let tight = matches!(self.sink, Sink::First(Some(_)));
            self.assign(0, VertexSet::EMPTY, &imgs, cands, &mut Vec::new(), tight)?;
            return Ok(());
        }
        let choices: Vec<u32> = match self.forced {
            Some(f) => vec![f[p]],
            None => {
                let lo = self.shape.twin_prev[p].map_or(0, |q| self.phi[q]);
                self.universe.iter().filter(|&v| v > lo).collect()
            }
        };
        for v in choices {
            if used.contains(v) {
                continue;
            }
            self.budget.tick()?;
            let next: Vec<Vec<VertexSet>> = cands
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let inside = self.shape.edge_center[i] >> p & 1 == 1;
                    c.iter().copied().filter(|a| a.contains(v) == inside).collect()
                })
                .collect();
            if next.iter().any(Vec::is_empty) {
                continue;
            }
            self.phi[p] = v;
            self.inject(p + 1, used.with(v), &next)?;
        }
        Ok(())
    }

    /// Returns `true` once a new best has been recorded for the current injection.
    fn assign(
        &mut self,
        i: usize,
        used: VertexSet,
        imgs: &[VertexSet],
        cands: &[Vec<VertexSet>],
        chosen: &mut Vec<VertexSet>,
        tight: bool,
    ) -> Result<bool> {
        if i == cands.len() {
            return match &mut self.sink {
                // Equal tuple under a later injection: the earlier one wins.
                Sink::First(_) if tight => Ok(false),
                Sink::First(best) => {
                    *best = Some((chosen.clone(), self.phi.clone()));
                    Ok(true)
                }
                Sink::All(cb) => {
                    cb(chosen, &self.phi)?;
                    Ok(false)
                }
            };
        }
        let bound = match &self.sink {
            Sink::First(Some((b, _))) if tight => Some(b[i]),
            _ => None,
        };
        for &a in &cands[i] {
            self.budget.tick()?;
            let still_tight = match bound.map(|b| a.cmp(&b)) {
                Some(Ordering::Greater) => break,
                Some(Ordering::Equal) => true,
                _ => false,
            };
            let rest = a.difference(imgs[i]);
            if !rest.is_disjoint(used) || chosen.contains(&a) {
                continue;
            }
            chosen.push(a);
            let done = self.assign(i + 1, used.union(rest), imgs, cands, chosen, still_tight)?;
            chosen.pop();
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn fast_search(
    shape: &Shape,
    target: &Target<'_>,
    forced: Option<&[u32]>,
    budget: &mut NodeBudget,
    sink: Sink<'_>,
) -> Result<Best> {
    let cands: Vec<Vec<VertexSet>> = target.fams.iter().map(|f| f.to_vec()).collect();
    let mut run = Fast {
        shape,
        universe: target.universe,
        forced,
        budget,
        phi: vec![0; shape.center.len()],
        sink,
    };
    if cands.iter().all(|c| !c.is_empty()) {
        run.inject(0, VertexSet::EMPTY, &cands)?;
    }
    Ok(match run.sink {
        Sink::First(best) => best,
        Sink::All(_) => None,
    })
}

/// Center injection realising `sets` as a copy of the first `j` edges, if any.
///
/// A tuple is a copy iff the multiset of vertex profiles `{i : v ∈ A_i}` of
/// size at least two equals the multiset of center profiles (restricted to
/// the first `j` edges).
fn profile_match(shape: &Shape, sets: &[VertexSet]) -> Option<Vec<u32>> {
    let j = sets.len();
    let mask = if j >= 64 { u64::MAX } else { (1u64 << j) - 1 };
    let mut vprof = [0u64; 65];
    let mut touched = VertexSet::EMPTY;
    for (i, a) in sets.iter().enumerate() {
        for v in a.iter() {
            vprof[v as usize] |= 1 << i;
        }
        touched = touched.union(*a);
    }
    let mut have: Vec<(u64, u32)> = touched
        .iter()
        .map(|v| (vprof[v as usize], v))
        .filter(|(d, _)| d.count_ones() >= 2)
        .collect();
    let mut want: Vec<(u64, usize)> = shape
        .profile
        .iter()
        .enumerate()
        .map(|(p, d)| (d & mask, p))
        .filter(|(d, _)| d.count_ones() >= 2)
        .collect();
    if have.len() != want.len() {
        return None;
    }
    have.sort_unstable();
    want.sort_unstable();
    if have.iter().zip(&want).any(|(a, b)| a.0 != b.0) {
        return None;
    }
    // Within a profile class both lists are increasing, so twins get increasing images.
    let mut phi = vec![0; shape.center.len()];
    for ((_, v), (_, p)) in have.into_iter().zip(want) {
        phi[p] = v;
    }
    Some(phi)
}

fn oracle_search(shape: &Shape, target: &Target<'_>, budget: &mut NodeBudget) -> Result<Best> {
    fn rec(
        shape: &Shape,
        fams: &[&[VertexSet]],
        chosen: &mut Vec<VertexSet>,
        budget: &mut NodeBudget,
    ) -> Result<Option<Vec<u32>>> {
        let i = chosen.len();
        if i == fams.len() {
            return Ok(profile_match(shape, chosen));
        }
        for &a in fams[i] {
            budget.tick()?;
            if chosen.contains(&a) {
                continue;
            }
            chosen.push(a);
            // The first i+1 sets must already form a copy of the first i+1 edges.
            if profile_match(shape, chosen).is_some() {
                if let Some(phi) = rec(shape, fams, chosen, budget)? {
                    return Ok(Some(phi));
                }
            }
            chosen.pop();
        }
        Ok(None)
    }
    let mut chosen = Vec::new();
    Ok(rec(shape, &target.fams, &mut chosen, budget)?.map(|phi| (chosen, phi)))
}

fn search(
    fams: Vec<&UniformFamily>,
    h: &BasePattern,
    engine: Engine,
    budget: &mut NodeBudget,
) -> Result<Option<CopyWitness>> {
    let shape = Shape::new(h)?;
    let target = Target::new(fams, &shape)?;
    let best = match engine {
        Engine::Fast => fast_search(&shape, &target, None, budget, Sink::First(None))?,
        Engine::Oracle => oracle_search(&shape, &target, budget)?,
    };
    Ok(best.map(|(sets, phi)| shape.witness(sets, &phi)))
}

/// Canonically least copy of `H⁺` in `F` (`k` of `F` is the expansion uniformity).
/// The search budget comes from `TURAN_NODE_BUDGET` when set.
pub fn contains_expansion(f: &UniformFamily, h: &BasePattern, engine: Engine) -> Result<Option<CopyWitness>> {
    contains_expansion_within(f, h, engine, &mut NodeBudget::from_env_or(u64::MAX)?)
}

pub fn contains_expansion_within(
    f: &UniformFamily,
    h: &BasePattern,
    engine: Engine,
    budget: &mut NodeBudget,
) -> Result<Option<CopyWitness>> {
    search(vec![f; h.h()], h, engine, budget)
}

/// Copy with edge `i` drawn from `fs[i]`; the families may have different uniformities.
pub fn cross_contains(fs: &[UniformFamily], h: &BasePattern) -> Result<Option<CopyWitness>> {
    cross_contains_within(fs, h, Engine::Fast, &mut NodeBudget::from_env_or(u64::MAX)?)
}

pub fn cross_contains_within(
    fs: &[UniformFamily],
    h: &BasePattern,
    engine: Engine,
    budget: &mut NodeBudget,
) -> Result<Option<CopyWitness>> {
    search(fs.iter().collect(), h, engine, budget)
}

/// Visits every copy of `H⁺` in `F` once, as an ordered tuple with its center images.
pub fn for_each_copy(
    f: &UniformFamily,
    h: &BasePattern,
    budget: &mut NodeBudget,
    mut visit: impl FnMut(&[VertexSet], &[u32]) -> Result<()>,
) -> Result<()> {
    let shape = Shape::new(h)?;
    let target = Target::new(vec![f; h.h()], &shape)?;
    fast_search(&shape, &target, None, budget, Sink::All(&mut visit))?;
    Ok(())
}

/// Least copy whose center vertices (in increasing order) map to `image`.
pub fn copy_with_center_image(
    f: &UniformFamily,
    h: &BasePattern,
    image: &[u32],
    budget: &mut NodeBudget,
) -> Result<Option<Vec<VertexSet>>> {
    let shape = Shape::new(h)?;
    if image.len() != shape.center.len() {
        return arg(format!("center has {} vertices, image has {}", shape.center.len(), image.len()));
    }
    let target = Target::new(vec![f; h.h()], &shape)?;
    Ok(fast_search(&shape, &target, Some(image), budget, Sink::First(None))?.map(|(s, _)| s))
}

/// Whether the ordered tuple is a copy of the expansion of `h` (sizes are not checked).
pub fn is_copy(sets: &[VertexSet], h: &BasePattern) -> bool {
    let Ok(shape) = Shape::new(h) else { return false };
    sets.len() == shape.h()
        && (0..sets.len()).all(|i| sets[..i].iter().all(|b| *b != sets[i]))
        && sets.iter().zip(&shape.edge_sizes).all(|(a, &e)| a.len() >= e)
        && profile_match(&shape, sets).is_some()
}

/// Least center injection under which the tuple is a copy.
pub(crate) fn center_map_of(sets: &[VertexSet], h: &BasePattern) -> Option<Vec<(u32, u32)>> {
    let shape = Shape::new(h).ok()?;
    let phi = profile_match(&shape, sets)?;
    Some(shape.witness(Vec::new(), &phi).center_map)
}

/// Checks a witness directly against the expansion definition.
pub fn verify_witness(fs: &[&UniformFamily], h: &BasePattern, w: &CopyWitness) -> bool {
    let Ok(shape) = Shape::new(h) else { return false };
    if fs.len() != shape.h() || w.sets.len() != shape.h() || w.center_map.len() != shape.center.len() {
        return false;
    }
    if w.center_map.iter().zip(&shape.center).any(|((u, _), c)| u != c) {
        return false;
    }
    let phi: Vec<u32> = w.center_map.iter().map(|&(_, v)| v).collect();
    let image: VertexSet = phi.iter().copied().collect();
    if image.len() as usize != phi.len() {
        return false;
    }
    let imgs = shape.images(&phi);
    let mut used = VertexSet::EMPTY;
    for (i, a) in w.sets.iter().enumerate() {
        let rest = a.difference(imgs[i]);
        if !fs[i].contains(*a)
            || a.intersection(image) != imgs[i]
            || !rest.is_disjoint(used)
            || rest.len() < shape.edge_sizes[i] - imgs[i].len()
            || w.sets[..i].contains(a)
        {
            return false;
        }
        used = used.union(rest);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hstruct::{build_pattern, matching, one_intersection, porcupine_counterexample};
    use crate::setfam::vs;

    fn both(f: &UniformFamily, h: &BasePattern) -> Option<CopyWitness> {
        let a = contains_expansion(f, h, Engine::Fast).unwrap();
        let b = contains_expansion(f, h, Engine::Oracle).unwrap();
        assert_eq!(a, b);
        if let Some(w) = &a {
            assert!(verify_witness(&vec![f; h.h()], h, w));
        }
        a
    }

    #[test]
    fn spec_examples() {
        let f = UniformFamily::new(5, 3, vec![vs(&[1, 2, 3]), vs(&[1, 4, 5])]).unwrap();
        let w = both(&f, &one_intersection(2).unwrap()).unwrap();
        assert_eq!(w.sets, vec![vs(&[1, 2, 3]), vs(&[1, 4, 5])]);
        assert_eq!(w.center_map, vec![(1, 1)]);

        let star = UniformFamily::from_predicate(7, 3, |a| a.contains(1));
        assert!(both(&star, &matching(2).unwrap()).is_none());

        let fixture = UniformFamily::from_predicate(9, 3, |a| a.intersection(vs(&[1, 2, 3])).len() == 1);
        assert!(both(&fixture, &porcupine_counterexample()).is_none());
    }

    #[test]
    fn cross_examples() {
        let c = UniformFamily::complete(4, 2);
        let w = cross_contains(&[c.clone(), c], &matching(2).unwrap()).unwrap().unwrap();
        assert_eq!(w.sets, vec![vs(&[1, 2]), vs(&[3, 4])]);
        let a = UniformFamily::new(4, 2, vec![vs(&[1, 2])]).unwrap();
        let b = UniformFamily::new(4, 2, vec![vs(&[1, 3])]).unwrap();
        assert!(cross_contains(&[a.clone(), b], &matching(2).unwrap()).unwrap().is_none());
        assert!(cross_contains(&[a], &matching(2).unwrap()).is_err());
    }

    #[test]
    fn mixed_uniformities() {
        let a = UniformFamily::new(6, 2, vec![vs(&[1, 2])]).unwrap();
        let b = UniformFamily::new(6, 3, vec![vs(&[1, 3, 4]), vs(&[3, 4, 5])]).unwrap();
        let w = cross_contains(&[a.clone(), b.clone()], &matching(2).unwrap()).unwrap().unwrap();
        assert_eq!(w.sets, vec![vs(&[1, 2]), vs(&[3, 4, 5])]);
        let o = cross_contains_within(&[a, b], &matching(2).unwrap(), Engine::Oracle, &mut NodeBudget::unlimited()).unwrap();
        assert_eq!(o, Some(w));
    }

    #[test]
    fn witnesses_prefer_least_tuple_then_injection() {
        // Both {1} and {2} can serve as the shared vertex of the same two sets.
        let f = UniformFamily::new(4, 3, vec![vs(&[1, 2, 3]), vs(&[1, 2, 4])]).unwrap();
        let h = build_pattern("edges{[1],[1]}").unwrap();
        assert!(both(&f, &h).is_none());
        let h2 = build_pattern("edges{[1,2],[1,2]}").unwrap();
        let w = both(&f, &h2).unwrap();
        assert_eq!(w.center_map, vec![(1, 1), (2, 2)]);
    }

    #[test]
    fn copies_are_enumerated_once() {
        let f = UniformFamily::complete(6, 2);
        let mut n = 0;
        for_each_copy(&f, &matching(3).unwrap(), &mut NodeBudget::unlimited(), |s, _| {
            assert!(is_copy(s, &matching(3).unwrap()));
            n += 1;
            Ok(())
        })
        .unwrap();
        // 15 perfect matchings of K6, each in 3! edge orders.
        assert_eq!(n, 90);
    }

    #[test]
    fn budget_is_reported() {
        let f = UniformFamily::complete(8, 3);
        let r = contains_expansion_within(&f, &matching(3).unwrap(), Engine::Fast, &mut NodeBudget::new(3));
        assert!(matches!(r, Err(crate::Error::ResourceExhausted(_))));
    }

    #[test]
    fn forced_center() {
        let f = UniformFamily::complete(5, 2);
        let h = one_intersection(2).unwrap();
        let got = copy_with_center_image(&f, &h, &[3], &mut NodeBudget::unlimited()).unwrap();
        assert_eq!(got, Some(vec![vs(&[1, 3]), vs(&[2, 3])]));
    }
}
