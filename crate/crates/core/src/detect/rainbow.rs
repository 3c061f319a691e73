use super::expansion::{center_map_of, contains_expansion_within, for_each_copy, is_copy};
use super::{CopyWitness, Engine, NodeBudget};
use crate::error::{arg, Result};
use crate::hstruct::BasePattern;
use crate::setfam::{shadow, UniformFamily, VertexSet};

/// A copy `(E_1, ..., E_h)` in the shadow and distinct colors with `E_i ∪ {j_i} ∈ F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowWitness {
    pub copy: CopyWitness,
    pub colors: Vec<u32>,
}

/// Canonically least rainbow copy of `H⁺` (at uniformity `k-1`) in `∂F`; colors are
/// the lexicographically least valid assignment for that copy.
pub fn rainbow_in_shadow(f: &UniformFamily, h: &BasePattern, engine: Engine) -> Result<Option<RainbowWitness>> {
    if f.k() < 2 {
        return arg("rainbow copies need k >= 2");
    }
    let sh = shadow(f, 1)?;
    let mut budget = NodeBudget::from_env_or(u64::MAX)?;
    match engine {
        Engine::Fast => fast(f, &sh, h, &mut budget),
        Engine::Oracle => oracle(f, &sh, h, &mut budget),
    }
}

fn palette(f: &UniformFamily, e: VertexSet) -> Vec<u32> {
    f.universe().difference(e).iter().filter(|&j| f.contains(e.with(j))).collect()
}

/// Kuhn's augmenting paths: can every remaining edge get a distinct color avoiding `taken`?
fn has_sdr(pal: &[Vec<u32>], taken: VertexSet) -> bool {
    fn augment(i: usize, pal: &[Vec<u32>], owner: &mut [Option<usize>; 65], seen: &mut VertexSet, taken: VertexSet) -> bool {
        for &j in &pal[i] {
            if taken.contains(j) || seen.contains(j) {
                continue;
            }
            seen.insert(j);
            if owner[j as usize].is_none_or(|o| augment(o, pal, owner, seen, taken)) {
                owner[j as usize] = Some(i);
                return true;
            }
        }
        false
    }
    let mut owner = [None; 65];
    (0..pal.len()).all(|i| {
        let mut seen = VertexSet::EMPTY;
        augment(i, pal, &mut owner, &mut seen, taken)
    })
}

/// Least color vector, fixed greedily position by position while an SDR survives.
fn least_colors(pal: &[Vec<u32>]) -> Option<Vec<u32>> {
    if !has_sdr(pal, VertexSet::EMPTY) {
        return None;
    }
    let mut taken = VertexSet::EMPTY;
    let mut out = Vec::with_capacity(pal.len());
    for i in 0..pal.len() {
        let j = pal[i]
            .iter()
            .copied()
            .find(|&j| !taken.contains(j) && has_sdr(&pal[i + 1..], taken.with(j)))?;
        taken.insert(j);
        out.push(j);
    }
    Some(out)
}

fn fast(f: &UniformFamily, sh: &UniformFamily, h: &BasePattern, budget: &mut NodeBudget) -> Result<Option<RainbowWitness>> {
    // Cheap exit before enumerating every copy.
    if contains_expansion_within(sh, h, Engine::Fast, budget)?.is_none() {
        return Ok(None);
    }
    let mut copies: Vec<(Vec<VertexSet>, Vec<u32>)> = Vec::new();
    for_each_copy(sh, h, budget, |s, phi| {
        copies.push((s.to_vec(), phi.to_vec()));
        Ok(())
    })?;
    copies.sort();
    let center = h.center().to_vec();
    for (sets, phi) in copies {
        let pal: Vec<Vec<u32>> = sets.iter().map(|&e| palette(f, e)).collect();
        if let Some(colors) = least_colors(&pal) {
            let center_map = center.iter().copied().zip(phi).collect();
            return Ok(Some(RainbowWitness { copy: CopyWitness { sets, center_map }, colors }));
        }
    }
    Ok(None)
}

fn oracle(f: &UniformFamily, sh: &UniformFamily, h: &BasePattern, budget: &mut NodeBudget) -> Result<Option<RainbowWitness>> {
    fn colors(f: &UniformFamily, sets: &[VertexSet], out: &mut Vec<u32>) -> bool {
        let i = out.len();
        if i == sets.len() {
            return true;
        }
        for j in f.universe().iter() {
            if out.contains(&j) || sets[i].contains(j) || !f.contains(sets[i].with(j)) {
                continue;
            }
            out.push(j);
            if colors(f, sets, out) {
                return true;
            }
            out.pop();
        }
        false
    }
    fn tuples(
        f: &UniformFamily,
        sh: &[VertexSet],
        h: &BasePattern,
        chosen: &mut Vec<VertexSet>,
        budget: &mut NodeBudget,
    ) -> Result<Option<Vec<u32>>> {
        if chosen.len() == h.h() {
            let mut out = Vec::new();
            return Ok((is_copy(chosen, h) && colors(f, chosen, &mut out)).then_some(out));
        }
        for &a in sh {
            budget.tick()?;
            if chosen.contains(&a) {
                continue;
            }
            chosen.push(a);
            if let Some(c) = tuples(f, sh, h, chosen, budget)? {
                return Ok(Some(c));
            }
            chosen.pop();
        }
        Ok(None)
    }
    let mut chosen = Vec::new();
    let Some(colors) = tuples(f, sh.sets(), h, &mut chosen, budget)? else {
        return Ok(None);
    };
    let copy = CopyWitness { center_map: center_map_of(&chosen, h).expect("checked by is_copy"), sets: chosen };
    Ok(Some(RainbowWitness { copy, colors }))
}
