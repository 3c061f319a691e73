use super::{Engine, NodeBudget};
use crate::error::Result;
use crate::setfam::{UniformFamily, VertexSet};

/// `d+1` sets with empty common intersection, any `d` of which intersect.
pub fn is_simplex(sets: &[VertexSet]) -> bool {
    if sets.len() < 2 {
        return false;
    }
    let all = sets.iter().fold(sets[0], |a, s| a.intersection(*s));
    all.is_empty()
        && (0..sets.len()).all(|skip| {
            let rest = sets
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .fold(None::<VertexSet>, |a, (_, s)| Some(a.map_or(*s, |a| a.intersection(*s))));
            rest.is_some_and(|r| !r.is_empty())
        })
}

/// Canonically least `d`-simplex in `F`: the chosen sets in increasing order.
pub fn contains_simplex(f: &UniformFamily, d: u32) -> Result<Option<Vec<VertexSet>>> {
    find_simplex(f, d, Engine::Fast, &mut NodeBudget::from_env_or(u64::MAX)?)
}

pub(crate) fn find_simplex(
    f: &UniformFamily,
    d: u32,
    engine: Engine,
    budget: &mut NodeBudget,
) -> Result<Option<Vec<VertexSet>>> {
    let size = d as usize + 1;
    if d == 0 || f.len() < size {
        return Ok(None);
    }
    let mut chosen = Vec::with_capacity(size);
    let found = match engine {
        Engine::Fast => fast(f.sets(), 0, size, &mut chosen, budget)?,
        Engine::Oracle => oracle(f.sets(), 0, size, &mut chosen, budget)?,
    };
    Ok(found.then_some(chosen))
}

fn fast(
    sets: &[VertexSet],
    from: usize,
    size: usize,
    chosen: &mut Vec<VertexSet>,
    budget: &mut NodeBudget,
) -> Result<bool> {
    if chosen.len() == size {
        return Ok(is_simplex(chosen));
    }
    let need = size - chosen.len();
    for idx in from..=sets.len() - need {
        budget.tick()?;
        let a = sets[idx];
        // Fewer than d+1 chosen sets all lie in some d-subset of the final choice.
        if chosen.len() + 1 < size {
            let common = chosen.iter().fold(a, |x, s| x.intersection(*s));
            if common.is_empty() {
                continue;
            }
        }
        chosen.push(a);
        if fast(sets, idx + 1, size, chosen, budget)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

fn oracle(
    sets: &[VertexSet],
    from: usize,
    size: usize,
    chosen: &mut Vec<VertexSet>,
    budget: &mut NodeBudget,
) -> Result<bool> {
    if chosen.len() == size {
        return Ok(is_simplex(chosen));
    }
    for idx in from..sets.len() {
        budget.tick()?;
        chosen.push(sets[idx]);
        if oracle(sets, idx + 1, size, chosen, budget)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfam::vs;

    fn both(f: &UniformFamily, d: u32) -> Option<Vec<VertexSet>> {
        let a = find_simplex(f, d, Engine::Fast, &mut NodeBudget::unlimited()).unwrap();
        let b = find_simplex(f, d, Engine::Oracle, &mut NodeBudget::unlimited()).unwrap();
        assert_eq!(a, b);
        a
    }

    #[test]
    fn examples() {
        let tri = UniformFamily::new(3, 2, vec![vs(&[1, 2]), vs(&[2, 3]), vs(&[1, 3])]).unwrap();
        assert_eq!(both(&tri, 2), Some(vec![vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]));
        let star = UniformFamily::from_predicate(6, 3, |a| a.contains(1));
        for d in 1..=3 {
            assert_eq!(both(&star, d), None);
        }
        assert_eq!(both(&UniformFamily::complete(4, 2), 1), Some(vec![vs(&[1, 2]), vs(&[3, 4])]));
        assert_eq!(both(&tri, 3), None);
    }

    #[test]
    fn agrees_on_random_families() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(3..=7);
            let k = rng.gen_range(1..=3.min(n));
            let sets = VertexSet::full(n).subsets_of_size(k).into_iter().filter(|_| rng.gen_bool(0.4)).collect();
            let f = UniformFamily::new(n, k, sets).unwrap();
            let d = rng.gen_range(1..=3);
            if let Some(w) = both(&f, d) {
                assert!(is_simplex(&w));
            }
        }
    }
}
