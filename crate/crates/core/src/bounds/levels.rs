use super::{len_rat, InequalityReport};
use crate::error::{arg, Result};
use crate::setfam::{binom, closure, rat_int, shadow, uniform_measure, Direction, Rational, UniformFamily};

/// `μ((F↓)^(i))` for `i = 0..=k`.
pub fn complex_level_measures(f: &UniformFamily) -> Result<Vec<Rational>> {
    (0..=f.k()).map(|i| shadow(f, f.k() - i).map(|s| uniform_measure(&s))).collect()
}

/// In the complex generated by `F`, the level measure never increases with the level:
/// one report `μ((F↓)^(i+1)) <= μ((F↓)^(i))` per `i < k`.
pub fn level_monotonicity(f: &UniformFamily) -> Result<Vec<InequalityReport>> {
    let m = complex_level_measures(f)?;
    Ok(m.windows(2)
        .enumerate()
        .map(|(i, w)| InequalityReport::exact(format!("complex level {} vs {i}", i + 1), w[1].clone(), w[0].clone()))
        .collect())
}

/// Growth of the up-closure levels of a `k`-uniform `F`.
///
/// If `|F| >= C(n-t, k-t)` then `|F↑^(k')| >= C(n-t, k'-t)`, and if
/// `|F| >= C(n,k) - C(n-t,k)` then `|F↑^(k')| >= C(n,k') - C(n-t,k')`, for all `k' > k`.
/// Reports are emitted only where the hypothesis holds, lower bound on the left.
pub fn upward_levels(f: &UniformFamily, t: u32) -> Result<Vec<InequalityReport>> {
    let (n, k) = (f.n() as i64, f.k() as i64);
    if t as i64 > k {
        return arg(format!("upward levels need t <= k = {k}, got {t}"));
    }
    let t = t as i64;
    let up = closure(&f.to_general(), Direction::Up);
    let counts = up.level_counts();
    let size = len_rat(f.len());
    let star = |j: i64| rat_int(binom(n - t, j - t));
    let co_star = |j: i64| rat_int(binom(n, j) - binom(n - t, j));
    let mut out = Vec::new();
    for kp in k + 1..=n {
        let have = rat_int(counts[kp as usize]);
        if size >= star(k) {
            out.push(InequalityReport::exact(format!("t-star level {kp}"), star(kp), have.clone()));
        }
        if size >= co_star(k) {
            out.push(InequalityReport::exact(format!("co-star level {kp}"), co_star(kp), have));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfam::{vs, VertexSet};

    #[test]
    fn star_meets_bounds_with_equality() {
        let f = UniformFamily::from_predicate(6, 3, |a| vs(&[1, 2]).is_subset(a));
        let reps = upward_levels(&f, 2).unwrap();
        assert!(reps.iter().all(|r| r.holds));
        assert!(reps.iter().filter(|r| r.kind.starts_with("t-star")).all(|r| r.left == r.right));
        let g = UniformFamily::from_predicate(6, 3, |a| !a.is_disjoint(vs(&[1, 2])));
        let reps = upward_levels(&g, 2).unwrap();
        let co: Vec<_> = reps.iter().filter(|r| r.kind.starts_with("co-star")).collect();
        assert_eq!(co.len(), 3);
        assert!(co.iter().all(|r| r.left == r.right));
        assert!(reps.iter().all(|r| r.holds));
    }

    #[test]
    fn single_point_family() {
        // the co-star form must use C(n,k'), not C(n,k)
        let f = UniformFamily::new(4, 1, vec![vs(&[1])]).unwrap();
        let reps = upward_levels(&f, 1).unwrap();
        assert!(reps.iter().all(|r| r.holds));
        assert_eq!(reps.last().unwrap().left, super::super::Side::Exact(rat_int(1)));
    }

    #[test]
    fn exhaustive_small_universes() {
        for n in 2..=5u32 {
            for k in 1..n {
                let all = VertexSet::full(n).subsets_of_size(k);
                if all.len() > 10 {
                    continue;
                }
                for mask in 0u32..(1 << all.len()) {
                    let pick = (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i]).collect();
                    let f = UniformFamily::new(n, k, pick).unwrap();
                    for t in 0..=k {
                        assert!(upward_levels(&f, t).unwrap().iter().all(|r| r.holds));
                    }
                    assert!(level_monotonicity(&f).unwrap().iter().all(|r| r.holds));
                }
            }
        }
    }
}
