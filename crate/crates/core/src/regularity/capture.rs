use num::{One, Zero};

use crate::error::{arg, Result};
use crate::setfam::{ratio, slice_measure, uniform_measure, Rational, UniformFamily, VertexSet};

/// Capture-set size `s` and threshold `eps`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaptureParams {
    pub s: u32,
    pub eps: Rational,
}

impl CaptureParams {
    pub fn new(s: u32, eps: Rational) -> Result<Self> {
        if eps < Rational::zero() || eps > Rational::one() {
            return arg(format!("eps = {eps} outside [0,1]"));
        }
        Ok(CaptureParams { s, eps })
    }
}

/// Least `S` (by size, then canonical order) with `|S| <= s` and `μ(F_S^∅) <= eps`;
/// `None` means `F` is `(s, eps)`-uncapturable.
pub fn find_capturing_set(f: &UniformFamily, p: &CaptureParams) -> Option<VertexSet> {
    capturing_set(f, p.s, &p.eps)
}

pub(crate) fn capturing_set(f: &UniformFamily, s: u32, eps: &Rational) -> Option<VertexSet> {
    let u = f.universe();
    (0..=s.min(u.len()))
        .flat_map(|size| u.subsets_of_size(size))
        .find(|&set| &slice_measure(f, set, VertexSet::EMPTY) <= eps)
}

fn check_fair_size(f: &UniformFamily, size: u32) -> Result<()> {
    let room = f.universe_size().saturating_sub(f.k());
    if size > room {
        return arg(format!("fairness needs |S| <= n - k = {room}, got {size}"));
    }
    Ok(())
}

/// `μ(F_S^B) >= (1 - delta) μ(F)` for every `B ⊆ S`.
pub fn fairness(f: &UniformFamily, s: VertexSet, delta: &Rational) -> Result<bool> {
    if !s.is_subset(f.universe()) {
        return arg(format!("S = {s} leaves the universe {}", f.universe()));
    }
    check_fair_size(f, s.len())?;
    let floor = (Rational::one() - delta) * uniform_measure(f);
    Ok(s.all_subsets().all(|b| slice_measure(f, s, b) >= floor))
}

/// Fraction of the `s`-subsets of the universe that are `delta`-fair.
pub fn fair_fraction(f: &UniformFamily, s: u32, delta: &Rational) -> Result<Rational> {
    check_fair_size(f, s)?;
    let all = f.universe().subsets_of_size(s);
    let mut fair = 0u128;
    for set in &all {
        if fairness(f, *set, delta)? {
            fair += 1;
        }
    }
    Ok(ratio(fair, all.len() as u128))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfam::{rat, vs};

    fn params(s: u32, a: i64, b: i64) -> CaptureParams {
        CaptureParams::new(s, rat(a, b)).unwrap()
    }

    #[test]
    fn capture_examples() {
        let star = UniformFamily::from_predicate(6, 3, |a| a.contains(1));
        assert_eq!(find_capturing_set(&star, &params(1, 0, 1)), Some(vs(&[1])));
        let full = UniformFamily::complete(7, 3);
        for s in 0..4 {
            assert_eq!(find_capturing_set(&full, &params(s, 99, 100)), None);
        }
        let two = UniformFamily::from_predicate(6, 2, |a| a.contains(1) || a.contains(2));
        assert_eq!(find_capturing_set(&two, &params(1, 0, 1)), None);
        assert_eq!(find_capturing_set(&two, &params(2, 0, 1)), Some(vs(&[1, 2])));
        // The empty set captures whenever μ(F) <= eps.
        assert_eq!(find_capturing_set(&star, &params(1, 1, 2)), Some(VertexSet::EMPTY));
    }

    #[test]
    fn fairness_examples() {
        let full = UniformFamily::complete(6, 3);
        assert!(fairness(&full, vs(&[1, 2, 3]), &rat(0, 1)).unwrap());
        let star = UniformFamily::from_predicate(6, 3, |a| a.contains(1));
        assert!(!fairness(&star, vs(&[1]), &rat(99, 100)).unwrap());
        assert_eq!(fair_fraction(&star, 1, &rat(1, 2)).unwrap(), rat(5, 6));
        assert!(fairness(&full, vs(&[1, 2, 3, 4]), &rat(0, 1)).is_err());
    }

    #[test]
    fn zero_delta_fraction_matches_direct_count() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(4..=8);
            let k = rng.gen_range(1..n.min(4));
            let sets = VertexSet::full(n).subsets_of_size(k).into_iter().filter(|_| rng.gen_bool(0.5)).collect();
            let f = UniformFamily::new(n, k, sets).unwrap();
            let s = rng.gen_range(1..=(n - k).min(2));
            let mu = uniform_measure(&f);
            let direct = VertexSet::full(n)
                .subsets_of_size(s)
                .iter()
                .filter(|set| {
                    set.all_subsets().all(|b| {
                        let hits = f.iter().filter(|a| a.intersection(**set) == b).count() as u128;
                        let level = crate::setfam::numeric::binom_u128(n - s, k - b.len().min(k));
                        let m = if b.len() > k { Rational::zero() } else { ratio(hits, level) };
                        m >= mu
                    })
                })
                .count();
            let want = ratio(direct as u128, crate::setfam::numeric::binom_u128(n, s));
            assert_eq!(fair_fraction(&f, s, &Rational::zero()).unwrap(), want);
            assert_eq!(want == Rational::one(), fair_fraction(&f, s, &Rational::zero()).unwrap() == Rational::one());
        }
    }
}
