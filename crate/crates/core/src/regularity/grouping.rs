use crate::error::{arg, Result};
use crate::setfam::{rat_int, Rational};

/// Merges groups of indices while at least two have total `<= threshold`, always the
/// two smallest (ties to the lower least index). Groups come back ordered by least index.
///
/// Afterwards every total is `<= 2·threshold` and at most one is `<= threshold`.
pub fn balanced_grouping(sizes: &[u64], threshold: &Rational) -> Result<Vec<Vec<usize>>> {
    if let Some((i, s)) = sizes.iter().enumerate().find(|(_, &s)| &rat_int(s) > threshold) {
        return arg(format!("size {s} at index {i} exceeds the threshold {threshold}"));
    }
    let mut groups: Vec<(u64, Vec<usize>)> = sizes.iter().enumerate().map(|(i, &s)| (s, vec![i])).collect();
    loop {
        let mut small: Vec<usize> = (0..groups.len()).filter(|&g| &rat_int(groups[g].0) <= threshold).collect();
        if small.len() < 2 {
            break;
        }
        small.sort_by_key(|&g| (groups[g].0, groups[g].1[0]));
        let (a, b) = (small[0].min(small[1]), small[0].max(small[1]));
        let (tb, ib) = groups.remove(b);
        let ga = &mut groups[a];
        ga.0 += tb;
        ga.1.extend(ib);
        ga.1.sort_unstable();
    }
    groups.sort_by_key(|g| g.1[0]);
    Ok(groups.into_iter().map(|g| g.1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfam::rat;

    fn totals(sizes: &[u64], groups: &[Vec<usize>]) -> Vec<u64> {
        groups.iter().map(|g| g.iter().map(|&i| sizes[i]).sum()).collect()
    }

    #[test]
    fn examples() {
        let ones = [1u64; 10];
        let g = balanced_grouping(&ones, &rat(5, 2)).unwrap();
        let mut t = totals(&ones, &g);
        t.sort_unstable();
        assert_eq!(t, vec![2, 4, 4]);
        assert_eq!(balanced_grouping(&[3], &rat(3, 1)).unwrap(), vec![vec![0]]);
        assert_eq!(balanced_grouping(&[0, 0, 0], &rat(1, 1)).unwrap(), vec![vec![0, 1, 2]]);
        assert!(balanced_grouping(&[1, 5], &rat(4, 1)).is_err());
        assert!(balanced_grouping(&[], &rat(1, 1)).unwrap().is_empty());
    }

    #[test]
    fn postconditions_on_random_vectors() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let th = rng.gen_range(1..=20u64);
            let len = rng.gen_range(0..=30);
            let sizes: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=th)).collect();
            let thr = rat_int(th);
            let g = balanced_grouping(&sizes, &thr).unwrap();
            let t = totals(&sizes, &g);
            assert!(t.iter().all(|&x| x <= 2 * th));
            assert!(t.iter().filter(|&&x| x <= th).count() <= 1);
            let mut seen: Vec<usize> = g.concat();
            seen.sort_unstable();
            assert_eq!(seen, (0..len).collect::<Vec<_>>());
        }
    }
}
