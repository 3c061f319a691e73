use crate::error::{arg, Result};
use crate::setfam::{GeneralFamily, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossIntersection {
    pub holds: bool,
    /// Least tuple `(A_1, ..., A_s)` with empty common intersection.
    pub violation: Option<Vec<VertexSet>>,
}

impl CrossIntersection {
    fn from(violation: Option<Vec<VertexSet>>) -> Self {
        CrossIntersection { holds: violation.is_none(), violation }
    }
}

/// Whether every choice `A_i ∈ F_i` has a common element.
pub fn cross_intersecting(fs: &[GeneralFamily], s: usize) -> Result<CrossIntersection> {
    check(fs, s)?;
    if fs.iter().any(GeneralFamily::is_empty) {
        return Ok(CrossIntersection::from(None));
    }
    fn rec(fs: &[GeneralFamily], common: VertexSet, chosen: &mut Vec<VertexSet>) -> bool {
        let i = chosen.len();
        if i == fs.len() {
            return common.is_empty();
        }
        if common.is_empty() {
            // Every completion violates; the least one takes first members.
            chosen.extend(fs[i..].iter().map(|f| f.sets()[0]));
            return true;
        }
        for a in fs[i].iter() {
            chosen.push(a);
            if rec(fs, common.intersection(a), chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(s);
    let full = VertexSet::from_bits(u64::MAX);
    Ok(CrossIntersection::from(rec(fs, full, &mut chosen).then_some(chosen)))
}

/// Plain product enumeration, for cross-checking.
pub fn cross_intersecting_oracle(fs: &[GeneralFamily], s: usize) -> Result<CrossIntersection> {
    check(fs, s)?;
    let mut idx = vec![0usize; s];
    if fs.iter().any(GeneralFamily::is_empty) {
        return Ok(CrossIntersection::from(None));
    }
    loop {
        let tuple: Vec<VertexSet> = idx.iter().zip(fs).map(|(&i, f)| f.sets()[i]).collect();
        if tuple.iter().fold(VertexSet::from_bits(u64::MAX), |a, b| a.intersection(*b)).is_empty() {
            return Ok(CrossIntersection::from(Some(tuple)));
        }
        // odometer, last coordinate fastest
        let mut pos = s;
        loop {
            if pos == 0 {
                return Ok(CrossIntersection::from(None));
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < fs[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn check(fs: &[GeneralFamily], s: usize) -> Result<()> {
    if fs.len() != s || s == 0 {
        return arg(format!("expected s = {s} >= 1 families, got {}", fs.len()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfam::vs;

    fn fam(sets: &[&[u32]]) -> GeneralFamily {
        GeneralFamily::new(6, sets.iter().map(|s| vs(s)).collect()).unwrap()
    }

    fn both(fs: &[GeneralFamily]) -> CrossIntersection {
        let a = cross_intersecting(fs, fs.len()).unwrap();
        assert_eq!(a, cross_intersecting_oracle(fs, fs.len()).unwrap());
        a
    }

    #[test]
    fn examples() {
        let t = fam(&[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(both(&[t.clone(), t.clone()]).holds);
        let r = both(&[t.clone(), t.clone(), t]);
        assert_eq!(r.violation, Some(vec![vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]));
        let star = GeneralFamily::from_predicate(5, |a| a.contains(1));
        for s in 1..=4 {
            assert!(both(&vec![star.clone(); s]).holds);
        }
        let r = both(&[fam(&[&[1, 2]]), fam(&[&[3, 4]])]);
        assert_eq!(r.violation, Some(vec![vs(&[1, 2]), vs(&[3, 4])]));
        assert!(cross_intersecting(&[star], 2).is_err());
    }

    #[test]
    fn early_empty_prefix() {
        let r = both(&[fam(&[&[1], &[2]]), fam(&[&[2], &[3]]), fam(&[&[4], &[5]])]);
        assert_eq!(r.violation, Some(vec![vs(&[1]), vs(&[2]), vs(&[4])]));
        let with_empty = both(&[fam(&[&[], &[1]]), fam(&[&[1]])]);
        assert_eq!(with_empty.violation, Some(vec![VertexSet::EMPTY, vs(&[1])]));
    }
}
