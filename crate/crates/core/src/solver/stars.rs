use std::fmt;

use crate::error::{arg, Result};
use crate::setfam::{UniformFamily, VertexSet};

/// Star-like constructions on `T = [t]` unless a set is given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarKind {
    /// `{A : T ⊆ A}`
    Tt(u32),
    /// `{A : A ∩ T ≠ ∅}`
    T1(u32),
    /// `{A : |A ∩ T| >= s}`
    Ts(u32, u32),
    /// `{A : |A ∩ [t+2r]| >= t + r}`
    Ak(u32, u32),
    /// `{A : |A ∩ T| = 1}`
    OneCross(VertexSet),
}

/// `{A ∈ C([n],k) : |A ∩ T| >= s}`.
pub fn star_on(n: u32, k: u32, t: VertexSet, s: u32) -> Result<UniformFamily> {
    if !t.is_subset(VertexSet::full(n)) {
        return arg(format!("T = {t} leaves [1..{n}]"));
    }
    if s > t.len() {
        return arg(format!("s = {s} exceeds |T| = {}", t.len()));
    }
    Ok(UniformFamily::from_predicate(n, k, |a| a.intersection(t).len() >= s))
}

pub fn star_construction(n: u32, k: u32, kind: &StarKind) -> Result<UniformFamily> {
    if k > n {
        return arg(format!("k = {k} exceeds n = {n}"));
    }
    let first = |t: u32| {
        if t > n {
            arg(format!("t = {t} exceeds n = {n}"))
        } else {
            Ok(VertexSet::full(t))
        }
    };
    match *kind {
        StarKind::Tt(t) => {
            if t > k {
                return arg(format!("(t,t)-star needs t <= k, got t = {t}, k = {k}"));
            }
            star_on(n, k, first(t)?, t)
        }
        StarKind::T1(t) => {
            if t == 0 {
                return arg("(t,1)-star needs t >= 1");
            }
            star_on(n, k, first(t)?, 1)
        }
        StarKind::Ts(t, s) => star_on(n, k, first(t)?, s),
        StarKind::Ak(t, r) => star_on(n, k, first(t + 2 * r)?, t + r),
        StarKind::OneCross(t) => {
            if !t.is_subset(VertexSet::full(n)) {
                return arg(format!("T = {t} leaves [1..{n}]"));
            }
            Ok(UniformFamily::from_predicate(n, k, |a| a.intersection(t).len() == 1))
        }
    }
}

/// Shape of an optimal family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarShape {
    /// `{A ⊇ T}`, `|T| = t >= 1`
    Full(u32),
    /// `{A : A ∩ T ≠ ∅}`, `|T| = t >= 2`; `t = 1` is reported as `Full(1)`
    Meets(u32),
}

impl fmt::Display for StarShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarShape::Full(t) => write!(f, "({t},{t})-star"),
            StarShape::Meets(t) => write!(f, "({t},1)-star"),
        }
    }
}

/// The star shape of `F` together with its set `T`, if `F` is one.
pub fn star_shape(f: &UniformFamily) -> Option<(StarShape, VertexSet)> {
    let (n, k) = (f.n(), f.k());
    let u = VertexSet::full(n);
    if f.is_empty() || f.len() as u128 == f.level_size() && f.universe() == u {
        return None;
    }
    let core = f.iter().fold(u, |a, s| a.intersection(s));
    if !core.is_empty() && star_on(n, k, core, core.len()).ok().as_ref() == Some(f) {
        return Some((StarShape::Full(core.len()), core));
    }
    // For a (t,1)-star the missing sets cover exactly the complement of T.
    let missing = UniformFamily::complete(n, k).filter(|a| !f.contains(a));
    let t = u.difference(missing.iter().fold(VertexSet::EMPTY, |a, s| a.union(s)));
    if t.len() >= 2 && star_on(n, k, t, 1).ok().as_ref() == Some(f) {
        return Some((StarShape::Meets(t.len()), t));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfam::{binom, rat_int, vs};

    fn size(n: u32, k: u32, kind: StarKind) -> usize {
        star_construction(n, k, &kind).unwrap().len()
    }

    #[test]
    fn sizes() {
        assert_eq!(size(6, 3, StarKind::Tt(1)), 10);
        assert_eq!(size(6, 2, StarKind::T1(2)), 9);
        assert_eq!(size(6, 3, StarKind::Ak(1, 1)), 10);
        assert_eq!(size(7, 3, StarKind::OneCross(vs(&[1, 2, 3]))), 3 * 6);
        for (n, k, t) in [(7u32, 3u32, 2u32), (8, 4, 3), (6, 2, 1)] {
            let tt = rat_int(binom((n - t) as i64, (k - t) as i64));
            assert_eq!(rat_int(size(n, k, StarKind::Tt(t)) as u64), tt);
            let t1 = binom(n as i64, k as i64) - binom((n - t) as i64, k as i64);
            assert_eq!(rat_int(size(n, k, StarKind::T1(t)) as u64), rat_int(t1));
        }
        assert!(star_construction(6, 2, &StarKind::Tt(3)).is_err());
        assert!(star_construction(6, 3, &StarKind::Ak(2, 3)).is_err());
    }

    #[test]
    fn shapes() {
        let f = star_construction(6, 3, &StarKind::Tt(1)).unwrap();
        assert_eq!(star_shape(&f), Some((StarShape::Full(1), vs(&[1]))));
        let g = star_construction(6, 2, &StarKind::T1(2)).unwrap();
        assert_eq!(star_shape(&g), Some((StarShape::Meets(2), vs(&[1, 2]))));
        assert_eq!(StarShape::Meets(2).to_string(), "(2,1)-star");
        let t = star_on(6, 3, vs(&[2, 5]), 2).unwrap();
        assert_eq!(star_shape(&t), Some((StarShape::Full(2), vs(&[2, 5]))));
        let k5 = UniformFamily::complete(5, 2);
        let k5 = UniformFamily::new(6, 2, k5.sets().to_vec()).unwrap();
        assert_eq!(star_shape(&k5), None);
        assert_eq!(star_shape(&UniformFamily::complete(6, 2)), None);
    }
}
