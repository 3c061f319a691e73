//! Shadow and measure inequalities as exact, checkable predicates.

mod levels;
mod measure;

use std::fmt;

use num::{ToPrimitive, Zero};

use crate::detect::{contains_expansion, Engine};
use crate::error::{arg, Error, Result};
use crate::hstruct::BasePattern;
use crate::setfam::numeric::{pow, to_f64};
use crate::setfam::{gen_binomial, rat_int, shadow, Rational, UniformFamily};

pub use levels::{complex_level_measures, level_monotonicity, upward_levels};
pub use measure::{disjoint_choice, measure_inequality, MeasureKind};

/// Slack allowed when a real-valued side is compared.
pub const REAL_TOLERANCE: f64 = 1e-6;

/// One side of an inequality.
#[derive(Debug, Clone, PartialEq)]
pub enum Side {
    Exact(Rational),
    Real(f64),
}

impl Side {
    pub fn to_f64(&self) -> f64 {
        match self {
            Side::Exact(r) => to_f64(r),
            Side::Real(x) => *x,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Exact(r) => write!(f, "{r}"),
            Side::Real(x) => write!(f, "{x:.9}"),
        }
    }
}

/// `left <= right`, evaluated. `asserted` is false for reports that only record a value.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub kind: String,
    pub left: Side,
    pub right: Side,
    pub holds: bool,
    pub slack: Side,
    pub asserted: bool,
    /// Extra quantity of interest, e.g. the shadow ratio at depth > 1.
    pub ratio: Option<Rational>,
}

impl InequalityReport {
    /// Exact comparison of two rationals.
    pub fn exact(kind: impl Into<String>, left: Rational, right: Rational) -> Self {
        let holds = left <= right;
        let slack = Side::Exact(&right - &left);
        InequalityReport {
            kind: kind.into(),
            left: Side::Exact(left),
            right: Side::Exact(right),
            holds,
            slack,
            asserted: true,
            ratio: None,
        }
    }

    /// Comparison with at least one real side; holds up to [`REAL_TOLERANCE`].
    pub fn real(kind: impl Into<String>, left: Side, right: Side) -> Self {
        let slack = right.to_f64() - left.to_f64();
        InequalityReport {
            kind: kind.into(),
            holds: slack >= -REAL_TOLERANCE,
            left,
            right,
            slack: Side::Real(slack),
            asserted: true,
            ratio: None,
        }
    }
}

impl fmt::Display for InequalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (self.asserted, self.holds) {
            (false, _) => "recorded",
            (true, true) => "holds",
            (true, false) => "FAILS",
        };
        write!(f, "{}: {} <= {} {verdict} (slack {})", self.kind, self.left, self.right, self.slack)?;
        if let Some(r) = &self.ratio {
            write!(f, ", ratio {r}")?;
        }
        Ok(())
    }
}

/// Lower bound `C(x, k-1)` on the shadow of any `m`-member `k`-uniform family,
/// where `x >= k-1` solves `C(x, k) = m`.
pub fn lovasz_shadow_bound(m: u64, k: u32) -> f64 {
    if m == 0 || k == 0 {
        return 0.0;
    }
    let target = m as f64;
    let (mut lo, mut hi) = ((k - 1) as f64, (k as u64 + m) as f64);
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        if gen_binomial(mid, k) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    gen_binomial(0.5 * (lo + hi), k - 1)
}

/// `lovasz_shadow_bound(|F|, k) <= |∂F|`.
pub fn lovasz_check(f: &UniformFamily) -> Result<InequalityReport> {
    if f.k() == 0 {
        return arg("the shadow bound needs k >= 1");
    }
    let sh = shadow(f, 1)?;
    Ok(InequalityReport::real(
        "lovasz shadow",
        Side::Real(lovasz_shadow_bound(f.len() as u64, f.k())),
        Side::Exact(rat_int(sh.len() as u64)),
    ))
}

/// For `H⁺`-free `F`: depth 1 checks `|F| <= k h |∂F|`; deeper levels record
/// `|F| / (k^t |∂^t F|)` and compare against `k^t |∂^t F|` without asserting.
pub fn shadow_ratio(f: &UniformFamily, h: &BasePattern, t: u32) -> Result<InequalityReport> {
    if t == 0 || t > f.k() {
        return arg(format!("shadow depth must lie in 1..={}, got {t}", f.k()));
    }
    if let Some(w) = contains_expansion(f, h, Engine::Fast)? {
        let sets: Vec<String> = w.sets.iter().map(|s| s.to_string()).collect();
        return Err(Error::Precondition(format!(
            "family is not free of the expansion of {}: copy {}",
            h.render(),
            sets.join(" ")
        )));
    }
    let k = rat_int(f.k());
    let size = rat_int(f.len() as u64);
    let sh = rat_int(shadow(f, t)?.len() as u64);
    if t == 1 {
        let right = k * rat_int(h.h() as u64) * sh;
        return Ok(InequalityReport::exact("shadow depth 1", size, right));
    }
    let scaled = pow(&k, t) * sh;
    let ratio = if scaled.is_zero() { Rational::zero() } else { &size / &scaled };
    let mut rep = InequalityReport::exact(format!("shadow depth {t}"), size, scaled);
    rep.asserted = false;
    rep.ratio = Some(ratio);
    Ok(rep)
}

pub(crate) fn len_rat(n: usize) -> Rational {
    rat_int(n.to_u64().unwrap_or(u64::MAX))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hstruct::builders::{matching, special_simplex};

    #[test]
    fn lovasz_examples() {
        assert!((lovasz_shadow_bound(6, 2) - 4.0).abs() < 1e-6);
        assert!((lovasz_shadow_bound(3, 2) - 3.0).abs() < 1e-6);
        let x = (1.0 + 33f64.sqrt()) / 2.0;
        assert!((lovasz_shadow_bound(4, 2) - x).abs() < 1e-6);
        assert_eq!(lovasz_shadow_bound(0, 3), 0.0);
        // C(x,3) = 10 at x = 5, bound C(5,2) = 10
        assert!((lovasz_shadow_bound(10, 3) - 10.0).abs() < 1e-6);
    }

    #[test]
    fn lovasz_exhaustive_four_edges_on_six() {
        let all = UniformFamily::complete(6, 2);
        let sets = all.sets();
        let mut min_shadow = usize::MAX;
        for mask in 0u32..(1 << sets.len()) {
            if mask.count_ones() != 4 {
                continue;
            }
            let pick = (0..sets.len()).filter(|i| mask >> i & 1 == 1).map(|i| sets[i]).collect();
            let f = UniformFamily::new(6, 2, pick).unwrap();
            let rep = lovasz_check(&f).unwrap();
            assert!(rep.holds, "{rep}");
            min_shadow = min_shadow.min(shadow(&f, 1).unwrap().len());
        }
        assert_eq!(min_shadow, 4);
    }

    #[test]
    fn shadow_ratio_examples() {
        let star = UniformFamily::from_predicate(6, 3, |a| a.contains(1));
        let rep = shadow_ratio(&star, &special_simplex(2).unwrap(), 1).unwrap();
        assert_eq!(rep.left, Side::Exact(rat_int(10)));
        assert_eq!(rep.right, Side::Exact(rat_int(3 * 3 * 15)));
        assert!(rep.holds);
        let empty = UniformFamily::empty(6, 3);
        let rep = shadow_ratio(&empty, &special_simplex(2).unwrap(), 1).unwrap();
        assert_eq!((rep.left.to_f64(), rep.right.to_f64(), rep.holds), (0.0, 0.0, true));
        let deep = shadow_ratio(&empty, &special_simplex(2).unwrap(), 2).unwrap();
        assert_eq!(deep.ratio, Some(Rational::zero()));
        assert!(!deep.asserted);
    }

    #[test]
    fn shadow_ratio_rejects_non_free_family() {
        let full = UniformFamily::complete(6, 3);
        let e = shadow_ratio(&full, &matching(2).unwrap(), 1).unwrap_err();
        assert!(matches!(e, Error::Precondition(ref m) if m.contains("copy")), "{e}");
        let star = UniformFamily::from_predicate(6, 3, |a| a.contains(1));
        let deep = shadow_ratio(&star, &matching(2).unwrap(), 2).unwrap();
        // |F| = 10, ∂^2 F = all singletons
        assert_eq!(deep.ratio, Some(rat_int(10) / (rat_int(9) * rat_int(6))));
    }
}
