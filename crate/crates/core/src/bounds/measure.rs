use num::{One, Zero};

use super::InequalityReport;
use crate::detect::cross_intersecting;
use crate::error::{arg, Error, Result};
use crate::setfam::{biased_measure, disjoint_union_family, rat, rat_int, GeneralFamily, Rational, VertexSet};

/// Which biased-measure inequality to evaluate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeasureKind {
    /// `Σ μ_{p_i}(F_i) <= t - 1` for `t` families with no pairwise disjoint choice, `Σ p_i <= 1`.
    CrossMatchingSum(Vec<Rational>),
    /// `(1/s) Σ μ_{(s-1)/s}(F_i) <= (s-1)/s` for `s`-wise cross-intersecting families.
    AverageBiased(usize),
    /// `μ_p(A) + μ_q(B) - 1 <= μ_{p+q}(A ⊔ B)` for monotone `A`, `B`.
    Coupling(Rational, Rational),
}

impl MeasureKind {
    pub fn tag(&self) -> &'static str {
        match self {
            MeasureKind::CrossMatchingSum(_) => "cross matching sum",
            MeasureKind::AverageBiased(_) => "average biased measure",
            MeasureKind::Coupling(..) => "coupling",
        }
    }
}

/// Least tuple `(A_1, ..., A_t)`, `A_i ∈ F_i`, of pairwise disjoint sets.
pub fn disjoint_choice(fs: &[GeneralFamily]) -> Option<Vec<VertexSet>> {
    fn rec(fs: &[GeneralFamily], used: VertexSet, chosen: &mut Vec<VertexSet>) -> bool {
        let Some(f) = fs.get(chosen.len()) else { return true };
        for a in f.iter() {
            if a.is_disjoint(used) {
                chosen.push(a);
                if rec(fs, used.union(a), chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::with_capacity(fs.len());
    rec(fs, VertexSet::EMPTY, &mut chosen).then_some(chosen)
}

fn render(sets: &[VertexSet]) -> String {
    sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

fn same_universe(fs: &[GeneralFamily]) -> Result<()> {
    if let Some(f) = fs.iter().find(|f| f.n() != fs[0].n()) {
        return arg(format!("families live on different universes ({} and {})", fs[0].n(), f.n()));
    }
    Ok(())
}

/// Evaluates one inequality exactly after verifying its preconditions.
pub fn measure_inequality(kind: &MeasureKind, fs: &[GeneralFamily]) -> Result<InequalityReport> {
    if fs.is_empty() {
        return arg("no families given");
    }
    same_universe(fs)?;
    match kind {
        MeasureKind::CrossMatchingSum(ps) => {
            if ps.len() != fs.len() {
                return arg(format!("{} biases for {} families", ps.len(), fs.len()));
            }
            if let Some(p) = ps.iter().find(|p| **p <= Rational::zero() || **p >= Rational::one()) {
                return arg(format!("bias {p} outside (0,1)"));
            }
            let total: Rational = ps.iter().sum();
            if total > Rational::one() {
                return Err(Error::Precondition(format!("biases sum to {total} > 1")));
            }
            if let Some(w) = disjoint_choice(fs) {
                return Err(Error::Precondition(format!("pairwise disjoint choice {}", render(&w))));
            }
            let mut left = Rational::zero();
            for (f, p) in fs.iter().zip(ps) {
                left += biased_measure(f, p)?;
            }
            Ok(InequalityReport::exact(kind.tag(), left, rat_int(fs.len() as u64 - 1)))
        }
        MeasureKind::AverageBiased(s) => {
            let c = cross_intersecting(fs, *s)?;
            if let Some(w) = c.violation {
                return Err(Error::Precondition(format!("choice with empty intersection {}", render(&w))));
            }
            let s = *s as i64;
            let p = rat(s - 1, s);
            let mut sum = Rational::zero();
            for f in fs {
                sum += biased_measure(f, &p)?;
            }
            Ok(InequalityReport::exact(kind.tag(), sum / rat_int(s), p))
        }
        MeasureKind::Coupling(p, q) => {
            let [a, b] = fs else {
                return arg(format!("coupling takes two families, got {}", fs.len()));
            };
            let pq = p + q;
            if p < &Rational::zero() || q < &Rational::zero() || pq > Rational::one() {
                return arg(format!("coupling needs p, q >= 0 and p + q <= 1, got {p}, {q}"));
            }
            for (name, f) in [("A", a), ("B", b)] {
                if !f.is_monotone() {
                    return Err(Error::Precondition(format!("{name} is not monotone")));
                }
            }
            let left = biased_measure(a, p)? + biased_measure(b, q)? - Rational::one();
            let right = biased_measure(&disjoint_union_family(a, b)?, &pq)?;
            Ok(InequalityReport::exact(kind.tag(), left, right))
        }
    }
}
