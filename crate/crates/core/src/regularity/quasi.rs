use num::Zero;

use crate::error::{arg, Error, Result};
use crate::setfam::{numeric::pow, rat, slice, slice_measure, uniform_measure, Rational, UniformFamily, VertexSet};

/// The factor `α` in `μ(F_B^B) <= α μ(F)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Alpha {
    Value(Rational),
    /// `α = √x`; comparisons are made on squares, so they stay exact.
    SqrtOf(Rational),
}

impl Alpha {
    fn exceeded(&self, mu_b: &Rational, mu: &Rational) -> bool {
        match self {
            Alpha::Value(a) => mu_b > &(a * mu),
            Alpha::SqrtOf(x) => mu_b > &Rational::zero() && mu_b * mu_b > x * mu * mu,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiCheck {
    pub holds: bool,
    pub violation: Option<VertexSet>,
}

fn violations<'a>(f: &'a UniformFamily, l: u32, alpha: &Alpha) -> impl Iterator<Item = VertexSet> + 'a {
    let mu = uniform_measure(f);
    let alpha = alpha.clone();
    let u = f.universe();
    (1..=l.min(u.len()))
        .flat_map(move |size| u.subsets_of_size(size))
        .filter(move |&b| alpha.exceeded(&slice_measure(f, b, b), &mu))
}

/// `(l, α)`-quasiregularity; on failure reports the canonically least violating `B`.
pub fn quasiregular(f: &UniformFamily, l: u32, alpha: &Alpha) -> Result<QuasiCheck> {
    if l == 0 {
        return arg("quasiregularity needs l >= 1");
    }
    let violation = violations(f, l, alpha).min();
    Ok(QuasiCheck { holds: violation.is_none(), violation })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Descent {
    pub t: VertexSet,
    pub slice: UniformFamily,
    /// Violating sets in the order they were sliced away.
    pub steps: Vec<VertexSet>,
}

/// Slices away violating sets until `F_T^T` is `(h', √(n/k))`-quasiregular.
/// `n/k` is taken from the input family throughout.
pub fn quasiregular_descent(f: &UniformFamily, h_prime: u32, r: u32) -> Result<Descent> {
    if h_prime == 0 || r == 0 {
        return arg("quasiregular descent needs h' >= 1 and r >= 1");
    }
    let (n, k) = (f.universe_size(), f.k());
    if k == 0 {
        return arg("quasiregular descent needs k >= 1");
    }
    let mu0 = uniform_measure(f);
    if mu0 < pow(&rat(k as i64, n as i64), r) {
        return Err(Error::Precondition(format!("μ(F) = {mu0} is below (k/n)^r = ({k}/{n})^{r}")));
    }
    let alpha = Alpha::SqrtOf(rat(n as i64, k as i64));
    let mut cur = f.clone();
    let mut t = VertexSet::EMPTY;
    let mut steps = Vec::new();
    // violations() yields sizes in increasing order, canonical within a size.
    loop {
        let Some(b) = violations(&cur, h_prime, &alpha).next() else { break };
        if steps.len() as u32 >= 2 * r {
            return Err(Error::Invariant(format!("quasiregular descent exceeded 2r = {} steps", 2 * r)));
        }
        cur = slice(&cur, b, b)?;
        t = t.union(b);
        steps.push(b);
    }
    if uniform_measure(&cur) < mu0 {
        return Err(Error::Invariant("quasiregular descent lowered the measure".into()));
    }
    Ok(Descent { t, slice: cur, steps })
}
