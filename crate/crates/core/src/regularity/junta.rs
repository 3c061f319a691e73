use super::capture::capturing_set;
use crate::error::{arg, Error, Result};
use crate::setfam::{numeric::pow, rat, rat_int, slice, uniform_measure, Rational, UniformFamily, VertexSet};

/// A junta `𝒥 ⊆ P(J)` approximating `F`, with its certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JuntaApproximation {
    pub j: VertexSet,
    /// Members of `𝒥` in canonical order.
    pub family: Vec<VertexSet>,
    /// For each member `B`, the `eps (n/k)^|B|` at which `F_B^B` was re-checked uncapturable.
    pub certified_eps: Vec<Rational>,
    /// `μ(F \ 𝒥↑)`.
    pub defect: Rational,
    /// `(s+1)^r eps`.
    pub defect_bound: Rational,
}

/// Builds the junta by the capture-and-recurse construction and certifies both conclusions.
///
/// The `n/k` growth factor is the one of the input family at every level.
pub fn junta_approximation(f: &UniformFamily, s: u32, eps: &Rational, r: u32) -> Result<JuntaApproximation> {
    let (n, k) = (f.universe_size(), f.k());
    if k == 0 || k >= n {
        return arg(format!("junta approximation needs 0 < k < n, got n = {n}, k = {k}"));
    }
    let growth = rat(n as i64, k as i64);
    if eps < &pow(&growth.recip(), r) {
        return arg(format!("eps = {eps} is below (k/n)^r = ({k}/{n})^{r}"));
    }
    let (j, mut family) = build(f, s, eps.clone(), r, &growth);
    family.sort_unstable();
    family.dedup();
    let approx = certify(f, s, eps, r, j, family)?;
    Ok(approx)
}

fn build(f: &UniformFamily, s: u32, eps: Rational, r: u32, growth: &Rational) -> (VertexSet, Vec<VertexSet>) {
    if r == 0 {
        return (VertexSet::EMPTY, Vec::new());
    }
    let Some(cap) = capturing_set(f, s, &eps) else {
        return (VertexSet::EMPTY, vec![VertexSet::EMPTY]);
    };
    let mut j = cap;
    let mut family = Vec::new();
    let next_eps = eps * growth;
    for i in cap.iter() {
        let one = VertexSet::singleton(i);
        let child = slice(f, one, one).expect("i lies in the universe and k >= 1");
        let (ji, fi) = build(&child, s, next_eps.clone(), r - 1, growth);
        j = j.union(ji);
        family.extend(fi.into_iter().map(|b| b.with(i)));
    }
    (j, family)
}

/// Re-checks both conclusions from scratch; fails with an invariant error if either breaks.
pub fn certify(
    f: &UniformFamily,
    s: u32,
    eps: &Rational,
    r: u32,
    j: VertexSet,
    family: Vec<VertexSet>,
) -> Result<JuntaApproximation> {
    let (n, k) = (f.universe_size(), f.k());
    let growth = rat(n as i64, k as i64);
    let mut certified_eps = Vec::with_capacity(family.len());
    for b in &family {
        if !b.is_subset(j) {
            return Err(Error::Invariant(format!("junta member {b} is not inside J = {j}")));
        }
        let level_eps = eps * pow(&growth, b.len());
        let sl = slice(f, *b, *b)?;
        if capturing_set(&sl, s, &level_eps).is_some() {
            return Err(Error::Invariant(format!("F_B^B for B = {b} is ({s}, {level_eps})-capturable")));
        }
        certified_eps.push(level_eps);
    }
    let outside = f.filter(|a| !family.iter().any(|b| b.is_subset(a)));
    let defect = uniform_measure(&outside);
    let defect_bound = pow(&rat_int(s + 1), r) * eps;
    if defect > defect_bound {
        return Err(Error::Invariant(format!("defect {defect} exceeds (s+1)^r eps = {defect_bound}")));
    }
    let cap = (s as u128 + 1).checked_pow(r).unwrap_or(u128::MAX);
    if j.len() as u128 > cap {
        return Err(Error::Invariant(format!("|J| = {} exceeds (s+1)^r = {cap}", j.len())));
    }
    Ok(JuntaApproximation { j, family, certified_eps, defect, defect_bound })
}
