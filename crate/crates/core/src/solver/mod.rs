//! Exact Turán numbers of small instances and checks of the star-type extremal theorems.

mod search;
mod stars;
mod theorems;

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::detect::{for_each_copy, is_simplex, Engine, ForbiddenSpec, NodeBudget};
use crate::error::{arg, Error, Result};
use crate::setfam::numeric::binom_u128;
use crate::setfam::{UniformFamily, VertexSet};

pub use search::Bound;
pub use stars::{star_construction, star_on, star_shape, StarKind, StarShape};
pub use theorems::{
    cross_matching_exhaustive, verify_theorem, CrossMatchingResult, TheoremCase, TheoremVerdict, Verdict,
};

pub const DEFAULT_MAX_CANDIDATES: u128 = 5000;

/// Called with the current family, as candidate sets, each time the search adds a set.
pub type Observer<'a> = &'a (dyn Fn(&[VertexSet]) + Sync);

#[derive(Clone)]
pub struct SolveOptions<'a> {
    pub all_optima: bool,
    pub threads: usize,
    pub bound: Bound,
    /// Skip the branch without the first candidate; only valid when optima are not enumerated.
    pub symmetry: bool,
    pub max_candidates: u128,
    /// Search node limit; `None` reads `TURAN_NODE_BUDGET`, unlimited when unset.
    pub node_limit: Option<u64>,
    /// Vertex permutation (`perm[v-1]` is the image of `v`) fixing the candidate order.
    pub relabel: Option<Vec<u32>>,
    pub observer: Option<Observer<'a>>,
}

impl Default for SolveOptions<'_> {
    fn default() -> Self {
        SolveOptions {
            all_optima: false,
            threads: 1,
            bound: Bound::Simple,
            symmetry: false,
            max_candidates: DEFAULT_MAX_CANDIDATES,
            node_limit: None,
            relabel: None,
            observer: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// Every optimum is a star of this shape; `count` optima in total.
    Stars { shape: StarShape, count: usize },
    Other,
    /// Optima were not enumerated.
    Unknown,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Stars { shape, .. } => write!(f, "{shape}"),
            Classification::Other => f.write_str("other"),
            Classification::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub n: u32,
    pub k: u32,
    pub spec: ForbiddenSpec,
    pub max_size: usize,
    /// All optima in search order, or just the first.
    pub witnesses: Vec<UniformFamily>,
    pub classification: Classification,
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct JsonReport {
    n: u32,
    k: u32,
    spec: String,
    max_size: usize,
    witness_count: usize,
    witnesses: Vec<Vec<Vec<u32>>>,
    optima_classification: String,
    nodes: u64,
    ms: Option<u128>,
}

impl SolveReport {
    /// JSON with a fixed key order; `ms` is null unless `timing` is set.
    pub fn to_json(&self, timing: bool) -> String {
        let r = JsonReport {
            n: self.n,
            k: self.k,
            spec: self.spec.render(),
            max_size: self.max_size,
            witness_count: self.witnesses.len(),
            witnesses: self.witnesses.iter().map(|f| f.iter().map(VertexSet::to_vec).collect()).collect(),
            optima_classification: self.classification.to_string(),
            nodes: self.nodes,
            ms: timing.then(|| self.elapsed.as_millis()),
        };
        serde_json::to_string(&r).expect("report serializes")
    }
}

fn classify(witnesses: &[UniformFamily], all: bool) -> Classification {
    if !all || witnesses.is_empty() {
        return Classification::Unknown;
    }
    let shapes: Vec<Option<StarShape>> = witnesses.iter().map(|f| star_shape(f).map(|s| s.0)).collect();
    match shapes[0] {
        Some(shape) if shapes.iter().all(|s| *s == Some(shape)) => {
            Classification::Stars { shape, count: witnesses.len() }
        }
        _ => Classification::Other,
    }
}

/// Candidate sets in search order.
fn candidates(n: u32, k: u32, relabel: Option<&[u32]>) -> Result<Vec<VertexSet>> {
    let mut cands = UniformFamily::complete(n, k).sets().to_vec();
    if let Some(perm) = relabel {
        let mut seen = VertexSet::EMPTY;
        for &v in perm {
            if v == 0 || v > n || seen.contains(v) {
                return arg(format!("relabeling {perm:?} is not a permutation of [1..{n}]"));
            }
            seen.insert(v);
        }
        if perm.len() != n as usize {
            return arg(format!("relabeling has {} entries, expected {n}", perm.len()));
        }
        let image = |s: &VertexSet| -> VertexSet { s.iter().map(|v| perm[v as usize - 1]).collect() };
        cands.sort_by_key(image);
    }
    Ok(cands)
}

/// Every forbidden configuration among `cands`, as candidate index lists.
fn forbidden_tuples(n: u32, k: u32, spec: &ForbiddenSpec, cands: &[VertexSet], budget: &mut NodeBudget) -> Result<Vec<Vec<u32>>> {
    let index: HashMap<VertexSet, u32> = cands.iter().enumerate().map(|(i, s)| (*s, i as u32)).collect();
    let mut out = Vec::new();
    match spec {
        ForbiddenSpec::Expansion(h) => {
            let complete = UniformFamily::complete(n, k);
            for_each_copy(&complete, h, budget, |sets, _| {
                let mut t: Vec<u32> = sets.iter().map(|s| index[s]).collect();
                t.sort_unstable();
                out.push(t);
                Ok(())
            })?;
        }
        ForbiddenSpec::Simplex(d) => {
            // Every subfamily of at most d members of a simplex has a common point.
            fn rec(
                sets: &[VertexSet],
                want: usize,
                from: usize,
                common: VertexSet,
                cur: &mut Vec<usize>,
                out: &mut Vec<Vec<u32>>,
                budget: &mut NodeBudget,
            ) -> Result<()> {
                budget.tick()?;
                if cur.len() == want {
                    let picked: Vec<VertexSet> = cur.iter().map(|&i| sets[i]).collect();
                    if is_simplex(&picked) {
                        out.push(cur.iter().map(|&i| i as u32).collect());
                    }
                    return Ok(());
                }
                for i in from..sets.len() {
                    let c = common.intersection(sets[i]);
                    if cur.len() + 1 < want && c.is_empty() {
                        continue;
                    }
                    cur.push(i);
                    rec(sets, want, i + 1, c, cur, out, budget)?;
                    cur.pop();
                }
                Ok(())
            }
            let canon = UniformFamily::complete(n, k);
            let mut found = Vec::new();
            rec(canon.sets(), *d as usize + 1, 0, VertexSet::full(n), &mut Vec::new(), &mut found, budget)?;
            out.extend(found.into_iter().map(|t| t.into_iter().map(|i| index[&canon.sets()[i as usize]]).collect()));
        }
    }
    Ok(out)
}

/// `ex(n, spec)` on `C([n],k)` by exhaustive branch and bound.
pub fn ex_max(n: u32, k: u32, spec: &ForbiddenSpec, opts: &SolveOptions<'_>) -> Result<SolveReport> {
    let start = Instant::now();
    if n == 0 || n > 64 || k > n {
        return arg(format!("need 1 <= n <= 64 and k <= n, got n = {n}, k = {k}"));
    }
    let m = binom_u128(n, k);
    if m > opts.max_candidates {
        return Err(Error::ResourceExhausted(format!(
            "C({n},{k}) = {m} candidate sets exceeds the limit of {}",
            opts.max_candidates
        )));
    }
    if opts.symmetry && opts.all_optima {
        return arg("symmetry pruning only applies when optima are not enumerated");
    }
    let mut budget = match opts.node_limit {
        Some(l) => NodeBudget::new(l),
        None => NodeBudget::from_env_or(u64::MAX)?,
    };
    let cands = candidates(n, k, opts.relabel.as_deref())?;
    let tuples = forbidden_tuples(n, k, spec, &cands, &mut budget)?;
    let conflicts = search::Conflicts::new(cands.len(), tuples);
    let lift = opts.observer.map(|obs| {
        let cands = &cands;
        move |idx: &[usize]| {
            let sets: Vec<VertexSet> = idx.iter().map(|&i| cands[i]).collect();
            obs(&sets)
        }
    });
    let params = search::Params {
        conflicts: &conflicts,
        all: opts.all_optima,
        bound: opts.bound,
        symmetric: opts.symmetry,
        threads: opts.threads.max(1),
        node_limit: budget.limit().saturating_sub(budget.used()),
        observer: lift.as_ref().map(|f| f as &(dyn Fn(&[usize]) + Sync)),
    };
    let out = search::run(&params)?;
    let mut witnesses = Vec::with_capacity(out.optima.len());
    for idx in &out.optima {
        let f = UniformFamily::new(n, k, idx.iter().map(|&i| cands[i]).collect())?;
        if let Some(bad) = spec.find(&f, Engine::Fast, &mut NodeBudget::unlimited())? {
            let bad: Vec<String> = bad.iter().map(|s| s.to_string()).collect();
            return Err(Error::Invariant(format!("solver optimum contains {}", bad.join(" "))));
        }
        witnesses.push(f);
    }
    let classification = classify(&witnesses, opts.all_optima);
    Ok(SolveReport {
        n,
        k,
        spec: spec.clone(),
        max_size: out.max,
        witnesses,
        classification,
        nodes: out.nodes + budget.used(),
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
fn conflict_count(n: u32, k: u32, spec: &ForbiddenSpec) -> Result<usize> {
    let cands = candidates(n, k, None)?;
    let t = forbidden_tuples(n, k, spec, &cands, &mut NodeBudget::unlimited())?;
    Ok(search::Conflicts::new(cands.len(), t).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hstruct::builders::matching;
    use crate::setfam::vs;

    fn spec(s: &str) -> ForbiddenSpec {
        ForbiddenSpec::parse(s).unwrap()
    }

    #[test]
    fn small_matching_instance() {
        let opts = SolveOptions { all_optima: true, ..Default::default() };
        let r = ex_max(5, 2, &spec("matching(2)"), &opts).unwrap();
        assert_eq!(r.max_size, 4);
        assert_eq!(r.witnesses.len(), 5);
        assert_eq!(r.classification, Classification::Stars { shape: StarShape::Full(1), count: 5 });
        assert_eq!(r.witnesses[0], star_on(5, 2, vs(&[1]), 1).unwrap());
    }

    #[test]
    fn conflicts_are_unordered_copies() {
        // disjoint pairs of edges in K5: 15
        assert_eq!(conflict_count(5, 2, &ForbiddenSpec::Expansion(matching(2).unwrap())).unwrap(), 15);
        // triangles of K4 edges: three pairwise meeting edges with no common point
        assert_eq!(conflict_count(4, 2, &spec("simplex(2)")).unwrap(), 4);
    }

    #[test]
    fn json_key_order() {
        let r = ex_max(4, 2, &spec("matching(2)"), &SolveOptions::default()).unwrap();
        let j = r.to_json(false);
        assert!(j.starts_with(r#"{"n":4,"k":2,"spec":"matching(2)","max_size":3,"witness_count":1,"#), "{j}");
        assert!(j.contains(r#""optima_classification":"unknown","nodes":"#) && j.ends_with(r#""ms":null}"#));
        assert_eq!(j, r.to_json(false));
    }

    #[test]
    fn limits() {
        let big = SolveOptions { max_candidates: 10, ..Default::default() };
        assert!(matches!(ex_max(6, 2, &spec("matching(2)"), &big), Err(Error::ResourceExhausted(_))));
        let tiny = SolveOptions { node_limit: Some(5), ..Default::default() };
        assert!(matches!(ex_max(6, 2, &spec("matching(2)"), &tiny), Err(Error::ResourceExhausted(_))));
        let sym = SolveOptions { all_optima: true, symmetry: true, ..Default::default() };
        assert!(ex_max(5, 2, &spec("matching(2)"), &sym).is_err());
    }
}
