//! Include-first branch and bound over candidate indices with forbidden index tuples.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Forbidden tuples grouped by their largest index; each entry lists the other indices.
pub(crate) struct Conflicts {
    by_max: Vec<Vec<Box<[u32]>>>,
}

impl Conflicts {
    pub(crate) fn new(m: usize, tuples: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut by_max: Vec<Vec<Box<[u32]>>> = vec![Vec::new(); m];
        for mut t in tuples {
            t.sort_unstable();
            t.dedup();
            let top = t.pop().expect("nonempty tuple") as usize;
            by_max[top].push(t.into_boxed_slice());
        }
        for list in &mut by_max {
            list.sort_unstable();
            list.dedup();
        }
        Conflicts { by_max }
    }

    #[cfg(test)]
    pub(crate) fn len(&self) -> usize {
        self.by_max.iter().map(Vec::len).sum()
    }

    /// Adding `i` on top of `chosen` (all indices `< i`) completes no forbidden tuple.
    #[inline]
    fn addable(&self, i: usize, chosen: &[bool]) -> bool {
        self.by_max[i].iter().all(|rest| rest.iter().any(|&j| !chosen[j as usize]))
    }

    /// `j` is already excluded by decisions on indices below `i`.
    fn blocked(&self, j: usize, i: usize, chosen: &[bool]) -> bool {
        self.by_max[j].iter().any(|rest| rest.iter().all(|&x| (x as usize) < i && chosen[x as usize]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Bound {
    /// current size plus the number of undecided candidates
    #[default]
    Simple,
    /// as `Simple`, but skips candidates already completing a forbidden tuple
    Blocked,
}

pub(crate) struct Params<'a> {
    pub conflicts: &'a Conflicts,
    pub all: bool,
    pub bound: Bound,
    pub symmetric: bool,
    pub threads: usize,
    pub node_limit: u64,
    pub observer: Option<&'a (dyn Fn(&[usize]) + Sync)>,
}

pub(crate) struct Outcome {
    pub max: usize,
    /// Optimal index sets in search order; only the first unless `all`.
    pub optima: Vec<Vec<usize>>,
    pub nodes: u64,
}

struct Shared<'a> {
    p: &'a Params<'a>,
    m: usize,
    floor: usize,
    nodes: AtomicU64,
    stop: AtomicBool,
}

struct Local {
    chosen: Vec<bool>,
    stack: Vec<usize>,
    best: usize,
    optima: Vec<Vec<usize>>,
    nodes: u64,
}

impl Local {
    fn new(m: usize) -> Self {
        Local { chosen: vec![false; m], stack: Vec::new(), best: 0, optima: Vec::new(), nodes: 0 }
    }

    fn record(&mut self, all: bool) {
        let size = self.stack.len();
        if size > self.best || self.optima.is_empty() {
            self.best = size;
            self.optima = vec![self.stack.clone()];
        } else if size == self.best && all {
            self.optima.push(self.stack.clone());
        }
    }
}

impl Shared<'_> {
    fn tick(&self, local: &mut Local) -> Result<()> {
        local.nodes += 1;
        if self.p.node_limit == u64::MAX {
            return Ok(());
        }
        let total = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if total > self.p.node_limit || self.stop.load(Ordering::Relaxed) {
            self.stop.store(true, Ordering::Relaxed);
            return Err(Error::ResourceExhausted(format!("solver node budget of {} exhausted", self.p.node_limit)));
        }
        Ok(())
    }

    fn bound(&self, i: usize, local: &Local) -> usize {
        let rest = match self.p.bound {
            Bound::Simple => self.m - i,
            Bound::Blocked => (i..self.m).filter(|&j| !self.p.conflicts.blocked(j, i, &local.chosen)).count(),
        };
        local.stack.len() + rest
    }

    fn pruned(&self, b: usize, local: &Local) -> bool {
        if b < self.floor || b < local.best {
            return true;
        }
        !self.p.all && !local.optima.is_empty() && b <= local.best
    }

    fn dfs(&self, i: usize, local: &mut Local) -> Result<()> {
        self.tick(local)?;
        if i == self.m {
            local.record(self.p.all);
            return Ok(());
        }
        if self.pruned(self.bound(i, local), local) {
            return Ok(());
        }
        let addable = self.p.conflicts.addable(i, &local.chosen);
        if addable {
            local.chosen[i] = true;
            local.stack.push(i);
            if let Some(obs) = self.p.observer {
                obs(&local.stack);
            }
            let r = self.dfs(i + 1, local);
            local.stack.pop();
            local.chosen[i] = false;
            r?;
        }
        // Any nonempty optimum can be moved onto candidate 0, so excluding it cannot win.
        if i == 0 && addable && self.p.symmetric {
            return Ok(());
        }
        self.dfs(i + 1, local)
    }
}

/// Size of the first leaf of the include-first order: the greedy maximal family.
fn greedy(c: &Conflicts, m: usize) -> usize {
    let mut chosen = vec![false; m];
    (0..m).filter(|&i| {
        let ok = c.addable(i, &chosen);
        chosen[i] = ok;
        ok
    })
    .count()
}

/// Feasible decision prefixes on the first `depth` candidates, in search order.
fn prefixes(c: &Conflicts, depth: usize, symmetric: bool) -> Vec<Vec<bool>> {
    fn rec(c: &Conflicts, depth: usize, symmetric: bool, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        let i = cur.len();
        if i == depth {
            out.push(cur.clone());
            return;
        }
        let mut padded = cur.clone();
        padded.resize(c.by_max.len(), false);
        let addable = c.addable(i, &padded);
        if addable {
            cur.push(true);
            rec(c, depth, symmetric, cur, out);
            cur.pop();
        }
        if !(i == 0 && addable && symmetric) {
            cur.push(false);
            rec(c, depth, symmetric, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(c, depth, symmetric, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn run(p: &Params<'_>) -> Result<Outcome> {
    let m = p.conflicts.by_max.len();
    let floor = greedy(p.conflicts, m);
    let shared = Shared { p, m, floor, nodes: AtomicU64::new(0), stop: AtomicBool::new(false) };
    let results: Vec<Result<Local>> = if p.threads <= 1 {
        let mut local = Local::new(m);
        vec![shared.dfs(0, &mut local).map(|_| local)]
    } else {
        let depth = m.min(12);
        let tasks = prefixes(p.conflicts, depth, p.symmetric);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(p.threads)
            .build()
            .map_err(|e| Error::Argument(format!("cannot start {} worker threads: {e}", p.threads)))?;
        pool.install(|| {
            tasks
                .into_par_iter()
                .map(|prefix| {
                    let mut local = Local::new(m);
                    for (i, &inc) in prefix.iter().enumerate() {
                        local.chosen[i] = inc;
                        if inc {
                            local.stack.push(i);
                        }
                    }
                    shared.dfs(depth, &mut local).map(|_| local)
                })
                .collect()
        })
    };
    let mut max = 0;
    let mut optima: Vec<Vec<usize>> = Vec::new();
    let mut nodes = 0;
    for r in results {
        let local = r?;
        nodes += local.nodes;
        if local.optima.is_empty() {
            continue;
        }
        if local.best > max || optima.is_empty() {
            max = local.best;
            optima = local.optima;
        } else if local.best == max && p.all {
            optima.extend(local.optima);
        }
    }
    if !p.all {
        optima.truncate(1);
    }
    Ok(Outcome { max, optima, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(c: &Conflicts, all: bool, threads: usize) -> Params<'_> {
        Params { conflicts: c, all, bound: Bound::Simple, symmetric: false, threads, node_limit: u64::MAX, observer: None }
    }

    /// Maximum independent sets of a 5-cycle by brute force.
    #[test]
    fn five_cycle() {
        let edges: Vec<Vec<u32>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
        let c = Conflicts::new(5, edges.clone());
        let mut brute = Vec::new();
        for mask in 0u32..32 {
            if edges.iter().all(|e| !(mask >> e[0] & 1 == 1 && mask >> e[1] & 1 == 1)) {
                brute.push(mask);
            }
        }
        let best = brute.iter().map(|m| m.count_ones()).max().unwrap() as usize;
        for threads in [1, 3] {
            let out = run(&params(&c, true, threads)).unwrap();
            assert_eq!(out.max, best);
            assert_eq!(out.optima.len(), brute.iter().filter(|m| m.count_ones() as usize == best).count());
            assert_eq!(out.optima[0], vec![0, 2]);
        }
    }

    #[test]
    fn budget_and_empty() {
        let c = Conflicts::new(0, Vec::<Vec<u32>>::new());
        let out = run(&params(&c, false, 1)).unwrap();
        assert_eq!((out.max, out.optima), (0, vec![vec![]]));
        let c = Conflicts::new(20, Vec::<Vec<u32>>::new());
        let mut p = params(&c, true, 1);
        p.node_limit = 10;
        assert!(matches!(run(&p), Err(Error::ResourceExhausted(_))));
    }
}
