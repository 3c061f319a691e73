//! Structural conditions deciding which star is extremal for `H⁺`.
//!
//! Both checks run on the representative expansion at the given `k`. With
//! three or more edges the answers are the same for every `k` above the largest
//! base edge; with two edges the star check also needs `k >= 2|K| + 1`.

use super::pattern::{expand_representative, span, BasePattern, SpanMode};
use crate::error::{arg, Result};
use crate::setfam::VertexSet;

fn expansion(h: &BasePattern, k: u32) -> Result<Vec<VertexSet>> {
    if k <= h.max_edge_size() {
        return arg(format!(
            "condition checks need k > {} (the largest base edge), got k = {k}",
            h.max_edge_size()
        ));
    }
    expand_representative(h, k)
}

/// `Some(t)` with `t = |K(H)| + 1` when some `(2t-1)`-set lies in all edges but one.
pub fn check_condition_star(h: &BasePattern, k: u32) -> Result<Option<u32>> {
    let edges = expansion(h, k)?;
    if edges.len() < 2 {
        return Ok(None);
    }
    let kernel = edges.iter().fold(edges[0], |a, e| a.intersection(*e));
    let t = kernel.len() + 1;
    let hit = (0..edges.len()).any(|skip| {
        let rest = edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .fold(None::<VertexSet>, |acc, (_, e)| Some(acc.map_or(*e, |a| a.intersection(*e))))
            .unwrap_or(VertexSet::EMPTY);
        rest.len() >= 2 * t - 1
    });
    Ok(hit.then_some(t))
}

/// Smallest `t` in `1..h` for which some `t`-set meets `h-1` edges exactly once while
/// no `t`-set meets every edge, together with the first such set.
pub fn check_condition_double_star(h: &BasePattern, k: u32) -> Result<Option<(u32, VertexSet)>> {
    let edges = expansion(h, k)?;
    for t in 1..edges.len() as u32 {
        if let Some(w) = double_star_on(&edges, t) {
            return Ok(Some((t, w)));
        }
    }
    Ok(None)
}

/// The same test at a fixed `t`.
pub fn double_star_at(h: &BasePattern, k: u32, t: u32) -> Result<Option<VertexSet>> {
    let edges = expansion(h, k)?;
    Ok(double_star_on(&edges, t))
}

fn double_star_on(edges: &[VertexSet], t: u32) -> Option<VertexSet> {
    let h = edges.len();
    if t == 0 || h < 2 {
        return None;
    }
    // Private vertices of one edge are interchangeable, so t of them per edge suffice.
    let mut deg = std::collections::HashMap::new();
    for e in edges {
        for v in e.iter() {
            *deg.entry(v).or_insert(0usize) += 1;
        }
    }
    let mut pool: VertexSet = deg.iter().filter(|&(_, &d)| d >= 2).map(|(&v, _)| v).collect();
    for e in edges {
        for v in e.iter().filter(|v| deg[v] == 1).take(t as usize) {
            pool.insert(v);
        }
    }
    if pool.len() < t {
        return None;
    }
    let mut witness = None;
    for cand in pool.subsets_of_size(t) {
        if span(edges, cand, SpanMode::Any).len() == h {
            return None;
        }
        if witness.is_none() && span(edges, cand, SpanMode::ExactlyOne).len() == h - 1 {
            witness = Some(cand);
        }
    }
    witness
}
