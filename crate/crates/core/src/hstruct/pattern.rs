use std::fmt;

use crate::error::{arg, Result};
use crate::setfam::{VertexSet, MAX_VERTEX};

/// A base multi-hypergraph `H₁` whose `k`-expansion is the forbidden configuration.
///
/// Edges are kept in the given order (repeats allowed); all edge-indexed
/// results elsewhere in the crate refer to positions in this list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BasePattern {
    vertices: VertexSet,
    edges: Vec<VertexSet>,
    name: Option<String>,
}

impl BasePattern {
    pub fn new(edges: Vec<VertexSet>) -> Result<Self> {
        if edges.is_empty() {
            return arg("a base pattern needs at least one edge");
        }
        let vertices = edges.iter().fold(VertexSet::EMPTY, |acc, e| acc.union(*e));
        Ok(BasePattern { vertices, edges, name: None })
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    /// Number of edges `h`.
    pub fn h(&self) -> usize {
        self.edges.len()
    }

    /// Largest edge size `d`.
    pub fn max_edge_size(&self) -> u32 {
        self.edges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    /// Largest vertex label in use (0 when every edge is empty).
    pub fn max_label(&self) -> u32 {
        self.vertices.max().unwrap_or(0)
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Vertices of degree at least two.
    pub fn center(&self) -> VertexSet {
        self.vertices.iter().filter(|&v| self.degree(v) >= 2).collect()
    }

    /// Intersection of all edges.
    pub fn kernel(&self) -> VertexSet {
        self.edges.iter().fold(self.vertices, |acc, e| acc.intersection(*e))
    }

    /// Descriptor text: the name tag when present, otherwise an `edges{...}` literal.
    pub fn render(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => self.render_literal(),
        }
    }

    pub fn render_literal(&self) -> String {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|e| {
                let vs: Vec<String> = e.iter().map(|v| v.to_string()).collect();
                format!("[{}]", vs.join(","))
            })
            .collect();
        format!("edges{{{}}}", edges.join(","))
    }

    /// Same edges, no name tag; equality of patterns ignores how they were described.
    pub fn same_edges(&self, other: &BasePattern) -> bool {
        self.edges == other.edges
    }
}

impl fmt::Debug for BasePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BasePattern({}: {:?})", self.render(), self.edges)
    }
}

/// Kernel, center and per-edge private counts of a base pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureSummary {
    pub kernel: VertexSet,
    pub center: VertexSet,
    /// `|e \ center|` for each edge, in edge order.
    pub private_counts: Vec<u32>,
}

pub fn structure_summary(h: &BasePattern) -> Result<StructureSummary> {
    if h.edges.is_empty() {
        return arg("structure summary of an empty edge list");
    }
    let center = h.center();
    Ok(StructureSummary {
        kernel: h.kernel(),
        center,
        private_counts: h.edges.iter().map(|e| e.difference(center).len()).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanMode {
    /// Edges meeting `T`.
    Any,
    /// Edges meeting `T` in exactly one vertex.
    ExactlyOne,
}

/// Indices of edges (0-based) spanned by `t`.
pub fn span(edges: &[VertexSet], t: VertexSet, mode: SpanMode) -> Vec<usize> {
    edges
        .iter()
        .enumerate()
        .filter(|(_, e)| match mode {
            SpanMode::Any => !e.is_disjoint(t),
            SpanMode::ExactlyOne => e.intersection(t).len() == 1,
        })
        .map(|(i, _)| i)
        .collect()
}

/// Deterministic concrete copy of `H⁺` at uniformity `k`.
///
/// Base vertices keep their labels; fresh vertices are numbered from
/// `max_label + 1` upward, edge by edge.
pub fn expand_representative(h: &BasePattern, k: u32) -> Result<Vec<VertexSet>> {
    if k < h.max_edge_size() {
        return arg(format!("k = {k} is smaller than the largest base edge ({})", h.max_edge_size()));
    }
    let fresh_total: u32 = h.edges.iter().map(|e| k - e.len()).sum();
    let top = h.max_label() + fresh_total;
    if top > MAX_VERTEX {
        return arg(format!("expansion needs {top} labels, more than {MAX_VERTEX}"));
    }
    let mut next = h.max_label() + 1;
    Ok(h.edges
        .iter()
        .map(|e| {
            let mut out = *e;
            for _ in e.len()..k {
                out.insert(next);
                next += 1;
            }
            out
        })
        .collect())
}

/// `H ⊕ [t]`: every edge gains the same `t` new vertices `m+1..m+t`.
pub fn oplus(h: &BasePattern, t: u32) -> Result<BasePattern> {
    if t == 0 {
        return arg("oplus needs t >= 1");
    }
    if !h.kernel().is_empty() {
        return arg(format!("oplus is defined for empty-kernel patterns; kernel is {}", h.kernel()));
    }
    let m = h.max_label();
    if m + t > MAX_VERTEX {
        return arg("oplus runs out of vertex labels");
    }
    let added = VertexSet::range(m + 1, m + t);
    let edges = h.edges.iter().map(|e| e.union(added)).collect();
    let out = BasePattern::new(edges)?;
    Ok(match &h.name {
        Some(n) => out.named(format!("{n} oplus({t})")),
        None => out.named(format!("{} oplus({t})", h.render_literal())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hstruct::builders::{matching, one_intersection, path, special_simplex};
    use crate::setfam::vs;

    #[test]
    fn summaries() {
        let ss = structure_summary(&special_simplex(2).unwrap()).unwrap();
        assert_eq!(ss.kernel, VertexSet::EMPTY);
        assert_eq!(ss.center, vs(&[1, 2, 3]));
        let oi = structure_summary(&one_intersection(2).unwrap()).unwrap();
        assert_eq!(oi.kernel, vs(&[1]));
        let m = structure_summary(&matching(3).unwrap()).unwrap();
        assert!(m.kernel.is_empty() && m.center.is_empty());
        assert_eq!(m.private_counts, vec![0, 0, 0]);
    }

    #[test]
    fn span_examples() {
        let m3 = expand_representative(&matching(3).unwrap(), 2).unwrap();
        let t = VertexSet::singleton(m3[0].min().unwrap());
        assert_eq!(span(&m3, t, SpanMode::Any), vec![0]);
        assert_eq!(span(&m3, t, SpanMode::ExactlyOne), vec![0]);
        let p3 = path(3).unwrap();
        assert_eq!(p3.edges(), &[vs(&[1]), vs(&[1, 2]), vs(&[2])]);
        assert_eq!(span(p3.edges(), vs(&[1]), SpanMode::ExactlyOne), vec![0, 1]);
        assert!(span(p3.edges(), VertexSet::EMPTY, SpanMode::Any).is_empty());
        assert!(span(p3.edges(), VertexSet::EMPTY, SpanMode::ExactlyOne).is_empty());
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(
            expand_representative(&matching(2).unwrap(), 2).unwrap(),
            vec![vs(&[1, 2]), vs(&[3, 4])]
        );
        assert_eq!(
            expand_representative(&one_intersection(2).unwrap(), 3).unwrap(),
            vec![vs(&[1, 2, 3]), vs(&[1, 4, 5])]
        );
        assert_eq!(
            expand_representative(&special_simplex(2).unwrap(), 3).unwrap(),
            vec![vs(&[2, 3, 4]), vs(&[1, 3, 5]), vs(&[1, 2, 6])]
        );
        assert!(expand_representative(&special_simplex(2).unwrap(), 1).is_err());
    }

    #[test]
    fn oplus_examples() {
        let h = BasePattern::new(vec![vs(&[1]), vs(&[2])]).unwrap();
        assert_eq!(oplus(&h, 1).unwrap().edges(), &[vs(&[1, 3]), vs(&[2, 3])]);
        let m = oplus(&matching(2).unwrap(), 2).unwrap();
        assert_eq!(m.edges(), &[vs(&[1, 2]), vs(&[1, 2])]);
        let m3 = oplus(&matching(3).unwrap(), 2).unwrap();
        assert_eq!(m3.kernel().len(), 2);
        assert!(oplus(&one_intersection(2).unwrap(), 1).is_err());
    }
}
