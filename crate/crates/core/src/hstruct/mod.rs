//! Base multi-hypergraphs, their expansions, and the structural conditions on them.

pub mod builders;
mod conditions;
mod grammar;
mod pattern;

pub use builders::{cycle, matching, one_intersection, path, porcupine_counterexample, special_simplex};
pub use conditions::{check_condition_double_star, check_condition_star, double_star_at};
pub use grammar::build_pattern;
pub(crate) use grammar::Parser;
pub use pattern::{expand_representative, oplus, span, structure_summary, BasePattern, SpanMode, StructureSummary};

/// A base pattern together with its expansion uniformity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedPattern {
    pub base: BasePattern,
    pub k: u32,
}

impl ExpandedPattern {
    pub fn new(base: BasePattern, k: u32) -> crate::Result<Self> {
        if k < base.max_edge_size() {
            return Err(crate::Error::Argument(format!(
                "k = {k} is smaller than the largest base edge ({})",
                base.max_edge_size()
            )));
        }
        Ok(ExpandedPattern { base, k })
    }

    pub fn edges(&self) -> crate::Result<Vec<crate::setfam::VertexSet>> {
        expand_representative(&self.base, self.k)
    }
}
