//! Containment engines. Every search has a fast backtracking engine and a
//! brute-force oracle; both return the canonically least witness.

mod expansion;
mod intersecting;
mod rainbow;
mod simplex;

use std::fmt;

use crate::error::{Error, Result};
use crate::hstruct::{BasePattern, Parser};
use crate::setfam::VertexSet;

pub use expansion::{
    contains_expansion, contains_expansion_within, copy_with_center_image, cross_contains,
    cross_contains_within, for_each_copy, is_copy, verify_witness,
};
pub use intersecting::{cross_intersecting, cross_intersecting_oracle, CrossIntersection};
pub use rainbow::{rainbow_in_shadow, RainbowWitness};
pub use simplex::{contains_simplex, is_simplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Fast,
    Oracle,
}

/// A copy `(A_1, ..., A_h)` of an expansion together with the center injection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopyWitness {
    pub sets: Vec<VertexSet>,
    /// `(base center vertex, image)` in increasing base-vertex order.
    pub center_map: Vec<(u32, u32)>,
}

/// Counts search nodes and stops the search once the limit is passed.
#[derive(Debug, Clone)]
pub struct NodeBudget {
    limit: u64,
    used: u64,
}

impl NodeBudget {
    pub const ENV: &'static str = "TURAN_NODE_BUDGET";

    pub fn unlimited() -> Self {
        NodeBudget { limit: u64::MAX, used: 0 }
    }

    pub fn new(limit: u64) -> Self {
        NodeBudget { limit, used: 0 }
    }

    /// `TURAN_NODE_BUDGET` when set, otherwise `default`.
    pub fn from_env_or(default: u64) -> Result<Self> {
        match std::env::var(Self::ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(NodeBudget::new)
                .map_err(|_| Error::Argument(format!("{} must be a non-negative integer, got `{v}`", Self::ENV))),
            Err(_) => Ok(NodeBudget::new(default)),
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::ResourceExhausted(format!("node budget of {} exhausted", self.limit)));
        }
        Ok(())
    }
}

/// What a family must avoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForbiddenSpec {
    Expansion(BasePattern),
    Simplex(u32),
}

impl ForbiddenSpec {
    /// Pattern descriptor, or `simplex(d)`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser::new(text);
        let spec = if p.peek_ident() == "simplex" {
            let d = p.simplex()?;
            if d == 0 {
                return Err(Error::Argument("simplex(d) needs d >= 1".into()));
            }
            ForbiddenSpec::Simplex(d)
        } else {
            ForbiddenSpec::Expansion(p.pattern()?)
        };
        p.end()?;
        Ok(spec)
    }

    pub fn render(&self) -> String {
        match self {
            ForbiddenSpec::Expansion(h) => h.render(),
            ForbiddenSpec::Simplex(d) => format!("simplex({d})"),
        }
    }

    /// Number of sets in one forbidden configuration.
    pub fn arity(&self) -> usize {
        match self {
            ForbiddenSpec::Expansion(h) => h.h(),
            ForbiddenSpec::Simplex(d) => *d as usize + 1,
        }
    }

    /// Canonically least forbidden configuration in `f`, as a list of its sets.
    pub fn find(
        &self,
        f: &crate::setfam::UniformFamily,
        engine: Engine,
        budget: &mut NodeBudget,
    ) -> Result<Option<Vec<VertexSet>>> {
        match self {
            ForbiddenSpec::Expansion(h) => {
                Ok(contains_expansion_within(f, h, engine, budget)?.map(|w| w.sets))
            }
            ForbiddenSpec::Simplex(d) => simplex::find_simplex(f, *d, engine, budget),
        }
    }

    pub fn is_free(&self, f: &crate::setfam::UniformFamily, engine: Engine) -> Result<bool> {
        Ok(self.find(f, engine, &mut NodeBudget::unlimited())?.is_none())
    }
}

impl fmt::Display for ForbiddenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
