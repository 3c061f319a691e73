//! Exact computations for extremal problems on set families: slices, shadows
//! and juntas, expansions of base hypergraphs, containment engines, the
//! capturability/fairness/quasiregularity diagnostics, measure inequalities,
//! and a branch-and-bound solver for small Turán numbers.

pub mod bounds;
pub mod cli;
pub mod detect;
mod error;
pub mod hstruct;
pub mod regularity;
pub mod setfam;
pub mod solver;

pub use error::{Error, Result};
