//! Sets, set families, and their measure/closure/shadow/junta calculus.

mod famfile;
mod family;
pub mod numeric;
mod ops;
mod vertex_set;

pub use famfile::{parse_fam, render_fam};
pub use family::{GeneralFamily, UniformFamily};
pub use numeric::{binom, gen_binomial, gen_binomial_exact, rat, rat_int, Rational};
pub use ops::{
    biased_measure, biased_weight, closure, disjoint_union_family, dual_family, junta_generate,
    shadow, slice, slice_len, slice_measure, uniform_measure, Direction, JuntaMode,
};
pub(crate) use ops::ratio;
pub use vertex_set::{vs, VertexSet, MAX_VERTEX};

/// Measure selector for [`measure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeasureMode {
    Uniform,
    Biased(Rational),
}

/// Family argument for [`measure`]: uniform mode needs a uniform family.
#[derive(Debug, Clone, Copy)]
pub enum FamilyRef<'a> {
    Uniform(&'a UniformFamily),
    General(&'a GeneralFamily),
}

/// Exact measure of a family in either mode.
pub fn measure(f: FamilyRef<'_>, mode: &MeasureMode) -> crate::Result<Rational> {
    match (f, mode) {
        (FamilyRef::Uniform(u), MeasureMode::Uniform) => Ok(uniform_measure(u)),
        (FamilyRef::General(_), MeasureMode::Uniform) => Err(crate::Error::Argument(
            "uniform measure needs a uniform family".into(),
        )),
        (FamilyRef::Uniform(u), MeasureMode::Biased(p)) => biased_measure(&u.to_general(), p),
        (FamilyRef::General(g), MeasureMode::Biased(p)) => biased_measure(g, p),
    }
}
