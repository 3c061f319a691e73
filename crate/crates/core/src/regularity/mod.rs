//! Capturability, fairness, quasiregularity, junta approximation and balanced grouping.

mod capture;
mod grouping;
mod junta;
mod quasi;

pub use capture::{fair_fraction, fairness, find_capturing_set, CaptureParams};
pub use grouping::balanced_grouping;
pub use junta::{certify as certify_junta, junta_approximation, JuntaApproximation};
pub use quasi::{quasiregular, quasiregular_descent, Alpha, Descent, QuasiCheck};
