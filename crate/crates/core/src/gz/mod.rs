//! Gelfand–Zetlin patterns and the coefficient algebra of the
//! difference-operator representation of gl(n,ℝ).
//!
//! The generators act on meromorphic functions of the pattern entries as
//! difference operators with step 2g and rational coefficients. All
//! coefficient formulas here are generic over a [`Scalar`] backend: the
//! exact-rational backend proves the polynomial identities with literally
//! zero residual, the complex-float backend feeds the analytic pipeline.

mod coeff;
mod identities;
mod operators;
mod pattern;
pub mod sampling;
mod scalar;

pub use coeff::{
    coeff_a, coeff_a_composed, coeff_b, coeff_b_composed, coeff_c, Direction,
};
pub use identities::{shift_relation_residual, difference_sum_residual, square_sum_residual};
pub use operators::{apply_generator, laplace1_apply, laplace2_apply, weyl_rho_sq};
pub use pattern::{weight_h, GzPattern, ShiftTuple};
pub use scalar::{Rational, Scalar};
