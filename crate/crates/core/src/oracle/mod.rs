//! Independent ground truths for the quadrature pipeline: the Gauss
//! hypergeometric series, the rank-two closed form in two algebraically
//! distinct routes, finite-difference application of the Hamiltonians, and
//! the half-coupling zonal kernel.

mod closed_form;
mod hamiltonian;
mod hyp2f1;
mod zonal;

pub use closed_form::{
    ode_residual_n2, phi_n2_closed, phi_n2_reduced, phi_n2_reduced_legendre,
};
pub use hamiltonian::{
    hamiltonian_residual, hamiltonian_residual_quadrature, stencil_points, HamiltonianResidual,
};
pub use hyp2f1::gauss_2f1;
pub use zonal::{g_half_consistency, log_kernel_zonal, ZonalComparison};
