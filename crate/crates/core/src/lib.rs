//! Numerical core for the Mellin–Barnes wave functions of the GL(n,ℝ)
//! hyperbolic Sutherland model at arbitrary coupling `g > 0`.
//!
//! The wave function is a contour integral over the imaginary hyperplane in
//! `n(n-1)/2` Gelfand–Zetlin variables, with an integrand built entirely from
//! Euler Gamma functions. The crate is organised around the pieces of that
//! construction:
//!
//! * [`special`] — complex log-Gamma, the only transcendental input.
//! * [`gz`] — Gelfand–Zetlin patterns, shift tuples and the rational
//!   coefficients of the difference-operator representation of gl(n,ℝ),
//!   generic over an exact-rational or complex-float scalar backend. The
//!   exact backend turns the coefficient identities into zero-residual
//!   checks.
//! * [`kernel`] — log-space evaluation of the Gamma-product kernel, the
//!   step-2 shift relation it satisfies, and its decay envelope.
//! * [`quadrature`] — truncated tensor-product trapezoidal quadrature over
//!   the contour, with deterministic chunked compensated summation and an
//!   executor hook for parallel drivers. A quasi-Monte-Carlo mode covers
//!   rank 4.
//! * [`oracle`] — independent ground truths: Gauss hypergeometric series,
//!   the rank-two closed form (in two algebraically distinct routes),
//!   finite-difference Hamiltonian application, and the half-coupling
//!   zonal kernel.
//!
//! The crate is `no_std` (`alloc` only); IO, the CLI and the thread pool
//! live in the companion `sutherland-cli` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod gz;
pub mod kernel;
pub mod oracle;
pub mod quadrature;
pub mod rng;
pub mod special;

pub use error::{Error, Result};
pub use num_complex::Complex64;
