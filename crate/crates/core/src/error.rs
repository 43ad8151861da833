//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong while evaluating coefficients, kernels or
/// quadratures. Poles and degenerate evaluation points surface here; they
/// are never folded into NaN/∞ payloads.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Gamma evaluated within machine tolerance of a non-positive integer.
    Pole { re: f64, im: f64 },
    /// Two same-row pattern entries collide in a coefficient denominator
    /// (possibly after a ±2g shift).
    DenominatorZero,
    /// Shift-tuple row range must satisfy 1 ≤ i < j ≤ n.
    InvalidRange { i: usize, j: usize, n: usize },
    /// Grid parameters violate `half_width/step ∈ ℤ, ≥ 8` or are not finite.
    InvalidGrid(String),
    /// Refinement exhausted without reaching the requested tolerance.
    GridTooCoarse { achieved: f64, requested: f64 },
    /// Two coordinates closer than the gauge-factor cusp tolerance.
    CoincidentCoordinates { p: usize, q: usize },
    /// Hypergeometric argument too close to the unit circle for the
    /// target accuracy.
    Divergence { z_abs: f64 },
    /// λ/2 integral: the 1/sin(πλ/2) prefactor of the closed form blows up.
    SingularParameter,
    /// Finite-difference stencil wider than the smallest coordinate gap.
    StencilTooWide,
    /// Input validation failure; the message names the offending field.
    InvalidInput(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole { re, im } => {
                write!(f, "log-Gamma pole at z = {re} + {im}i")
            }
            Error::DenominatorZero => {
                write!(f, "coefficient denominator vanishes (degenerate pattern row)")
            }
            Error::InvalidRange { i, j, n } => {
                write!(f, "invalid row pair (i, j) = ({i}, {j}) for rank {n}")
            }
            Error::InvalidGrid(msg) => write!(f, "invalid grid: {msg}"),
            Error::GridTooCoarse { achieved, requested } => write!(
                f,
                "grid too coarse: error estimate {achieved:e} above tolerance {requested:e}"
            ),
            Error::CoincidentCoordinates { p, q } => {
                write!(f, "coordinates x_{p} and x_{q} coincide")
            }
            Error::Divergence { z_abs } => {
                write!(f, "hypergeometric argument |z| = {z_abs} too close to 1")
            }
            Error::SingularParameter => write!(f, "singular spectral parameter (λ/2 ∈ ℤ)"),
            Error::StencilTooWide => {
                write!(f, "finite-difference stencil exceeds the valid region")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
