//! Closed form of the rank-two wave function.
//!
//! For n = 2 the contour integral collapses (close the contour over the left
//! half-plane, sum the two Gamma pole ladders) to an explicit combination of
//! Gauss hypergeometric functions in the reduced variables λ = λ₁ − λ₂,
//! x = x₁ − x₂ > 0:
//!
//! ```text
//! φ(x) = β [ e^{(λ/2−g)x} Γ(g−λ/2)/Γ(1−λ/2) F(g, g−λ/2; 1−λ/2; e^{−2x})
//!          − e^{(−λ/2−g)x} Γ(g+λ/2)/Γ(1+λ/2) F(g, g+λ/2; 1+λ/2; e^{−2x}) ],
//! β = 4π²i Γ(g) / sin(πλ/2)
//! ```
//!
//! and, equivalently, to a single Legendre function of the first kind:
//!
//! ```text
//! φ(x) = 4iπ^{3/2} 2^{1/2−g} Γ(g) Γ(g−λ/2) Γ(g+λ/2) sinh^{1/2−g}(x) P^{1/2−g}_{λ/2−1/2}(cosh x).
//! ```
//!
//! Both routes are implemented — the second through Legendre Q functions of
//! degree ν and −ν−1 and the Q→P connection formula — and must agree to
//! 1e−11; the full wave function restores the centre-of-mass factor
//! e^{(λ₁+λ₂)(x₁+x₂)/2}.

use num_complex::Complex64;

use super::hyp2f1::gauss_2f1;
use crate::special::log_gamma;
use crate::{Error, Result};

const PI: f64 = core::f64::consts::PI;

fn cgamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// Reduced (centre-of-mass removed) rank-two wave function φ_λ(x), x > 0,
/// via the two-term hypergeometric combination.
pub fn phi_n2_reduced(g: f64, lambda_gap: Complex64, x: f64) -> Result<Complex64> {
    if x <= 0.0 || x.is_nan() {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "phi_n2_reduced needs x = x1 - x2 > 0",
        )));
    }
    let half = lambda_gap / 2.0;
    let sin_term = (half * PI).sin();
    if sin_term.norm() < 1e-12 {
        return Err(Error::SingularParameter);
    }
    let gc = Complex64::new(g, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let z = Complex64::new(libm::exp(-2.0 * x), 0.0);
    let beta = Complex64::new(0.0, 4.0 * PI * PI) * cgamma(gc)? / sin_term;
    let plus = (half - g) * x;
    let term_plus = plus.exp()
        * (log_gamma(gc - half)? - log_gamma(one - half)?).exp()
        * gauss_2f1(gc, gc - half, one - half, z)?;
    let minus = (-half - g) * x;
    let term_minus = minus.exp()
        * (log_gamma(gc + half)? - log_gamma(one + half)?).exp()
        * gauss_2f1(gc, gc + half, one + half, z)?;
    Ok(beta * (term_plus - term_minus))
}

/// Legendre Q of order μ and degree ν on the cut (1, ∞), parametrised by
/// z = cosh x, through its hypergeometric representation
/// e^{−iπμ} Q^μ_ν(cosh x) = √π 2^μ sinh^μ(x) e^{−(ν+μ+1)x}
///                          Γ(ν+μ+1)/Γ(ν+3/2) F(μ+1/2, ν+μ+1; ν+3/2; e^{−2x}).
fn legendre_q(mu: f64, nu: Complex64, x: f64) -> Result<Complex64> {
    let half = Complex64::new(0.5, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let z = Complex64::new(libm::exp(-2.0 * x), 0.0);
    let muc = Complex64::new(mu, 0.0);
    let phase = Complex64::new(0.0, PI * mu).exp();
    let front = phase
        * Complex64::new(libm::sqrt(PI) * libm::pow(2.0, mu) * libm::pow(libm::sinh(x), mu), 0.0);
    let expo = (-(nu + muc + one) * x).exp();
    let gammas = (log_gamma(nu + muc + one)? - log_gamma(nu + one + half)?).exp();
    let f = gauss_2f1(muc + half, nu + muc + one, nu + one + half, z)?;
    Ok(front * expo * gammas * f)
}

/// Reduced rank-two wave function via the Legendre route: build
/// P^{−μ}_ν from Q^μ_ν and Q^μ_{−ν−1} with the connection formula
/// e^{−iπμ}(Q^μ_{−ν−1} − Q^μ_ν) = cos(πν) Γ(μ+ν+1) Γ(μ−ν) P^{−μ}_ν,
/// then attach the sinh^{1/2−g} prefactor.
pub fn phi_n2_reduced_legendre(g: f64, lambda_gap: Complex64, x: f64) -> Result<Complex64> {
    if x <= 0.0 || x.is_nan() {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "phi_n2_reduced_legendre needs x = x1 - x2 > 0",
        )));
    }
    let half = lambda_gap / 2.0;
    if (half * PI).sin().norm() < 1e-12 {
        return Err(Error::SingularParameter);
    }
    let mu = g - 0.5;
    let nu = half - 0.5;
    let one = Complex64::new(1.0, 0.0);
    let muc = Complex64::new(mu, 0.0);
    let q_nu = legendre_q(mu, nu, x)?;
    let q_reflected = legendre_q(mu, -nu - one, x)?;
    let phase = Complex64::new(0.0, -PI * mu).exp();
    let p = phase / (nu * PI).cos() * (q_reflected - q_nu)
        / (log_gamma(muc + nu + one)? + log_gamma(muc - nu)?).exp();
    let gc = Complex64::new(g, 0.0);
    let prefactor = Complex64::new(0.0, 4.0 * libm::pow(PI, 1.5) * libm::pow(2.0, 0.5 - g))
        * (log_gamma(gc)? + log_gamma(gc - half)? + log_gamma(gc + half)?).exp();
    Ok(prefactor * Complex64::new(libm::pow(libm::sinh(x), 0.5 - g), 0.0) * p)
}

/// Full rank-two wave function Φ(x₁, x₂) for purely imaginary spectral
/// parameters (given by their imaginary parts), x₁ > x₂.
pub fn phi_n2_closed(
    lambda1_im: f64,
    lambda2_im: f64,
    g: f64,
    x1: f64,
    x2: f64,
) -> Result<Complex64> {
    if (x1 - x2).abs() < 1e-12 {
        return Err(Error::CoincidentCoordinates { p: 1, q: 2 });
    }
    if x1 < x2 {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "phi_n2_closed needs x1 > x2",
        )));
    }
    let lambda_gap = Complex64::new(0.0, lambda1_im - lambda2_im);
    let centre = Complex64::new(0.0, (lambda1_im + lambda2_im) * (x1 + x2) / 2.0).exp();
    Ok(centre * phi_n2_reduced(g, lambda_gap, x1 - x2)?)
}

/// Finite-difference residual of (∂² + 2g coth x ∂)φ = (λ²/4 − g²)φ for the
/// reduced closed form, relative to |φ(x)|. Five-point central stencils.
pub fn ode_residual_n2(g: f64, lambda_gap_im: f64, x: f64, fd_step: f64) -> Result<f64> {
    let lam = Complex64::new(0.0, lambda_gap_im);
    let f = |t: f64| phi_n2_reduced(g, lam, t);
    let fm2 = f(x - 2.0 * fd_step)?;
    let fm1 = f(x - fd_step)?;
    let f0 = f(x)?;
    let fp1 = f(x + fd_step)?;
    let fp2 = f(x + 2.0 * fd_step)?;
    let d1 = (-fp2 + fp1 * 8.0 - fm1 * 8.0 + fm2) / (12.0 * fd_step);
    let d2 = (-fp2 + fp1 * 16.0 - f0 * 30.0 + fm1 * 16.0 - fm2) / (12.0 * fd_step * fd_step);
    let eig = lam * lam / 4.0 - g * g;
    let resid = d2 + d1 * 2.0 * g / libm::tanh(x) - eig * f0;
    Ok(resid.norm() / f0.norm())
}
