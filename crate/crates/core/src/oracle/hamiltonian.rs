//! Finite-difference application of the Sutherland Hamiltonians.
//!
//! The eigen-equations being checked, for purely imaginary λ_k = iμ_k:
//!
//! * H₁Ψ = Σ_i ∂_iΨ              = (Σ_k λ_k) Ψ
//! * H₂Ψ = −Σ_i ∂²_iΨ + 2 Σ_{p<q} g(g−1)/sinh²(x_p−x_q) Ψ = −(Σ_k λ_k²) Ψ
//! * gauge form on Φ: Σ_i ∂²_iΦ + 2g Σ_{p<q} coth(x_p−x_q)(∂_p−∂_q)Φ
//!   = (λ² − 4g²ρ²) Φ with ρ² = n(n²−1)/12.
//!
//! The pair potential carries the factor 2 in front of the sum; an
//! unconjugated rank-two computation fixes it, and the alternative
//! single-strength potential leaves an O(1) residual that the tests
//! report for contrast.
//!
//! Derivatives are five-point central differences (fourth order). All
//! stencil values are obtained from one caller-supplied batch evaluation so
//! a shared quadrature pass correlates the errors, which then cancel in the
//! differences exactly like the function values do.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::quadrature::{eval_phi_many, gauge_factor, GridSpec};
use crate::{Error, Result};

/// Relative eigen-equation residuals at one point.
#[derive(Debug, Clone, Copy)]
pub struct HamiltonianResidual {
    /// |H₁Ψ − (Σλ)Ψ| / |Ψ|
    pub h1: f64,
    /// |H₂Ψ + (Σλ²)Ψ| / |Ψ| with the doubled pair potential
    pub h2: f64,
    /// gauge-operator residual on Φ
    pub gauge: f64,
    /// residual of the single-strength (undoubled) potential, for contrast
    pub h2_single_strength: f64,
    pub fd_step: f64,
}

/// Stencil points for five-point differences: the centre, then for each
/// coordinate the offsets −2, −1, +1, +2 (in units of `fd_step`).
pub fn stencil_points(x: &[f64], fd_step: f64) -> Vec<Vec<f64>> {
    let mut pts = Vec::with_capacity(1 + 4 * x.len());
    pts.push(x.to_vec());
    for c in 0..x.len() {
        for off in [-2.0, -1.0, 1.0, 2.0] {
            let mut p = x.to_vec();
            p[c] += off * fd_step;
            pts.push(p);
        }
    }
    pts
}

/// Apply the Hamiltonians by finite differences to values supplied by
/// `evaluate`, which receives the stencil points and must return (Φ, Ψ)
/// at each.
pub fn hamiltonian_residual<F>(
    evaluate: F,
    lambda_im: &[f64],
    g: f64,
    x: &[f64],
    fd_step: f64,
) -> Result<HamiltonianResidual>
where
    F: FnOnce(&[Vec<f64>]) -> Result<Vec<(Complex64, Complex64)>>,
{
    let n = x.len();
    if lambda_im.len() != n {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "lambda and x must have the same length",
        )));
    }
    for p in 0..n {
        for q in p + 1..n {
            if (x[p] - x[q]).abs() <= 5.0 * fd_step {
                return Err(Error::StencilTooWide);
            }
        }
    }
    let pts = stencil_points(x, fd_step);
    let vals = evaluate(&pts)?;
    if vals.len() != pts.len() {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "evaluate must return one value pair per stencil point",
        )));
    }
    let (phi0, psi0) = vals[0];

    let first = |vm2: Complex64, vm1: Complex64, vp1: Complex64, vp2: Complex64| {
        (-vp2 + vp1 * 8.0 - vm1 * 8.0 + vm2) / (12.0 * fd_step)
    };
    let second = |vm2: Complex64, vm1: Complex64, v0: Complex64, vp1: Complex64, vp2: Complex64| {
        (-vp2 + vp1 * 16.0 - v0 * 30.0 + vm1 * 16.0 - vm2) / (12.0 * fd_step * fd_step)
    };

    let mut d1_phi = Vec::with_capacity(n);
    let mut d1_psi = Vec::with_capacity(n);
    let mut sum_d2_phi = Complex64::new(0.0, 0.0);
    let mut sum_d2_psi = Complex64::new(0.0, 0.0);
    for c in 0..n {
        let base = 1 + 4 * c;
        let (pm2, sm2) = vals[base];
        let (pm1, sm1) = vals[base + 1];
        let (pp1, sp1) = vals[base + 2];
        let (pp2, sp2) = vals[base + 3];
        d1_phi.push(first(pm2, pm1, pp1, pp2));
        d1_psi.push(first(sm2, sm1, sp1, sp2));
        sum_d2_phi += second(pm2, pm1, phi0, pp1, pp2);
        sum_d2_psi += second(sm2, sm1, psi0, sp1, sp2);
    }

    let sum_mu: f64 = lambda_im.iter().sum();
    let sum_mu_sq: f64 = lambda_im.iter().map(|m| m * m).sum();
    let lambda_sq = -sum_mu_sq; // Σ (iμ)²

    // H₁Ψ = Σ∂Ψ, expected (Σλ)Ψ = i(Σμ)Ψ
    let h1_lhs: Complex64 = d1_psi.iter().sum();
    let h1 = (h1_lhs - psi0 * Complex64::new(0.0, sum_mu)).norm() / psi0.norm();

    // H₂Ψ with doubled and single-strength pair potentials
    let mut potential = 0.0f64;
    for p in 0..n {
        for q in p + 1..n {
            let s = libm::sinh(x[p] - x[q]);
            potential += g * (g - 1.0) / (s * s);
        }
    }
    let h2_of = |strength: f64| {
        let lhs = -sum_d2_psi + psi0 * (strength * potential);
        (lhs - psi0 * (-lambda_sq)).norm() / psi0.norm()
    };
    let h2 = h2_of(2.0);
    let h2_single_strength = h2_of(1.0);

    // gauge operator on Φ
    let n_f = n as f64;
    let rho_sq = n_f * (n_f * n_f - 1.0) / 12.0;
    let mut cross = Complex64::new(0.0, 0.0);
    for p in 0..n {
        for q in p + 1..n {
            cross += (d1_phi[p] - d1_phi[q]) * (2.0 * g / libm::tanh(x[p] - x[q]));
        }
    }
    let gauge_lhs = sum_d2_phi + cross;
    let gauge_eig = lambda_sq - 4.0 * g * g * rho_sq;
    let gauge = (gauge_lhs - phi0 * gauge_eig).norm() / phi0.norm();

    Ok(HamiltonianResidual {
        h1,
        h2,
        gauge,
        h2_single_strength,
        fd_step,
    })
}

/// Residuals with (Φ, Ψ) supplied by one shared quadrature pass over the
/// whole stencil.
pub fn hamiltonian_residual_quadrature(
    lambda_im: &[f64],
    g: f64,
    x: &[f64],
    fd_step: f64,
    grid: &GridSpec,
) -> Result<HamiltonianResidual> {
    hamiltonian_residual(
        |pts| {
            let phis = eval_phi_many(lambda_im, g, pts, grid)?;
            pts.iter()
                .zip(phis)
                .map(|(p, phi)| Ok((phi.value, phi.value * gauge_factor(p, g)?)))
                .collect()
        },
        lambda_im,
        g,
        x,
        fd_step,
    )
}
