//! Residuals of the coefficient identities behind the wave-function
//! construction. On the exact backend every residual is literally zero.

use super::coeff::{coeff_a, coeff_b};
use super::pattern::{weight_h, GzPattern, ShiftTuple};
use super::scalar::Scalar;
use crate::Result;

/// Residual of Σ_{k∈S_{i,j}} (b^k − a^k) = 2g (h_i − h_j).
pub fn difference_sum_residual<S: Scalar>(
    pair: (usize, usize),
    p: &GzPattern<S>,
    g: &S,
) -> Result<S> {
    let (i, j) = pair;
    let mut sum = S::zero();
    for k in ShiftTuple::enumerate(i, j, p.rank())? {
        sum = sum + coeff_b(&k, p, g)? - coeff_a(&k, p, g)?;
    }
    let two_g = g.clone() + g.clone();
    Ok(sum - two_g * (weight_h(p, i) - weight_h(p, j)))
}

/// Residual of Σ_{i<j} Σ_k (a^k + b^k) = Σ_i h_i² − λ² + 4g²ρ².
pub fn square_sum_residual<S: Scalar>(p: &GzPattern<S>, g: &S) -> Result<S> {
    let n = p.rank();
    let mut sum = S::zero();
    for i in 1..n {
        for j in i + 1..=n {
            for k in ShiftTuple::enumerate(i, j, n)? {
                sum = sum + coeff_a(&k, p, g)? + coeff_b(&k, p, g)?;
            }
        }
    }
    let mut h_sq = S::zero();
    for i in 1..=n {
        let h = weight_h(p, i);
        h_sq = h_sq + h.clone() * h;
    }
    let two_g = g.clone() + g.clone();
    let four_g2_rho2 = two_g.clone() * two_g * super::operators::weyl_rho_sq::<S>(n);
    Ok(sum - (h_sq - p.lambda_sq() + four_g2_rho2))
}

/// Residual of the step-2g difference relation a^k(γ + 2g·k) = b^k(γ).
pub fn shift_relation_residual<S: Scalar>(k: &ShiftTuple, p: &GzPattern<S>, g: &S) -> Result<S> {
    let two_g = g.clone() + g.clone();
    let shifted = p.shifted(k, &two_g);
    Ok(coeff_a(k, &shifted, g)? - coeff_b(k, p, g)?)
}
