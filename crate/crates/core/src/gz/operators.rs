//! Functional application of the gl(n,ℝ) generators and Laplace operators.

use super::coeff::{coeff_c, Direction};
use super::pattern::{weight_h, GzPattern, ShiftTuple};
use super::scalar::Scalar;
use crate::Result;

/// Test functions are pattern → scalar maps that may themselves hit
/// degenerate points, hence the Result.
pub type PatternFn<'a, S> = dyn Fn(&GzPattern<S>) -> Result<S> + 'a;

/// Apply the generator e_{row,col} to `f` at the pattern `p`.
///
/// * row = col: multiplication by h_row(γ)/2g;
/// * row < col: −(1/2g) Σ_k c_{row,col}^k(γ) · f(γ − 2g·k);
/// * row > col: +(1/2g) Σ_k c_{row,col}^k(γ) · f(γ + 2g·k).
pub fn apply_generator<S: Scalar>(
    row: usize,
    col: usize,
    f: &PatternFn<'_, S>,
    p: &GzPattern<S>,
    g: &S,
) -> Result<S> {
    let n = p.rank();
    debug_assert!(row >= 1 && row <= n && col >= 1 && col <= n);
    let two_g = g.clone() + g.clone();
    if row == col {
        return Ok(weight_h(p, row) / two_g * f(p)?);
    }
    if row < col {
        let mut acc = S::zero();
        for k in ShiftTuple::enumerate(row, col, n)? {
            let c = coeff_c(Direction::Lower, &k, p, g)?;
            let q = p.shifted(&k, &-two_g.clone());
            acc = acc + c * f(&q)?;
        }
        Ok(-(acc / two_g))
    } else {
        let mut acc = S::zero();
        for k in ShiftTuple::enumerate(col, row, n)? {
            let c = coeff_c(Direction::Raise, &k, p, g)?;
            let q = p.shifted(&k, &two_g);
            acc = acc + c * f(&q)?;
        }
        Ok(acc / two_g)
    }
}

/// First Laplace operator Σ_i e_{i,i} applied to `f`; acts as the scalar
/// (Σ_j λ_j)/2g by the telescoping of the row weights.
pub fn laplace1_apply<S: Scalar>(f: &PatternFn<'_, S>, p: &GzPattern<S>, g: &S) -> Result<S> {
    let mut acc = S::zero();
    for i in 1..=p.rank() {
        acc = acc + apply_generator(i, i, f, p, g)?;
    }
    Ok(acc)
}

/// Second Laplace operator Σ_{i,j} e_{i,j} e_{j,i} applied to `f` by
/// composing generator applications. Acts as the scalar
/// (λ² − 4g²ρ²)/4g² with ρ² = n(n²−1)/12.
pub fn laplace2_apply<S: Scalar>(f: &PatternFn<'_, S>, p: &GzPattern<S>, g: &S) -> Result<S> {
    let n = p.rank();
    let mut acc = S::zero();
    for a in 1..=n {
        for b in 1..=n {
            let inner = |q: &GzPattern<S>| apply_generator(b, a, f, q, g);
            acc = acc + apply_generator(a, b, &inner, p, g)?;
        }
    }
    Ok(acc)
}

/// Squared Weyl vector ρ² = n(n²−1)/12 for gl(n).
pub fn weyl_rho_sq<S: Scalar>(n: usize) -> S {
    let n = n as i64;
    S::from_int(n * (n * n - 1)) / S::from_int(12)
}
