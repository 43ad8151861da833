//! Rational coefficients of the composite root-vector difference operators.
//!
//! For a row pair (i, j), i < j, and a shift tuple k the operator e_{i,j}
//! carries the coefficient c_{i,j}^k (direction [`Direction::Lower`], the
//! operator shifts the selected entries by −2g) and e_{j,i} carries c_{j,i}^k
//! ([`Direction::Raise`], shift +2g):
//!
//! ```text
//! c_{i,j}^k = ∏_{m=i}^{j−1} ∏'_{r≤m+1} (γ_{m,k_m} − γ_{m+1,r} − g) / ∏_{r≠k_m} (γ_{m,k_m} − γ_{m,r})
//! c_{j,i}^k = ∏_{m=i}^{j−1} ∏'_{r≤m−1} (γ_{m,k_m} − γ_{m−1,r} + g) / ∏_{r≠k_m} (γ_{m,k_m} − γ_{m,r})
//! ```
//!
//! where the primed products skip r = k_{m±1} whenever that tuple component
//! exists (the skipped entry is itself shifted, which is exactly what makes
//! the composite products below collapse).
//!
//! The constant terms a^k, b^k of e_{i,j}e_{j,i} admit two routes: the
//! explicit products [`coeff_a`]/[`coeff_b`], and the compositions
//! [`coeff_a_composed`]/[`coeff_b_composed`] of two c's with a ∓2g shift in
//! between. Both are implemented independently; they must agree exactly.

use super::pattern::{GzPattern, ShiftTuple};
use super::scalar::Scalar;
use crate::{Error, Result};

/// Which of the two c-coefficients to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Coefficient of e_{i,j}, i < j (entries shift by −2g).
    Lower,
    /// Coefficient of e_{j,i}, i < j (entries shift by +2g).
    Raise,
}

/// Single-summand coefficient c^k for the given direction.
pub fn coeff_c<S: Scalar>(
    dir: Direction,
    k: &ShiftTuple,
    p: &GzPattern<S>,
    g: &S,
) -> Result<S> {
    let (i, j) = k.rows();
    let mut acc = S::one();
    for m in i..j {
        let gk = p.entry(m, k.k_at(m)).clone();
        match dir {
            Direction::Lower => {
                for r in 1..=m + 1 {
                    if m + 1 < j && r == k.k_at(m + 1) {
                        continue;
                    }
                    acc = acc * (gk.clone() - p.entry(m + 1, r).clone() - g.clone());
                }
            }
            Direction::Raise => {
                if m >= 2 {
                    for r in 1..=m - 1 {
                        if m > i && r == k.k_at(m - 1) {
                            continue;
                        }
                        acc = acc * (gk.clone() - p.entry(m - 1, r).clone() + g.clone());
                    }
                }
            }
        }
        for r in 1..=m {
            if r == k.k_at(m) {
                continue;
            }
            let den = gk.clone() - p.entry(m, r).clone();
            if den.is_zero() {
                return Err(Error::DenominatorZero);
            }
            acc = acc / den;
        }
    }
    Ok(acc)
}

/// Explicit product for a^k (the −g route of e_{i,j}e_{j,i}).
pub fn coeff_a<S: Scalar>(k: &ShiftTuple, p: &GzPattern<S>, g: &S) -> Result<S> {
    coeff_ab(k, p, g, true)
}

/// Explicit product for b^k (the +g route of e_{j,i}e_{i,j}).
pub fn coeff_b<S: Scalar>(k: &ShiftTuple, p: &GzPattern<S>, g: &S) -> Result<S> {
    coeff_ab(k, p, g, false)
}

fn coeff_ab<S: Scalar>(k: &ShiftTuple, p: &GzPattern<S>, g: &S, minus: bool) -> Result<S> {
    let (i, j) = k.rows();
    let sign = |v: S| if minus { -v } else { v };
    let gs = sign(g.clone());
    let two_gs = gs.clone() + gs.clone();
    let mut acc = S::one();
    for m in i..j {
        let gk = p.entry(m, k.k_at(m)).clone();
        for r in 1..=m + 1 {
            if m + 1 < j && r == k.k_at(m + 1) {
                continue;
            }
            acc = acc * (gk.clone() - p.entry(m + 1, r).clone() + gs.clone());
        }
        if m >= 2 {
            for r in 1..=m - 1 {
                if m > i && r == k.k_at(m - 1) {
                    continue;
                }
                acc = acc * (gk.clone() - p.entry(m - 1, r).clone() + gs.clone());
            }
        }
        for r in 1..=m {
            if r == k.k_at(m) {
                continue;
            }
            let d = gk.clone() - p.entry(m, r).clone();
            let d_shift = d.clone() + two_gs.clone();
            if d.is_zero() || d_shift.is_zero() {
                return Err(Error::DenominatorZero);
            }
            acc = acc / d / d_shift;
        }
    }
    Ok(acc)
}

/// a^k by composition: c_{i,j}^k(γ) · c_{j,i}^k(γ shifted by −2g along k).
pub fn coeff_a_composed<S: Scalar>(k: &ShiftTuple, p: &GzPattern<S>, g: &S) -> Result<S> {
    let two_g = g.clone() + g.clone();
    let shifted = p.shifted(k, &-two_g);
    Ok(coeff_c(Direction::Lower, k, p, g)? * coeff_c(Direction::Raise, k, &shifted, g)?)
}

/// b^k by composition: c_{j,i}^k(γ) · c_{i,j}^k(γ shifted by +2g along k).
pub fn coeff_b_composed<S: Scalar>(k: &ShiftTuple, p: &GzPattern<S>, g: &S) -> Result<S> {
    let two_g = g.clone() + g.clone();
    let shifted = p.shifted(k, &two_g);
    Ok(coeff_c(Direction::Raise, k, p, g)? * coeff_c(Direction::Lower, k, &shifted, g)?)
}
