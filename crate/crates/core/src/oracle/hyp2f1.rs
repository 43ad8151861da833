//! Gauss hypergeometric series for |z| inside the unit disk.

use num_complex::Complex64;

use crate::{Error, Result};

const MAX_TERMS: usize = 20_000;
const SERIES_EPS: f64 = 1e-16;

/// ₂F₁(a, b; c; z) by direct summation with the term recurrence
/// term_{m+1} = term_m · (a+m)(b+m) / ((c+m)(m+1)) · z.
///
/// Accepts |z| ≤ 0.95; nearer the unit circle the tail bound cannot reach
/// the relative 1e−13 target and the call fails with [`Error::Divergence`].
/// Summation stops once two consecutive terms fall below the epsilon — the
/// term ratio tends to |z| < 1, so the remaining tail is within a factor
/// |z|/(1−|z|) ≤ 19 of the last term.
pub fn gauss_2f1(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    let z_abs = z.norm();
    if z_abs > 0.95 {
        return Err(Error::Divergence { z_abs });
    }
    // c at a non-positive integer poisons every denominator from there on.
    if c.im.abs() < 1e-12 && c.re < 0.5 && (c.re - libm::round(c.re)).abs() < 1e-12 {
        return Err(Error::SingularParameter);
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum_re = 1.0f64;
    let mut sum_im = 0.0f64;
    let mut comp_re = 0.0f64;
    let mut comp_im = 0.0f64;
    let mut small_streak = 0;
    for m in 0..MAX_TERMS {
        let mf = m as f64;
        term = term * (a + mf) * (b + mf) / ((c + mf) * (mf + 1.0)) * z;
        let t_re = sum_re + term.re;
        comp_re += if sum_re.abs() >= term.re.abs() {
            (sum_re - t_re) + term.re
        } else {
            (term.re - t_re) + sum_re
        };
        sum_re = t_re;
        let t_im = sum_im + term.im;
        comp_im += if sum_im.abs() >= term.im.abs() {
            (sum_im - t_im) + term.im
        } else {
            (term.im - t_im) + sum_im
        };
        sum_im = t_im;
        let sum_norm = libm::sqrt(sum_re * sum_re + sum_im * sum_im).max(1e-300);
        if term.norm() <= SERIES_EPS * sum_norm {
            small_streak += 1;
            if small_streak >= 2 && m >= 4 {
                return Ok(Complex64::new(sum_re + comp_re, sum_im + comp_im));
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::Divergence { z_abs })
}
