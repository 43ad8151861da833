//! Log-space evaluation of the Gamma-product kernel
//!
//! ```text
//! K(γ) = ∏_{i<n} [ ∏_{j≤i} ∏_{k≤i+1} Γ((γ_{i,j}−γ_{i+1,k}+g)/2) Γ((γ_{i+1,k}−γ_{i,j}+g)/2) ]
//!               / [ ∏_{r≠s≤i} Γ((γ_{i,r}−γ_{i,s})/2) Γ((γ_{i,r}−γ_{i,s}+2g)/2) ]
//! ```
//!
//! with the denominator running over ordered pairs (both (r,s) and (s,r)).
//! On the integration contour (all entries purely imaginary) the factors pair
//! into conjugates, so K is real and strictly positive except where two
//! same-row entries coincide; there the denominator Gamma blows up and K has
//! a zero, reported as a value-level marker rather than an error so that
//! quadrature sums can treat it as a vanishing contribution.

use num_complex::Complex64;

use crate::gz::{coeff_a, coeff_b, GzPattern, ShiftTuple};
use crate::special::{log_gamma, log_gamma_re, wrap_angle};
use crate::{Error, Result};

/// Logarithm of a kernel value: modulus part and phase (radians, mod 2π).
/// Zeros of K carry `log_modulus = −∞` and no meaningful phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelLogValue {
    pub log_modulus: f64,
    pub phase: f64,
}

impl KernelLogValue {
    pub fn zero() -> Self {
        Self {
            log_modulus: f64::NEG_INFINITY,
            phase: 0.0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.log_modulus == f64::NEG_INFINITY
    }

    fn from_complex_log(log: Complex64) -> Self {
        Self {
            log_modulus: log.re,
            phase: wrap_angle(log.im),
        }
    }

    /// exp of the stored logarithm; exact 0 for the zero marker.
    pub fn to_complex(&self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        let m = libm::exp(self.log_modulus);
        let (s, c) = libm::sincos(self.phase);
        Complex64::new(m * c, m * s)
    }

    /// The stored logarithm as a complex number (log_modulus + i·phase).
    pub fn as_log(&self) -> Complex64 {
        Complex64::new(self.log_modulus, self.phase)
    }
}

/// Kernel logarithm at an arbitrary complex pattern.
///
/// Numerator poles are genuine singularities of K and surface as
/// [`Error::Pole`]; denominator poles are zeros of K and return the zero
/// marker. For `g > 0` and a pattern on the contour the numerator arguments
/// have real part g/2, so poles cannot occur there.
pub fn log_kernel(p: &GzPattern<Complex64>, g: f64) -> Result<KernelLogValue> {
    let n = p.rank();
    let gc = Complex64::new(g, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    // Numerators first, so a genuine pole is reported even if the same
    // pattern also sits on a kernel zero.
    for i in 1..n {
        for j in 1..=i {
            for k in 1..=i + 1 {
                let d = p.entry(i, j) - p.entry(i + 1, k);
                acc += log_gamma((d + gc) / 2.0)?;
                acc += log_gamma((-d + gc) / 2.0)?;
            }
        }
    }
    for i in 1..n {
        for r in 1..=i {
            for s in 1..=i {
                if r == s {
                    continue;
                }
                let d = p.entry(i, r) - p.entry(i, s);
                let plain = match log_gamma(d / 2.0) {
                    Ok(v) => v,
                    Err(Error::Pole { .. }) => return Ok(KernelLogValue::zero()),
                    Err(e) => return Err(e),
                };
                let shifted = match log_gamma((d + 2.0 * gc) / 2.0) {
                    Ok(v) => v,
                    Err(Error::Pole { .. }) => return Ok(KernelLogValue::zero()),
                    Err(e) => return Err(e),
                };
                acc -= plain + shifted;
            }
        }
    }
    Ok(KernelLogValue::from_complex_log(acc))
}

/// log|K| on the contour, the quadrature hot path.
///
/// `t` holds the imaginary parts of rows 1..n−1 in row-major order, `mu` the
/// imaginary parts of the spectral row. Conjugate pairing collapses every
/// Gamma pair into twice a real part, which halves the log-Gamma calls.
/// Returns `None` exactly where K = 0 (coincident same-row entries).
pub fn contour_log_kernel(n: usize, t: &[f64], mu: &[f64], g: f64) -> Option<f64> {
    debug_assert_eq!(t.len(), n * (n - 1) / 2);
    debug_assert_eq!(mu.len(), n);
    let mut acc = 0.0f64;
    let mut off = 0usize;
    for i in 1..n {
        let row = &t[off..off + i];
        let next_owned;
        let next: &[f64] = if i + 1 == n {
            mu
        } else {
            next_owned = &t[off + i..off + i + (i + 1)];
            next_owned
        };
        for &a in row {
            for &b in next {
                // 2·Re logΓ((g + i(a−b))/2)
                acc += 2.0 * re_lg(0.5 * g, 0.5 * (a - b));
            }
        }
        for r in 0..i {
            for s in r + 1..i {
                let d = row[r] - row[s];
                if d == 0.0 {
                    return None;
                }
                acc -= 2.0 * (re_lg(0.0, 0.5 * d) + re_lg(g, 0.5 * d));
            }
        }
        off += i;
    }
    Some(acc)
}

fn re_lg(re: f64, im: f64) -> f64 {
    // Poles are excluded by the callers (g > 0 and d ≠ 0 checked above).
    log_gamma_re(Complex64::new(re, im)).unwrap_or(f64::NAN)
}

/// Residual of the step-2 kernel shift relation
/// `a^k(γ′) K(γ′) = b^k(γ) K(γ)` with γ′ = γ shifted by +2 along the tuple.
///
/// Compared in log space, imaginary part mod 2π; vanishes to quadrature-grade
/// accuracy at every regular point.
pub fn kernel_shift_residual(k: &ShiftTuple, p: &GzPattern<Complex64>, g: f64) -> Result<f64> {
    let gc = Complex64::new(g, 0.0);
    let two = Complex64::new(2.0, 0.0);
    let shifted = p.shifted(k, &two);
    let lhs = coeff_a(k, &shifted, &gc)?.ln() + log_kernel(&shifted, g)?.as_log();
    let rhs = coeff_b(k, p, &gc)?.ln() + log_kernel(p, g)?.as_log();
    let d = lhs - rhs;
    Ok(libm::fabs(d.re) + libm::fabs(wrap_angle(d.im)))
}

/// log|K| plus the guaranteed decay rate (π/n)·Σ|γ_{i,j}| over the rows
/// below n. Along contour rays this quantity stays bounded up to logarithmic
/// growth, which is what fixes the quadrature truncation.
pub fn decay_envelope(p: &GzPattern<Complex64>, g: f64) -> Result<f64> {
    let n = p.rank();
    let k = log_kernel(p, g)?;
    if k.is_zero() {
        return Ok(f64::NEG_INFINITY);
    }
    let mut sum = 0.0;
    for i in 1..n {
        for v in p.row(i) {
            sum += v.norm();
        }
    }
    Ok(k.log_modulus + core::f64::consts::PI / n as f64 * sum)
}

/// Least-squares fit of `y ≈ c0 + c1·basis(t)` used by the envelope tests
/// and the verification suite.
pub fn fit_two_parameter(ts: &[f64], ys: &[f64], basis: impl Fn(f64) -> f64) -> (f64, f64) {
    let n = ts.len() as f64;
    let mut sb = 0.0;
    let mut sy = 0.0;
    let mut sbb = 0.0;
    let mut sby = 0.0;
    for (&t, &y) in ts.iter().zip(ys) {
        let b = basis(t);
        sb += b;
        sy += y;
        sbb += b * b;
        sby += b * y;
    }
    let det = n * sbb - sb * sb;
    let c1 = (n * sby - sb * sy) / det;
    let c0 = (sy - c1 * sb) / n;
    (c0, c1)
}
