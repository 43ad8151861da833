//! Half-coupling consistency against the zonal spherical kernel.
//!
//! At g = 1/2 the general kernel should reduce, via the Legendre duplication
//! formula applied to each denominator pair, to the classical zonal kernel
//!
//! ```text
//! K₀(γ) = ∏_{i<n} [ ∏_{j≤i} ∏_{k≤i+1} Γ((γ_{i,j}−γ_{i+1,k})/2 + 1/4) Γ((γ_{i+1,k}−γ_{i,j})/2 + 1/4) ]
//!                / [ ∏_{r≠s≤i} Γ(γ_{i,r}−γ_{i,s}) ]
//! ```
//!
//! up to a γ-independent constant (powers of 2 cancel over ordered pairs,
//! the √π's collect per row). The comparison measures that constancy rather
//! than assuming it, and reports the constant.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::gz::{sampling::random_contour_pattern, GzPattern};
use crate::kernel::{log_kernel, KernelLogValue};
use crate::rng::SplitMix64;
use crate::special::log_gamma;
use crate::{Error, Result};

/// Logarithm of the zonal spherical kernel K₀.
pub fn log_kernel_zonal(p: &GzPattern<Complex64>) -> Result<KernelLogValue> {
    let n = p.rank();
    let quarter = Complex64::new(0.25, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 1..n {
        for j in 1..=i {
            for k in 1..=i + 1 {
                let d = p.entry(i, j) - p.entry(i + 1, k);
                acc += log_gamma(d / 2.0 + quarter)?;
                acc += log_gamma(-d / 2.0 + quarter)?;
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
                match log_gamma(d) {
                    Ok(v) => acc -= v,
                    Err(Error::Pole { .. }) => return Ok(KernelLogValue::zero()),
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(KernelLogValue {
        log_modulus: acc.re,
        phase: crate::special::wrap_angle(acc.im),
    })
}

/// Outcome of the half-coupling comparison over a contour sample.
#[derive(Debug, Clone, Copy)]
pub struct ZonalComparison {
    /// max_k |ratio_k / mean − 1|
    pub max_rel_deviation: f64,
    /// the (reported, never asserted) γ-independent constant
    pub mean_ratio: Complex64,
    pub samples: usize,
}

/// Sample the ratio [general kernel at g = 1/2] / [zonal kernel] over random
/// contour points and measure how far it is from constant.
pub fn g_half_consistency(
    n: usize,
    mu: &[f64],
    samples: usize,
    seed: u64,
) -> Result<ZonalComparison> {
    if n == 0 || mu.len() != n {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "mu length must equal n",
        )));
    }
    if n == 1 {
        // both kernels are identically 1
        return Ok(ZonalComparison {
            max_rel_deviation: 0.0,
            mean_ratio: Complex64::new(1.0, 0.0),
            samples,
        });
    }
    let mut rng = SplitMix64::new(seed);
    let mut ratios = Vec::with_capacity(samples);
    while ratios.len() < samples {
        let p = random_contour_pattern(n, mu, 2.5, &mut rng);
        let general = log_kernel(&p, 0.5)?;
        let zonal = log_kernel_zonal(&p)?;
        if general.is_zero() || zonal.is_zero() {
            continue;
        }
        ratios.push((general.as_log() - zonal.as_log()).exp());
    }
    let mut mean = Complex64::new(0.0, 0.0);
    for r in &ratios {
        mean += r;
    }
    mean /= ratios.len() as f64;
    let mut max_dev = 0.0f64;
    for r in &ratios {
        max_dev = max_dev.max((r / mean - Complex64::new(1.0, 0.0)).norm());
    }
    Ok(ZonalComparison {
        max_rel_deviation: max_dev,
        mean_ratio: mean,
        samples: ratios.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank1_trivial() {
        let r = g_half_consistency(1, &[0.4], 10, 1).unwrap();
        assert_eq!(r.max_rel_deviation, 0.0);
        assert_eq!(r.mean_ratio, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn rank2_numerators_identical() {
        // no denominators at rank 2, and the g = 1/2 numerator arguments
        // coincide with the zonal ones, so the ratio is exactly 1
        let r = g_half_consistency(2, &[0.7, -0.2], 20, 2).unwrap();
        assert!(r.max_rel_deviation < 1e-12, "dev {}", r.max_rel_deviation);
        assert!(
            (r.mean_ratio - Complex64::new(1.0, 0.0)).norm() < 1e-12,
            "ratio {}",
            r.mean_ratio
        );
    }

    #[test]
    fn rank3_constant_matches_duplication_count() {
        // one ordered denominator pair per orientation in row 2 collects
        // (2√π)^{−2} = 1/(4π)
        let r = g_half_consistency(3, &[0.3, -0.7, 0.2], 30, 3).unwrap();
        assert!(r.max_rel_deviation < 1e-10, "dev {}", r.max_rel_deviation);
        let expect = 1.0 / (4.0 * core::f64::consts::PI);
        assert!(
            (r.mean_ratio.re - expect).abs() < 1e-10 && r.mean_ratio.im.abs() < 1e-10,
            "ratio {} vs {expect}",
            r.mean_ratio
        );
    }
}
