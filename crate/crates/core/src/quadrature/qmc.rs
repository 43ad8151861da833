//! Quasi-Monte-Carlo contour integration for rank 4 (d = 6), where dense
//! tensor grids stop being desk-sized.
//!
//! Each coordinate is drawn through the exponential importance transform
//! t = s·asinh(u) with scale s = n/π matched to the guaranteed kernel decay
//! exp(−|t|/s). The asinh argument is the smooth odd stretch
//! u = w/(1−w²) of the QMC box coordinate w = 2v−1 (shrunk so |t| ≤ T):
//! near the box edges 1−|w| ≈ ε the image grows like s·ln(1/ε), so the
//! Jacobian cancels the guaranteed decay exactly and the transformed
//! integrand is bounded, while the map stays C^∞ inside the box (a kink
//! would throw away most of the lattice's accuracy). Points come from a
//! Kronecker sequence (powers of the d-dimensional plastic constant); two
//! Cranley–Patterson shifts give the value and a spread-based error
//! estimate. Deterministic for a fixed seed.

use alloc::vec::Vec;

use num_complex::Complex64;

use super::QuadratureResult;
use crate::kernel::contour_log_kernel;
use crate::rng::SplitMix64;
use crate::{Error, Result};

/// Generalised golden ratio: the positive root of x^(d+1) = x + 1.
fn plastic_root(d: usize) -> f64 {
    let p = (d + 1) as f64;
    let mut x = 1.5f64;
    for _ in 0..64 {
        x = libm::pow(1.0 + x, 1.0 / p);
    }
    x
}

/// QMC estimate of Φ with `points` total nodes split across two shifted
/// replicas. `half_width` plays the role of the tensor grid truncation T.
pub fn eval_phi_qmc(
    lambda_im: &[f64],
    g: f64,
    x: &[f64],
    half_width: f64,
    points: u64,
    seed: u64,
) -> Result<QuadratureResult> {
    let n = lambda_im.len();
    let d = n * (n - 1) / 2;
    if d == 0 {
        return super::eval_phi(lambda_im, g, x, &super::GridSpec::default_for(1, 1e-8));
    }
    if x.len() != n {
        return Err(Error::InvalidInput(alloc::format!(
            "x point must have {n} coordinates, got {}",
            x.len()
        )));
    }
    if points < 2 {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "QMC needs at least 2 points",
        )));
    }
    let n_f = n as f64;
    let scale = n_f / core::f64::consts::PI;
    // shrink the box so the image never exceeds the truncation half-width:
    // w/(1−w²) = sinh(T/s) at the box edge
    let u_max = libm::sinh(half_width / scale);
    let edge = (libm::sqrt(1.0 + 4.0 * u_max * u_max) - 1.0) / (2.0 * u_max);

    let phi = plastic_root(d);
    let mut alpha = Vec::with_capacity(d);
    let mut a = 1.0f64;
    for _ in 0..d {
        a /= phi;
        alpha.push(a);
    }

    let sum_mu: f64 = lambda_im.iter().sum();
    let w: Vec<f64> = (0..n - 1).map(|i| x[i] - x[i + 1]).collect();
    let konst = sum_mu * x[n - 1];

    let mut rng = SplitMix64::new(seed);
    let per_replica = points / 2;
    let mut replica_vals = [Complex64::new(0.0, 0.0); 2];
    let mut t = alloc::vec![0.0f64; d];
    let mut row_sums = alloc::vec![0.0f64; n - 1];
    for replica in replica_vals.iter_mut() {
        let shift: Vec<f64> = (0..d).map(|_| rng.next_f64()).collect();
        let mut acc_re = super::NeumaierSum::default();
        let mut acc_im = super::NeumaierSum::default();
        for k in 0..per_replica {
            let mut jac = 1.0f64;
            for c in 0..d {
                let pos = k as f64 * alpha[c] + shift[c];
                let v = pos - libm::floor(pos);
                let wq = (2.0 * v - 1.0) * edge;
                let denom = 1.0 - wq * wq;
                let u = wq / denom;
                t[c] = scale * libm::asinh(u);
                // dt/dv = 2·edge · s · (1+w²)/((1−w²)²·√(1+u²))
                jac *= 2.0 * edge * scale * (1.0 + wq * wq)
                    / (denom * denom * libm::sqrt(1.0 + u * u));
            }
            if let Some(log_k) = contour_log_kernel(n, &t, lambda_im, g) {
                let kv = libm::exp(log_k) * jac;
                if kv != 0.0 {
                    let mut off = 0usize;
                    for (i, rs) in row_sums.iter_mut().enumerate() {
                        *rs = t[off..off + i + 1].iter().sum();
                        off += i + 1;
                    }
                    let mut theta = konst;
                    for (rs, wi) in row_sums.iter().zip(&w) {
                        theta += rs * wi;
                    }
                    let (s, c) = libm::sincos(theta);
                    acc_re.add(kv * c);
                    acc_im.add(kv * s);
                }
            }
        }
        let mean = 1.0 / per_replica as f64;
        *replica = Complex64::new(acc_re.value() * mean, acc_im.value() * mean);
    }

    let rot = match d % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let value = (replica_vals[0] + replica_vals[1]) * 0.5 * rot;
    let error = (replica_vals[0] - replica_vals[1]).norm() * 0.5;
    Ok(QuadratureResult {
        value,
        error_estimate: error,
        nodes: per_replica * 2,
    })
}
