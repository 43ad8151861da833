//! Random evaluation points for the identity suite.
//!
//! Points are small-denominator rationals. Degenerate draws (same-row
//! collisions, or collisions after a ±2g or ±4g shift, which the composed
//! coefficients and Laplace compositions can produce) are rejected and
//! redrawn rather than perturbed, so exactness is preserved.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::pattern::GzPattern;
use super::scalar::{Rational, Scalar};
use crate::rng::SplitMix64;

fn random_rational(rng: &mut SplitMix64) -> Rational {
    let num = rng.range_i64(-24, 24);
    let den = rng.range_i64(1, 6);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn random_coupling(rng: &mut SplitMix64) -> Rational {
    let num = rng.range_i64(1, 12);
    let den = rng.range_i64(1, 5);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn strongly_regular(p: &GzPattern<Rational>, g: &Rational) -> bool {
    let two_g = g.clone() + g.clone();
    let four_g = two_g.clone() + two_g.clone();
    for i in 1..=p.rank() {
        let row = p.row(i);
        for r in 0..row.len() {
            for s in r + 1..row.len() {
                let d = row[r].clone() - row[s].clone();
                if Scalar::is_zero(&d) {
                    return false;
                }
                if i < p.rank() {
                    for off in [&two_g, &four_g] {
                        if d == *off || d == -off.clone() {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Random strongly regular rational pattern and coupling for rank n.
pub fn random_exact_point(n: usize, rng: &mut SplitMix64) -> (GzPattern<Rational>, Rational) {
    loop {
        let g = random_coupling(rng);
        let mut rows = Vec::with_capacity(n);
        for i in 1..=n {
            let mut row = Vec::with_capacity(i);
            for _ in 0..i {
                row.push(random_rational(rng));
            }
            rows.push(row);
        }
        let p = GzPattern::new(rows).expect("shape is correct by construction");
        if strongly_regular(&p, &g) {
            return (p, g);
        }
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Lossy float image of an exact point, for backend-agreement checks.
pub fn to_float_point(
    p: &GzPattern<Rational>,
    g: &Rational,
) -> (GzPattern<Complex64>, Complex64) {
    let rows = (1..=p.rank())
        .map(|i| {
            p.row(i)
                .iter()
                .map(|v| Complex64::new(rational_to_f64(v), 0.0))
                .collect::<Vec<_>>()
        })
        .collect();
    (
        GzPattern::new(rows).expect("same shape"),
        Complex64::new(rational_to_f64(g), 0.0),
    )
}

/// Random purely imaginary pattern on the contour: rows below n uniform in
/// i·[−spread, spread] with a minimal same-row gap, row n = iμ.
pub fn random_contour_pattern(
    n: usize,
    mu: &[f64],
    spread: f64,
    rng: &mut SplitMix64,
) -> GzPattern<Complex64> {
    assert_eq!(mu.len(), n, "spectral parameter count must equal the rank");
    'outer: loop {
        let mut rows: Vec<Vec<Complex64>> = Vec::with_capacity(n);
        for i in 1..n {
            let mut row = Vec::with_capacity(i);
            for _ in 0..i {
                row.push(Complex64::new(0.0, (rng.next_f64() * 2.0 - 1.0) * spread));
            }
            rows.push(row);
        }
        rows.push(mu.iter().map(|&m| Complex64::new(0.0, m)).collect());
        for row in &rows {
            for r in 0..row.len() {
                for s in r + 1..row.len() {
                    if (row[r].im - row[s].im).abs() < 1e-3 {
                        continue 'outer;
                    }
                }
            }
        }
        return GzPattern::new(rows).expect("shape is correct by construction");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_points_are_regular() {
        let mut rng = SplitMix64::new(1);
        for n in 1..=5 {
            let (p, g) = random_exact_point(n, &mut rng);
            assert!(strongly_regular(&p, &g));
            assert_eq!(p.rank(), n);
        }
    }

    #[test]
    fn contour_pattern_rows_are_imaginary() {
        let mut rng = SplitMix64::new(2);
        let p = random_contour_pattern(3, &[0.5, -0.2, 0.9], 3.0, &mut rng);
        for i in 1..=3 {
            for v in p.row(i) {
                assert_eq!(v.re, 0.0);
            }
        }
        assert_eq!(p.entry(3, 1).im, 0.5);
    }
}
