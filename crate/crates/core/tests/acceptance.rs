//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured numbers (run with `--nocapture` to see them).
//!
//! Tolerances are pinned in the assertions; nothing is deferred to later
//! calibration.

use std::time::Instant;

use num_complex::Complex64;
use sutherland_core::gz::{
    coeff_a, coeff_a_composed, coeff_b, coeff_b_composed, laplace1_apply, laplace2_apply,
    sampling, shift_relation_residual, difference_sum_residual, square_sum_residual, weyl_rho_sq, GzPattern, Rational,
    Scalar, ShiftTuple,
};
use sutherland_core::kernel::{decay_envelope, fit_two_parameter, kernel_shift_residual};
use sutherland_core::oracle::{
    g_half_consistency, hamiltonian_residual_quadrature, ode_residual_n2, phi_n2_closed,
};
use sutherland_core::quadrature::{eval_phi, eval_phi_many, qmc::eval_phi_qmc, GridSpec};
use sutherland_core::rng::SplitMix64;

fn rational_zero(r: &Rational) -> bool {
    Scalar::is_zero(r)
}

/// Criterion 1: the exact identity suite returns residual exactly 0 on the
/// rational backend for every admissible pair, n = 2..=5, 20 points each,
/// within 60 s.
#[test]
fn criterion_1_exact_identity_suite() {
    let started = Instant::now();
    let mut rng = SplitMix64::new(0xACCE55);
    let mut checked = 0usize;
    for n in 2..=5usize {
        for _ in 0..20 {
            let (p, g) = sampling::random_exact_point(n, &mut rng);
            assert!(rational_zero(&square_sum_residual(&p, &g).unwrap()), "square-sum identity n={n}");
            checked += 1;
            for i in 1..n {
                for j in i + 1..=n {
                    assert!(
                        rational_zero(&difference_sum_residual((i, j), &p, &g).unwrap()),
                        "difference-sum identity n={n} ({i},{j})"
                    );
                    checked += 1;
                    for t in ShiftTuple::enumerate(i, j, n).unwrap() {
                        assert!(
                            rational_zero(&shift_relation_residual(&t, &p, &g).unwrap()),
                            "shift relation n={n} ({i},{j})"
                        );
                        let a = coeff_a(&t, &p, &g).unwrap();
                        let ac = coeff_a_composed(&t, &p, &g).unwrap();
                        assert_eq!(a, ac, "a composition n={n} ({i},{j})");
                        let b = coeff_b(&t, &p, &g).unwrap();
                        let bc = coeff_b_composed(&t, &p, &g).unwrap();
                        assert_eq!(b, bc, "b composition n={n} ({i},{j})");
                        checked += 3;
                    }
                }
            }
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 60.0, "identity suite took {elapsed:.1} s");
    println!(
        "acceptance criterion 1: PASS — {checked} exact identities, all residuals 0, {elapsed:.2} s"
    );
}

/// Criterion 2: Laplace operators act as the stated scalars, exactly, for
/// n ≤ 3 and two independent test functions.
#[test]
fn criterion_2_laplace_scalars() {
    let mut rng = SplitMix64::new(0x1A91ACE);
    let one = |_: &GzPattern<Rational>| Ok(Rational::from_int(1));
    let mixed = |q: &GzPattern<Rational>| {
        let first = q.entry(1, 1).clone();
        let last = q.entry(q.rank(), q.rank()).clone();
        Ok(first.clone() * first * last + Rational::from_int(5))
    };
    for n in 1..=3usize {
        for _ in 0..5 {
            let (p, g) = sampling::random_exact_point(n, &mut rng);
            let four_g2 = Rational::from_int(4) * g.clone() * g.clone();
            let eig2 = (p.lambda_sq() - four_g2.clone() * weyl_rho_sq::<Rational>(n)) / four_g2;
            let mut eig1 = Rational::from_int(0);
            for l in p.spectral() {
                eig1 = eig1 + l.clone();
            }
            eig1 = eig1 / (g.clone() + g.clone());
            for f in [&one as &dyn Fn(&GzPattern<Rational>) -> _, &mixed] {
                let f_at = f(&p).unwrap();
                assert_eq!(laplace2_apply(f, &p, &g).unwrap(), eig2.clone() * f_at.clone());
                assert_eq!(laplace1_apply(f, &p, &g).unwrap(), eig1.clone() * f_at);
            }
        }
    }
    println!(
        "acceptance criterion 2: PASS — L₂ = (λ²−4g²ρ²)/4g² and L₁ = (Σλ)/2g exactly, n ≤ 3, 2 test functions"
    );
}

/// Criterion 3: the step-2 kernel shift relation holds to 1e−10 for
/// n ∈ {2,3}, every pair, every tuple, 20 contour-adjacent points each.
#[test]
fn criterion_3_kernel_shift_relation() {
    let mut rng = SplitMix64::new(0x4E44);
    let mut worst = 0.0f64;
    for n in 2..=3usize {
        let mu: Vec<f64> = (0..n).map(|q| 0.9 - 0.7 * q as f64).collect();
        for i in 1..n {
            for j in i + 1..=n {
                for t in ShiftTuple::enumerate(i, j, n).unwrap() {
                    for _ in 0..20 {
                        let g = 0.3 + 1.4 * rng.next_f64();
                        let p = sampling::random_contour_pattern(n, &mu, 2.5, &mut rng);
                        let r = kernel_shift_residual(&t, &p, g).unwrap();
                        worst = worst.max(r);
                        assert!(r < 1e-10, "n={n} ({i},{j}) residual {r}");
                    }
                }
            }
        }
    }
    println!("acceptance criterion 3: PASS — kernel shift residual ≤ {worst:.2e} (< 1e-10)");
}

/// Criterion 4: quadrature matches the rank-two closed form on the
/// 27-point grid — ratios constant to 1e−8 and equal to 1 to 1e−8 — in
/// under 30 s.
#[test]
fn criterion_4_rank2_closed_form_grid() {
    let started = Instant::now();
    let mut ratios = Vec::new();
    for &g in &[0.5, 0.75, 1.5] {
        for &lam_gap in &[0.6, 1.6, 3.0] {
            for &x_gap in &[0.5, 1.0, 2.0] {
                let mu = [lam_gap / 2.0, -lam_gap / 2.0];
                let x = [x_gap / 2.0, -x_gap / 2.0];
                let m = (20.0f64 / 0.25).ceil();
                let grid = GridSpec::new(m * 0.25, 0.25, 1).unwrap();
                let quad = eval_phi(&mu, g, &x, &grid).unwrap();
                let closed = phi_n2_closed(mu[0], mu[1], g, x[0], x[1]).unwrap();
                let ratio = quad.value / closed;
                ratios.push(ratio);
                assert!(
                    (ratio - Complex64::new(1.0, 0.0)).norm() < 1e-8,
                    "g={g} λ-gap={lam_gap} x-gap={x_gap}: ratio {ratio}"
                );
            }
        }
    }
    let mean = ratios.iter().sum::<Complex64>() / ratios.len() as f64;
    let constancy = ratios
        .iter()
        .map(|r| (r / mean - Complex64::new(1.0, 0.0)).norm())
        .fold(0.0f64, f64::max);
    assert!(constancy < 1e-8, "ratio constancy deviation {constancy}");
    let worst = ratios
        .iter()
        .map(|r| (r - Complex64::new(1.0, 0.0)).norm())
        .fold(0.0f64, f64::max);
    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 30.0, "closed-form grid took {elapsed:.1} s");
    println!(
        "acceptance criterion 4: PASS — 27 ratios, |ratio−1| ≤ {worst:.2e}, constancy ≤ {constancy:.2e}, {elapsed:.2} s"
    );
}

fn eigenfunction_case(
    label: &str,
    mu: &[f64],
    g: f64,
    x: &[f64],
    fd_step: f64,
    grid: &GridSpec,
) -> (f64, f64, f64) {
    let coarse = hamiltonian_residual_quadrature(mu, g, x, fd_step, grid).unwrap();
    let fine = hamiltonian_residual_quadrature(mu, g, x, fd_step / 2.0, grid).unwrap();
    for (name, r) in [("H1", fine.h1), ("H2", fine.h2), ("gauge", fine.gauge)] {
        assert!(r < 1e-5, "{label} {name} residual {r}");
    }
    // fourth-order stencils contract ~16× per halving; fd_step is chosen
    // per rank so the coarse truncation sits above the quadrature noise
    // floor. Residuals already at the floor (symmetric configurations can
    // satisfy H₁ to machine exactness) have nothing left to contract.
    for (name, big, small) in [
        ("H1", coarse.h1, fine.h1),
        ("H2", coarse.h2, fine.h2),
        ("gauge", coarse.gauge, fine.gauge),
    ] {
        assert!(
            small * 3.5 <= big || small < 1e-9,
            "{label} {name} did not contract: {big:.3e} -> {small:.3e}"
        );
    }
    // the undoubled pair potential must be visibly wrong
    assert!(
        fine.h2_single_strength > 1e-3,
        "{label}: single-strength potential residual {} suspiciously small",
        fine.h2_single_strength
    );
    (fine.h1, fine.h2, fine.gauge)
}

/// Criterion 5 (rank 2): eigen-equation residuals < 1e−5 at three generic
/// points, contracting ≥ 3.5× under step halving.
#[test]
fn criterion_5_eigenfunction_rank2() {
    let grid = GridSpec::new(20.0, 0.25, 1).unwrap();
    let cases: [(&[f64], f64, &[f64]); 3] = [
        (&[0.8, -0.8], 0.75, &[0.6, -0.6]),
        (&[0.5, -0.9], 1.2, &[0.9, -0.4]),
        (&[1.1, 0.3], 0.9, &[0.3, -0.8]),
    ];
    let mut worst = 0.0f64;
    for (mu, g, x) in cases {
        let (h1, h2, gauge) = eigenfunction_case("rank2", mu, g, x, 2e-2, &grid);
        worst = worst.max(h1).max(h2).max(gauge);
    }
    println!("acceptance criterion 5 (rank 2): PASS — max residual {worst:.2e} (< 1e-5)");
}

/// Criterion 5 (rank 3): same statement, and the whole run stays desk-sized
/// (< 15 min). Couplings ≥ 1 keep the h = 0.25 quadrature noise floor
/// (~e^{−2πg/h}) well below the finite-difference truncation, so the
/// contraction under step halving stays measurable.
#[test]
fn criterion_5_eigenfunction_rank3() {
    let started = Instant::now();
    let grid = GridSpec::new(27.5, 0.5, 1).unwrap();
    let cases: [(&[f64], f64, &[f64]); 3] = [
        (&[0.8, -0.3, -0.5], 1.05, &[0.9, 0.1, -0.8]),
        (&[0.6, -0.1, -0.7], 1.1, &[1.1, 0.2, -0.6]),
        (&[0.9, 0.2, -0.4], 1.25, &[0.8, -0.2, -1.0]),
    ];
    let mut worst = 0.0f64;
    for (mu, g, x) in cases {
        let (h1, h2, gauge) = eigenfunction_case("rank3", mu, g, x, 8e-2, &grid);
        worst = worst.max(h1).max(h2).max(gauge);
    }
    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 900.0, "rank-3 eigenfunction run took {elapsed:.0} s");
    println!(
        "acceptance criterion 5 (rank 3): PASS — max residual {worst:.2e} (< 1e-5), {elapsed:.0} s"
    );
}

/// Criterion 5 (rank 4 smoke): the d = 6 quasi-Monte-Carlo mode reproduces
/// the symmetries at the relaxed 1e−3 level.
#[test]
fn criterion_5_qmc_rank4_smoke() {
    let mu = [0.7, 0.2, -0.3, -0.8];
    let mu_neg = [-0.7, -0.2, 0.3, 0.8];
    let g = 1.0;
    let x = [0.6, 0.2, -0.15, -0.55];
    let x_swapped = [0.6, -0.15, 0.2, -0.55];
    let half_width = 22.0;
    let points = 1u64 << 21;
    let base = eval_phi_qmc(&mu, g, &x, half_width, points, 99).unwrap();
    let swapped = eval_phi_qmc(&mu, g, &x_swapped, half_width, points, 99).unwrap();
    let negated = eval_phi_qmc(&mu_neg, g, &x, half_width, points, 99).unwrap();
    let perm_dev = (base.value - swapped.value).norm() / base.value.norm();
    assert!(perm_dev < 1e-3, "x-transposition deviation {perm_dev}");
    // d = 6 is even: conj(Φ_λ) = Φ_{−λ} with no orientation sign
    let conj_dev = (base.value.conj() - negated.value).norm() / base.value.norm();
    assert!(conj_dev < 1e-3, "conjugation deviation {conj_dev}");
    println!(
        "acceptance criterion 5 (rank 4 QMC smoke): PASS — transposition {perm_dev:.2e}, conjugation {conj_dev:.2e} (< 1e-3), qmc relative error estimate {:.2e}",
        base.error_estimate / base.value.norm()
    );
}

/// Criterion 6: permutation and conjugation symmetries of Φ at ranks 2, 3.
#[test]
fn criterion_6_symmetries() {
    let mut worst_x = 0.0f64;
    let mut worst_lam = 0.0f64;
    let mut worst_conj = 0.0f64;
    for n in 2..=3usize {
        let (mu, x, grid) = if n == 2 {
            (
                vec![0.9, -0.4],
                vec![0.7, -0.5],
                GridSpec::new(20.0, 0.25, 1).unwrap(),
            )
        } else {
            (
                vec![0.8, -0.1, -0.6],
                vec![0.9, 0.1, -0.8],
                GridSpec::new(27.5, 0.5, 1).unwrap(),
            )
        };
        let g = 1.0;
        let d = n * (n - 1) / 2;

        // all transpositions of x
        let mut xs = vec![x.clone()];
        for p in 0..n {
            for q in p + 1..n {
                let mut swapped = x.clone();
                swapped.swap(p, q);
                xs.push(swapped);
            }
        }
        let vals = eval_phi_many(&mu, g, &xs, &grid).unwrap();
        for v in &vals[1..] {
            worst_x = worst_x.max((v.value - vals[0].value).norm() / vals[0].value.norm());
        }

        // λ permutation (cyclic)
        let mut mu_perm = mu.clone();
        mu_perm.rotate_left(1);
        let lam = eval_phi(&mu_perm, g, &x, &grid).unwrap();
        worst_lam = worst_lam.max((lam.value - vals[0].value).norm() / vals[0].value.norm());

        // conjugation against negated λ, with the (−1)^d contour
        // orientation factor of the dγ = i·dt convention
        let mu_neg: Vec<f64> = mu.iter().map(|m| -m).collect();
        let neg = eval_phi(&mu_neg, g, &x, &grid).unwrap();
        let sign = if d % 2 == 0 { 1.0 } else { -1.0 };
        worst_conj =
            worst_conj.max((vals[0].value.conj() - neg.value * sign).norm() / vals[0].value.norm());
    }
    assert!(worst_x < 1e-7, "x-transposition deviation {worst_x}");
    assert!(worst_lam < 1e-10, "λ-permutation deviation {worst_lam}");
    assert!(worst_conj < 1e-8, "conjugation deviation {worst_conj}");
    println!(
        "acceptance criterion 6: PASS — x-transposition {worst_x:.2e} (<1e-7), λ-permutation {worst_lam:.2e} (<1e-10), conjugation {worst_conj:.2e} (<1e-8)"
    );
}

/// Criterion 7: the decay envelope log|K| + (π/n)Σ|γ| along coordinate rays
/// stays logarithmic; the fitted √t growth coefficient must vanish.
#[test]
fn criterion_7_decay_envelope() {
    for n in 2..=3usize {
        let mu: Vec<f64> = (0..n).map(|q| 1.0 - 0.9 * q as f64).collect();
        let d = n * (n - 1) / 2;
        for ray in 0..d {
            let mut ts = Vec::new();
            let mut ys = Vec::new();
            let mut tval = 0.7f64;
            while tval <= 60.0 {
                let mut coords = vec![0.25, -0.35, 0.45]; // fixed off-axis base
                coords.truncate(d);
                coords[ray] = tval;
                let mut rows: Vec<Vec<Complex64>> = Vec::new();
                let mut off = 0;
                for i in 1..n {
                    rows.push(
                        coords[off..off + i]
                            .iter()
                            .map(|&t| Complex64::new(0.0, t))
                            .collect(),
                    );
                    off += i;
                }
                rows.push(mu.iter().map(|&m| Complex64::new(0.0, m)).collect());
                let p = GzPattern::new(rows).unwrap();
                ts.push(tval);
                ys.push(decay_envelope(&p, 1.0).unwrap());
                tval *= 1.25;
            }
            let (_, c1_log) = fit_two_parameter(&ts, &ys, |t| (1.0 + t).ln());
            let (_, c1_sqrt) = fit_two_parameter(&ts, &ys, |t| t.sqrt());
            assert!(
                c1_sqrt < 0.01,
                "n={n} ray {ray}: envelope grows like √t with slope {c1_sqrt}"
            );
            println!(
                "acceptance criterion 7: n={n} ray {ray}: log-fit c1 = {c1_log:.3}, sqrt-fit slope = {c1_sqrt:.3e}"
            );
        }
    }
    println!("acceptance criterion 7: PASS — envelope bounded, no √t growth on any ray");
}

/// Criterion 8: at g = 1/2 the kernel reduces to the zonal spherical kernel
/// up to a γ-independent constant (reported, not asserted).
#[test]
fn criterion_8_half_coupling_consistency() {
    let r2 = g_half_consistency(2, &[0.7, -0.2], 50, 0xBEEF).unwrap();
    assert!(r2.max_rel_deviation < 1e-10, "n=2 deviation {}", r2.max_rel_deviation);
    let r3 = g_half_consistency(3, &[0.3, -0.7, 0.2], 50, 0xBEEF).unwrap();
    assert!(r3.max_rel_deviation < 1e-10, "n=3 deviation {}", r3.max_rel_deviation);
    println!(
        "acceptance criterion 8: PASS — ratio constant to {:.2e} (n=2) and {:.2e} (n=3); constants {:.12} and {:.12}",
        r2.max_rel_deviation, r3.max_rel_deviation, r2.mean_ratio.re, r3.mean_ratio.re
    );
}

/// Criterion 9: the reduced closed form satisfies its hypergeometric ODE
/// (∂² + 2g coth x ∂)φ = (λ²/4 − g²)φ to FD residual < 1e−6.
#[test]
fn criterion_9_closed_form_ode() {
    let mut worst = 0.0f64;
    for &(g, lam, x) in &[
        (0.75, 1.6, 0.9),
        (0.5, 0.6, 1.4),
        (1.5, 3.0, 0.7),
        (1.0, 2.2, 2.0),
    ] {
        let r = ode_residual_n2(g, lam, x, 1e-3).unwrap();
        worst = worst.max(r);
        assert!(r < 1e-6, "g={g} λ={lam} x={x}: residual {r}");
    }
    println!("acceptance criterion 9: PASS — ODE residual ≤ {worst:.2e} (< 1e-6)");
}
