//! `compare-n2`: quadrature against the rank-two closed form.
//!
//! With no explicit parameters the command sweeps the standard 3×3×3
//! acceptance grid (g × λ-gap × x-gap); explicit --g/--lambda/--x evaluate
//! those instead. Coincident coordinates are reported as rejected rows, not
//! failures. Rows at g = 1/2 additionally report the zonal-kernel ratio
//! deviation.

use std::time::Instant;

use num_complex::Complex64;
use serde_json::json;
use sutherland_core::oracle::{g_half_consistency, phi_n2_closed};
use sutherland_core::quadrature::{eval_phi_many_with, GridSpec};
use sutherland_core::Error;

use crate::config::{CommonArgs, OutputFormat};
use crate::exec::ThreadPoolExecutor;
use crate::report::{write_output, Report, Summary};

use super::{EXIT_CONFIG, EXIT_OK, EXIT_VERIFY};

const CSV_COLUMNS: &[&str] = &[
    "g",
    "lambda",
    "x",
    "quad_re",
    "quad_im",
    "closed_re",
    "closed_im",
    "ratio_re",
    "ratio_im",
    "deviation",
    "zonal_deviation",
    "status",
];

struct Case {
    g: f64,
    lambda: [f64; 2],
    x: [f64; 2],
}

fn default_grid_cases() -> Vec<Case> {
    let mut cases = Vec::new();
    for &g in &[0.5, 0.75, 1.5] {
        for &lam_gap in &[0.6, 1.6, 3.0] {
            for &x_gap in &[0.5, 1.0, 2.0] {
                cases.push(Case {
                    g,
                    lambda: [lam_gap / 2.0, -lam_gap / 2.0],
                    x: [x_gap / 2.0, -x_gap / 2.0],
                });
            }
        }
    }
    cases
}

pub fn run(args: &CommonArgs) -> i32 {
    let started = Instant::now();
    let file = match args.load_file() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {}", e.0);
            return EXIT_CONFIG;
        }
    };
    if let Some(n) = args.n.or(file.n) {
        if n != 2 {
            eprintln!("error: n: compare-n2 requires rank 2, got {n}");
            return EXIT_CONFIG;
        }
    }
    let tol = args.tol.or(file.tol).unwrap_or(1e-8);
    let seed = args.seed.or(file.seed).unwrap_or(42);
    let threads = args.threads.or(file.threads).unwrap_or(0);
    let exec = ThreadPoolExecutor::new(threads);

    let cases: Vec<Case> = if args.g.is_none() && args.lambda.is_none() && args.x.is_none() {
        default_grid_cases()
    } else {
        // explicit single-g sweep over the supplied x points
        let mut probe = args.clone();
        probe.n = probe.n.or(Some(2));
        let (cfg, _) = match probe.resolve_eval() {
            Ok(v) => v,
            Err(e) => {
                eprintln!("error: {}", e.0);
                return EXIT_CONFIG;
            }
        };
        if cfg.n != 2 {
            eprintln!("error: n: compare-n2 requires rank 2, got {}", cfg.n);
            return EXIT_CONFIG;
        }
        cfg.x
            .iter()
            .map(|x| Case {
                g: cfg.g,
                lambda: [cfg.lambda[0], cfg.lambda[1]],
                x: [x[0], x[1]],
            })
            .collect()
    };

    let m = (20.0f64 / 0.25).ceil();
    let grid = GridSpec::new(m * 0.25, 0.25, 1).expect("static grid is valid");

    let mut rows = Vec::new();
    let mut max_dev = 0.0f64;
    let mut breach = false;
    for case in &cases {
        let ordered = if case.x[0] >= case.x[1] {
            [case.x[0], case.x[1]]
        } else {
            [case.x[1], case.x[0]]
        };
        let closed = match phi_n2_closed(case.lambda[0], case.lambda[1], case.g, ordered[0], ordered[1])
        {
            Ok(v) => v,
            Err(Error::CoincidentCoordinates { .. }) => {
                rows.push(json!({
                    "g": case.g,
                    "lambda": case.lambda.to_vec(),
                    "x": case.x.to_vec(),
                    "status": "rejected: coincident coordinates",
                }));
                continue;
            }
            Err(e) => {
                eprintln!("error: closed form at g={}, x={:?}: {e}", case.g, case.x);
                return EXIT_CONFIG;
            }
        };
        let quad = match eval_phi_many_with(
            &exec,
            &case.lambda,
            case.g,
            &[ordered.to_vec()],
            &grid,
        ) {
            Ok(mut v) => v.remove(0),
            Err(e) => {
                eprintln!("error: quadrature at g={}, x={:?}: {e}", case.g, case.x);
                return EXIT_CONFIG;
            }
        };
        let ratio = quad.value / closed;
        let deviation = (ratio - Complex64::new(1.0, 0.0)).norm();
        max_dev = max_dev.max(deviation);
        if deviation >= tol {
            breach = true;
        }
        let zonal = if (case.g - 0.5).abs() < 1e-12 {
            match g_half_consistency(2, &case.lambda, 25, seed) {
                Ok(z) => Some(z.max_rel_deviation),
                Err(e) => {
                    eprintln!("error: zonal comparison: {e}");
                    return EXIT_CONFIG;
                }
            }
        } else {
            None
        };
        rows.push(json!({
            "g": case.g,
            "lambda": case.lambda.to_vec(),
            "x": case.x.to_vec(),
            "quad_re": quad.value.re,
            "quad_im": quad.value.im,
            "closed_re": closed.re,
            "closed_im": closed.im,
            "ratio_re": ratio.re,
            "ratio_im": ratio.im,
            "deviation": deviation,
            "zonal_deviation": zonal,
            "status": if deviation < tol { "ok" } else { "deviation breach" },
        }));
    }

    let report = Report {
        config: json!({
            "cases": cases.len(),
            "tol": tol,
            "grid_half_width": grid.half_width(),
            "grid_step": grid.step(),
            "seed": seed,
            "threads": threads,
        }),
        rows,
        summary: Summary {
            max_residual: max_dev,
            wall_time: args.timing.then(|| started.elapsed().as_secs_f64()),
        },
    };
    let content = match args.format(&file) {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_csv(CSV_COLUMNS),
    };
    if let Err(e) = write_output(args.out_path(&file).as_deref(), &content) {
        eprintln!("error: {e}");
        return EXIT_CONFIG;
    }
    if breach {
        eprintln!("comparison failed: max deviation {max_dev:e} ≥ tol {tol:e}");
        EXIT_VERIFY
    } else {
        EXIT_OK
    }
}
