//! `eval`: wave-function values over a list of x-points.
//!
//! Ranks 1–3 run the dense tensor grid with refinement until the requested
//! tolerance; rank 4 (d = 6) switches to the quasi-Monte-Carlo mode, whose
//! accuracy floor is the documented 1e−3.

use std::time::Instant;

use serde_json::json;
use sutherland_core::quadrature::{
    gauge_factor, qmc::eval_phi_qmc, refine_until_with, GridSpec, QuadratureResult,
};
use sutherland_core::Error;

use crate::config::{CommonArgs, OutputFormat};
use crate::exec::ThreadPoolExecutor;
use crate::report::{write_output, Report, Summary};

use super::{EXIT_CONFIG, EXIT_GRID, EXIT_OK};

const QMC_POINTS: u64 = 1 << 21;

const CSV_COLUMNS: &[&str] = &[
    "x", "phi_re", "phi_im", "psi_re", "psi_im", "error_estimate", "nodes",
];

pub fn run(args: &CommonArgs) -> i32 {
    let started = Instant::now();
    let (cfg, grid) = match args.resolve_eval() {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {}", e.0);
            return EXIT_CONFIG;
        }
    };
    let exec = ThreadPoolExecutor::new(cfg.threads);
    // the ladder starts at the validated base step and may halve it up to
    // grid_levels times
    let base = GridSpec::new(grid.half_width(), grid.step(), 0).expect("already validated");
    let mut rows = Vec::new();
    let mut max_residual = 0.0f64;
    for x in &cfg.x {
        let phi = if cfg.n >= 4 {
            match rank4_qmc(&cfg, x) {
                Ok(r) => r,
                Err(code) => return code,
            }
        } else {
            match refine_until_with(
                &exec,
                &cfg.lambda,
                cfg.g,
                x,
                cfg.tol,
                &base,
                cfg.grid_levels.max(1),
            ) {
                Ok(r) => r,
                Err(Error::GridTooCoarse { achieved, requested }) => {
                    eprintln!(
                        "error: grid too coarse at x = {x:?}: reached {achieved:e}, requested {requested:e}"
                    );
                    return EXIT_GRID;
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_CONFIG;
                }
            }
        };
        let psi = match gauge_factor(x, cfg.g) {
            Ok(gauge) => Some(phi.value * gauge),
            Err(Error::CoincidentCoordinates { .. }) => None,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_CONFIG;
            }
        };
        max_residual = max_residual.max(phi.error_estimate / phi.value.norm().max(1e-300));
        rows.push(json!({
            "x": x,
            "phi_re": phi.value.re,
            "phi_im": phi.value.im,
            "psi_re": psi.map(|v| v.re),
            "psi_im": psi.map(|v| v.im),
            "error_estimate": phi.error_estimate,
            "nodes": phi.nodes,
        }));
    }
    let file = args.load_file().unwrap_or_default();
    let report = Report {
        config: cfg.clone(),
        rows,
        summary: Summary {
            max_residual,
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
    EXIT_OK
}

fn rank4_qmc(cfg: &crate::config::Resolved, x: &[f64]) -> Result<QuadratureResult, i32> {
    let r = eval_phi_qmc(
        &cfg.lambda,
        cfg.g,
        x,
        cfg.grid_half_width,
        QMC_POINTS,
        cfg.seed,
    )
    .map_err(|e| {
        eprintln!("error: {e}");
        EXIT_CONFIG
    })?;
    let rel = r.error_estimate / r.value.norm().max(1e-300);
    let bar = cfg.tol.max(1e-3);
    if rel > bar {
        eprintln!("error: QMC estimate at x = {x:?}: spread {rel:e} above {bar:e}");
        return Err(EXIT_GRID);
    }
    Ok(r)
}
