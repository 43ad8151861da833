//! Run configuration: JSON config file, `SUTHERLAND_*` environment
//! overrides, command-line flags. Precedence: flags/env over file over
//! built-in defaults (clap resolves env before it hands values over, so
//! env behaves like flags here).

use clap::Args;
use serde::{Deserialize, Serialize};
use sutherland_core::quadrature::GridSpec;

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub half_width: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refinement_levels: Option<u32>,
}

/// On-disk configuration, mirrored by the flags below.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "is_default_grid")]
    pub grid: GridConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<OutputFormat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

fn is_default_grid(g: &GridConfig) -> bool {
    g.half_width.is_none() && g.step.is_none() && g.refinement_levels.is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Flags shared by every subcommand. λ is entered as real numbers holding
/// the imaginary parts (the spectral parameters live on the imaginary
/// axis), which keeps complex literals off the command line.
#[derive(Debug, Args, Clone)]
pub struct CommonArgs {
    /// JSON config file mirroring these flags (lowest precedence)
    #[arg(long, env = "SUTHERLAND_CONFIG")]
    pub config: Option<String>,

    /// Rank n
    #[arg(long, env = "SUTHERLAND_N")]
    pub n: Option<usize>,

    /// Coupling constant g > 0
    #[arg(long, env = "SUTHERLAND_G")]
    pub g: Option<f64>,

    /// Imaginary parts of λ, comma-separated: a,b,...
    #[arg(long, env = "SUTHERLAND_LAMBDA", value_delimiter = ',', allow_hyphen_values = true)]
    pub lambda: Option<Vec<f64>>,

    /// x points: semicolon-separated points of comma-separated coordinates
    #[arg(long, env = "SUTHERLAND_X", allow_hyphen_values = true)]
    pub x: Option<String>,

    /// Grid truncation half-width T
    #[arg(long, env = "SUTHERLAND_GRID_HALFWIDTH")]
    pub grid_halfwidth: Option<f64>,

    /// Grid base step h (T/h must be a whole number ≥ 8)
    #[arg(long, env = "SUTHERLAND_GRID_STEP")]
    pub grid_step: Option<f64>,

    /// Refinement levels (each halves h)
    #[arg(long, env = "SUTHERLAND_GRID_LEVELS")]
    pub grid_levels: Option<u32>,

    /// Relative tolerance
    #[arg(long, env = "SUTHERLAND_TOL")]
    pub tol: Option<f64>,

    /// Output format
    #[arg(long, env = "SUTHERLAND_FORMAT", value_enum)]
    pub format: Option<OutputFormat>,

    /// Worker threads; 0 = all available (results identical regardless)
    #[arg(long, env = "SUTHERLAND_THREADS")]
    pub threads: Option<usize>,

    /// Seed for random-point identity sampling
    #[arg(long, env = "SUTHERLAND_SEED")]
    pub seed: Option<u64>,

    /// Write the report here instead of stdout
    #[arg(long, env = "SUTHERLAND_OUT")]
    pub out: Option<String>,

    /// Include wall time in the summary (off by default so identical runs
    /// produce byte-identical reports)
    #[arg(long, env = "SUTHERLAND_TIMING")]
    pub timing: bool,
}

/// Fully resolved configuration, echoed into every report.
#[derive(Debug, Clone, Serialize)]
pub struct Resolved {
    pub n: usize,
    pub g: f64,
    pub lambda: Vec<f64>,
    pub x: Vec<Vec<f64>>,
    pub grid_half_width: f64,
    pub grid_step: f64,
    pub grid_levels: u32,
    pub tol: f64,
    pub format: String,
    pub threads: usize,
    pub seed: u64,
}

#[derive(Debug)]
pub struct ConfigError(pub String);

impl From<ConfigError> for String {
    fn from(e: ConfigError) -> String {
        e.0
    }
}

fn parse_x_points(s: &str) -> Result<Vec<Vec<f64>>, ConfigError> {
    let mut points = Vec::new();
    for (pi, part) in s.split(';').enumerate() {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let mut point = Vec::new();
        for coord in part.split(',') {
            let v: f64 = coord.trim().parse().map_err(|_| {
                ConfigError(format!("x: point {} has a malformed coordinate {coord:?}", pi + 1))
            })?;
            point.push(v);
        }
        points.push(point);
    }
    if points.is_empty() {
        return Err(ConfigError("x: no points given".into()));
    }
    Ok(points)
}

impl CommonArgs {
    pub fn load_file(&self) -> Result<FileConfig, ConfigError> {
        match &self.config {
            None => Ok(FileConfig::default()),
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| ConfigError(format!("config: cannot read {path}: {e}")))?;
                serde_json::from_str(&text)
                    .map_err(|e| ConfigError(format!("config: {path}: {e}")))
            }
        }
    }

    /// Merge flags over the config file and validate for an evaluation-type
    /// run (needs n, g, λ, x).
    pub fn resolve_eval(&self) -> Result<(Resolved, GridSpec), ConfigError> {
        let file = self.load_file()?;
        let n = self
            .n
            .or(file.n)
            .ok_or_else(|| ConfigError("n: missing (flag --n or config)".into()))?;
        if n == 0 || n > 4 {
            return Err(ConfigError(format!("n: rank {n} outside the supported 1..=4")));
        }
        let g = self
            .g
            .or(file.g)
            .ok_or_else(|| ConfigError("g: missing (flag --g or config)".into()))?;
        if g <= 0.0 || !g.is_finite() {
            return Err(ConfigError(format!("g: must be positive, got {g}")));
        }
        let lambda = match (&self.lambda, file.lambda) {
            (Some(l), _) => l.clone(),
            (None, Some(l)) => l,
            (None, None) => return Err(ConfigError("lambda: missing (flag --lambda or config)".into())),
        };
        if lambda.len() != n {
            return Err(ConfigError(format!(
                "lambda: expected {n} entries, got {}",
                lambda.len()
            )));
        }
        let x = match (&self.x, file.x) {
            (Some(s), _) => parse_x_points(s)?,
            (None, Some(pts)) => pts,
            (None, None) => return Err(ConfigError("x: missing (flag --x or config)".into())),
        };
        for (i, p) in x.iter().enumerate() {
            if p.len() != n {
                return Err(ConfigError(format!(
                    "x: point {} has {} coordinates, expected {n}",
                    i + 1,
                    p.len()
                )));
            }
        }
        let tol = self.tol.or(file.tol).unwrap_or(1e-8);
        if tol <= 0.0 || tol.is_nan() {
            return Err(ConfigError(format!("tol: must be positive, got {tol}")));
        }
        let defaults = GridSpec::default_for(n, tol);
        let step = self.grid_step.or(file.grid.step).unwrap_or(defaults.step());
        let half_width = self
            .grid_halfwidth
            .or(file.grid.half_width)
            .unwrap_or_else(|| (defaults.half_width() / step).ceil() * step);
        let levels = self
            .grid_levels
            .or(file.grid.refinement_levels)
            .unwrap_or(defaults.refinement_levels());
        let grid = GridSpec::new(half_width, step, levels)
            .map_err(|e| ConfigError(format!("grid: {e}")))?;
        let resolved = Resolved {
            n,
            g,
            lambda,
            x,
            grid_half_width: grid.half_width(),
            grid_step: grid.step(),
            grid_levels: grid.refinement_levels(),
            tol,
            format: match self.format.or(file.format).unwrap_or(OutputFormat::Json) {
                OutputFormat::Json => "json".into(),
                OutputFormat::Csv => "csv".into(),
            },
            threads: self.threads.or(file.threads).unwrap_or(0),
            seed: self.seed.or(file.seed).unwrap_or(42),
        };
        Ok((resolved, grid))
    }

    pub fn format(&self, file: &FileConfig) -> OutputFormat {
        self.format.or(file.format).unwrap_or(OutputFormat::Json)
    }

    pub fn out_path(&self, file: &FileConfig) -> Option<String> {
        self.out.clone().or_else(|| file.out.clone())
    }
}
