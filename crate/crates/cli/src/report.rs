//! Machine-readable reports. JSON is the canonical interface:
//! `{config, rows[], summary{max_residual, wall_time}}`; CSV carries the
//! same rows with fixed, documented columns. `wall_time` stays null unless
//! timing was requested, so repeated runs diff empty.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct Summary {
    pub max_residual: f64,
    pub wall_time: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct Report<C: Serialize> {
    pub config: C,
    pub rows: Vec<Value>,
    pub summary: Summary,
}

impl<C: Serialize> Report<C> {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// CSV with the given header; every row must carry each column (missing
    /// or null fields become empty cells).
    pub fn to_csv(&self, columns: &[&str]) -> String {
        let mut out = String::new();
        out.push_str(&columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let mut cells = Vec::with_capacity(columns.len());
            for col in columns {
                let cell = match row.get(col) {
                    None | Some(Value::Null) => String::new(),
                    Some(Value::String(s)) => s.clone(),
                    // arrays (coordinate lists) join on spaces to stay
                    // comma-safe
                    Some(Value::Array(items)) => items
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    Some(v) => v.to_string(),
                };
                cells.push(cell);
            }
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

pub fn write_output(path: Option<&str>, content: &str) -> Result<(), String> {
    match path {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(p) => std::fs::write(p, content).map_err(|e| format!("out: cannot write {p}: {e}")),
    }
}
