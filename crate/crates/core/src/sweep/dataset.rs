use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::FigureId;
use crate::error::{Error, Result};

/// Significant digits for reals in CSV output.
pub const CSV_SIGNIFICANT_DIGITS: usize = 15;

/// One grid axis as echoed in the metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub name: String,
    pub min: f64,
    pub max: f64,
    pub points: usize,
    /// Periodic axes omit `max` (it is the start of the next period).
    pub periodic: bool,
}

impl Axis {
    pub fn linear(name: &str, min: f64, max: f64, points: usize) -> Self {
        Axis { name: name.to_string(), min, max, points, periodic: false }
    }

    pub fn periodic(name: &str, min: f64, max: f64, points: usize) -> Self {
        Axis { name: name.to_string(), min, max, points, periodic: true }
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        if n == 1 {
            return vec![self.min];
        }
        let span = self.max - self.min;
        let steps = if self.periodic { n } else { n - 1 } as f64;
        (0..n)
            .map(|k| if !self.periodic && k == n - 1 { self.max } else { self.min + span * k as f64 / steps })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub figure: FigureId,
    pub tool_version: String,
    pub quadrature_order: usize,
    pub resolution: usize,
    /// Parameters held fixed across the grid.
    pub parameters: BTreeMap<String, f64>,
    pub axes: Vec<Axis>,
}

/// Named columns of reals in grid order; `None` marks a point with no value
/// (a missing phase boundary).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepDataset {
    pub metadata: Metadata,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Option<f64>>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DatasetFormat {
    Csv,
    Json,
}

impl FromStr for DatasetFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(DatasetFormat::Csv),
            "json" => Ok(DatasetFormat::Json),
            other => Err(Error::config("format", format!("unknown format `{other}`, expected csv or json"))),
        }
    }
}

fn format_real(value: f64) -> String {
    format!("{:.*e}", CSV_SIGNIFICANT_DIGITS - 1, value)
}

impl SweepDataset {
    pub fn column(&self, name: &str) -> Option<Vec<Option<f64>>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    /// Header line plus one LF-terminated line per row; holes are empty fields.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                if let Some(v) = cell {
                    let _ = write!(out, "{}", format_real(*v));
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("dataset serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: DatasetFormat) -> String {
        match format {
            DatasetFormat::Csv => self.to_csv(),
            DatasetFormat::Json => self.to_json(),
        }
    }
}

/// Writes `ds` to `path` in the requested format.
pub fn write_dataset(ds: &SweepDataset, format: DatasetFormat, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, ds.render(format)).map_err(|source| Error::File { path: path.to_path_buf(), source })
}
