use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use spinteleport_core::Error;

/// Values a JSON config file may supply. Keys match the long flag names;
/// each subcommand reads the keys it knows and ignores the rest.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(rename = "J")]
    pub coupling: Option<f64>,
    #[serde(rename = "B")]
    pub field: Option<f64>,
    #[serde(rename = "T")]
    pub temperature: Option<f64>,
    pub theta: Option<f64>,
    pub phi: Option<f64>,
    pub gamma: Option<f64>,
    pub beta: Option<f64>,
    #[serde(alias = "quadrature-order")]
    pub quadrature_order: Option<usize>,
    pub kind: Option<String>,
    pub id: Option<String>,
    pub resolution: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<String>,
    #[serde(alias = "angle-range")]
    pub angle_range: Option<(f64, f64)>,
}

pub fn config_error(field: &str, message: impl Into<String>) -> Error {
    Error::Config { field: field.to_string(), message: message.into() }
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, Error> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = fs::read_to_string(path)
            .map_err(|e| config_error("config", format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| config_error("config", format!("{}: {e}", path.display())))
    }
}

/// The flag value if given, else the file value, else a configuration error
/// naming the missing key.
pub fn pick<T>(flag: Option<T>, file: Option<T>, key: &str) -> Result<T, Error> {
    flag.or(file).ok_or_else(|| config_error(key, format!("missing value; pass --{key} or set it in the config file")))
}
