//! Plot-ready datasets for each figure, evaluated on a regular grid.
//!
//! Axis ranges are fixed here and echoed in the dataset metadata:
//! `E_in ∈ [0, 1]`, `B ∈ [0, 3]`, `T ∈ [T_FLOOR, 3]`, `J ∈ [0.05, 3]`, and
//! the signal angles over `[0, π)` without the endpoint.

mod dataset;

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use dataset::{write_dataset, Axis, DatasetFormat, Metadata, SweepDataset, CSV_SIGNIFICANT_DIGITS};

use crate::critical::{critical_point, BoundaryKind};
use crate::error::{Error, Result};
use crate::holevo::mutual_information;
use crate::teleport::{average_fidelity_closed, output_negativity_closed, DEFAULT_QUADRATURE_ORDER};
use crate::thermal::{ChainParams, T_FLOOR};

pub const DEFAULT_RESOLUTION: usize = 64;
pub const MIN_RESOLUTION: usize = 2;
pub const MAX_RESOLUTION: usize = 4096;

/// `T = 1/(2 ln 3)`, the temperature used throughout the figure captions.
pub fn caption_temperature() -> f64 {
    1.0 / (2.0 * 3f64.ln())
}

const E_IN_RANGE: (f64, f64) = (0.0, 1.0);
const FIELD_RANGE: (f64, f64) = (0.0, 3.0);
const TEMPERATURE_RANGE: (f64, f64) = (T_FLOOR, 3.0);
const COUPLING_RANGE: (f64, f64) = (0.05, 3.0);
const ANGLE_RANGE: (f64, f64) = (0.0, PI);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureId {
    Fig1a,
    Fig1b,
    Fig1c,
    Fig1d,
    Fig2a,
    Fig2b,
    Fig3a,
    Fig3b,
    Fig4a,
    Fig4b,
}

impl FigureId {
    pub const ALL: [FigureId; 10] = [
        FigureId::Fig1a,
        FigureId::Fig1b,
        FigureId::Fig1c,
        FigureId::Fig1d,
        FigureId::Fig2a,
        FigureId::Fig2b,
        FigureId::Fig3a,
        FigureId::Fig3b,
        FigureId::Fig4a,
        FigureId::Fig4b,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FigureId::Fig1a => "fig1a",
            FigureId::Fig1b => "fig1b",
            FigureId::Fig1c => "fig1c",
            FigureId::Fig1d => "fig1d",
            FigureId::Fig2a => "fig2a",
            FigureId::Fig2b => "fig2b",
            FigureId::Fig3a => "fig3a",
            FigureId::Fig3b => "fig3b",
            FigureId::Fig4a => "fig4a",
            FigureId::Fig4b => "fig4b",
        }
    }

    /// Parameters held fixed in the figure, keyed `J`, `B`, `T`, `gamma`, `beta`.
    pub fn default_parameters(self) -> BTreeMap<&'static str, f64> {
        let t = caption_temperature();
        let pairs: &[(&str, f64)] = match self {
            FigureId::Fig1a => &[("J", 1.0), ("T", t)],
            FigureId::Fig1b => &[("J", 1.0), ("B", 0.0)],
            FigureId::Fig1c => &[("T", t), ("B", 0.0)],
            FigureId::Fig1d | FigureId::Fig2b => &[("E_in", 1.0)],
            FigureId::Fig2a => &[("T", t)],
            FigureId::Fig3a => &[("J", 1.0), ("T", t), ("B", 0.0)],
            FigureId::Fig3b => &[("J", 1.0), ("gamma", FRAC_PI_4), ("beta", FRAC_PI_4)],
            FigureId::Fig4a => &[("J", 1.0), ("T", t)],
            FigureId::Fig4b => &[("J", 1.0), ("B", 0.0)],
        };
        pairs.iter().copied().collect()
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigureId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::config("id", format!("unknown figure `{s}` (expected fig1a..fig4b)")))
    }
}

/// Optional replacements for a figure's fixed parameters and angle range.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Overrides {
    pub coupling: Option<f64>,
    pub field: Option<f64>,
    pub temperature: Option<f64>,
    /// Range for both signal angles in `fig3a`.
    pub angle_range: Option<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub figure: FigureId,
    pub resolution: usize,
    #[serde(default)]
    pub overrides: Overrides,
}

impl SweepSpec {
    pub fn new(figure: FigureId) -> Self {
        SweepSpec { figure, resolution: DEFAULT_RESOLUTION, overrides: Overrides::default() }
    }

    pub fn with_resolution(mut self, resolution: usize) -> Self {
        self.resolution = resolution;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(MIN_RESOLUTION..=MAX_RESOLUTION).contains(&self.resolution) {
            return Err(Error::config(
                "resolution",
                format!("must lie in [{MIN_RESOLUTION}, {MAX_RESOLUTION}], got {}", self.resolution),
            ));
        }
        let fixed = self.figure.default_parameters();
        let o = &self.overrides;
        for (key, value) in [("J", o.coupling), ("B", o.field), ("T", o.temperature)] {
            if let Some(v) = value {
                if !fixed.contains_key(key) {
                    return Err(Error::config(
                        key,
                        format!("{key} is an axis of {}, not a fixed parameter", self.figure),
                    ));
                }
                if !v.is_finite() {
                    return Err(Error::config(key, format!("{key} must be finite, got {v}")));
                }
            }
        }
        if let Some((lo, hi)) = o.angle_range {
            if self.figure != FigureId::Fig3a {
                return Err(Error::config("angle_range", format!("only fig3a has angle axes, not {}", self.figure)));
            }
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::config("angle_range", format!("need finite lo < hi, got ({lo}, {hi})")));
            }
        }
        Ok(())
    }

    /// Fixed parameters after applying overrides.
    fn parameters(&self) -> BTreeMap<String, f64> {
        let mut params: BTreeMap<String, f64> =
            self.figure.default_parameters().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        let o = &self.overrides;
        for (key, value) in [("J", o.coupling), ("B", o.field), ("T", o.temperature)] {
            if let Some(v) = value {
                params.insert(key.to_string(), v);
            }
        }
        params
    }
}

/// Cartesian product of two axes, first axis outermost.
fn grid(a: &Axis, b: &Axis) -> Vec<(f64, f64)> {
    let bv = b.values();
    a.values().into_iter().flat_map(|x| bv.iter().map(move |&y| (x, y))).collect()
}

fn chain(j: f64, b: f64, t: f64) -> Result<ChainParams> {
    ChainParams::new(j, b, t)
}

/// Evaluates the figure's grid. Rows come out in grid order regardless of
/// how the evaluation is scheduled.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepDataset> {
    spec.validate()?;
    let n = spec.resolution;
    let params = spec.parameters();
    let get = |k: &str| params[k];

    let e_in = || Axis::linear("E_in", E_IN_RANGE.0, E_IN_RANGE.1, n);
    let field = || Axis::linear("B", FIELD_RANGE.0, FIELD_RANGE.1, n);
    let temperature = || Axis::linear("T", TEMPERATURE_RANGE.0, TEMPERATURE_RANGE.1, n);
    let coupling = || Axis::linear("J", COUPLING_RANGE.0, COUPLING_RANGE.1, n);

    type Row = Vec<Option<f64>>;
    let two_axis = |a: Axis, b: Axis, f: &(dyn Fn(f64, f64) -> Result<Row> + Sync)| -> Result<(Vec<Axis>, Vec<Row>)> {
        let rows = grid(&a, &b)
            .into_par_iter()
            .map(|(x, y)| f(x, y).map(|tail| [vec![Some(x), Some(y)], tail].concat()))
            .collect::<Result<Vec<_>>>()?;
        Ok((vec![a, b], rows))
    };

    let (columns, (axes, rows)): (Vec<&str>, (Vec<Axis>, Vec<Row>)) = match spec.figure {
        FigureId::Fig1a => {
            let (j, t) = (get("J"), get("T"));
            (
                vec!["E_in", "B", "E_out"],
                two_axis(e_in(), field(), &|e, b| Ok(vec![Some(output_negativity_closed(e, &chain(j, b, t)?))]))?,
            )
        }
        FigureId::Fig1b => {
            let (j, b) = (get("J"), get("B"));
            (
                vec!["E_in", "T", "E_out"],
                two_axis(e_in(), temperature(), &|e, t| Ok(vec![Some(output_negativity_closed(e, &chain(j, b, t)?))]))?,
            )
        }
        FigureId::Fig1c => {
            let (t, b) = (get("T"), get("B"));
            (
                vec!["E_in", "J", "E_out"],
                two_axis(e_in(), coupling(), &|e, j| Ok(vec![Some(output_negativity_closed(e, &chain(j, b, t)?))]))?,
            )
        }
        FigureId::Fig1d => (
            vec!["T", "J", "B_c"],
            two_axis(temperature(), coupling(), &|t, j| {
                Ok(vec![critical_point(BoundaryKind::EntanglementZero, j, t)?.map(|p| p.field)])
            })?,
        ),
        FigureId::Fig2a => {
            let t = get("T");
            (
                vec!["B", "J", "F_A"],
                two_axis(field(), coupling(), &|b, j| Ok(vec![Some(average_fidelity_closed(&chain(j, b, t)?))]))?,
            )
        }
        FigureId::Fig2b => (
            vec!["T", "J", "B_cf"],
            two_axis(temperature(), coupling(), &|t, j| {
                Ok(vec![critical_point(BoundaryKind::ClassicalFidelity, j, t)?.map(|p| p.field)])
            })?,
        ),
        FigureId::Fig3a => {
            let p = chain(get("J"), get("B"), get("T"))?;
            let (lo, hi) = spec.overrides.angle_range.unwrap_or(ANGLE_RANGE);
            (
                vec!["gamma", "beta", "I"],
                two_axis(Axis::periodic("gamma", lo, hi, n), Axis::periodic("beta", lo, hi, n), &|g, b| {
                    Ok(vec![Some(mutual_information(&p, g, b)?.value)])
                })?,
            )
        }
        FigureId::Fig3b => {
            let (j, g, be) = (get("J"), get("gamma"), get("beta"));
            (
                vec!["B", "T", "I"],
                two_axis(field(), temperature(), &|b, t| {
                    Ok(vec![Some(mutual_information(&chain(j, b, t)?, g, be)?.value)])
                })?,
            )
        }
        FigureId::Fig4a | FigureId::Fig4b => {
            let axis = if spec.figure == FigureId::Fig4a { field() } else { temperature() };
            let fixed_j = get("J");
            let make = |x: f64| -> Result<ChainParams> {
                if spec.figure == FigureId::Fig4a {
                    chain(fixed_j, x, get("T"))
                } else {
                    chain(fixed_j, get("B"), x)
                }
            };
            let rows = axis
                .values()
                .into_par_iter()
                .map(|x| {
                    let p = make(x)?;
                    let entangled = mutual_information(&p, FRAC_PI_4, FRAC_PI_4)?.value;
                    let product = mutual_information(&p, 0.0, 0.0)?.value;
                    Ok(vec![Some(x), Some(entangled), Some(product)])
                })
                .collect::<Result<Vec<_>>>()?;
            let name = axis.name.clone();
            let columns =
                if name == "B" { vec!["B", "I_entangled", "I_product"] } else { vec!["T", "I_entangled", "I_product"] };
            (columns, (vec![axis], rows))
        }
    };

    Ok(SweepDataset {
        metadata: Metadata {
            figure: spec.figure,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            quadrature_order: DEFAULT_QUADRATURE_ORDER,
            resolution: n,
            parameters: params,
            axes,
        },
        columns: columns.into_iter().map(String::from).collect(),
        rows,
    })
}
