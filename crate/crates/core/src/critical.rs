//! Phase boundaries in `(B, T, J)`: where teleported entanglement of a Bell
//! input vanishes, and where the average fidelity drops to the classical 2/3.
//!
//! Both boundaries have the form `cosh(B/T) = R(e^{2J/T})`, so they are solved
//! as `B(J, T)` by bisection on `u = B/T` in log form:
//! `ln cosh u - ln R = 0`, which stays finite at any temperature.

use std::f64::consts::LN_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::teleport::{average_fidelity_closed, output_negativity_unclamped};
use crate::thermal::ChainParams;

pub const MAX_BISECTION_ITERATIONS: usize = 200;

/// `|ln R|` below this at zero field counts as a root at `B = 0`.
const ZERO_FIELD_TOLERANCE: f64 = 1e-12;
/// Relative bracket width at which the reduced field `B/T` is accepted.
const REDUCED_FIELD_TOLERANCE: f64 = 1e-15;

/// Bisection for a sign change of `f` on `[lo, hi]`.
///
/// Returns once the bracket is narrower than `tol` or `f` hits zero exactly.
pub fn bisect<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::domain(format!("bisection tolerance must be positive, got {tol}")));
    }
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::Bracket { lo, hi, f_lo, f_hi });
    }
    for _ in 0..MAX_BISECTION_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryKind {
    /// Output entanglement of a maximally entangled input reaches zero.
    EntanglementZero,
    /// Average fidelity equals the classical limit 2/3.
    ClassicalFidelity,
}

impl BoundaryKind {
    /// `ln R` for this boundary, with `a = 2J/T`.
    fn log_threshold(self, a: f64) -> f64 {
        let y = (-a).exp();
        match self {
            // R = (x - 1)² / (4(x + 1))
            BoundaryKind::EntanglementZero => a + 2.0 * (-y).ln_1p() - 2.0 * LN_2 - y.ln_1p(),
            // R = sqrt((5x²/2 + 3x + 5/2)/2) - x - 1
            BoundaryKind::ClassicalFidelity => {
                let inner = (1.25 + 1.5 * y + 1.25 * y * y).sqrt() - 1.0 - y;
                if inner <= 0.0 {
                    f64::NEG_INFINITY
                } else {
                    a + inner.ln()
                }
            }
        }
    }
}

/// A point `(J, T, B)` on one of the boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub coupling: f64,
    pub temperature: f64,
    pub field: f64,
    pub kind: BoundaryKind,
}

impl BoundaryPoint {
    /// The defining function evaluated through the closed forms: the
    /// unclamped output entanglement of a Bell input, or `F_A - 2/3`.
    pub fn residual(&self) -> Result<f64> {
        let params = ChainParams::new(self.coupling, self.field, self.temperature)?;
        Ok(match self.kind {
            BoundaryKind::EntanglementZero => output_negativity_unclamped(1.0, &params),
            BoundaryKind::ClassicalFidelity => average_fidelity_closed(&params) - 2.0 / 3.0,
        })
    }
}

fn ln_cosh(u: f64) -> f64 {
    u + (-2.0 * u).exp().ln_1p() - LN_2
}

/// Solves for the boundary field at `(J, T)`, or `None` if the boundary
/// condition already fails at zero field.
pub fn critical_point(kind: BoundaryKind, coupling: f64, temperature: f64) -> Result<Option<BoundaryPoint>> {
    let params = ChainParams::new(coupling, 0.0, temperature)?;
    let (j, t) = (params.coupling(), params.temperature());
    let log_r = kind.log_threshold(2.0 * j / t);

    let point = |field| BoundaryPoint { coupling: j, temperature: t, field, kind };
    if log_r <= 0.0 {
        return Ok((log_r.abs() <= ZERO_FIELD_TOLERANCE).then(|| point(0.0)));
    }
    // ln cosh u ≥ u - ln 2, so g(hi) ≥ 1.
    let hi = (log_r + LN_2 + 1.0).max(50.0);
    let u = bisect(|u| ln_cosh(u) - log_r, 0.0, hi, REDUCED_FIELD_TOLERANCE * hi)?;
    Ok(Some(point(u * t)))
}

/// Field `B_c` above which a Bell input arrives separable.
pub fn critical_field_entanglement(coupling: f64, temperature: f64) -> Result<Option<f64>> {
    Ok(critical_point(BoundaryKind::EntanglementZero, coupling, temperature)?.map(|p| p.field))
}

/// Field `B_cf` above which the average fidelity falls below 2/3.
pub fn critical_field_fidelity(coupling: f64, temperature: f64) -> Result<Option<f64>> {
    Ok(critical_point(BoundaryKind::ClassicalFidelity, coupling, temperature)?.map(|p| p.field))
}

/// Field minimizing the weak-coupling fidelity: `B_m = T·arccosh 2`.
pub fn fidelity_minimum_field(temperature: f64) -> Result<f64> {
    if !(temperature.is_finite() && temperature > 0.0) {
        return Err(Error::domain(format!("temperature must be positive, got {temperature}")));
    }
    Ok(temperature * 2f64.acosh())
}
