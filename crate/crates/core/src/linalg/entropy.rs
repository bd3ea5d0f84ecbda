use super::eigen::hermitian_eigenvalues;
use super::matrix::CMatrix;
use crate::error::{Error, Result};

/// Eigenvalues in `[-CLAMP, 0)` are rounding noise and count as zero.
const CLAMP: f64 = 1e-10;
/// Beyond these the input is rejected as not a state.
const TRACE_LIMIT: f64 = 1e-8;
const NEGATIVE_LIMIT: f64 = 1e-8;

/// `-Σ λ log₂ λ` over a spectrum, with `0·log₂0 = 0`.
pub fn shannon_bits(spectrum: &[f64]) -> f64 {
    spectrum.iter().filter(|&&p| p > 0.0).map(|&p| -p * p.log2()).sum::<f64>().max(0.0)
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &CMatrix) -> Result<f64> {
    let trace = rho.trace();
    if (trace.re - 1.0).abs() > TRACE_LIMIT || trace.im.abs() > TRACE_LIMIT {
        return Err(Error::invalid_state(format!("trace {trace} deviates from 1")));
    }
    let mut spectrum = hermitian_eigenvalues(rho)?;
    for lambda in spectrum.iter_mut() {
        if *lambda < -NEGATIVE_LIMIT {
            return Err(Error::invalid_state(format!("negative eigenvalue {lambda:e}")));
        }
        if *lambda < 0.0 && *lambda >= -CLAMP {
            *lambda = 0.0;
        }
    }
    Ok(shannon_bits(&spectrum))
}
