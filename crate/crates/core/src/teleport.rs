//! Teleporting a two-qubit state through two independent thermal chains.
//!
//! Each chain acts as a single-qubit Pauli channel whose weights are the
//! chain's Bell-basis populations; the two-qubit channel is their product.

use std::f64::consts::{PI, TAU};
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{pauli, tensor_product, validate_two_qubit_density, CMatrix, StateVector};
use crate::quadrature::gauss_legendre;
use crate::thermal::{negativity, pauli_probabilities, thermal_state, ChainParams, PauliProbabilities, T_FLOOR};

/// Quadrature order used unless a caller asks otherwise.
pub const DEFAULT_QUADRATURE_ORDER: usize = 16;
pub const MIN_QUADRATURE_ORDER: usize = 8;

const NORM_TOLERANCE: f64 = 1e-12;

/// `cos(θ/2)|00⟩ + sin(θ/2)e^{iφ}|11⟩` with `θ ∈ [0, π]`, `φ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InputState {
    theta: f64,
    phi: f64,
}

impl InputState {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::domain(format!("theta must lie in [0, π], got {theta}")));
        }
        if !(0.0..TAU).contains(&phi) {
            return Err(Error::domain(format!("phi must lie in [0, 2π), got {phi}")));
        }
        Ok(InputState { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn vector(&self) -> StateVector {
        let (s, c) = (0.5 * self.theta).sin_cos();
        let zero = Complex64::new(0.0, 0.0);
        StateVector::new(vec![Complex64::new(c, 0.0), zero, zero, Complex64::from_polar(s, self.phi)])
    }

    /// `2|c₁c₂| = sin θ`.
    pub fn entanglement(&self) -> f64 {
        self.theta.sin()
    }
}

/// State vector of the input family.
pub fn input_state(theta: f64, phi: f64) -> Result<StateVector> {
    InputState::new(theta, phi).map(|s| s.vector())
}

fn two_qubit_paulis() -> &'static [CMatrix; 16] {
    static OPS: OnceLock<[CMatrix; 16]> = OnceLock::new();
    OPS.get_or_init(|| {
        let singles = pauli::all();
        std::array::from_fn(|k| tensor_product(&singles[k / 4], &singles[k % 4]))
    })
}

/// `Σ_ij p_i q_j (σ_i ⊗ σ_j) ρ (σ_i ⊗ σ_j)`.
pub fn apply_channel(rho_in: &CMatrix, first: &PauliProbabilities, second: &PauliProbabilities) -> Result<CMatrix> {
    validate_two_qubit_density(rho_in)?;
    let p = PauliProbabilities::new(first.p0, first.px, first.py, first.pz)?.as_array();
    let q = PauliProbabilities::new(second.p0, second.px, second.py, second.pz)?.as_array();
    let ops = two_qubit_paulis();
    let mut out = CMatrix::zeros(4);
    for i in 0..4 {
        for j in 0..4 {
            let w = p[i] * q[j];
            if w == 0.0 {
                continue;
            }
            let term = rho_in.conjugate_by(&ops[4 * i + j]);
            out = &out + &term.scale_real(w);
        }
    }
    Ok(out)
}

/// Unclamped output entanglement; negative values mean the output is separable.
pub fn output_negativity_unclamped(e_in: f64, params: &ChainParams) -> f64 {
    let f = params.boltzmann();
    let numerator = e_in * (f.x - f.one).powi(2) - 4.0 * f.cosh * (f.x + f.one);
    numerator / f.norm().powi(2)
}

/// Output entanglement for an input of entanglement `e_in`, closed form.
pub fn output_negativity_closed(e_in: f64, params: &ChainParams) -> f64 {
    debug_assert!((0.0..=1.0).contains(&e_in), "e_in = {e_in}");
    output_negativity_unclamped(e_in, params).max(0.0)
}

/// Overlap fidelity `⟨ψ|ρ|ψ⟩`.
pub fn fidelity(psi_in: &StateVector, rho_out: &CMatrix) -> Result<f64> {
    let norm = psi_in.norm();
    if (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::domain(format!("input vector has norm {norm}, expected 1")));
    }
    validate_two_qubit_density(rho_out)?;
    Ok(rho_out.expectation(psi_in).re.clamp(0.0, 1.0))
}

/// Output state of one teleportation together with its fidelity and entanglement.
#[derive(Debug, Clone)]
pub struct TeleportOutcome {
    pub rho_out: CMatrix,
    pub fidelity: f64,
    pub e_out: f64,
}

/// Teleports `input` through two chains at `params`.
pub fn teleport(input: &InputState, params: &ChainParams) -> Result<TeleportOutcome> {
    let probs = pauli_probabilities(&thermal_state(params))?;
    let psi = input.vector();
    let rho_out = apply_channel(&psi.projector(), &probs, &probs)?;
    let fidelity = fidelity(&psi, &rho_out)?;
    let e_out = negativity(&rho_out)?;
    Ok(TeleportOutcome { rho_out, fidelity, e_out })
}

/// Average fidelity over the input family, integrated numerically.
///
/// Gauss-Legendre in `cos θ` times the periodic trapezoid rule in `φ`, both
/// with `order` nodes. The integrand is a trigonometric polynomial of low
/// degree, so order 16 is exact to rounding.
pub fn average_fidelity_quadrature(params: &ChainParams, order: usize) -> Result<f64> {
    if order < MIN_QUADRATURE_ORDER {
        return Err(Error::domain(format!("quadrature order must be at least {MIN_QUADRATURE_ORDER}, got {order}")));
    }
    let probs = pauli_probabilities(&thermal_state(params))?;
    let phi_weight = TAU / order as f64;
    let mut total = 0.0;
    for (cos_theta, weight) in gauss_legendre(order) {
        let theta = cos_theta.clamp(-1.0, 1.0).acos();
        for k in 0..order {
            let psi = InputState::new(theta, k as f64 * phi_weight)?.vector();
            let rho_out = apply_channel(&psi.projector(), &probs, &probs)?;
            total += weight * phi_weight * fidelity(&psi, &rho_out)?;
        }
    }
    Ok(total / (4.0 * PI))
}

/// Closed-form average fidelity.
pub fn average_fidelity_closed(params: &ChainParams) -> f64 {
    let f = params.boltzmann();
    let (x, c, one) = (f.x, f.cosh, f.one);
    let numerator = 2.5 * x * x + 3.0 * x * one + 2.5 * one * one - 2.0 * (x + c + one).powi(2);
    (2.0 / 3.0) * (1.0 + numerator / f.norm().powi(2))
}

/// Average fidelity in the `J → 0` limit: `(1/(cosh(B/T) + 1) - 1/3)² + 2/9`.
pub fn weak_coupling_fidelity(field: f64, temperature: f64) -> f64 {
    let t = temperature.max(T_FLOOR);
    let a = 1.0 / ((field / t).cosh() + 1.0) - 1.0 / 3.0;
    a * a + 2.0 / 9.0
}
