//! Two-spin isotropic Heisenberg (XXX) chain in a uniform field, its Gibbs
//! state, thermal entanglement, and the Bell-basis weights that turn one
//! chain into a Pauli teleportation channel.
//!
//! Energies, field and temperature share units with `k_B = 1`. All closed
//! forms are evaluated with every exponential divided by the largest one, so
//! nothing overflows even at [`T_FLOOR`].

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigen, hermitian_eigenvalues, partial_transpose_second, pauli, tensor_product,
    validate_two_qubit_density, CMatrix, StateVector,
};

/// Temperatures below this are clamped up to it.
pub const T_FLOOR: f64 = 1e-3;

/// Sum-to-one tolerance for Bell weights.
pub const PROBABILITY_TOLERANCE: f64 = 1e-12;

/// Exchange coupling `J > 0`, field `B ≥ 0` and temperature `T ≥ T_FLOOR`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawChainParams")]
pub struct ChainParams {
    coupling: f64,
    field: f64,
    temperature: f64,
}

#[derive(Deserialize)]
struct RawChainParams {
    coupling: f64,
    field: f64,
    temperature: f64,
}

impl TryFrom<RawChainParams> for ChainParams {
    type Error = Error;

    fn try_from(raw: RawChainParams) -> Result<Self> {
        ChainParams::new(raw.coupling, raw.field, raw.temperature)
    }
}

impl ChainParams {
    pub fn new(coupling: f64, field: f64, temperature: f64) -> Result<Self> {
        if !(coupling.is_finite() && coupling > 0.0) {
            return Err(Error::domain(format!(
                "coupling J must be positive and finite (antiferromagnetic), got {coupling}"
            )));
        }
        if !(field.is_finite() && field >= 0.0) {
            return Err(Error::domain(format!("field B must be finite and non-negative, got {field}")));
        }
        if !(temperature.is_finite() && temperature > 0.0) {
            return Err(Error::domain(format!("temperature T must be positive, got {temperature}")));
        }
        let temperature = if temperature < T_FLOOR {
            log::warn!("temperature {temperature} below floor, clamped to {T_FLOOR}");
            T_FLOOR
        } else {
            temperature
        };
        Ok(ChainParams { coupling, field, temperature })
    }

    pub fn coupling(&self) -> f64 {
        self.coupling
    }

    pub fn field(&self) -> f64 {
        self.field
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// Same point with every energy scale multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        ChainParams::new(self.coupling * factor, self.field * factor, self.temperature * factor)
    }

    pub(crate) fn boltzmann(&self) -> BoltzmannFactors {
        BoltzmannFactors::new(self)
    }
}

/// The three exponentials every closed form is built from, each multiplied by
/// `e^{-L}` where `L = max(2J/T, B/T)`:
///
/// * `x = e^{2J/T}`
/// * `cosh = cosh(B/T)`, `sinh = sinh(B/T)`
/// * `one = 1`
#[derive(Debug, Clone, Copy)]
pub(crate) struct BoltzmannFactors {
    pub x: f64,
    pub cosh: f64,
    pub sinh: f64,
    pub one: f64,
    /// The shift `L`.
    pub shift: f64,
}

impl BoltzmannFactors {
    fn new(p: &ChainParams) -> Self {
        let a = 2.0 * p.coupling / p.temperature;
        let u = p.field / p.temperature;
        let shift = a.max(u);
        let up = (u - shift).exp();
        let down = (-u - shift).exp();
        BoltzmannFactors {
            x: (a - shift).exp(),
            cosh: 0.5 * (up + down),
            sinh: 0.5 * (up - down),
            one: (-shift).exp(),
            shift,
        }
    }

    /// `e^{2J/T} + 2cosh(B/T) + 1`, scaled. Proportional to the partition function.
    pub fn norm(&self) -> f64 {
        self.x + 2.0 * self.cosh + self.one
    }
}

/// `H = (B/2)(σz⊗I + I⊗σz) + (J/2)(σx⊗σx + σy⊗σy + σz⊗σz)`.
pub fn hamiltonian(params: &ChainParams) -> CMatrix {
    let i2 = pauli::identity();
    let zeeman = &tensor_product(&pauli::z(), &i2) + &tensor_product(&i2, &pauli::z());
    let exchange = [pauli::x(), pauli::y(), pauli::z()]
        .iter()
        .map(|s| tensor_product(s, s))
        .fold(CMatrix::zeros(4), |acc, t| &acc + &t);
    &zeeman.scale_real(0.5 * params.field) + &exchange.scale_real(0.5 * params.coupling)
}

/// Closed-form Gibbs state in the `{|00⟩, |01⟩, |10⟩, |11⟩}` basis.
pub fn thermal_state(params: &ChainParams) -> CMatrix {
    let (j, b, t) = (params.coupling, params.field, params.temperature);
    // Exponents of the four Boltzmann weights: |00⟩, |11⟩, triplet ψ⁺, singlet ψ⁻.
    let e00 = (-b - 0.5 * j) / t;
    let e11 = (b - 0.5 * j) / t;
    let et = -0.5 * j / t;
    let es = 1.5 * j / t;
    let top = e00.max(e11).max(et).max(es);
    let (w00, w11, wt, ws) = ((e00 - top).exp(), (e11 - top).exp(), (et - top).exp(), (es - top).exp());
    let z = w00 + w11 + wt + ws;

    let mut rho = CMatrix::zeros(4);
    rho[(0, 0)] = Complex64::new(w00 / z, 0.0);
    rho[(1, 1)] = Complex64::new(0.5 * (wt + ws) / z, 0.0);
    rho[(2, 2)] = rho[(1, 1)];
    rho[(1, 2)] = Complex64::new(0.5 * (wt - ws) / z, 0.0);
    rho[(2, 1)] = rho[(1, 2)];
    rho[(3, 3)] = Complex64::new(w11 / z, 0.0);
    rho
}

/// Natural log of `z = tr exp(-H/T)`.
pub fn log_partition_function(params: &ChainParams) -> f64 {
    let f = params.boltzmann();
    // z = e^{-J/2T} (e^{2J/T} + 2cosh(B/T) + 1)
    -0.5 * params.coupling / params.temperature + f.shift + f.norm().ln()
}

/// `z = tr exp(-H/T)`; overflows to infinity for very small `T`.
pub fn partition_function(params: &ChainParams) -> f64 {
    log_partition_function(params).exp()
}

/// Gibbs state computed by spectral exponentiation of [`hamiltonian`].
#[derive(Debug, Clone)]
pub struct GibbsState {
    pub state: CMatrix,
    pub partition_function: f64,
    pub log_partition_function: f64,
}

/// `exp(-H/T)/z` through the eigendecomposition of `H`, shifting by the
/// ground energy before exponentiating.
pub fn thermal_state_oracle(params: &ChainParams) -> GibbsState {
    let decomposition = hermitian_eigen(&hamiltonian(params)).expect("Hamiltonian is Hermitian by construction");
    let ground = decomposition.eigenvalues[0];
    let t = params.temperature;
    let weights_sum: f64 = decomposition.eigenvalues.iter().map(|&e| (-(e - ground) / t).exp()).sum();
    let state = decomposition.map_spectrum(|e| (-(e - ground) / t).exp() / weights_sum);
    let log_z = weights_sum.ln() - ground / t;
    GibbsState { state, partition_function: log_z.exp(), log_partition_function: log_z }
}

/// `max(-2 Σ λ⁻, 0)` over the spectrum of the second-qubit partial transpose.
pub fn negativity(rho: &CMatrix) -> Result<f64> {
    validate_two_qubit_density(rho)?;
    let spectrum = hermitian_eigenvalues(&partial_transpose_second(rho)?)?;
    let negative: f64 = spectrum.iter().filter(|&&l| l < 0.0).sum();
    Ok((-2.0 * negative).clamp(0.0, 1.0))
}

/// Closed-form thermal entanglement of the chain.
pub fn thermal_negativity_closed(params: &ChainParams) -> f64 {
    // Entanglement needs e^{2J/T} > 3, i.e. T < T_c.
    if params.temperature >= 2.0 * params.coupling / 3f64.ln() {
        return 0.0;
    }
    let f = params.boltzmann();
    // 2e^{-J/2T}cosh/z · (sqrt(1 + ((x-1)² - 4)/(4cosh²)) - 1)
    //   = 2 (sqrt(sinh² + (x-1)²/4) - cosh) / (x + 2cosh + 1)
    let root = (f.sinh * f.sinh + 0.25 * (f.x - f.one).powi(2)).sqrt();
    (2.0 * (root - f.cosh) / f.norm()).clamp(0.0, 1.0)
}

/// `T_c = 2J / ln 3`, above which the thermal state is separable.
pub fn critical_temperature(coupling: f64) -> Result<f64> {
    if !(coupling.is_finite() && coupling > 0.0) {
        return Err(Error::domain(format!("coupling must be positive, got {coupling}")));
    }
    Ok(2.0 * coupling / 3f64.ln())
}

/// Bell states in the order paired with the Pauli corrections (I, X, Y, Z):
/// `ψ⁻, φ⁻, φ⁺, ψ⁺`.
pub fn bell_states() -> [StateVector; 4] {
    let s = FRAC_1_SQRT_2;
    [
        StateVector::from_real(&[0.0, s, -s, 0.0]),
        StateVector::from_real(&[s, 0.0, 0.0, -s]),
        StateVector::from_real(&[s, 0.0, 0.0, s]),
        StateVector::from_real(&[0.0, s, s, 0.0]),
    ]
}

/// Weights of the four Pauli corrections for one channel use.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PauliProbabilities {
    pub p0: f64,
    pub px: f64,
    pub py: f64,
    pub pz: f64,
}

impl PauliProbabilities {
    pub fn new(p0: f64, px: f64, py: f64, pz: f64) -> Result<Self> {
        let probs = PauliProbabilities { p0, px, py, pz };
        let arr = probs.as_array();
        if arr.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::invalid_state(format!("negative or non-finite weight in {arr:?}")));
        }
        let total: f64 = arr.iter().sum();
        if (total - 1.0).abs() > PROBABILITY_TOLERANCE {
            return Err(Error::invalid_state(format!("weights sum to {total}, not 1")));
        }
        Ok(probs)
    }

    /// The noiseless channel.
    pub fn identity() -> Self {
        PauliProbabilities { p0: 1.0, px: 0.0, py: 0.0, pz: 0.0 }
    }

    /// The completely depolarizing channel.
    pub fn depolarizing() -> Self {
        PauliProbabilities { p0: 0.25, px: 0.25, py: 0.25, pz: 0.25 }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.p0, self.px, self.py, self.pz]
    }

    /// Bell weights of the chain's Gibbs state without building the matrix.
    pub fn thermal(params: &ChainParams) -> Self {
        let f = params.boltzmann();
        let n = f.norm();
        // Singlet carries e^{3J/2T}, φ± each e^{-J/2T}cosh, ψ⁺ e^{-J/2T}.
        let pxy = f.cosh / n;
        PauliProbabilities { p0: f.x / n, px: pxy, py: pxy, pz: f.one / n }
    }
}

/// `p_k = ⟨b_k|ρ|b_k⟩` for the Bell states of [`bell_states`].
pub fn pauli_probabilities(rho: &CMatrix) -> Result<PauliProbabilities> {
    validate_two_qubit_density(rho)?;
    let bells = bell_states();
    let mut w = [0.0; 4];
    for (slot, bell) in w.iter_mut().zip(&bells) {
        let p = rho.expectation(bell).re;
        // Rounding can push an exactly-zero weight a hair below zero.
        *slot = if p < 0.0 && p > -PROBABILITY_TOLERANCE { 0.0 } else { p };
    }
    PauliProbabilities::new(w[0], w[1], w[2], w[3])
}
