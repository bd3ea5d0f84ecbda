//! Holevo mutual information of the four-signal ensemble sent through two
//! thermal chains.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::{hermitian_eigenvalues, shannon_bits, von_neumann_entropy, CMatrix, StateVector};
use crate::teleport::apply_channel;
use crate::thermal::{pauli_probabilities, thermal_state, ChainParams};

/// Each signal is sent with probability 1/4.
pub const PRIOR: f64 = 0.25;

/// Eigenvalues of an output state in `[-EIGEN_CLAMP, 0]` count as zero.
const EIGEN_CLAMP: f64 = 1e-12;

/// Two orthonormal pairs: `{|00⟩, |11⟩}` rotated by `γ`, `{|01⟩, |10⟩}` by `β`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignalEnsemble {
    pub gamma: f64,
    pub beta: f64,
}

impl SignalEnsemble {
    pub fn new(gamma: f64, beta: f64) -> Self {
        SignalEnsemble { gamma, beta }
    }

    pub fn priors(&self) -> [f64; 4] {
        [PRIOR; 4]
    }

    pub fn states(&self) -> [StateVector; 4] {
        signal_states(self.gamma, self.beta)
    }
}

/// The four signals, in the computational basis:
///
/// ```text
/// π₁ = cos γ |00⟩ + sin γ |11⟩     π₂ = sin γ |00⟩ - cos γ |11⟩
/// π₃ = cos β |01⟩ + sin β |10⟩     π₄ = sin β |01⟩ - cos β |10⟩
/// ```
pub fn signal_states(gamma: f64, beta: f64) -> [StateVector; 4] {
    let (sg, cg) = gamma.sin_cos();
    let (sb, cb) = beta.sin_cos();
    [
        StateVector::from_real(&[cg, 0.0, 0.0, sg]),
        StateVector::from_real(&[sg, 0.0, 0.0, -cg]),
        StateVector::from_real(&[0.0, cb, sb, 0.0]),
        StateVector::from_real(&[0.0, sb, -cb, 0.0]),
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct MutualInfoResult {
    /// `S(χ) - Σ q_i S(χ_i)` in bits.
    pub value: f64,
    /// `2 - ¼ Σ_ij ξ_ij log₂ ξ_ij`, using that the average output is maximally mixed.
    pub reduced_value: f64,
    pub per_signal_entropies: [f64; 4],
    pub average_state_entropy: f64,
    /// Spectra `ξ_ij` of the four channel outputs, ascending.
    pub output_spectra: [[f64; 4]; 4],
}

/// Mutual information of the ensemble at `(gamma, beta)` through two chains
/// with identical parameters.
pub fn mutual_information(params: &ChainParams, gamma: f64, beta: f64) -> Result<MutualInfoResult> {
    let probs = pauli_probabilities(&thermal_state(params))?;
    let mut average = CMatrix::zeros(4);
    let mut per_signal_entropies = [0.0; 4];
    let mut output_spectra = [[0.0; 4]; 4];

    for (i, signal) in signal_states(gamma, beta).iter().enumerate() {
        let output = apply_channel(&signal.projector(), &probs, &probs)?;
        let mut spectrum = hermitian_eigenvalues(&output)?;
        for xi in spectrum.iter_mut() {
            if *xi < 0.0 && *xi >= -EIGEN_CLAMP {
                *xi = 0.0;
            }
        }
        per_signal_entropies[i] = shannon_bits(&spectrum);
        output_spectra[i].copy_from_slice(&spectrum);
        average = &average + &output.scale_real(PRIOR);
    }

    let average_state_entropy = von_neumann_entropy(&average)?;
    let mean_entropy = PRIOR * per_signal_entropies.iter().sum::<f64>();
    Ok(MutualInfoResult {
        value: average_state_entropy - mean_entropy,
        reduced_value: 2.0 - mean_entropy,
        per_signal_entropies,
        average_state_entropy,
        output_spectra,
    })
}
