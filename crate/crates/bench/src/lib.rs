//! Shared inputs for the criterion benchmarks.

use spinteleport_core::ChainParams;

/// A spread of chain parameters from the near-ground-state to the separable regime.
pub fn sample_params() -> Vec<ChainParams> {
    [(1.0, 0.0, 0.455), (1.0, 0.8, 0.2), (0.5, 1.5, 1.2), (2.0, 0.3, 0.01)]
        .iter()
        .map(|&(j, b, t)| ChainParams::new(j, b, t).expect("valid benchmark parameters"))
        .collect()
}
