//! Teleporting two-qubit states through a pair of thermal two-spin
//! Heisenberg XXX chains.
//!
//! The crate computes, for chain parameters `(J, B, T)`:
//!
//! * the Gibbs state of the chain and its negativity ([`thermal`]),
//! * the Pauli channel it induces, the entanglement and fidelity of
//!   teleported states ([`teleport`]),
//! * the Holevo mutual information of a four-signal ensemble ([`holevo`]),
//! * the field at which teleported entanglement vanishes or the average
//!   fidelity reaches 2/3 ([`critical`]),
//! * plot-ready figure datasets ([`sweep`]).
//!
//! Closed-form results are paired with matrix-level computations built on
//! the small dense linear algebra in [`linalg`].

pub mod critical;
pub mod error;
pub mod holevo;
pub mod linalg;
mod quadrature;
pub mod sweep;
pub mod teleport;
pub mod thermal;

pub use critical::{
    bisect, critical_field_entanglement, critical_field_fidelity, critical_point, fidelity_minimum_field, BoundaryKind,
    BoundaryPoint,
};
pub use error::{Error, Result};
pub use holevo::{mutual_information, signal_states, MutualInfoResult, SignalEnsemble};
pub use linalg::{CMatrix, EigenDecomposition, StateVector};
pub use quadrature::gauss_legendre;
pub use sweep::{run_sweep, write_dataset, DatasetFormat, FigureId, SweepDataset, SweepSpec};
pub use teleport::{
    apply_channel, average_fidelity_closed, average_fidelity_quadrature, fidelity, input_state,
    output_negativity_closed, teleport, weak_coupling_fidelity, InputState, TeleportOutcome,
};
pub use thermal::{
    critical_temperature, hamiltonian, negativity, pauli_probabilities, thermal_negativity_closed, thermal_state,
    thermal_state_oracle, ChainParams, PauliProbabilities, T_FLOOR,
};
