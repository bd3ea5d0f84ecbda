//! Dense complex linear algebra for one- and two-qubit operators.

mod eigen;
mod entropy;
mod matrix;

pub use eigen::{hermitian_eigen, hermitian_eigenvalues, EigenDecomposition, OFF_DIAGONAL_TOLERANCE};
pub use entropy::{shannon_bits, von_neumann_entropy};
pub use matrix::{
    partial_transpose_second, pauli, tensor_product, CMatrix, MatrixParts, StateVector, HERMITIAN_TOLERANCE,
};

use crate::error::{Error, Result};

/// Density-matrix validation tolerance on trace and spectrum.
pub const DENSITY_TOLERANCE: f64 = 1e-10;

/// Checks that `rho` is a Hermitian, unit-trace, positive semidefinite 4x4 matrix.
pub fn validate_two_qubit_density(rho: &CMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::InvalidDimension { expected: 4, actual: rho.dim() });
    }
    validate_density(rho)
}

/// Checks Hermiticity, unit trace and positivity (eigenvalues ≥ -1e-10).
pub fn validate_density(rho: &CMatrix) -> Result<()> {
    let asym = rho.max_asymmetry();
    if asym > HERMITIAN_TOLERANCE {
        return Err(Error::invalid_state(format!("density matrix not Hermitian ({asym:e})")));
    }
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > DENSITY_TOLERANCE || tr.im.abs() > DENSITY_TOLERANCE {
        return Err(Error::invalid_state(format!("trace {tr} deviates from 1")));
    }
    let smallest = hermitian_eigenvalues(rho)?[0];
    if smallest < -DENSITY_TOLERANCE {
        return Err(Error::invalid_state(format!("negative eigenvalue {smallest:e}")));
    }
    Ok(())
}
