#![allow(dead_code)]

use num_complex::Complex64;
use proptest::prelude::*;
use spinteleport_core::{CMatrix, ChainParams};

pub fn t_star() -> f64 {
    1.0 / (2.0 * 3f64.ln())
}

pub fn params(j: f64, b: f64, t: f64) -> ChainParams {
    ChainParams::new(j, b, t).unwrap()
}

/// `n` evenly spaced points on `[lo, hi]`, both ends included.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| if k == n - 1 { hi } else { lo + (hi - lo) * k as f64 / (n - 1) as f64 }).collect()
}

/// The 10×10×10 grid J ∈ [0.1, 2], B ∈ [0, 2], T ∈ [0.1, 2].
pub fn standard_grid() -> Vec<ChainParams> {
    let mut out = Vec::with_capacity(1000);
    for j in linspace(0.1, 2.0, 10) {
        for b in linspace(0.0, 2.0, 10) {
            for t in linspace(0.1, 2.0, 10) {
                out.push(params(j, b, t));
            }
        }
    }
    out
}

/// Arbitrary complex square matrix with entries in the unit box.
pub fn arb_matrix(dim: usize) -> impl Strategy<Value = CMatrix> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim * dim).prop_map(move |entries| {
        let data = entries.into_iter().map(|(re, im)| Complex64::new(re, im)).collect();
        CMatrix::from_row_major(dim, data).unwrap()
    })
}

pub fn arb_hermitian(dim: usize) -> impl Strategy<Value = CMatrix> {
    arb_matrix(dim).prop_map(|a| (&a + &a.adjoint()).scale_real(0.5))
}

/// `A A† / tr(A A†)`: full-rank almost surely.
pub fn arb_density(dim: usize) -> impl Strategy<Value = CMatrix> {
    arb_matrix(dim).prop_filter_map("degenerate", |a| {
        let m = &a * &a.adjoint();
        let tr = m.trace().re;
        (tr > 1e-6).then(|| m.scale_real(1.0 / tr))
    })
}
