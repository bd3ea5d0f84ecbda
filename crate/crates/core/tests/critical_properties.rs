mod common;

use common::{linspace, params, t_star};
use spinteleport_core::critical::{critical_point, BoundaryKind};
use spinteleport_core::{
    average_fidelity_closed, critical_field_entanglement, critical_field_fidelity, output_negativity_closed,
};

const KINDS: [BoundaryKind; 2] = [BoundaryKind::EntanglementZero, BoundaryKind::ClassicalFidelity];

fn grid() -> impl Iterator<Item = (f64, f64)> {
    linspace(0.1, 2.0, 12).into_iter().flat_map(|j| linspace(0.05, 2.0, 12).into_iter().map(move |t| (j, t)))
}

#[test]
fn boundary_residuals_vanish() {
    for kind in KINDS {
        let mut found = 0;
        for (j, t) in grid() {
            if let Some(p) = critical_point(kind, j, t).unwrap() {
                found += 1;
                let r = p.residual().unwrap();
                assert!(r.abs() <= 1e-9, "{kind:?} J={j} T={t}: residual {r:e}");
            }
        }
        assert!(found > 20, "{kind:?}: only {found} boundary points");
    }
}

#[test]
fn bell_input_entanglement_changes_sign_across_boundary() {
    for (j, t) in grid() {
        if let Some(bc) = critical_field_entanglement(j, t).unwrap() {
            if bc < 2e-3 {
                continue;
            }
            assert!(output_negativity_closed(1.0, &params(j, bc - 1e-3, t)) > 0.0, "J={j} T={t} B_c={bc}");
            assert_eq!(output_negativity_closed(1.0, &params(j, bc + 1e-3, t)), 0.0, "J={j} T={t}");
        }
    }
}

#[test]
fn fidelity_is_quantum_below_boundary() {
    for (j, t) in grid() {
        if let Some(bcf) = critical_field_fidelity(j, t).unwrap() {
            for b in linspace(0.0, bcf, 10) {
                let f = average_fidelity_closed(&params(j, b, t));
                assert!(f >= 2.0 / 3.0 - 1e-12, "J={j} T={t} B={b}: {f}");
            }
            if bcf > 0.0 {
                assert!(average_fidelity_closed(&params(j, bcf + 1e-3, t)) < 2.0 / 3.0);
            }
        }
    }
}

#[test]
fn boundaries_scale_with_energy_units() {
    for kind in KINDS {
        for (j, t) in grid().step_by(5) {
            let base = critical_point(kind, j, t).unwrap().map(|p| p.field);
            for &lambda in &[0.5, 2.0] {
                let scaled = critical_point(kind, lambda * j, lambda * t).unwrap().map(|p| p.field);
                match (base, scaled) {
                    (Some(a), Some(b)) => assert!((b - lambda * a).abs() <= 1e-9 * (1.0 + a), "{kind:?} J={j} T={t}"),
                    (None, None) => {}
                    other => panic!("{kind:?} J={j} T={t} λ={lambda}: {other:?}"),
                }
            }
        }
    }
}

#[test]
fn reference_boundary_points() {
    let bc = critical_field_entanglement(1.0, 0.8).unwrap().unwrap();
    assert!((bc - 1.207).abs() < 1e-3);
    let bcf = critical_field_fidelity(1.0, t_star()).unwrap().unwrap();
    assert!((bcf - 1.326).abs() < 1e-3);
}
