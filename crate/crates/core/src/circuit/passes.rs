use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_4;

use super::{route_linear, Circuit, CircuitError, Gate, GateKind};

/// Expands every MS gate into XX(∓π/4) rotations on all target pairs.
///
/// `exp(iπ/8 S_x²)` equals `Π_{i<j} exp(iπ/4 σ^x_iσ^x_j)` up to a global phase.
pub fn decompose_ms(circ: &Circuit) -> Circuit {
    let mut out = Vec::with_capacity(circ.len());
    for g in circ.gates() {
        if g.kind != GateKind::Ms {
            out.push(g.clone());
            continue;
        }
        let inverse = g.angle < 0.0;
        let t = &g.targets;
        let mut pairs = Vec::new();
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                pairs.push(Gate::xx_fixed(t[i], t[j], inverse));
            }
        }
        if inverse {
            pairs.reverse();
        }
        out.extend(pairs);
    }
    circ.with_gates(out)
}

/// Replaces each `exp(-iθσ^zσ^z)` by `Y Y · exp(-iθσ^xσ^x) · Ỹ Ỹ` (in time
/// order) with `Y = exp(-iπ/4 σ^y)`.
pub fn rebase_zz_to_xx(circ: &Circuit) -> Circuit {
    let mut out = Vec::with_capacity(circ.len());
    for g in circ.gates() {
        if g.kind != GateKind::Zz {
            out.push(g.clone());
            continue;
        }
        let (a, b) = (g.targets[0], g.targets[1]);
        out.extend([
            Gate::ry(a, FRAC_PI_4),
            Gate::ry(b, FRAC_PI_4),
            Gate::xx(a, b, g.angle),
            Gate::ry(a, -FRAC_PI_4),
            Gate::ry(b, -FRAC_PI_4),
        ]);
    }
    circ.with_gates(out)
}

/// Removes gate/inverse pairs that can be brought next to each other by
/// commuting through the gates in between, repeating until nothing changes.
pub fn cancel_inverse_pairs(circ: &Circuit) -> Circuit {
    let mut gates: Vec<Gate> = circ.gates().to_vec();
    loop {
        let (next, changed) = cancel_once(&gates);
        gates = next;
        if !changed {
            return circ.with_gates(gates);
        }
    }
}

fn cancel_once(gates: &[Gate]) -> (Vec<Gate>, bool) {
    let mut out: Vec<Gate> = Vec::with_capacity(gates.len());
    let mut changed = false;
    'next: for g in gates {
        for k in (0..out.len()).rev() {
            if out[k].is_inverse_of(g) {
                out.remove(k);
                changed = true;
                continue 'next;
            }
            if !out[k].commutes_with(g) {
                break;
            }
        }
        out.push(g.clone());
    }
    (out, changed)
}

pub fn rebase_and_cancel(circ: &Circuit) -> Circuit {
    cancel_inverse_pairs(&rebase_zz_to_xx(circ))
}

/// Full pipeline: MS expansion, rebasing, cancellation and routing on the
/// default line placement.
pub fn optimize(circ: &Circuit) -> Result<Circuit, CircuitError> {
    route_linear(&rebase_and_cancel(&decompose_ms(circ)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::phase_aligned_distance;
    use alloc::vec;

    #[test]
    fn ms_free_circuit_is_untouched() {
        let c = Circuit::from_gates(2, vec![Gate::xx(0, 1, 0.2), Gate::rz(0, 0.1)]).unwrap();
        assert_eq!(decompose_ms(&c), c);
    }

    #[test]
    fn ms_expands_into_six_pairs() {
        let c = Circuit::from_gates(4, vec![Gate::ms(&[0, 1, 2, 3], false)]).unwrap();
        let d = decompose_ms(&c);
        assert_eq!(d.len(), 6);
        assert!(d.gates().iter().all(|g| g.kind == GateKind::XxFixed));
        assert!(phase_aligned_distance(&c.unitary(), &d.unitary()) < 1e-10);
    }

    #[test]
    fn ms_pair_cancels_completely() {
        let all = [0, 1, 2, 3];
        let c = Circuit::from_gates(4, vec![Gate::ms(&all, false), Gate::ms(&all, true)]).unwrap();
        assert!(cancel_inverse_pairs(&decompose_ms(&c)).is_empty());
    }

    #[test]
    fn gate_then_inverse_is_empty() {
        let g = Gate::xx(1, 2, 0.37);
        let c = Circuit::from_gates(3, vec![g.clone(), g.inverse()]).unwrap();
        assert!(cancel_inverse_pairs(&c).is_empty());
    }

    #[test]
    fn cancellation_respects_non_commuting_neighbours() {
        let c = Circuit::from_gates(
            2,
            vec![Gate::rz(0, 0.3), Gate::ry(0, 0.2), Gate::rz(0, -0.3)],
        )
        .unwrap();
        assert_eq!(cancel_inverse_pairs(&c).len(), 3);
        let c = Circuit::from_gates(
            2,
            vec![Gate::rz(0, 0.3), Gate::ry(1, 0.2), Gate::rz(0, -0.3)],
        )
        .unwrap();
        assert_eq!(cancel_inverse_pairs(&c).len(), 1);
    }

    #[test]
    fn rebased_zz_matches_original() {
        let c = Circuit::from_gates(3, vec![Gate::zz(0, 2, 0.41)]).unwrap();
        let r = rebase_zz_to_xx(&c);
        assert_eq!(r.len(), 5);
        assert!(phase_aligned_distance(&c.unitary(), &r.unitary()) < 1e-12);
    }

    #[test]
    fn nested_pairs_cancel_to_fixed_point() {
        let a = Gate::xx(0, 1, 0.2);
        let b = Gate::ry(0, 0.5);
        let c =
            Circuit::from_gates(2, vec![b.clone(), a.clone(), a.inverse(), b.inverse()]).unwrap();
        assert!(cancel_inverse_pairs(&c).is_empty());
    }
}
