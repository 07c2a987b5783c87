use alloc::vec::Vec;

use super::{circ::check_permutation, Circuit, CircuitError, Gate, Placement};

/// Logical-to-physical map with the last two qubits exchanged, which keeps
/// the most frequent pairs of the H₂ step adjacent on the chain.
pub const DEFAULT_PLACEMENT: [usize; 4] = [0, 1, 3, 2];

/// Routes on the line with [`DEFAULT_PLACEMENT`] (identity for other sizes).
pub fn route_linear(circ: &Circuit) -> Result<Circuit, CircuitError> {
    let map: Vec<usize> = if circ.n_qubits() == DEFAULT_PLACEMENT.len() {
        DEFAULT_PLACEMENT.to_vec()
    } else {
        (0..circ.n_qubits()).collect()
    };
    route_linear_with(circ, &map)
}

/// Routes each two-qubit gate separately: the farther qubit is swapped down
/// next to the nearer one, the gate runs, and the SWAPs are undone. The
/// placement is therefore the same before and after every gate.
///
/// Gates on more than two qubits (MS) are native to the whole chain and are
/// only relabeled.
pub fn route_linear_with(circ: &Circuit, map: &[usize]) -> Result<Circuit, CircuitError> {
    let placement = checked_placement(circ, map)?;
    let mut out = Circuit::new(circ.n_qubits()).with_placement(placement)?;
    for g in circ.gates() {
        let phys: Vec<usize> = g.targets.iter().map(|&q| map[q]).collect();
        if phys.len() != 2 || phys[0].abs_diff(phys[1]) == 1 {
            out.push_unchecked(Gate {
                kind: g.kind,
                targets: phys,
                angle: g.angle,
            });
            continue;
        }
        let (lo, hi) = (phys[0].min(phys[1]), phys[0].max(phys[1]));
        for w in (lo + 1..hi).rev() {
            out.push_unchecked(Gate::swap(w, w + 1));
        }
        let moved: Vec<usize> = phys
            .iter()
            .map(|&p| if p == hi { lo + 1 } else { p })
            .collect();
        out.push_unchecked(Gate {
            kind: g.kind,
            targets: moved,
            angle: g.angle,
        });
        for w in lo + 1..hi {
            out.push_unchecked(Gate::swap(w, w + 1));
        }
    }
    Ok(out)
}

/// Routes by moving qubits toward each other and leaving them there.
///
/// Not tied to any particular schedule; the final placement generally
/// differs from the initial one and is recorded on the circuit.
pub fn route_greedy(circ: &Circuit, initial: &[usize]) -> Result<Circuit, CircuitError> {
    checked_placement(circ, initial)?;
    let mut map = initial.to_vec();
    let mut gates = Vec::new();
    for g in circ.gates() {
        if g.targets.len() == 2 {
            let (a, b) = (g.targets[0], g.targets[1]);
            while map[a].abs_diff(map[b]) > 1 {
                let step_toward = if map[b] > map[a] {
                    map[b] - 1
                } else {
                    map[b] + 1
                };
                let other = map
                    .iter()
                    .position(|&p| p == step_toward)
                    .expect("placement is a permutation");
                gates.push(Gate::swap(map[b].min(step_toward), map[b].max(step_toward)));
                map.swap(b, other);
            }
        }
        let phys = g.targets.iter().map(|&q| map[q]).collect();
        gates.push(Gate {
            kind: g.kind,
            targets: phys,
            angle: g.angle,
        });
    }
    let placement = Placement {
        initial: initial.to_vec(),
        final_: map,
    };
    let mut out = Circuit::new(circ.n_qubits()).with_placement(placement)?;
    for g in gates {
        out.push_unchecked(g);
    }
    Ok(out)
}

fn checked_placement(circ: &Circuit, map: &[usize]) -> Result<Placement, CircuitError> {
    if circ.is_routed() {
        return Err(CircuitError::AlreadyRouted);
    }
    if map.len() != circ.n_qubits() {
        return Err(CircuitError::BadPlacement(circ.n_qubits()));
    }
    check_permutation(map)?;
    Placement::fixed(map.to_vec())
}

/// Number of two-qubit gates acting on non-neighbouring wires.
pub fn adjacency_violations(circ: &Circuit) -> usize {
    circ.gates()
        .iter()
        .filter(|g| g.targets.len() == 2 && g.targets[0].abs_diff(g.targets[1]) != 1)
        .count()
}
