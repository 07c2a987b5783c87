use alloc::vec::Vec;

use nalgebra::DVector;

use super::{CircuitError, Gate};
use crate::hilbert::{apply_local, CMatrix, HybridRegister};

/// Where each logical qubit sits on the physical chain before and after a
/// routed circuit runs. `initial[q]` is the physical wire of logical `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    pub initial: Vec<usize>,
    pub final_: Vec<usize>,
}

impl Placement {
    pub fn fixed(map: Vec<usize>) -> Result<Self, CircuitError> {
        check_permutation(&map)?;
        Ok(Self {
            initial: map.clone(),
            final_: map,
        })
    }
}

pub(crate) fn check_permutation(map: &[usize]) -> Result<(), CircuitError> {
    let n = map.len();
    let mut seen = alloc::vec![false; n];
    for &p in map {
        if p >= n || core::mem::replace(&mut seen[p], true) {
            return Err(CircuitError::BadPlacement(n));
        }
    }
    Ok(())
}

/// Ordered gate list on `n_qubits` wires.
///
/// Without a placement the wires are logical qubits. A routed circuit acts
/// on physical wires and carries the placement needed to read it logically.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<Gate>,
    placement: Option<Placement>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Self {
        Self {
            n_qubits,
            gates: Vec::new(),
            placement: None,
        }
    }

    pub fn from_gates(n_qubits: usize, gates: Vec<Gate>) -> Result<Self, CircuitError> {
        let mut c = Self::new(n_qubits);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn with_placement(mut self, placement: Placement) -> Result<Self, CircuitError> {
        check_permutation(&placement.initial)?;
        check_permutation(&placement.final_)?;
        if placement.initial.len() != self.n_qubits || placement.final_.len() != self.n_qubits {
            return Err(CircuitError::BadPlacement(self.n_qubits));
        }
        self.placement = Some(placement);
        Ok(self)
    }

    pub fn push(&mut self, gate: Gate) -> Result<(), CircuitError> {
        let g = Gate::new(gate.kind, gate.targets, gate.angle)?;
        if let Some(&q) = g.targets.iter().find(|&&q| q >= self.n_qubits) {
            return Err(CircuitError::QubitOutOfRange {
                qubit: q,
                n_qubits: self.n_qubits,
            });
        }
        self.gates.push(g);
        Ok(())
    }

    pub(crate) fn push_unchecked(&mut self, gate: Gate) {
        self.gates.push(gate);
    }

    pub(crate) fn with_gates(&self, gates: Vec<Gate>) -> Self {
        Self {
            n_qubits: self.n_qubits,
            gates,
            placement: self.placement.clone(),
        }
    }

    pub fn extend(&mut self, other: &Circuit) -> Result<(), CircuitError> {
        for g in &other.gates {
            self.push(g.clone())?;
        }
        Ok(())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn placement(&self) -> Option<&Placement> {
        self.placement.as_ref()
    }

    pub fn is_routed(&self) -> bool {
        self.placement.is_some()
    }

    /// Dense unitary on the wires the gates act on.
    pub fn unitary(&self) -> CMatrix {
        let reg = HybridRegister::qubits(self.n_qubits);
        let dim = reg.dim();
        let mut u = CMatrix::identity(dim, dim);
        let mats: Vec<CMatrix> = self.gates.iter().map(|g| g.matrix()).collect();
        let mut col = alloc::vec![Default::default(); dim];
        for c in 0..dim {
            col.copy_from_slice(u.column(c).as_slice());
            for (g, m) in self.gates.iter().zip(&mats) {
                apply_local(&reg, &mut col, &g.targets, m);
            }
            u.set_column(c, &DVector::from_column_slice(&col));
        }
        u
    }

    /// Unitary in the logical basis: `Π_final† U Π_initial` for routed circuits.
    pub fn logical_unitary(&self) -> CMatrix {
        let u = self.unitary();
        let Some(p) = &self.placement else {
            return u;
        };
        let dim = u.nrows();
        let to_physical = |map: &[usize], x: usize| {
            let n = self.n_qubits;
            (0..n).fold(0, |y, q| {
                if (x >> (n - 1 - q)) & 1 == 1 {
                    y | 1 << (n - 1 - map[q])
                } else {
                    y
                }
            })
        };
        let mut l = CMatrix::zeros(dim, dim);
        for x in 0..dim {
            let px = to_physical(&p.initial, x);
            for xp in 0..dim {
                l[(xp, x)] = u[(to_physical(&p.final_, xp), px)];
            }
        }
        l
    }
}
