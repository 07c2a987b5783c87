use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_4;

use super::{Circuit, Gate};
use crate::fermion_map::{build_h2_spin_hamiltonian, ReducedCoefficients, SpinHamiltonian};
use crate::hilbert::{Pauli, PauliString, Phase};
use crate::trotter::Scheme;

const N_QUBITS: usize = 4;

/// One four-body exponential realized as `Z_a · MS · U_j · MS̃ · Z̃_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourBodyBlock {
    pub string: &'static str,
    /// Qubit carrying the rotation between the two MS gates.
    pub pivot: usize,
    /// Qubit whose X is turned into Y by the outer quarter turns.
    pub basis: usize,
}

/// Block order and qubit roles. Consecutive blocks share either their basis
/// qubit or their pivot, which is what lets the optimizer cancel gates
/// across block boundaries.
pub fn four_body_schedule() -> [FourBodyBlock; 4] {
    [
        FourBodyBlock {
            string: "XYYX",
            pivot: 1,
            basis: 2,
        },
        FourBodyBlock {
            string: "XXYY",
            pivot: 3,
            basis: 2,
        },
        FourBodyBlock {
            string: "YXXY",
            pivot: 3,
            basis: 0,
        },
        FourBodyBlock {
            string: "YYXX",
            pivot: 1,
            basis: 0,
        },
    ]
}

impl FourBodyBlock {
    /// Sign `s` with `C† Z_pivot C = s · string`, where `C` is the operator
    /// of the gates preceding the pivot rotation.
    pub fn sign(&self) -> f64 {
        let mut phase = Phase::ONE;
        let mut q = PauliString::with(N_QUBITS, Pauli::Z, &[self.pivot]);
        // MS = Π exp(+iπ/4 X_iX_k) up to a global phase.
        for i in 0..N_QUBITS {
            for k in i + 1..N_QUBITS {
                conjugate(
                    &mut phase,
                    &mut q,
                    &PauliString::with(N_QUBITS, Pauli::X, &[i, k]),
                    -FRAC_PI_4,
                );
            }
        }
        conjugate(
            &mut phase,
            &mut q,
            &PauliString::with(N_QUBITS, Pauli::Z, &[self.basis]),
            FRAC_PI_4,
        );
        let target = PauliString::parse(self.string).expect("valid literal");
        assert_eq!(q, target, "block roles do not produce {}", self.string);
        match phase {
            Phase::ONE => 1.0,
            Phase::MINUS_ONE => -1.0,
            _ => unreachable!("conjugated Pauli string has imaginary phase"),
        }
    }

    fn gates(&self, angle: f64) -> [Gate; 5] {
        let all: Vec<usize> = (0..N_QUBITS).collect();
        [
            Gate::rz(self.basis, FRAC_PI_4),
            Gate::ms(&all, false),
            Gate::ud(self.pivot, self.sign() * angle),
            Gate::ms(&all, true),
            Gate::rz(self.basis, -FRAC_PI_4),
        ]
    }
}

/// `Q ← U† Q U` for `U = exp(-iθP)` with `θ = ±π/4`.
fn conjugate(phase: &mut Phase, q: &mut PauliString, p: &PauliString, theta: f64) {
    if q.commutes_with(p) {
        return;
    }
    // U†QU = Q(cos 2θ − i sin 2θ P) = −i·sgn(θ)·QP.
    let (ph, prod) = q.mul(p);
    let factor = if theta > 0.0 {
        Phase::MINUS_I
    } else {
        Phase::I
    };
    *phase = *phase * ph * factor;
    *q = prod;
}

fn coefficient(h: &SpinHamiltonian, s: &str) -> f64 {
    let target = PauliString::parse(s).expect("valid literal");
    h.terms()
        .iter()
        .find(|t| t.string == target)
        .map_or(0.0, |t| t.coefficient)
}

fn push_diagonal(circ: &mut Circuit, h: &SpinHamiltonian, tau: f64) {
    for t in h
        .terms()
        .iter()
        .filter(|t| t.string.weight() == 1 && t.string.is_diagonal())
    {
        circ.push_unchecked(Gate::r(t.string.support()[0], t.coefficient * tau));
    }
    for t in h
        .terms()
        .iter()
        .filter(|t| t.string.weight() == 2 && t.string.is_diagonal())
    {
        let s = t.string.support();
        circ.push_unchecked(Gate::zz(s[0], s[1], t.coefficient * tau));
    }
}

fn push_four_body(circ: &mut Circuit, h: &SpinHamiltonian, tau: f64) {
    for block in four_body_schedule() {
        for g in block.gates(coefficient(h, block.string) * tau) {
            circ.push_unchecked(g);
        }
    }
}

/// Reference gate sequence for `exp(-iH₂τ) exp(-iH₁τ)`: single-qubit R
/// rotations and ZZ gates for the diagonal group, then one MS-conjugated
/// block per four-body term.
pub fn compile_trotter_step(c: &ReducedCoefficients, tau: f64) -> Circuit {
    let h = build_h2_spin_hamiltonian(c);
    let mut circ = Circuit::new(N_QUBITS);
    push_diagonal(&mut circ, &h, tau);
    push_four_body(&mut circ, &h, tau);
    circ
}

/// Gate sequence for `exp(-iH₁τ/2) exp(-iH₂τ) exp(-iH₁τ/2)`.
pub fn compile_symmetric_step(c: &ReducedCoefficients, tau: f64) -> Circuit {
    let h = build_h2_spin_hamiltonian(c);
    let mut circ = Circuit::new(N_QUBITS);
    push_diagonal(&mut circ, &h, tau / 2.0);
    push_four_body(&mut circ, &h, tau);
    push_diagonal(&mut circ, &h, tau / 2.0);
    circ
}

pub fn compile_step(c: &ReducedCoefficients, tau: f64, scheme: Scheme) -> Circuit {
    match scheme {
        Scheme::Regular => compile_trotter_step(c, tau),
        Scheme::Symmetric => compile_symmetric_step(c, tau),
    }
}
