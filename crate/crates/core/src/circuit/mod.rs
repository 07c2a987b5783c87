//! Gate-level compilation of one H₂ Trotter step for a linear chain of
//! four qubits, plus the additive error budget built on top of it.
//!
//! Pipeline: [`compile_trotter_step`] emits the reference sequence with
//! Mølmer-Sørensen gates, [`decompose_ms`] expands those into two-qubit XX
//! rotations, [`rebase_and_cancel`] moves ZZ interactions into the XX basis
//! and removes gate/inverse pairs, and [`route_linear`] inserts SWAPs.
//! Qubit indices are 0-based in this module.

mod budget;
mod circ;
mod compile;
mod gate;
mod passes;
mod routing;

pub use budget::{
    count_gates, find_crossing, h2_crossing, h2_error_budget, h2_step_counts, total_upper_bound,
    DigitalModel, ErrorBudget, GateCounts, SingleQubitBreakdown,
};
pub use circ::{Circuit, Placement};
pub use compile::{
    compile_step, compile_symmetric_step, compile_trotter_step, four_body_schedule, FourBodyBlock,
};
pub use gate::{Gate, GateKind};
pub use passes::{
    cancel_inverse_pairs, decompose_ms, optimize, rebase_and_cancel, rebase_zz_to_xx,
};
pub use routing::{
    adjacency_violations, route_greedy, route_linear, route_linear_with, DEFAULT_PLACEMENT,
};

use crate::hilbert::HilbertError;
use crate::trotter::TrotterError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CircuitError {
    #[error("gate {kind} expects {expected} targets, got {found}")]
    TargetCount {
        kind: GateKind,
        expected: usize,
        found: usize,
    },
    #[error("qubit {qubit} out of range for {n_qubits} qubits")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },
    #[error("gate repeats target {0}")]
    DuplicateTarget(usize),
    #[error("non-finite gate angle")]
    NonFiniteAngle,
    #[error("placement is not a permutation of 0..{0}")]
    BadPlacement(usize),
    #[error("circuit is already routed")]
    AlreadyRouted,
    #[error("two-qubit error rate {0} outside [0, 1]")]
    EpsOutOfRange(f64),
    #[error("unknown gate kind {0:?}")]
    UnknownKind(alloc::string::String),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Trotter(#[from] TrotterError),
}
