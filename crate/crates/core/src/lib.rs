//! Numerical core for Trotterized simulation of the H₂ molecule and of
//! charge transfer through a bosonic bath.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function over immutable values; file formats, sweeps and the command line
//! live in the `trotterchem-lab` crate.
//!
//! Modules:
//! - [`hilbert`]: dense state vectors over qubits plus truncated bosonic modes.
//! - [`fermion_map`]: Jordan-Wigner encoding and the H₂ spin Hamiltonian.
//! - [`trotter`]: regular and symmetric product formulas and their error bounds.
//! - [`circuit`]: gate-level compilation of one Trotter step and error budgets.
//! - [`charge_bath`]: three-site charge-bath model and its digital-analog schedule.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod charge_bath;
pub mod circuit;
pub mod fermion_map;
pub mod hilbert;
pub mod trotter;

pub use hilbert::{CMatrix, CVector, C64};
