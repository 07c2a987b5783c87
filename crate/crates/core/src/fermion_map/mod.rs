//! Fermion-to-qubit encoding.
//!
//! Orbital indices are 1-based throughout this module, matching the way
//! integral tables are written; orbital `i` lives on qubit `i - 1`.

mod fixture;
mod h2;
mod integrals;
mod jw;
mod spin;

pub use fixture::{h2_sto3g_integrals, h2_sto3g_reduced, H2_STO3G};
pub use h2::{build_h2_spin_hamiltonian, partition_h2_terms};
pub use integrals::{
    derive_reduced_coeffs, ElectronicIntegrals, ReducedCoefficients, SymmetryClass,
};
pub use jw::{jw_ladder, map_electronic_to_spin, LadderKind};
pub use spin::SpinHamiltonian;

pub use crate::hilbert::pauli_multiply;

use alloc::string::String;
use thiserror::Error;

/// Strings whose collected weight falls below this are dropped.
pub const DROP_TOL: f64 = 1e-12;
/// Largest imaginary part tolerated on a collected Pauli coefficient.
pub const COMPLEX_RESIDUE_TOL: f64 = 1e-10;
/// Relative agreement required between members of a coefficient class.
pub const CLASS_AGREEMENT_TOL: f64 = 1e-10;
/// Tolerance of the integral hermiticity check.
pub const INTEGRAL_HERMITICITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FermionError {
    #[error("orbital index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("non-finite integral value at {0}")]
    NonFinite(String),
    #[error("integrals are not Hermitian: {0}")]
    NotHermitian(String),
    #[error("collected coefficient of {string} has imaginary residue {residue:e}")]
    ComplexResidue { string: String, residue: f64 },
    #[error("class h{class} members disagree (spread {spread:e})")]
    ClassDisagreement { class: SymmetryClass, spread: f64 },
    #[error("missing integral {0}")]
    MissingEntry(String),
    #[error("expected 4 orbitals, found {0}")]
    WrongOrbitalCount(usize),
    #[error("term {0} has the wrong number of qubits")]
    TermLength(usize),
    #[error("term {0} is the identity; identity parts belong in the scalar offset")]
    IdentityTerm(usize),
    #[error("terms {0} and {1} of one group do not commute")]
    NonCommutingGroup(usize, usize),
}
