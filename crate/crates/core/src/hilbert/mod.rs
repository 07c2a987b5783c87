//! Exact dense state-vector engine over hybrid registers.
//!
//! Basis ordering is big-endian mixed radix: qubit 0 is the most significant
//! factor, bosonic modes follow the qubits in declared order. A qubit in state
//! `|1⟩` (an occupied orbital) is the +1 eigenstate of σ^z, and σ⁺ maps
//! `|0⟩ → |1⟩`.

mod linalg;
mod operator;
mod pauli;
mod register;
mod state;

pub use linalg::{
    commutator, hermiticity_deviation, max_abs_diff, phase_aligned_distance, spectral_norm,
    unitarity_deviation, HermitianEigen,
};
pub use operator::{build_dense, BosonOp, DenseOperator, Factor, OpTerm};
pub use pauli::{pauli_multiply, Pauli, PauliString, PauliTerm, Phase, WeightedPauli};
pub use register::HybridRegister;
pub(crate) use state::apply_local;
pub use state::{exact_evolve, expectation, fidelity, StateVector};

use nalgebra::{Complex, DMatrix, DVector};
use thiserror::Error;

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

/// Maximum deviation of `U†U` from identity accepted as unitary.
pub const UNITARITY_TOL: f64 = 1e-10;
/// Maximum elementwise deviation of `H` from `H†` accepted as Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Maximum deviation of a state norm from 1.
pub const NORM_TOL: f64 = 1e-12;
/// Largest imaginary part tolerated in an expectation value.
pub const EXPECTATION_RESIDUE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HilbertError {
    #[error("mode dimension must be at least 1 (mode {mode} has {dim})")]
    EmptyMode { mode: usize, dim: usize },
    #[error("qubit {qubit} out of range for a register of {n_qubits} qubits")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },
    #[error("mode {mode} out of range for a register of {n_modes} modes")]
    ModeOutOfRange { mode: usize, n_modes: usize },
    #[error("duplicate target qubit {0}")]
    DuplicateTarget(usize),
    #[error("gate of dimension {found} does not match {targets} target qubits")]
    GateShape { targets: usize, found: usize },
    #[error("matrix is not unitary (deviation {0:e})")]
    NotUnitary(f64),
    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("registers differ")]
    RegisterMismatch,
    #[error("non-finite coefficient in term {0}")]
    NonFinite(usize),
    #[error("non-finite evolution time")]
    NonFiniteTime,
    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),
    #[error("basis index {index} out of range for dimension {dim}")]
    BasisIndex { index: usize, dim: usize },
    #[error("expectation value has imaginary residue {0:e}")]
    ImaginaryResidue(f64),
}

pub(crate) fn cis(theta: f64) -> C64 {
    use num_traits::Float;
    Complex::new(Float::cos(theta), Float::sin(theta))
}

pub(crate) fn cabs(z: C64) -> f64 {
    num_traits::Float::sqrt(z.norm_sqr())
}
