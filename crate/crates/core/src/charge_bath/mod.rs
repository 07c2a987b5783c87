//! Three-site charge-bath model coupled to truncated bosonic modes, its spin
//! form, and a digital-analog Trotter schedule in which the fermionic part is
//! applied as qubit gates and each qubit couples to the cavity in turn.
//!
//! Sites are 0-based here: qubit `j` carries the occupation of site `j`.
//! The register is three qubits followed by the modes, every mode truncated
//! to the same number of Fock levels.

mod fixture;
mod model;
mod observe;
mod schedule;

pub use fixture::{fixture_cavity, fixture_model, FIXTURE_TIME};
pub use model::{
    bath_register, cavity_couplings, map_charge_bath_to_spin, CavitySpec, ChargeBathModel, N_SITES,
};
pub use observe::{
    donor_state, exact_bath_evolve, site_populations, top_fock_population, BathOracle,
    MAX_EXACT_DIM,
};
pub use schedule::{build_da_schedule, da_evolve, BlockKind, DaBlock, DigitalAnalogSchedule};

use crate::hilbert::HilbertError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BathError {
    #[error("expected {expected} site energies, got {found}")]
    SiteCount { expected: usize, found: usize },
    #[error("at least one bath mode is required")]
    NoModes,
    #[error("mode {0} frequency must be positive")]
    NonPositiveFrequency(usize),
    #[error("coupling matrix must be {modes}×{sites}, row {row} has {found} entries")]
    CouplingShape {
        modes: usize,
        sites: usize,
        row: usize,
        found: usize,
    },
    #[error("coupling matrix has {found} rows for {modes} modes")]
    CouplingRows { modes: usize, found: usize },
    #[error("non-finite model parameter: {0}")]
    NonFinite(&'static str),
    #[error("Fock truncation must be at least 2, got {0}")]
    Truncation(usize),
    #[error("coupling multiplier beta[{0}] outside [0, 1]")]
    BetaRange(usize),
    #[error("step count must be at least 1")]
    ZeroSteps,
    #[error("total time must be finite")]
    NonFiniteTime,
    #[error("register dimension {dim} exceeds the exact-evolution limit {limit}")]
    TooLarge { dim: usize, limit: usize },
    #[error("state register does not match the schedule register")]
    RegisterMismatch,
    #[error("populations need a register of 3 qubits, found {0}")]
    WrongRegister(usize),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
}
