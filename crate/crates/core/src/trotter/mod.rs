//! Product-formula time evolution and its splitting-error estimates.

mod bound;
mod plan;

pub use bound::{digital_error_bound, empirical_digital_error, Observable};
pub use plan::{time_from_theta, trotter_evolve, Scheme, TrotterPlan};

use crate::fermion_map::FermionError;
use crate::hilbert::HilbertError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TrotterError {
    #[error("partition has no groups")]
    EmptyPartition,
    #[error("step count must be at least 1")]
    ZeroSteps,
    #[error("total time must be finite")]
    NonFiniteTime,
    #[error("term {0} appears in more than one group")]
    OverlappingGroups(usize),
    #[error("term {0} is not assigned to any group")]
    UnassignedTerm(usize),
    #[error("term index {index} out of range for {len} terms")]
    TermIndex { index: usize, len: usize },
    #[error("h11 must be non-zero to convert θ into a time")]
    ZeroReference,
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Fermion(#[from] FermionError),
}
