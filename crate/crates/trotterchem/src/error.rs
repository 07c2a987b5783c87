use std::path::PathBuf;

use thiserror::Error;
use trotterchem_core::charge_bath::BathError;
use trotterchem_core::circuit::CircuitError;
use trotterchem_core::fermion_map::FermionError;
use trotterchem_core::hilbert::HilbertError;
use trotterchem_core::trotter::TrotterError;

/// Failure of a run, grouped by exit code.
#[derive(Debug, Error)]
pub enum RunError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("self-check failed: {0}")]
    SelfCheck(String),
    #[error("register dimension {dim} exceeds the exact-evolution limit {limit}")]
    TooLarge { dim: usize, limit: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Errors raised by the numerical core on otherwise valid input.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Fermion(#[from] FermionError),
    #[error(transparent)]
    Trotter(#[from] TrotterError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Bath(BathError),
}

impl From<BathError> for RunError {
    fn from(e: BathError) -> Self {
        match e {
            BathError::TooLarge { dim, limit } => RunError::TooLarge { dim, limit },
            e => RunError::Model(ModelError::Bath(e)),
        }
    }
}

macro_rules! via_model {
    ($($t:ty),*) => {$(
        impl From<$t> for RunError {
            fn from(e: $t) -> Self {
                RunError::Model(e.into())
            }
        }
    )*};
}

via_model!(HilbertError, FermionError, TrotterError, CircuitError);

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Read { .. } | RunError::Input { .. } | RunError::Model(_) => 2,
            RunError::Config(_) | RunError::Write { .. } => 3,
            RunError::SelfCheck(_) => 4,
            RunError::TooLarge { .. } => 5,
        }
    }

    pub(crate) fn write(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        RunError::Write {
            path: path.into(),
            source,
        }
    }
}
