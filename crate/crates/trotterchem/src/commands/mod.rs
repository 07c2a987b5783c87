//! One module per subcommand. Each exposes a config struct, a pure function
//! producing its tables, and a `run_*` entry point writing them to disk.

mod charge_bath;
mod error_bounds;
mod h2_compile;
mod h2_evolve;

pub use charge_bath::{
    charge_bath_tables, fock_sweep_table, run_charge_bath, BathConfig, BathTables,
};
pub use error_bounds::{bounds_tables, run_error_bounds, BoundsConfig, BoundsTables, HARDWARE_EPS};
pub use h2_compile::{compile_stage, run_h2_compile, CompileConfig, CompileReport, Stage};
pub use h2_evolve::{evolve_tables, observables, run_h2_evolve, EvolveConfig, EvolveTables};

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use trotterchem_core::trotter::Scheme;

use crate::error::RunError;
use crate::table::write_json;

/// Options shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct Common {
    /// Model file; the built-in fixture when absent.
    pub model: Option<PathBuf>,
    pub out: PathBuf,
    pub seed: u64,
    pub verify: bool,
}

impl Default for Common {
    fn default() -> Self {
        Self {
            model: None,
            out: PathBuf::from("out"),
            seed: 0,
            verify: false,
        }
    }
}

impl Common {
    pub(crate) fn prepare_out(&self) -> Result<&Path, RunError> {
        fs::create_dir_all(&self.out).map_err(|e| {
            RunError::Config(format!(
                "cannot create output directory {}: {e}",
                self.out.display()
            ))
        })?;
        Ok(&self.out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SchemeChoice {
    #[default]
    Regular,
    Symmetric,
    Both,
}

impl SchemeChoice {
    pub fn schemes(self) -> Vec<Scheme> {
        match self {
            SchemeChoice::Regular => vec![Scheme::Regular],
            SchemeChoice::Symmetric => vec![Scheme::Symmetric],
            SchemeChoice::Both => Scheme::ALL.to_vec(),
        }
    }
}

/// Machine-readable record of a run, written as `summary.json`.
#[derive(Debug, Clone, Serialize)]
pub struct Summary<P: Serialize, R: Serialize> {
    pub command: &'static str,
    pub model: String,
    pub parameters: P,
    pub outputs: Vec<String>,
    pub verified: bool,
    pub results: R,
}

impl<P: Serialize, R: Serialize> Summary<P, R> {
    pub(crate) fn write(&self, dir: &Path) -> Result<(), RunError> {
        write_json(&dir.join("summary.json"), self)
    }
}
