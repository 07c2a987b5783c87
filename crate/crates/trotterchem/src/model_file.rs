//! JSON model files.
//!
//! H₂ coefficients come either as full integral tables
//! (`n_orbitals`, `one_body: [[i, j, v]]`, `two_body: [[i, j, k, l, v]]`,
//! 1-based indices) or as a `reduced` object with keys
//! `h11, h22, h33, h44, hA, hB, hC, hD`.
//!
//! A charge-bath model has `sites` (three energies), `hopping`, `modes`
//! (frequencies) and either a `lambda` matrix (modes × sites) with an
//! optional `truncation`, or a `cavity` object
//! `{g0, n_modes, truncation, beta}`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use trotterchem_core::charge_bath::{
    fixture_cavity, fixture_model, CavitySpec, ChargeBathModel, N_SITES,
};
use trotterchem_core::fermion_map::{
    derive_reduced_coeffs, ElectronicIntegrals, ReducedCoefficients, H2_STO3G,
};

use crate::error::RunError;

/// `[i, j, k, l, value]` row of a two-body table.
pub type TwoBodyEntry = (usize, usize, usize, usize, f64);

/// Fock levels per mode when a `lambda` model does not name a truncation.
pub const DEFAULT_TRUNCATION: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReducedFile {
    pub h11: f64,
    pub h22: f64,
    pub h33: f64,
    pub h44: f64,
    #[serde(rename = "hA")]
    pub ha: f64,
    #[serde(rename = "hB")]
    pub hb: f64,
    #[serde(rename = "hC")]
    pub hc: f64,
    #[serde(rename = "hD")]
    pub hd: f64,
}

impl From<ReducedFile> for ReducedCoefficients {
    fn from(r: ReducedFile) -> Self {
        ReducedCoefficients {
            h11: r.h11,
            h22: r.h22,
            h33: r.h33,
            h44: r.h44,
            ha: r.ha,
            hb: r.hb,
            hc: r.hc,
            hd: r.hd,
        }
    }
}

impl From<&ReducedCoefficients> for ReducedFile {
    fn from(c: &ReducedCoefficients) -> Self {
        ReducedFile {
            h11: c.h11,
            h22: c.h22,
            h33: c.h33,
            h44: c.h44,
            ha: c.ha,
            hb: c.hb,
            hc: c.hc,
            hd: c.hd,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct H2File {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_orbitals: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one_body: Option<Vec<(usize, usize, f64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_body: Option<Vec<TwoBodyEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduced: Option<ReducedFile>,
}

/// H₂ coefficients plus the integral tables they came from, if any.
#[derive(Debug, Clone, PartialEq)]
pub struct H2Model {
    pub reduced: ReducedCoefficients,
    pub integrals: Option<ElectronicIntegrals>,
}

impl H2Model {
    pub fn fixture() -> Self {
        Self {
            reduced: H2_STO3G,
            integrals: None,
        }
    }

    /// Integral tables, expanded from the reduced form when none were given.
    pub fn integrals(&self) -> ElectronicIntegrals {
        self.integrals
            .clone()
            .unwrap_or_else(|| ElectronicIntegrals::from_reduced(&self.reduced))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CavityFile {
    pub g0: f64,
    pub n_modes: usize,
    pub truncation: usize,
    pub beta: [f64; N_SITES],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BathFile {
    pub sites: Vec<f64>,
    pub hopping: f64,
    pub modes: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cavity: Option<CavityFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
}

/// A charge-bath model together with its Fock truncation.
#[derive(Debug, Clone, PartialEq)]
pub struct BathSetup {
    pub model: ChargeBathModel,
    pub truncation: usize,
}

impl BathSetup {
    pub fn fixture() -> Self {
        Self {
            model: fixture_model(),
            truncation: fixture_cavity().truncation(),
        }
    }
}

fn read(path: &Path) -> Result<String, RunError> {
    fs::read_to_string(path).map_err(|source| RunError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn input(path: &Path, message: impl Into<String>) -> RunError {
    RunError::Input {
        path: path.to_path_buf(),
        message: message.into(),
    }
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T, RunError> {
    serde_json::from_str(text).map_err(|e| input(path, e.to_string()))
}

pub fn parse_h2(path: &Path, text: &str) -> Result<H2Model, RunError> {
    let file: H2File = parse(path, text)?;
    let tables = file.n_orbitals.is_some() || file.one_body.is_some() || file.two_body.is_some();
    match (file.reduced, tables) {
        (Some(_), true) => Err(input(
            path,
            "give either `reduced` or `n_orbitals`/`one_body`/`two_body`, not both",
        )),
        (Some(r), false) => {
            let reduced = ReducedCoefficients::from(r);
            if !reduced.is_finite() {
                return Err(input(path, "field `reduced` holds a non-finite value"));
            }
            Ok(H2Model {
                reduced,
                integrals: None,
            })
        }
        (None, false) => Err(input(path, "missing field `reduced` or `n_orbitals`")),
        (None, true) => {
            let n = file
                .n_orbitals
                .ok_or_else(|| input(path, "missing field `n_orbitals`"))?;
            let mut ints = ElectronicIntegrals::new(n);
            for &(i, j, v) in file.one_body.as_deref().unwrap_or_default() {
                ints.set_one_body(i, j, v)
                    .map_err(|e| input(path, format!("field `one_body` [{i}, {j}]: {e}")))?;
            }
            for &(i, j, k, l, v) in file.two_body.as_deref().unwrap_or_default() {
                ints.set_two_body([i, j, k, l], v).map_err(|e| {
                    input(path, format!("field `two_body` [{i}, {j}, {k}, {l}]: {e}"))
                })?;
            }
            ints.check_hermiticity()
                .map_err(|e| input(path, e.to_string()))?;
            let reduced = derive_reduced_coeffs(&ints).map_err(|e| input(path, e.to_string()))?;
            Ok(H2Model {
                reduced,
                integrals: Some(ints),
            })
        }
    }
}

pub fn parse_bath(path: &Path, text: &str) -> Result<BathSetup, RunError> {
    let file: BathFile = parse(path, text)?;
    let bad = |e: trotterchem_core::charge_bath::BathError| input(path, e.to_string());
    match (file.lambda, file.cavity) {
        (Some(_), Some(_)) => Err(input(path, "give either `lambda` or `cavity`, not both")),
        (None, None) => Err(input(path, "missing field `lambda` or `cavity`")),
        (Some(lambda), None) => {
            let model =
                ChargeBathModel::new(&file.sites, file.hopping, file.modes, lambda).map_err(bad)?;
            let truncation = file.truncation.unwrap_or(DEFAULT_TRUNCATION);
            if truncation < 2 {
                return Err(input(path, "field `truncation` must be at least 2"));
            }
            Ok(BathSetup { model, truncation })
        }
        (None, Some(c)) => {
            if file.truncation.is_some_and(|d| d != c.truncation) {
                return Err(input(
                    path,
                    "field `truncation` disagrees with `cavity.truncation`",
                ));
            }
            let spec = CavitySpec::new(c.g0, c.n_modes, c.truncation, c.beta).map_err(bad)?;
            let model = ChargeBathModel::with_cavity(&file.sites, file.hopping, file.modes, &spec)
                .map_err(bad)?;
            Ok(BathSetup {
                model,
                truncation: c.truncation,
            })
        }
    }
}

pub fn load_h2(path: Option<&Path>) -> Result<H2Model, RunError> {
    match path {
        None => Ok(H2Model::fixture()),
        Some(p) => parse_h2(p, &read(p)?),
    }
}

pub fn load_bath(path: Option<&Path>) -> Result<BathSetup, RunError> {
    match path {
        None => Ok(BathSetup::fixture()),
        Some(p) => parse_bath(p, &read(p)?),
    }
}

/// Label used for the built-in model in run summaries.
pub fn model_label(path: Option<&Path>) -> String {
    path.map(PathBuf::from).map_or_else(
        || "builtin-fixture".to_string(),
        |p| p.display().to_string(),
    )
}
