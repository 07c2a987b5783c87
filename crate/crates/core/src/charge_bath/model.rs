use alloc::vec;
use alloc::vec::Vec;

use num_traits::Float;

use super::BathError;
use crate::hilbert::{BosonOp, Factor, HybridRegister, OpTerm, Pauli};

/// Number of electronic sites (donor, bridge, acceptor).
pub const N_SITES: usize = 3;

/// Tight-binding sites with uniform nearest-neighbour hopping, linearly
/// coupled through their occupations to a set of bosonic modes.
#[derive(Debug, Clone, PartialEq)]
pub struct ChargeBathModel {
    site_energies: [f64; N_SITES],
    hopping: f64,
    mode_freqs: Vec<f64>,
    couplings: Vec<Vec<f64>>,
}

impl ChargeBathModel {
    /// `couplings[i][j]` couples mode `i` to site `j`.
    pub fn new(
        site_energies: &[f64],
        hopping: f64,
        mode_freqs: Vec<f64>,
        couplings: Vec<Vec<f64>>,
    ) -> Result<Self, BathError> {
        let site_energies: [f64; N_SITES] =
            site_energies.try_into().map_err(|_| BathError::SiteCount {
                expected: N_SITES,
                found: site_energies.len(),
            })?;
        if site_energies.iter().any(|e| !e.is_finite()) {
            return Err(BathError::NonFinite("site energy"));
        }
        if !hopping.is_finite() {
            return Err(BathError::NonFinite("hopping"));
        }
        if mode_freqs.is_empty() {
            return Err(BathError::NoModes);
        }
        for (i, &w) in mode_freqs.iter().enumerate() {
            if !w.is_finite() {
                return Err(BathError::NonFinite("mode frequency"));
            }
            if w <= 0.0 {
                return Err(BathError::NonPositiveFrequency(i));
            }
        }
        if couplings.len() != mode_freqs.len() {
            return Err(BathError::CouplingRows {
                modes: mode_freqs.len(),
                found: couplings.len(),
            });
        }
        for (row, r) in couplings.iter().enumerate() {
            if r.len() != N_SITES {
                return Err(BathError::CouplingShape {
                    modes: mode_freqs.len(),
                    sites: N_SITES,
                    row,
                    found: r.len(),
                });
            }
            if r.iter().any(|x| !x.is_finite()) {
                return Err(BathError::NonFinite("coupling"));
            }
        }
        Ok(Self {
            site_energies,
            hopping,
            mode_freqs,
            couplings,
        })
    }

    /// Model whose couplings follow the cavity spectrum of `spec`.
    pub fn with_cavity(
        site_energies: &[f64],
        hopping: f64,
        mode_freqs: Vec<f64>,
        spec: &CavitySpec,
    ) -> Result<Self, BathError> {
        if spec.n_modes() != mode_freqs.len() {
            return Err(BathError::CouplingRows {
                modes: mode_freqs.len(),
                found: spec.n_modes(),
            });
        }
        Self::new(site_energies, hopping, mode_freqs, cavity_couplings(spec))
    }

    pub fn site_energies(&self) -> &[f64; N_SITES] {
        &self.site_energies
    }

    pub fn hopping(&self) -> f64 {
        self.hopping
    }

    pub fn mode_freqs(&self) -> &[f64] {
        &self.mode_freqs
    }

    pub fn couplings(&self) -> &[Vec<f64>] {
        &self.couplings
    }

    pub fn n_modes(&self) -> usize {
        self.mode_freqs.len()
    }

    pub fn coupling(&self, mode: usize, site: usize) -> f64 {
        self.couplings[mode][site]
    }

    /// Same model with every coupling scaled by `s`.
    pub fn scale_couplings(&self, s: f64) -> Self {
        let couplings = self
            .couplings
            .iter()
            .map(|r| r.iter().map(|x| x * s).collect())
            .collect();
        Self {
            couplings,
            ..self.clone()
        }
    }
}

/// Multimode cavity whose mode `i` couples to qubit `j` with strength
/// `beta[j] · g0 · √(i+1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CavitySpec {
    g0: f64,
    n_modes: usize,
    truncation: usize,
    beta: [f64; N_SITES],
}

impl CavitySpec {
    pub fn new(
        g0: f64,
        n_modes: usize,
        truncation: usize,
        beta: [f64; N_SITES],
    ) -> Result<Self, BathError> {
        if !g0.is_finite() {
            return Err(BathError::NonFinite("g0"));
        }
        if n_modes == 0 {
            return Err(BathError::NoModes);
        }
        if truncation < 2 {
            return Err(BathError::Truncation(truncation));
        }
        if let Some(j) = beta.iter().position(|b| !(0.0..=1.0).contains(b)) {
            return Err(BathError::BetaRange(j));
        }
        Ok(Self {
            g0,
            n_modes,
            truncation,
            beta,
        })
    }

    pub fn g0(&self) -> f64 {
        self.g0
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn beta(&self) -> &[f64; N_SITES] {
        &self.beta
    }

    pub fn with_truncation(&self, truncation: usize) -> Result<Self, BathError> {
        Self::new(self.g0, self.n_modes, truncation, self.beta)
    }
}

/// Coupling matrix `λ[i][j] = beta[j] · g0 · √(i+1)`, modes × sites.
pub fn cavity_couplings(spec: &CavitySpec) -> Vec<Vec<f64>> {
    (0..spec.n_modes)
        .map(|i| {
            let g = spec.g0 * Float::sqrt((i + 1) as f64);
            spec.beta.iter().map(|b| b * g).collect()
        })
        .collect()
}

/// Three qubits followed by `model.n_modes()` modes of `truncation` levels.
pub fn bath_register(
    model: &ChargeBathModel,
    truncation: usize,
) -> Result<HybridRegister, BathError> {
    if truncation < 2 {
        return Err(BathError::Truncation(truncation));
    }
    Ok(HybridRegister::new(
        N_SITES,
        vec![truncation; model.n_modes()],
    )?)
}

pub(crate) fn z_terms(m: &ChargeBathModel) -> Vec<OpTerm> {
    (0..N_SITES)
        .map(|j| OpTerm::new(0.5 * m.site_energies[j], vec![pauli(j, Pauli::Z)]))
        .collect()
}

pub(crate) fn exchange_terms(m: &ChargeBathModel) -> Vec<OpTerm> {
    let c = -0.5 * m.hopping;
    let mut out = Vec::with_capacity(4);
    for j in 0..N_SITES - 1 {
        for p in [Pauli::X, Pauli::Y] {
            out.push(OpTerm::new(c, vec![pauli(j, p), pauli(j + 1, p)]));
        }
    }
    out
}

pub(crate) fn number_term(m: &ChargeBathModel, mode: usize, share: f64) -> OpTerm {
    OpTerm::new(
        m.mode_freqs[mode] * share,
        vec![boson(mode, BosonOp::Number)],
    )
}

pub(crate) fn coupling_term(m: &ChargeBathModel, mode: usize, site: usize) -> OpTerm {
    OpTerm::new(
        0.5 * m.couplings[mode][site],
        vec![pauli(site, Pauli::Z), boson(mode, BosonOp::Quadrature)],
    )
}

pub(crate) fn drive_term(m: &ChargeBathModel, mode: usize, site: usize) -> OpTerm {
    OpTerm::new(
        0.5 * m.couplings[mode][site],
        vec![boson(mode, BosonOp::Quadrature)],
    )
}

/// Spin-bath Hamiltonian
/// `½Σε_j Z_j − (V/2)Σ_j(X_jX_{j+1} + Y_jY_{j+1}) + Σω_i b†_ib_i
///  + Σ(λ_ij/2)(Z_j + 1)(b_i + b†_i)`.
///
/// The occupation of site `j` is `(Z_j + 1)/2`; the constant `½Σε_j` is
/// dropped.
pub fn map_charge_bath_to_spin(m: &ChargeBathModel) -> Vec<OpTerm> {
    let mut out = z_terms(m);
    out.extend(exchange_terms(m));
    for i in 0..m.n_modes() {
        out.push(number_term(m, i, 1.0));
    }
    for i in 0..m.n_modes() {
        for j in 0..N_SITES {
            out.push(coupling_term(m, i, j));
            out.push(drive_term(m, i, j));
        }
    }
    out
}

fn pauli(qubit: usize, pauli: Pauli) -> Factor {
    Factor::Pauli { qubit, pauli }
}

fn boson(mode: usize, op: BosonOp) -> Factor {
    Factor::Boson { mode, op }
}
