use alloc::vec;

use super::model::{bath_register, N_SITES};
use super::{map_charge_bath_to_spin, BathError, ChargeBathModel};
use crate::hilbert::{build_dense, HermitianEigen, HybridRegister, StateVector};

/// Largest register dimension evolved densely.
pub const MAX_EXACT_DIM: usize = 2048;

pub(crate) fn check_dim(register: &HybridRegister) -> Result<(), BathError> {
    if register.dim() > MAX_EXACT_DIM {
        return Err(BathError::TooLarge {
            dim: register.dim(),
            limit: MAX_EXACT_DIM,
        });
    }
    Ok(())
}

/// Exact evolution under the full spin-bath Hamiltonian, diagonalized once.
#[derive(Debug, Clone)]
pub struct BathOracle {
    register: HybridRegister,
    eigen: HermitianEigen,
}

impl BathOracle {
    pub fn new(model: &ChargeBathModel, truncation: usize) -> Result<Self, BathError> {
        let register = bath_register(model, truncation)?;
        check_dim(&register)?;
        let h = build_dense(&map_charge_bath_to_spin(model), &register)?;
        Ok(Self {
            register,
            eigen: h.eigen()?,
        })
    }

    pub fn register(&self) -> &HybridRegister {
        &self.register
    }

    pub fn evolve(&self, t: f64, state: &StateVector) -> Result<StateVector, BathError> {
        if !t.is_finite() {
            return Err(BathError::NonFiniteTime);
        }
        if state.register() != &self.register {
            return Err(BathError::RegisterMismatch);
        }
        let amps = self.eigen.evolve(t, state.amplitudes());
        Ok(StateVector::from_amplitudes(self.register.clone(), amps)?)
    }
}

/// `exp(-iHt)|ψ⟩` for the spin-bath Hamiltonian of `model`.
pub fn exact_bath_evolve(
    model: &ChargeBathModel,
    truncation: usize,
    t: f64,
    state: &StateVector,
) -> Result<StateVector, BathError> {
    BathOracle::new(model, truncation)?.evolve(t, state)
}

/// Electron on the first site, cavity in the vacuum.
pub fn donor_state(register: &HybridRegister) -> Result<StateVector, BathError> {
    let fock = vec![0; register.n_modes()];
    Ok(StateVector::product(register.clone(), &[1, 0, 0], &fock)?)
}

/// Site occupations `P_j = ⟨(Z_j + 1)/2⟩`.
pub fn site_populations(state: &StateVector) -> Result<[f64; N_SITES], BathError> {
    let register = state.register();
    if register.n_qubits() != N_SITES {
        return Err(BathError::WrongRegister(register.n_qubits()));
    }
    let mut p = [0.0; N_SITES];
    for (index, a) in state.amplitudes().iter().enumerate() {
        let w = a.norm_sqr();
        for (j, pj) in p.iter_mut().enumerate() {
            if register.qubit_value(index, j) == 1 {
                *pj += w;
            }
        }
    }
    Ok(p.map(|x| x.clamp(0.0, 1.0)))
}

/// Largest probability found in the top Fock level of any mode.
pub fn top_fock_population(state: &StateVector) -> f64 {
    let register = state.register();
    (0..register.n_modes())
        .map(|mode| {
            let top = register.mode_dim(mode) - 1;
            state
                .amplitudes()
                .iter()
                .enumerate()
                .filter(|(index, _)| register.fock_value(*index, mode) == top)
                .map(|(_, a)| a.norm_sqr())
                .sum::<f64>()
        })
        .fold(0.0, f64::max)
}
