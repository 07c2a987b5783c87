use alloc::vec::Vec;

use super::model::{
    bath_register, coupling_term, drive_term, exchange_terms, number_term, z_terms, N_SITES,
};
use super::observe::check_dim;
use super::{BathError, ChargeBathModel};
use crate::hilbert::{
    build_dense, max_abs_diff, CMatrix, DenseOperator, HybridRegister, OpTerm, StateVector,
};

/// Role of one block inside a digital-analog step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// Qubit-only gates: site energies and exchange, cavity decoupled.
    Digital,
    /// Cavity evolution with only qubit `qubit` coupled, plus a third of the
    /// free cavity energy.
    Analog { qubit: usize },
    /// Displacement of the cavity by the occupation-independent remainder.
    Drive,
}

/// One block: its generator terms and the exact propagator over one step.
#[derive(Debug, Clone, PartialEq)]
pub struct DaBlock {
    kind: BlockKind,
    terms: Vec<OpTerm>,
    generator: DenseOperator,
    propagator: CMatrix,
}

impl DaBlock {
    pub fn kind(&self) -> BlockKind {
        self.kind
    }

    pub fn terms(&self) -> &[OpTerm] {
        &self.terms
    }

    pub fn generator(&self) -> &DenseOperator {
        &self.generator
    }

    pub fn propagator(&self) -> &CMatrix {
        &self.propagator
    }
}

/// First-order product formula over digital, analog and drive blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct DigitalAnalogSchedule {
    steps: usize,
    total_time: f64,
    register: HybridRegister,
    blocks: Vec<DaBlock>,
    step_unitary: CMatrix,
}

impl DigitalAnalogSchedule {
    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn total_time(&self) -> f64 {
        self.total_time
    }

    pub fn step_time(&self) -> f64 {
        self.total_time / self.steps as f64
    }

    pub fn register(&self) -> &HybridRegister {
        &self.register
    }

    /// Blocks of one step in application order.
    pub fn blocks(&self) -> &[DaBlock] {
        &self.blocks
    }

    pub fn step_unitary(&self) -> &CMatrix {
        &self.step_unitary
    }

    pub fn unitary(&self) -> CMatrix {
        let mut u = CMatrix::identity(self.register.dim(), self.register.dim());
        for _ in 0..self.steps {
            u = &self.step_unitary * u;
        }
        u
    }

    /// Largest entry of `Σ_b τ·G_b − τ·H` for step time `τ`.
    pub fn audit_deviation(&self, model: &ChargeBathModel) -> Result<f64, BathError> {
        let tau = self.step_time();
        let h = build_dense(&super::map_charge_bath_to_spin(model), &self.register)?;
        let mut sum = DenseOperator::zeros(self.register.clone());
        for b in &self.blocks {
            sum = sum.add(&b.generator.scale(tau))?;
        }
        Ok(max_abs_diff(sum.matrix(), h.scale(tau).matrix()))
    }
}

/// Splits the spin-bath Hamiltonian into one digital block, one analog block
/// per qubit in order 0, 1, 2, and a final drive block, each applied for
/// `total_time / steps` per step.
pub fn build_da_schedule(
    model: &ChargeBathModel,
    truncation: usize,
    steps: usize,
    total_time: f64,
) -> Result<DigitalAnalogSchedule, BathError> {
    if steps == 0 {
        return Err(BathError::ZeroSteps);
    }
    if !total_time.is_finite() {
        return Err(BathError::NonFiniteTime);
    }
    let register = bath_register(model, truncation)?;
    check_dim(&register)?;
    let tau = total_time / steps as f64;

    let mut specs: Vec<(BlockKind, Vec<OpTerm>)> = Vec::with_capacity(N_SITES + 2);
    let mut digital = z_terms(model);
    digital.extend(exchange_terms(model));
    specs.push((BlockKind::Digital, digital));
    for j in 0..N_SITES {
        let mut terms: Vec<OpTerm> = (0..model.n_modes())
            .map(|i| number_term(model, i, 1.0 / N_SITES as f64))
            .collect();
        terms.extend((0..model.n_modes()).map(|i| coupling_term(model, i, j)));
        specs.push((BlockKind::Analog { qubit: j }, terms));
    }
    let drive = (0..model.n_modes()).flat_map(|i| (0..N_SITES).map(move |j| (i, j)));
    specs.push((
        BlockKind::Drive,
        drive.map(|(i, j)| drive_term(model, i, j)).collect(),
    ));

    let dim = register.dim();
    let mut step_unitary = CMatrix::identity(dim, dim);
    let mut blocks = Vec::with_capacity(specs.len());
    for (kind, terms) in specs {
        let generator = build_dense(&terms, &register)?;
        let propagator = generator.propagator(tau)?.into_matrix();
        step_unitary = &propagator * step_unitary;
        blocks.push(DaBlock {
            kind,
            terms,
            generator,
            propagator,
        });
    }
    Ok(DigitalAnalogSchedule {
        steps,
        total_time,
        register,
        blocks,
        step_unitary,
    })
}

/// Applies the step unitary `steps` times.
pub fn da_evolve(
    schedule: &DigitalAnalogSchedule,
    state: &StateVector,
) -> Result<StateVector, BathError> {
    if state.register() != &schedule.register {
        return Err(BathError::RegisterMismatch);
    }
    let mut psi = state.clone();
    for _ in 0..schedule.steps {
        psi = psi.apply_matrix(&schedule.step_unitary)?;
    }
    Ok(psi)
}
