use alloc::vec::Vec;

use super::TrotterError;
use crate::fermion_map::{
    build_h2_spin_hamiltonian, partition_h2_terms, ReducedCoefficients, SpinHamiltonian,
};
use crate::hilbert::{
    CMatrix, DenseOperator, HermitianEigen, HilbertError, HybridRegister, StateVector,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// `(e^{-iH₁τ} ⋯ e^{-iH_nτ})^l`, first order in `τ = t/l`.
    Regular,
    /// `(e^{-iH₁τ/2} e^{-iH₂τ} e^{-iH₁τ/2})^l` and its nested generalization.
    Symmetric,
}

impl Scheme {
    pub const ALL: [Scheme; 2] = [Scheme::Regular, Scheme::Symmetric];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Regular => "regular",
            Scheme::Symmetric => "symmetric",
        }
    }
}

impl core::str::FromStr for Scheme {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "regular" => Ok(Scheme::Regular),
            "symmetric" => Ok(Scheme::Symmetric),
            _ => Err(()),
        }
    }
}

/// Evolution time `t = θ / |h₁₁|` for a dimensionless angle `θ`.
pub fn time_from_theta(theta: f64, h11: f64) -> Result<f64, TrotterError> {
    if h11 == 0.0 || !h11.is_finite() {
        return Err(TrotterError::ZeroReference);
    }
    let t = theta / h11.abs();
    if !t.is_finite() {
        return Err(TrotterError::NonFiniteTime);
    }
    Ok(t)
}

/// A product-formula schedule: ordered groups, step count and total time.
///
/// Each group is exponentiated exactly; only the splitting between groups
/// is approximated.
#[derive(Debug, Clone)]
pub struct TrotterPlan {
    scheme: Scheme,
    steps: usize,
    total_time: f64,
    groups: Vec<DenseOperator>,
    eigen: Vec<HermitianEigen>,
}

impl TrotterPlan {
    pub fn new(
        scheme: Scheme,
        steps: usize,
        total_time: f64,
        groups: Vec<DenseOperator>,
    ) -> Result<Self, TrotterError> {
        if groups.is_empty() {
            return Err(TrotterError::EmptyPartition);
        }
        if groups.iter().any(|g| g.register() != groups[0].register()) {
            return Err(HilbertError::RegisterMismatch.into());
        }
        let eigen = groups
            .iter()
            .map(|g| g.eigen())
            .collect::<Result<Vec<_>, _>>()?;
        let plan = Self {
            scheme,
            steps: 1,
            total_time: 0.0,
            groups,
            eigen,
        };
        plan.with_steps(steps)?.with_time(total_time)
    }

    /// Plan over a qubit Hamiltonian split by term indices.
    ///
    /// Every term must land in exactly one group. The scalar offset only
    /// contributes a global phase and is left out.
    pub fn from_partition(
        scheme: Scheme,
        steps: usize,
        total_time: f64,
        h: &SpinHamiltonian,
        partition: &[Vec<usize>],
    ) -> Result<Self, TrotterError> {
        let mut seen = alloc::vec![false; h.len()];
        for &k in partition.iter().flatten() {
            if k >= h.len() {
                return Err(TrotterError::TermIndex {
                    index: k,
                    len: h.len(),
                });
            }
            if core::mem::replace(&mut seen[k], true) {
                return Err(TrotterError::OverlappingGroups(k));
            }
        }
        if let Some(k) = seen.iter().position(|s| !s) {
            return Err(TrotterError::UnassignedTerm(k));
        }
        let groups = partition
            .iter()
            .map(|idx| h.select(idx).to_dense())
            .collect();
        Self::new(scheme, steps, total_time, groups)
    }

    /// Plan over already separated qubit Hamiltonians, one per group.
    pub fn from_groups(
        scheme: Scheme,
        steps: usize,
        total_time: f64,
        groups: &[SpinHamiltonian],
    ) -> Result<Self, TrotterError> {
        Self::new(
            scheme,
            steps,
            total_time,
            groups.iter().map(|g| g.to_dense()).collect(),
        )
    }

    /// Two-group H₂ plan (diagonal terms, then four-body terms) at angle `θ = |h₁₁| t`.
    pub fn h2(
        c: &ReducedCoefficients,
        scheme: Scheme,
        steps: usize,
        theta: f64,
    ) -> Result<Self, TrotterError> {
        let (h1, h2) = partition_h2_terms(&build_h2_spin_hamiltonian(c))?;
        let t = time_from_theta(theta, c.h11)?;
        Self::from_groups(scheme, steps, t, &[h1, h2])
    }

    pub fn with_steps(&self, steps: usize) -> Result<Self, TrotterError> {
        if steps == 0 {
            return Err(TrotterError::ZeroSteps);
        }
        Ok(Self {
            steps,
            ..self.clone()
        })
    }

    pub fn with_time(&self, total_time: f64) -> Result<Self, TrotterError> {
        if !total_time.is_finite() {
            return Err(TrotterError::NonFiniteTime);
        }
        Ok(Self {
            total_time,
            ..self.clone()
        })
    }

    pub fn with_scheme(&self, scheme: Scheme) -> Self {
        Self {
            scheme,
            ..self.clone()
        }
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn total_time(&self) -> f64 {
        self.total_time
    }

    pub fn step_time(&self) -> f64 {
        self.total_time / self.steps as f64
    }

    pub fn groups(&self) -> &[DenseOperator] {
        &self.groups
    }

    pub fn register(&self) -> &HybridRegister {
        self.groups[0].register()
    }

    /// Sum of all groups.
    pub fn hamiltonian(&self) -> DenseOperator {
        let mut m = self.groups[0].matrix().clone();
        for g in &self.groups[1..] {
            m += g.matrix();
        }
        DenseOperator::new(self.register().clone(), m).expect("groups share a register")
    }

    /// `(group, duration)` pairs of one step, in the order they act on the state.
    pub fn step_sequence(&self) -> Vec<(usize, f64)> {
        let tau = self.step_time();
        let n = self.groups.len();
        match self.scheme {
            Scheme::Regular => (0..n).map(|g| (g, tau)).collect(),
            Scheme::Symmetric => {
                let mut seq: Vec<(usize, f64)> = (0..n - 1).map(|g| (g, tau / 2.0)).collect();
                seq.push((n - 1, tau));
                seq.extend((0..n - 1).rev().map(|g| (g, tau / 2.0)));
                seq
            }
        }
    }

    /// Dense unitary of a single step.
    pub fn step_unitary(&self) -> DenseOperator {
        let dim = self.register().dim();
        let mut u = CMatrix::identity(dim, dim);
        for (g, dt) in self.step_sequence() {
            u = self.eigen[g].propagator(dt) * u;
        }
        DenseOperator::new(self.register().clone(), u).expect("square matrix of register dimension")
    }

    /// Dense unitary of the whole evolution.
    pub fn unitary(&self) -> DenseOperator {
        let step = self.step_unitary();
        let dim = step.dim();
        let mut u = CMatrix::identity(dim, dim);
        for _ in 0..self.steps {
            u = step.matrix() * u;
        }
        DenseOperator::new(self.register().clone(), u).expect("square matrix of register dimension")
    }
}

/// Applies the plan to `state`.
pub fn trotter_evolve(
    plan: &TrotterPlan,
    state: &StateVector,
) -> Result<StateVector, TrotterError> {
    if state.register() != plan.register() {
        return Err(HilbertError::RegisterMismatch.into());
    }
    let step = plan.step_unitary();
    let mut psi = state.amplitudes().clone();
    for _ in 0..plan.steps() {
        psi = step.matrix() * psi;
    }
    Ok(StateVector::from_amplitudes(state.register().clone(), psi)?)
}
