use super::{compile_step, optimize, Circuit, CircuitError, GateKind};
use crate::fermion_map::ReducedCoefficients;
use crate::hilbert::{HybridRegister, StateVector};
use crate::trotter::{
    digital_error_bound, empirical_digital_error, Observable, Scheme, TrotterPlan,
};

/// Single-qubit gates split by role.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SingleQubitBreakdown {
    pub r: usize,
    pub ud: usize,
    pub rz: usize,
    pub ry: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GateCounts {
    /// XX rotations of any angle.
    pub xx_two_qubit: usize,
    pub swap: usize,
    pub single_qubit: usize,
    pub ms_multiqubit: usize,
    /// ZZ gates left in circuits that were not rebased.
    pub zz_two_qubit: usize,
    pub breakdown: SingleQubitBreakdown,
}

impl GateCounts {
    pub fn of(circ: &Circuit) -> Self {
        let mut c = GateCounts::default();
        for g in circ.gates() {
            match g.kind {
                GateKind::Xx | GateKind::XxFixed => c.xx_two_qubit += 1,
                GateKind::Swap => c.swap += 1,
                GateKind::Zz => c.zz_two_qubit += 1,
                GateKind::Ms => c.ms_multiqubit += 1,
                GateKind::R => c.breakdown.r += 1,
                GateKind::Ud => c.breakdown.ud += 1,
                GateKind::Rz => c.breakdown.rz += 1,
                GateKind::Ry => c.breakdown.ry += 1,
            }
        }
        let b = c.breakdown;
        c.single_qubit = b.r + b.ud + b.rz + b.ry;
        c
    }

    /// Gates charged with the two-qubit error rate.
    pub fn charged_two_qubit(&self) -> usize {
        self.xx_two_qubit + self.swap
    }
}

pub fn count_gates(circ: &Circuit) -> GateCounts {
    GateCounts::of(circ)
}

/// `digital + l · (XX + SWAP) · ε`; single-qubit errors are not charged.
pub fn total_upper_bound(
    digital: f64,
    counts: &GateCounts,
    steps: usize,
    eps_2q: f64,
) -> Result<f64, CircuitError> {
    if !(0.0..=1.0).contains(&eps_2q) {
        return Err(CircuitError::EpsOutOfRange(eps_2q));
    }
    Ok(digital + steps as f64 * counts.charged_two_qubit() as f64 * eps_2q)
}

/// Error rate at which two linear budgets `d + l·n·ε` meet.
///
/// Returns `None` unless the crossing lies at a positive rate, i.e. unless
/// the scheme with the smaller digital error also uses more gates.
pub fn find_crossing(
    d_reg: f64,
    n_reg: usize,
    d_sym: f64,
    n_sym: usize,
    steps: usize,
) -> Option<f64> {
    let slope = steps as f64 * (n_sym as f64 - n_reg as f64);
    if slope == 0.0 {
        return None;
    }
    let eps = (d_reg - d_sym) / slope;
    (eps.is_finite() && eps > 0.0).then_some(eps)
}

/// Which digital error enters the budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DigitalModel {
    /// Commutator bound of the product formula.
    Bound,
    /// Measured `1 - F` starting from the Hartree-Fock state `|1100⟩`.
    Empirical,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorBudget {
    pub eps_2q: f64,
    pub counts: GateCounts,
    pub steps: usize,
    pub digital: f64,
}

impl ErrorBudget {
    pub fn new(
        digital: f64,
        counts: GateCounts,
        steps: usize,
        eps_2q: f64,
    ) -> Result<Self, CircuitError> {
        total_upper_bound(digital, &counts, steps, eps_2q)?;
        Ok(Self {
            eps_2q,
            counts,
            steps,
            digital,
        })
    }

    pub fn total(&self) -> f64 {
        self.digital + self.steps as f64 * self.counts.charged_two_qubit() as f64 * self.eps_2q
    }

    pub fn with_eps(&self, eps_2q: f64) -> Result<Self, CircuitError> {
        Self::new(self.digital, self.counts, self.steps, eps_2q)
    }
}

/// Gate counts of one fully compiled and routed step.
pub fn h2_step_counts(
    c: &ReducedCoefficients,
    scheme: Scheme,
    tau: f64,
) -> Result<GateCounts, CircuitError> {
    Ok(GateCounts::of(&optimize(&compile_step(c, tau, scheme))?))
}

fn hartree_fock() -> StateVector {
    StateVector::product(HybridRegister::qubits(4), &[1, 1, 0, 0], &[])
        .expect("valid product state")
}

pub fn h2_error_budget(
    c: &ReducedCoefficients,
    scheme: Scheme,
    steps: usize,
    theta: f64,
    eps_2q: f64,
    model: DigitalModel,
) -> Result<ErrorBudget, CircuitError> {
    let plan = TrotterPlan::h2(c, scheme, steps, theta)?;
    let digital = match model {
        DigitalModel::Bound => digital_error_bound(&plan),
        DigitalModel::Empirical => {
            empirical_digital_error(&plan, &hartree_fock(), Observable::ExactFidelity)?
        }
    };
    let counts = h2_step_counts(c, scheme, plan.step_time())?;
    ErrorBudget::new(digital, counts, steps, eps_2q)
}

/// Crossing between the symmetric and regular H₂ budgets at `l` steps.
pub fn h2_crossing(
    c: &ReducedCoefficients,
    steps: usize,
    theta: f64,
    model: DigitalModel,
) -> Result<Option<f64>, CircuitError> {
    let reg = h2_error_budget(c, Scheme::Regular, steps, theta, 0.0, model)?;
    let sym = h2_error_budget(c, Scheme::Symmetric, steps, theta, 0.0, model)?;
    Ok(find_crossing(
        reg.digital,
        reg.counts.charged_two_qubit(),
        sym.digital,
        sym.counts.charged_two_qubit(),
        steps,
    ))
}
