//! Oracle cross-checks run by `--verify` and by the compile self-check.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use trotterchem_core::charge_bath::{da_evolve, site_populations, DigitalAnalogSchedule};
use trotterchem_core::circuit::{adjacency_violations, Circuit};
use trotterchem_core::fermion_map::{
    build_h2_spin_hamiltonian, jw_ladder, map_electronic_to_spin, partition_h2_terms, LadderKind,
    ReducedCoefficients,
};
use trotterchem_core::hilbert::{
    phase_aligned_distance, CMatrix, DenseOperator, HybridRegister, PauliTerm, StateVector,
};
use trotterchem_core::trotter::{
    digital_error_bound, empirical_digital_error, Observable, Scheme, TrotterPlan,
};

use crate::error::RunError;
use crate::model_file::H2Model;

/// Largest accepted phase-aligned distance between circuit and product formula.
pub const CIRCUIT_TOL: f64 = 1e-8;
pub const JW_TOL: f64 = 1e-12;
pub const DUAL_PATH_TOL: f64 = 1e-10;
pub const CONSERVATION_TOL: f64 = 1e-10;
pub const AUDIT_TOL: f64 = 1e-12;

fn fail(message: String) -> RunError {
    RunError::SelfCheck(message)
}

fn ladder_dense(i: usize, n: usize, kind: LadderKind) -> Result<CMatrix, RunError> {
    let reg = HybridRegister::qubits(n);
    let mut m = CMatrix::zeros(reg.dim(), reg.dim());
    for w in jw_ladder(i, n, kind)? {
        let p =
            DenseOperator::from_pauli_terms(reg.clone(), &[PauliTerm::new(1.0, w.string.clone())])?;
        m += p.into_matrix() * w.weight;
    }
    Ok(m)
}

/// Largest deviation from `{c_i, c†_j} = δ_ij`, `{c_i, c_j} = 0` on `n` modes.
pub fn jw_algebra_deviation(n: usize) -> Result<f64, RunError> {
    let c: Vec<CMatrix> = (1..=n)
        .map(|i| ladder_dense(i, n, LadderKind::Annihilation))
        .collect::<Result<_, _>>()?;
    let cd: Vec<CMatrix> = (1..=n)
        .map(|i| ladder_dense(i, n, LadderKind::Creation))
        .collect::<Result<_, _>>()?;
    let dim = c[0].nrows();
    let id = CMatrix::identity(dim, dim);
    let zero = CMatrix::zeros(dim, dim);
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let mixed = &c[i] * &cd[j] + &cd[j] * &c[i];
            let expect = if i == j { &id } else { &zero };
            let same = &c[i] * &c[j] + &c[j] * &c[i];
            worst = worst.max((mixed - expect).camax()).max(same.camax());
        }
    }
    Ok(worst)
}

pub fn check_jw_algebra() -> Result<(), RunError> {
    let dev = jw_algebra_deviation(4)?;
    if dev > JW_TOL {
        return Err(fail(format!("anticommutation relations off by {dev:e}")));
    }
    Ok(())
}

/// Traceless distance between the generic mapping of the integrals and the
/// closed-form H₂ spin Hamiltonian.
pub fn dual_path_deviation(model: &H2Model) -> Result<f64, RunError> {
    let generic = map_electronic_to_spin(&model.integrals())?.to_dense();
    let closed = build_h2_spin_hamiltonian(&model.reduced).to_dense();
    let diff = generic.add(&closed.scale(-1.0))?.traceless();
    Ok(diff.matrix().camax())
}

pub fn check_dual_path(model: &H2Model) -> Result<(), RunError> {
    let dev = dual_path_deviation(model)?;
    if dev > DUAL_PATH_TOL {
        return Err(fail(format!(
            "generic and closed-form spin Hamiltonians differ by {dev:e}"
        )));
    }
    Ok(())
}

pub fn random_reduced(rng: &mut ChaCha8Rng) -> ReducedCoefficients {
    let mut draw = |lo: f64, hi: f64| rng.gen_range(lo..hi);
    ReducedCoefficients {
        h11: draw(-1.5, -0.5),
        h22: draw(-1.5, -0.5),
        h33: draw(-0.8, -0.2),
        h44: draw(-0.8, -0.2),
        ha: draw(0.3, 0.9),
        hb: draw(0.3, 0.9),
        hc: draw(0.3, 0.9),
        hd: draw(0.05, 0.3),
    }
}

/// One-step product formula over the two commuting H₂ groups.
pub fn h2_step_plan(
    c: &ReducedCoefficients,
    scheme: Scheme,
    tau: f64,
) -> Result<TrotterPlan, RunError> {
    let (h1, h2) = partition_h2_terms(&build_h2_spin_hamiltonian(c))?;
    Ok(TrotterPlan::from_groups(scheme, 1, tau, &[h1, h2])?)
}

/// Phase-aligned distance between a circuit and the step it compiles.
pub fn circuit_distance(circ: &Circuit, plan: &TrotterPlan) -> f64 {
    phase_aligned_distance(&circ.logical_unitary(), plan.unitary().matrix())
}

pub fn check_circuit(name: &str, circ: &Circuit, plan: &TrotterPlan) -> Result<f64, RunError> {
    let d = circuit_distance(circ, plan);
    if d.is_nan() || d >= CIRCUIT_TOL {
        return Err(fail(format!(
            "{name} circuit differs from the Trotter step by {d:e}"
        )));
    }
    if circ.is_routed() && adjacency_violations(circ) > 0 {
        return Err(fail(format!(
            "{name} circuit has non-adjacent two-qubit gates"
        )));
    }
    Ok(d)
}

pub fn check_bound_dominates(plan: &TrotterPlan, state: &StateVector) -> Result<(), RunError> {
    let bound = digital_error_bound(plan);
    let measured = empirical_digital_error(plan, state, Observable::ExactFidelity)?;
    if measured > bound + 1e-12 {
        return Err(fail(format!(
            "{} l={} infidelity {measured:e} exceeds the commutator bound {bound:e}",
            plan.scheme().name(),
            plan.steps()
        )));
    }
    Ok(())
}

pub fn check_audit(
    schedule: &DigitalAnalogSchedule,
    model: &trotterchem_core::charge_bath::ChargeBathModel,
) -> Result<(), RunError> {
    let dev = schedule.audit_deviation(model)?;
    if dev > AUDIT_TOL {
        return Err(fail(format!(
            "digital-analog blocks miss the Hamiltonian by {dev:e}"
        )));
    }
    Ok(())
}

pub fn check_conservation(
    schedule: &DigitalAnalogSchedule,
    state: &StateVector,
) -> Result<(), RunError> {
    let before: f64 = site_populations(state)?.iter().sum();
    let after: f64 = site_populations(&da_evolve(schedule, state)?)?.iter().sum();
    if (after - before).abs() > CONSERVATION_TOL {
        return Err(fail(format!(
            "electron number drifts by {:e}",
            (after - before).abs()
        )));
    }
    Ok(())
}
