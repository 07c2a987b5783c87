use serde::Serialize;
use trotterchem_core::fermion_map::{build_h2_spin_hamiltonian, ReducedCoefficients};
use trotterchem_core::hilbert::{
    expectation, fidelity, DenseOperator, HybridRegister, StateVector,
};
use trotterchem_core::trotter::{time_from_theta, trotter_evolve, Scheme, TrotterPlan};

use super::{Common, SchemeChoice, Summary};
use crate::error::RunError;
use crate::model_file::{load_h2, model_label};
use crate::sweep::{par_map, pool, step_list, uniform_grid};
use crate::table::{num, Table};
use crate::verify;

#[derive(Debug, Clone, PartialEq)]
pub struct EvolveConfig {
    pub common: Common,
    pub theta_max: f64,
    pub theta_step: f64,
    pub steps: Vec<usize>,
    pub scheme: SchemeChoice,
}

impl Default for EvolveConfig {
    fn default() -> Self {
        Self {
            common: Common::default(),
            theta_max: 2.0,
            theta_step: 0.05,
            steps: vec![1, 2, 3],
            scheme: SchemeChoice::Regular,
        }
    }
}

/// `fidelity.csv` and `expectations.csv` for one scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvolveTables {
    pub fidelity: Table,
    pub expectations: Table,
}

/// Separated Hamiltonian terms tracked over time: the four single-Z terms,
/// the four four-body terms, and the full Hamiltonian as `energy`.
pub fn observables(c: &ReducedCoefficients) -> Vec<(String, DenseOperator)> {
    let h = build_h2_spin_hamiltonian(c);
    let reg = h.register();
    let weight = |t: &trotterchem_core::hilbert::PauliTerm| {
        t.string
            .axes()
            .iter()
            .filter(|p| p.as_char() != 'I')
            .count()
    };
    let pick = |w: usize, z_only: bool| {
        h.terms()
            .iter()
            .filter(move |t| {
                weight(t) == w
                    && (!z_only
                        || t.string
                            .axes()
                            .iter()
                            .all(|p| matches!(p.as_char(), 'I' | 'Z')))
            })
            .cloned()
    };
    let mut out: Vec<(String, DenseOperator)> = pick(1, true)
        .chain(pick(4, false))
        .map(|t| {
            let op = DenseOperator::from_pauli_terms(reg.clone(), std::slice::from_ref(&t))
                .expect("4-qubit term");
            (t.string.to_string(), op)
        })
        .collect();
    out.push(("energy".to_string(), h.to_dense()));
    out
}

fn hartree_fock() -> StateVector {
    StateVector::product(HybridRegister::qubits(4), &[1, 1, 0, 0], &[])
        .expect("valid product state")
}

pub fn evolve_tables(
    c: &ReducedCoefficients,
    scheme: Scheme,
    thetas: &[f64],
    steps: &[usize],
    pool: &rayon::ThreadPool,
) -> Result<EvolveTables, RunError> {
    let full = build_h2_spin_hamiltonian(c).to_dense();
    let eigen = full.eigen()?;
    let obs = observables(c);
    let psi0 = hartree_fock();
    let plans: Vec<TrotterPlan> = steps
        .iter()
        .map(|&l| TrotterPlan::h2(c, scheme, l, 0.0))
        .collect::<Result<_, _>>()?;

    type Rows = (Vec<Vec<String>>, Vec<Vec<String>>);
    let point = |&theta: &f64| -> Result<Rows, RunError> {
        let t = time_from_theta(theta, c.h11)?;
        let exact = StateVector::from_amplitudes(
            psi0.register().clone(),
            eigen.evolve(t, psi0.amplitudes()),
        )?;
        let mut fid = Vec::new();
        let mut exp = Vec::new();
        let mut emit = |l: usize, state: &StateVector| -> Result<(), RunError> {
            fid.push(vec![
                num(theta),
                l.to_string(),
                num(fidelity(&exact, state)?),
            ]);
            for (name, op) in &obs {
                exp.push(vec![
                    num(theta),
                    l.to_string(),
                    name.clone(),
                    num(expectation(state, op)?),
                ]);
            }
            Ok(())
        };
        emit(0, &exact)?;
        for (plan, &l) in plans.iter().zip(steps) {
            emit(l, &trotter_evolve(&plan.with_time(t)?, &psi0)?)?;
        }
        Ok((fid, exp))
    };

    let mut fidelity_table = Table::new(&["theta", "l", "F"]);
    let mut expectation_table = Table::new(&["theta", "l", "observable_name", "value"]);
    for rows in par_map(pool, thetas, point) {
        let (fid, exp) = rows?;
        fid.into_iter().for_each(|r| fidelity_table.push(r));
        exp.into_iter().for_each(|r| expectation_table.push(r));
    }
    Ok(EvolveTables {
        fidelity: fidelity_table,
        expectations: expectation_table,
    })
}

#[derive(Debug, Serialize)]
struct Params<'a> {
    theta_max: f64,
    theta_step: f64,
    steps: &'a [usize],
    schemes: Vec<&'static str>,
    initial_state: &'static str,
}

#[derive(Debug, Serialize)]
struct FinalFidelity {
    scheme: &'static str,
    l: usize,
    fidelity: f64,
}

pub fn run_h2_evolve(cfg: &EvolveConfig) -> Result<(), RunError> {
    let thetas = uniform_grid("theta", cfg.theta_max, cfg.theta_step)?;
    let steps = step_list(&cfg.steps)?;
    let model = load_h2(cfg.common.model.as_deref())?;
    let c = model.reduced;
    time_from_theta(1.0, c.h11)?;
    let pool = pool()?;
    if cfg.common.verify {
        verify::check_jw_algebra()?;
        verify::check_dual_path(&model)?;
    }
    let out = cfg.common.prepare_out()?;
    let schemes = cfg.scheme.schemes();
    let mut outputs = Vec::new();
    let mut finals = Vec::new();
    for &scheme in &schemes {
        let dir = if schemes.len() > 1 {
            out.join(scheme.name())
        } else {
            out.to_path_buf()
        };
        std::fs::create_dir_all(&dir).map_err(|e| RunError::write(&dir, e))?;
        let tables = evolve_tables(&c, scheme, &thetas, &steps, &pool)?;
        tables.fidelity.write(&dir.join("fidelity.csv"))?;
        tables.expectations.write(&dir.join("expectations.csv"))?;
        let rel = |f: &str| {
            dir.strip_prefix(out)
                .unwrap_or(&dir)
                .join(f)
                .display()
                .to_string()
        };
        outputs.extend([rel("fidelity.csv"), rel("expectations.csv")]);
        let theta = *thetas.last().expect("non-empty grid");
        for &l in &steps {
            let plan = TrotterPlan::h2(&c, scheme, l, theta)?;
            if cfg.common.verify {
                verify::check_bound_dominates(&plan, &hartree_fock())?;
            }
            let exact = build_h2_spin_hamiltonian(&c).to_dense();
            let t = plan.total_time();
            let psi = hartree_fock();
            let ex = trotterchem_core::hilbert::exact_evolve(&exact, t, &psi)?;
            finals.push(FinalFidelity {
                scheme: scheme.name(),
                l,
                fidelity: fidelity(&ex, &trotter_evolve(&plan, &psi)?)?,
            });
        }
    }
    let summary = Summary {
        command: "h2-evolve",
        model: model_label(cfg.common.model.as_deref()),
        parameters: Params {
            theta_max: cfg.theta_max,
            theta_step: cfg.theta_step,
            steps: &steps,
            schemes: schemes.iter().map(|s| s.name()).collect(),
            initial_state: "|1100>",
        },
        outputs,
        verified: cfg.common.verify,
        results: finals,
    };
    summary.write(out)
}
