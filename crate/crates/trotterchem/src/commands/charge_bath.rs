use serde::Serialize;
use trotterchem_core::charge_bath::{
    bath_register, build_da_schedule, da_evolve, donor_state, map_charge_bath_to_spin,
    site_populations, top_fock_population, BathOracle, ChargeBathModel, FIXTURE_TIME,
    MAX_EXACT_DIM,
};
use trotterchem_core::hilbert::{build_dense, fidelity};

use super::{Common, Summary};
use crate::error::RunError;
use crate::model_file::{load_bath, model_label, BathSetup};
use crate::sweep::{par_map, pool, step_list, uniform_grid};
use crate::table::{num, Table};
use crate::verify;

#[derive(Debug, Clone, PartialEq)]
pub struct BathConfig {
    pub common: Common,
    pub t_max: f64,
    pub t_step: f64,
    pub steps: Vec<usize>,
    pub fock_sweep: bool,
}

impl Default for BathConfig {
    fn default() -> Self {
        Self {
            common: Common::default(),
            t_max: FIXTURE_TIME,
            t_step: 0.5,
            steps: vec![4, 8, 16],
            fock_sweep: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BathTables {
    pub populations: Table,
}

/// Donor-initialized populations over `times`: exact rows tagged `l = 0`,
/// then one digital-analog row per step count.
pub fn charge_bath_tables(
    setup: &BathSetup,
    times: &[f64],
    steps: &[usize],
    pool: &rayon::ThreadPool,
) -> Result<BathTables, RunError> {
    let oracle = BathOracle::new(&setup.model, setup.truncation)?;
    let psi0 = donor_state(oracle.register())?;
    let row = |t: f64, l: usize, p: [f64; 3], f: f64| {
        vec![
            num(t),
            l.to_string(),
            num(p[0]),
            num(p[1]),
            num(p[2]),
            num(f),
        ]
    };
    let point = |&t: &f64| -> Result<Vec<Vec<String>>, RunError> {
        let exact = oracle.evolve(t, &psi0)?;
        let mut rows = vec![row(t, 0, site_populations(&exact)?, 1.0)];
        for &l in steps {
            let schedule = build_da_schedule(&setup.model, setup.truncation, l, t)?;
            let da = da_evolve(&schedule, &psi0)?;
            rows.push(row(t, l, site_populations(&da)?, fidelity(&exact, &da)?));
        }
        Ok(rows)
    };
    let mut populations = Table::new(&["t", "l", "P1", "P2", "P3", "fidelity_vs_exact"]);
    for rows in par_map(pool, times, point) {
        rows?.into_iter().for_each(|r| populations.push(r));
    }
    Ok(BathTables { populations })
}

/// Truncations probed by the Fock sweep around `d`.
pub fn sweep_truncations(model: &ChargeBathModel, d: usize) -> Vec<usize> {
    let mut ds: Vec<usize> = [d.saturating_sub(2).max(2), d, d + 2, d + 4].to_vec();
    ds.dedup();
    ds.retain(|&d| bath_register(model, d).is_ok_and(|r| r.dim() <= MAX_EXACT_DIM));
    ds
}

/// Exact populations at time `t` for each truncation, with the largest
/// change from the previous row and the top-level occupation.
pub fn fock_sweep_table(
    model: &ChargeBathModel,
    truncations: &[usize],
    t: f64,
) -> Result<Table, RunError> {
    let mut table = Table::new(&[
        "d",
        "t",
        "P1",
        "P2",
        "P3",
        "max_change",
        "top_fock_population",
    ]);
    let mut prev: Option<[f64; 3]> = None;
    for &d in truncations {
        let oracle = BathOracle::new(model, d)?;
        let state = oracle.evolve(t, &donor_state(oracle.register())?)?;
        let p = site_populations(&state)?;
        let change = prev.map(|q| (0..3).map(|j| (p[j] - q[j]).abs()).fold(0.0, f64::max));
        table.push(vec![
            d.to_string(),
            num(t),
            num(p[0]),
            num(p[1]),
            num(p[2]),
            change.map(num).unwrap_or_default(),
            num(top_fock_population(&state)),
        ]);
        prev = Some(p);
    }
    Ok(table)
}

fn verify_bath(setup: &BathSetup, t: f64, steps: &[usize]) -> Result<(), RunError> {
    let reg = bath_register(&setup.model, setup.truncation)?;
    let h = build_dense(&map_charge_bath_to_spin(&setup.model), &reg)?;
    if !h.is_hermitian() {
        return Err(RunError::SelfCheck(format!(
            "spin-bath Hamiltonian is not Hermitian ({:e})",
            h.hermiticity_deviation()
        )));
    }
    let psi = donor_state(&reg)?;
    for &l in steps {
        let schedule = build_da_schedule(&setup.model, setup.truncation, l, t)?;
        verify::check_audit(&schedule, &setup.model)?;
        verify::check_conservation(&schedule, &psi)?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct Params<'a> {
    t_max: f64,
    t_step: f64,
    steps: &'a [usize],
    truncation: usize,
    n_modes: usize,
    register_dim: usize,
    initial_state: &'static str,
}

#[derive(Debug, Serialize)]
struct FinalRow {
    l: usize,
    populations: [f64; 3],
    fidelity_vs_exact: f64,
}

pub fn run_charge_bath(cfg: &BathConfig) -> Result<(), RunError> {
    let times = uniform_grid("time", cfg.t_max, cfg.t_step)?;
    let steps = step_list(&cfg.steps)?;
    let setup = load_bath(cfg.common.model.as_deref())?;
    let dim = bath_register(&setup.model, setup.truncation)?.dim();
    if dim > MAX_EXACT_DIM {
        return Err(RunError::TooLarge {
            dim,
            limit: MAX_EXACT_DIM,
        });
    }
    let pool = pool()?;
    if cfg.common.verify {
        verify_bath(&setup, cfg.t_max, &steps)?;
    }
    let tables = charge_bath_tables(&setup, &times, &steps, &pool)?;
    let out = cfg.common.prepare_out()?;
    tables.populations.write(&out.join("populations.csv"))?;
    let mut outputs = vec!["populations.csv".to_string()];
    if cfg.fock_sweep {
        let ds = sweep_truncations(&setup.model, setup.truncation);
        fock_sweep_table(&setup.model, &ds, cfg.t_max)?.write(&out.join("fock_sweep.csv"))?;
        outputs.push("fock_sweep.csv".into());
    }
    let last = tables.populations.rows().len() - (steps.len() + 1);
    let finals = tables.populations.rows()[last..]
        .iter()
        .map(|r| FinalRow {
            l: r[1].parse().expect("integer column"),
            populations: [2, 3, 4].map(|k| r[k].parse().expect("float column")),
            fidelity_vs_exact: r[5].parse().expect("float column"),
        })
        .collect::<Vec<_>>();
    Summary {
        command: "charge-bath",
        model: model_label(cfg.common.model.as_deref()),
        parameters: Params {
            t_max: cfg.t_max,
            t_step: cfg.t_step,
            steps: &steps,
            truncation: setup.truncation,
            n_modes: setup.model.n_modes(),
            register_dim: dim,
            initial_state: "|100>|vac>",
        },
        outputs,
        verified: cfg.common.verify,
        results: finals,
    }
    .write(out)
}
