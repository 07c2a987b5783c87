use serde::Serialize;
use trotterchem_core::circuit::{
    find_crossing, h2_error_budget, total_upper_bound, DigitalModel, ErrorBudget,
};
use trotterchem_core::fermion_map::ReducedCoefficients;
use trotterchem_core::hilbert::{HybridRegister, StateVector};
use trotterchem_core::trotter::{Scheme, TrotterPlan};

use super::{Common, SchemeChoice, Summary};
use crate::error::RunError;
use crate::model_file::{load_h2, model_label};
use crate::sweep::{eps_grid, par_map, pool, step_list};
use crate::table::{num, Table};
use crate::verify;

/// Two-qubit error rate typical of current superconducting hardware.
pub const HARDWARE_EPS: f64 = 1e-2;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsConfig {
    pub common: Common,
    pub theta: f64,
    pub steps: Vec<usize>,
    pub eps_min: f64,
    pub eps_max: f64,
    pub eps_points: usize,
    pub scheme: SchemeChoice,
    pub digital: DigitalModel,
}

impl Default for BoundsConfig {
    fn default() -> Self {
        Self {
            common: Common::default(),
            theta: 2.0,
            steps: vec![2, 3, 4],
            eps_min: 1e-4,
            eps_max: 1e-1,
            eps_points: 61,
            scheme: SchemeChoice::Both,
            digital: DigitalModel::Bound,
        }
    }
}

/// `bounds.csv`, `crossings.csv`, and the budgets they were built from.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsTables {
    pub bounds: Table,
    pub crossings: Table,
    /// Per step count: regular and symmetric budgets at ε = 0, and ε*.
    pub budgets: Vec<(usize, ErrorBudget, ErrorBudget, Option<f64>)>,
}

pub fn bounds_tables(
    c: &ReducedCoefficients,
    theta: f64,
    steps: &[usize],
    eps: &[f64],
    schemes: &[Scheme],
    digital: DigitalModel,
    pool: &rayon::ThreadPool,
) -> Result<BoundsTables, RunError> {
    let budget = |&l: &usize| -> Result<_, RunError> {
        let reg = h2_error_budget(c, Scheme::Regular, l, theta, 0.0, digital)?;
        let sym = h2_error_budget(c, Scheme::Symmetric, l, theta, 0.0, digital)?;
        let star = find_crossing(
            reg.digital,
            reg.counts.charged_two_qubit(),
            sym.digital,
            sym.counts.charged_two_qubit(),
            l,
        );
        Ok((l, reg, sym, star))
    };
    let budgets = par_map(pool, steps, budget)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;

    let mut bounds = Table::new(&["eps", "l", "scheme", "digital", "experimental", "total"]);
    let mut crossings = Table::new(&["l", "eps_star"]);
    for &(l, _, _, star) in &budgets {
        crossings.push(vec![l.to_string(), star.map(num).unwrap_or_default()]);
    }
    for &e in eps {
        for &(l, reg, sym, _) in &budgets {
            for &scheme in schemes {
                let b = if scheme == Scheme::Regular { reg } else { sym };
                let total = total_upper_bound(b.digital, &b.counts, l, e)?;
                let experimental = (l * b.counts.charged_two_qubit()) as f64 * e;
                bounds.push(vec![
                    num(e),
                    l.to_string(),
                    scheme.name().to_string(),
                    num(b.digital),
                    num(experimental),
                    num(total),
                ]);
            }
        }
    }
    Ok(BoundsTables {
        bounds,
        crossings,
        budgets,
    })
}

fn check_crossing_sides(
    l: usize,
    reg: &ErrorBudget,
    sym: &ErrorBudget,
    star: f64,
) -> Result<(), RunError> {
    let total = |b: &ErrorBudget, e: f64| total_upper_bound(b.digital, &b.counts, l, e);
    let (below, above) = (0.5 * star, (2.0 * star).min(1.0));
    if !(total(sym, below)? < total(reg, below)? && total(sym, above)? > total(reg, above)?) {
        return Err(RunError::SelfCheck(format!(
            "l={l}: budgets do not swap order at eps*={star:e}"
        )));
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct Params {
    theta: f64,
    steps: Vec<usize>,
    eps_min: f64,
    eps_max: f64,
    eps_points: usize,
    schemes: Vec<&'static str>,
    digital: &'static str,
}

#[derive(Debug, Serialize)]
struct StepResult {
    l: usize,
    digital_regular: f64,
    digital_symmetric: f64,
    charged_two_qubit_regular: usize,
    charged_two_qubit_symmetric: usize,
    eps_star: Option<f64>,
    total_regular_at_hardware_eps: f64,
    total_symmetric_at_hardware_eps: f64,
    preferred_at_hardware_eps: &'static str,
}

#[derive(Debug, Serialize)]
struct Results {
    hardware_eps: f64,
    steps: Vec<StepResult>,
}

pub fn digital_name(d: DigitalModel) -> &'static str {
    match d {
        DigitalModel::Bound => "bound",
        DigitalModel::Empirical => "empirical",
    }
}

pub fn run_error_bounds(cfg: &BoundsConfig) -> Result<Vec<String>, RunError> {
    let steps = step_list(&cfg.steps)?;
    let eps = eps_grid(cfg.eps_min, cfg.eps_max, cfg.eps_points)?;
    if !cfg.theta.is_finite() {
        return Err(RunError::Config(format!(
            "theta must be finite, got {}",
            cfg.theta
        )));
    }
    let model = load_h2(cfg.common.model.as_deref())?;
    let c = model.reduced;
    let pool = pool()?;
    let schemes = cfg.scheme.schemes();
    let tables = bounds_tables(&c, cfg.theta, &steps, &eps, &schemes, cfg.digital, &pool)?;
    if cfg.common.verify {
        let hf = StateVector::product(HybridRegister::qubits(4), &[1, 1, 0, 0], &[])?;
        for &(l, reg, sym, star) in &tables.budgets {
            for scheme in Scheme::ALL {
                verify::check_bound_dominates(&TrotterPlan::h2(&c, scheme, l, cfg.theta)?, &hf)?;
            }
            if let Some(star) = star {
                check_crossing_sides(l, &reg, &sym, star)?;
            }
        }
    }
    let out = cfg.common.prepare_out()?;
    tables.bounds.write(&out.join("bounds.csv"))?;
    tables.crossings.write(&out.join("crossings.csv"))?;

    let mut notes = Vec::new();
    let mut results = Vec::new();
    for &(l, reg, sym, star) in &tables.budgets {
        let tr = total_upper_bound(reg.digital, &reg.counts, l, HARDWARE_EPS)?;
        let ts = total_upper_bound(sym.digital, &sym.counts, l, HARDWARE_EPS)?;
        let preferred = if ts < tr { "symmetric" } else { "regular" };
        notes.push(format!(
            "l={l}: eps*={} ; at eps=1e-2 regular {tr:.4e}, symmetric {ts:.4e}, {preferred} preferred",
            star.map_or("none".to_string(), |s| format!("{s:.4e}")),
        ));
        results.push(StepResult {
            l,
            digital_regular: reg.digital,
            digital_symmetric: sym.digital,
            charged_two_qubit_regular: reg.counts.charged_two_qubit(),
            charged_two_qubit_symmetric: sym.counts.charged_two_qubit(),
            eps_star: star,
            total_regular_at_hardware_eps: tr,
            total_symmetric_at_hardware_eps: ts,
            preferred_at_hardware_eps: preferred,
        });
    }
    Summary {
        command: "error-bounds",
        model: model_label(cfg.common.model.as_deref()),
        parameters: Params {
            theta: cfg.theta,
            steps,
            eps_min: cfg.eps_min,
            eps_max: cfg.eps_max,
            eps_points: cfg.eps_points,
            schemes: schemes.iter().map(|s| s.name()).collect(),
            digital: digital_name(cfg.digital),
        },
        outputs: vec!["bounds.csv".into(), "crossings.csv".into()],
        verified: cfg.common.verify,
        results: Results {
            hardware_eps: HARDWARE_EPS,
            steps: results,
        },
    }
    .write(out)?;
    Ok(notes)
}
