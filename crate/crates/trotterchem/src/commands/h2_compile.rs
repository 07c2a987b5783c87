use std::fs;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use trotterchem_core::circuit::{
    compile_step, count_gates, decompose_ms, rebase_and_cancel, route_linear, Circuit, GateCounts,
};
use trotterchem_core::fermion_map::ReducedCoefficients;
use trotterchem_core::trotter::{time_from_theta, Scheme};

use super::{Common, Summary};
use crate::circuit_text::{to_text, CircuitJson, CountsJson};
use crate::error::RunError;
use crate::model_file::{load_h2, model_label};
use crate::table::write_json;
use crate::verify;

/// Pipeline stage to emit: (a) reference step with Mølmer-Sørensen gates,
/// (b) MS gates expanded into XX rotations, (c) ZZ rebased and inverse pairs
/// cancelled, (d) routed onto the linear chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Stage {
    A,
    B,
    C,
    #[default]
    D,
}

impl Stage {
    pub const ALL: [Stage; 4] = [Stage::A, Stage::B, Stage::C, Stage::D];

    pub fn name(self) -> &'static str {
        match self {
            Stage::A => "a",
            Stage::B => "b",
            Stage::C => "c",
            Stage::D => "d",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompileConfig {
    pub common: Common,
    pub stage: Stage,
    pub scheme: Scheme,
    /// Total angle `θ = |h₁₁| t`; when `h₁₁ = 0` it is read as the time.
    pub theta: f64,
    pub steps: usize,
}

impl Default for CompileConfig {
    fn default() -> Self {
        Self {
            common: Common::default(),
            stage: Stage::D,
            scheme: Scheme::Regular,
            theta: 2.0,
            steps: 1,
        }
    }
}

/// Circuit of one step after `stage`.
pub fn compile_stage(
    c: &ReducedCoefficients,
    tau: f64,
    scheme: Scheme,
    stage: Stage,
) -> Result<Circuit, RunError> {
    let a = compile_step(c, tau, scheme);
    if stage == Stage::A {
        return Ok(a);
    }
    let b = decompose_ms(&a);
    if stage == Stage::B {
        return Ok(b);
    }
    let cc = rebase_and_cancel(&b);
    if stage == Stage::C {
        return Ok(cc);
    }
    Ok(route_linear(&cc)?)
}

fn step_time(c: &ReducedCoefficients, theta: f64, steps: usize) -> Result<f64, RunError> {
    if steps == 0 {
        return Err(RunError::Config("step count must be at least 1".into()));
    }
    if !theta.is_finite() {
        return Err(RunError::Config(format!(
            "theta must be finite, got {theta}"
        )));
    }
    let t = if c.h11 == 0.0 {
        theta
    } else {
        time_from_theta(theta, c.h11)?
    };
    Ok(t / steps as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompileReport {
    pub stage: &'static str,
    pub scheme: &'static str,
    pub step_time: f64,
    pub self_check_distance: f64,
    #[serde(flatten)]
    pub circuit: CircuitJson,
}

impl CompileReport {
    pub fn counts(&self) -> &CountsJson {
        &self.circuit.counts
    }
}

/// Compiles, self-checks against the dense product formula, and reports.
pub fn compile_report(
    c: &ReducedCoefficients,
    scheme: Scheme,
    stage: Stage,
    tau: f64,
) -> Result<(Circuit, CompileReport), RunError> {
    let circ = compile_stage(c, tau, scheme, stage)?;
    let plan = verify::h2_step_plan(c, scheme, tau)?;
    let distance = verify::check_circuit(stage.name(), &circ, &plan)?;
    let report = CompileReport {
        stage: stage.name(),
        scheme: scheme.name(),
        step_time: tau,
        self_check_distance: distance,
        circuit: CircuitJson::of(&circ),
    };
    Ok((circ, report))
}

fn verify_all_stages(c: &ReducedCoefficients, scheme: Scheme, tau: f64) -> Result<(), RunError> {
    let plan = verify::h2_step_plan(c, scheme, tau)?;
    for stage in Stage::ALL {
        verify::check_circuit(stage.name(), &compile_stage(c, tau, scheme, stage)?, &plan)?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct Params {
    stage: &'static str,
    scheme: &'static str,
    theta: f64,
    steps: usize,
    seed: u64,
}

#[derive(Debug, Serialize)]
struct Results {
    counts: CountsJson,
    charged_two_qubit: usize,
    self_check_distance: f64,
    random_sets_checked: usize,
}

/// Random coefficient sets checked by `--verify`.
pub const VERIFY_RANDOM_SETS: usize = 20;

pub fn run_h2_compile(cfg: &CompileConfig) -> Result<CompileReport, RunError> {
    let model = load_h2(cfg.common.model.as_deref())?;
    let c = model.reduced;
    let tau = step_time(&c, cfg.theta, cfg.steps)?;
    let (circ, report) = compile_report(&c, cfg.scheme, cfg.stage, tau)?;
    let mut random_sets = 0;
    if cfg.common.verify {
        verify_all_stages(&c, cfg.scheme, tau)?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.common.seed);
        for _ in 0..VERIFY_RANDOM_SETS {
            verify_all_stages(&verify::random_reduced(&mut rng), cfg.scheme, tau)?;
        }
        random_sets = VERIFY_RANDOM_SETS;
    }
    let out = cfg.common.prepare_out()?;
    let text_path = out.join("circuit.txt");
    fs::write(&text_path, to_text(&circ)).map_err(|e| RunError::write(&text_path, e))?;
    write_json(&out.join("circuit.json"), &report)?;
    let counts: GateCounts = count_gates(&circ);
    Summary {
        command: "h2-compile",
        model: model_label(cfg.common.model.as_deref()),
        parameters: Params {
            stage: cfg.stage.name(),
            scheme: cfg.scheme.name(),
            theta: cfg.theta,
            steps: cfg.steps,
            seed: cfg.common.seed,
        },
        outputs: vec!["circuit.txt".into(), "circuit.json".into()],
        verified: cfg.common.verify,
        results: Results {
            counts: CountsJson::from(&counts),
            charged_two_qubit: counts.charged_two_qubit(),
            self_check_distance: report.self_check_distance,
            random_sets_checked: random_sets,
        },
    }
    .write(out)?;
    Ok(report)
}
