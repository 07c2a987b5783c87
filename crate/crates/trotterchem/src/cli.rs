use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use trotterchem_core::circuit::DigitalModel;
use trotterchem_core::trotter::Scheme;

use crate::commands::{
    run_charge_bath, run_error_bounds, run_h2_compile, run_h2_evolve, BathConfig, BoundsConfig,
    Common, CompileConfig, EvolveConfig, SchemeChoice, Stage,
};
use crate::error::RunError;

#[derive(Debug, Parser)]
#[command(
    name = "trotterchem",
    version,
    about = "Trotterized H2 and charge-bath simulation experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Model file (JSON); the built-in fixture when omitted
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// Output directory
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    /// Seed for random-coefficient checks
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Run oracle cross-checks and fail on any mismatch
    #[arg(long)]
    pub verify: bool,
}

impl From<CommonArgs> for Common {
    fn from(a: CommonArgs) -> Self {
        Common {
            model: a.model,
            out: a.out,
            seed: a.seed,
            verify: a.verify,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SchemeArg {
    Regular,
    Symmetric,
    Both,
}

impl From<SchemeArg> for SchemeChoice {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Regular => SchemeChoice::Regular,
            SchemeArg::Symmetric => SchemeChoice::Symmetric,
            SchemeArg::Both => SchemeChoice::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SingleSchemeArg {
    Regular,
    Symmetric,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StageArg {
    A,
    B,
    C,
    D,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DigitalArg {
    Bound,
    Empirical,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fidelity and expectation curves of Trotterized H2 evolution from |1100>
    H2Evolve {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 2.0)]
        theta_max: f64,
        #[arg(long, default_value_t = 0.05)]
        theta_step: f64,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        steps: Vec<usize>,
        #[arg(long, value_enum, default_value = "regular")]
        scheme: SchemeArg,
    },
    /// Compile one H2 Trotter step to gates and check it against the dense step
    H2Compile {
        #[command(flatten)]
        common: CommonArgs,
        /// a: with MS gates, b: MS expanded, c: rebased and cancelled, d: routed
        #[arg(long, value_enum, default_value = "d")]
        stage: StageArg,
        #[arg(long, value_enum, default_value = "regular")]
        scheme: SingleSchemeArg,
        /// Total angle h11*t of the simulation
        #[arg(long, default_value_t = 2.0)]
        theta: f64,
        /// Number of Trotter steps the angle is split into
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Digital plus gate-error budgets and their crossing points
    ErrorBounds {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 2.0)]
        theta: f64,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        steps: Vec<usize>,
        #[arg(long, default_value_t = 1e-4)]
        eps_min: f64,
        #[arg(long, default_value_t = 1e-1)]
        eps_max: f64,
        #[arg(long, default_value_t = 61)]
        eps_points: usize,
        #[arg(long, value_enum, default_value = "both")]
        scheme: SchemeArg,
        #[arg(long, value_enum, default_value = "bound")]
        digital: DigitalArg,
    },
    /// Electron transfer through a bosonic bath, digital-analog vs exact
    ChargeBath {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = trotterchem_core::charge_bath::FIXTURE_TIME)]
        t_max: f64,
        #[arg(long, default_value_t = 0.5)]
        t_step: f64,
        #[arg(long, value_delimiter = ',', default_value = "4,8,16")]
        steps: Vec<usize>,
        /// Also tabulate populations against the Fock truncation
        #[arg(long)]
        fock_sweep: bool,
    },
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<(), RunError> {
    let say = |stdout: &mut dyn Write, line: String| {
        let _ = writeln!(stdout, "{line}");
    };
    match command {
        Command::H2Evolve {
            common,
            theta_max,
            theta_step,
            steps,
            scheme,
        } => {
            let out = common.out.clone();
            run_h2_evolve(&EvolveConfig {
                common: common.into(),
                theta_max,
                theta_step,
                steps,
                scheme: scheme.into(),
            })?;
            say(
                stdout,
                format!("wrote fidelity and expectation curves to {}", out.display()),
            );
        }
        Command::H2Compile {
            common,
            stage,
            scheme,
            theta,
            steps,
        } => {
            let stage = match stage {
                StageArg::A => Stage::A,
                StageArg::B => Stage::B,
                StageArg::C => Stage::C,
                StageArg::D => Stage::D,
            };
            let scheme = match scheme {
                SingleSchemeArg::Regular => Scheme::Regular,
                SingleSchemeArg::Symmetric => Scheme::Symmetric,
            };
            let report = run_h2_compile(&CompileConfig {
                common: common.into(),
                stage,
                scheme,
                theta,
                steps,
            })?;
            let c = report.counts();
            say(
                stdout,
                format!(
                    "stage {} {}: xx {} swap {} single {} ms {} zz {} (self-check {:.1e})",
                    report.stage,
                    report.scheme,
                    c.xx,
                    c.swap,
                    c.single,
                    c.ms,
                    c.zz,
                    report.self_check_distance
                ),
            );
        }
        Command::ErrorBounds {
            common,
            theta,
            steps,
            eps_min,
            eps_max,
            eps_points,
            scheme,
            digital,
        } => {
            let digital = match digital {
                DigitalArg::Bound => DigitalModel::Bound,
                DigitalArg::Empirical => DigitalModel::Empirical,
            };
            let cfg = BoundsConfig {
                common: common.into(),
                theta,
                steps,
                eps_min,
                eps_max,
                eps_points,
                scheme: scheme.into(),
                digital,
            };
            for line in run_error_bounds(&cfg)? {
                say(stdout, line);
            }
        }
        Command::ChargeBath {
            common,
            t_max,
            t_step,
            steps,
            fock_sweep,
        } => {
            let out = common.out.clone();
            run_charge_bath(&BathConfig {
                common: common.into(),
                t_max,
                t_step,
                steps,
                fock_sweep,
            })?;
            say(
                stdout,
                format!("wrote population curves to {}", out.display()),
            );
        }
    }
    Ok(())
}

/// Parses `args` (program name first), runs the subcommand, and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
