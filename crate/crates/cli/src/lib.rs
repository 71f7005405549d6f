//! The `twk` command line: argument handling, report envelopes and emitters.

mod batch;
mod emit;

use std::path::PathBuf;

use clap::{ArgGroup, Parser, ValueEnum};
use serde::{Deserialize, Serialize};

use twk_core::error::FunctorError;
use twk_core::oracle::{verify_su2, verify_su3};
use twk_core::su2::Su2Status;
use twk_core::su3::{build_differentials, MatrixExport, Route};
use twk_core::{
    k_groups_su2, k_groups_su3, parse_functor, Check, ExponentialFunctor, Su2Report, Su3Options,
    Su3Report,
};

pub use batch::{run_batch, CSV_COLUMNS, CSV_VERSION};
pub use emit::{emit, to_tex};

/// Version of the JSON envelope. Bumped on any incompatible change.
pub const SCHEMA_VERSION: u32 = 1;

const ENV_HELP: &str = "Environment:\n  TWK_STEP_LIMIT  maximum S-pair reductions per Groebner basis (default 1000000)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Su2,
    Su3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Compute,
    Verify,
    ExportMatrices,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Tex,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Koszul,
    Complex,
    Both,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Koszul => Route::Koszul,
            RouteArg::Complex => Route::Complex,
            RouteArg::Both => Route::Both,
        }
    }
}

/// K-groups of twisted SU(2) and SU(3) for exponential functors.
#[derive(Clone, Debug, Parser)]
#[command(name = "twk", version, after_help = ENV_HELP)]
#[command(group(ArgGroup::new("input").required(true).args(["functor", "batch"])))]
pub struct RunConfig {
    #[arg(long, value_enum)]
    pub group: Group,
    /// Functor in the DSL: ext_top, ext_full, fw(b), poly:<terms>, combined with ^ and *.
    #[arg(long)]
    pub functor: Option<String>,
    /// File with one functor per line; emits a CSV summary.
    #[arg(long, conflicts_with = "functor")]
    pub batch: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "compute")]
    pub mode: Mode,
    #[arg(long, value_enum, default_value = "text")]
    pub emit: Emit,
    #[arg(long, default_value_t = twk_core::oracle::DEFAULT_POINTS)]
    pub oracle_points: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// SU(3) only.
    #[arg(long, value_enum, default_value = "koszul")]
    pub route: RouteArg,
    /// Write the report here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Internal = 1,
    Hypothesis = 2,
    BadInput = 64,
}

/// The rendered report, diagnostics for standard error, and the exit status.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub exit: Exit,
    pub output: String,
    pub diagnostics: Vec<String>,
}

impl Outcome {
    fn failure(exit: Exit, message: String) -> Outcome {
        Outcome {
            exit,
            output: String::new(),
            diagnostics: vec![message],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Matrices {
    /// The 2×2 Mayer–Vietoris matrix over R(SU(2)).
    Su2 {
        mv: Vec<Vec<String>>,
    },
    Su3(MatrixExport),
}

/// Everything one run reports. This is the JSON schema.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: u32,
    pub group: Group,
    pub mode: Mode,
    pub functor: String,
    pub seed: u64,
    pub oracle_points: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<Route>,
    pub hypothesis_ok: bool,
    /// All symbolic and oracle checks passed.
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub su2: Option<Su2Report>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub su3: Option<Su3Report>,
    /// Oracle checks, in verify mode.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub oracle: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Matrices>,
}

pub fn hypothesis_message(group: Group) -> &'static str {
    match group {
        Group::Su2 => {
            "hypothesis F(ℂ) ≇ F(ℂ*) fails: F(t) = F(t^-1), so g2 = 0 and the SU(2) computation does not apply"
        }
        Group::Su3 => "hypothesis deg F > 0 fails: the SU(3) computation does not apply",
    }
}

pub fn parse_error_message(spec: &str, e: &FunctorError) -> String {
    match e {
        FunctorError::Parse(p) => {
            let caret = " ".repeat(p.position.min(spec.len()));
            format!("bad functor: {}\n  {spec}\n  {caret}^", p.message)
        }
        other => format!("bad functor {spec:?}: {other}"),
    }
}

/// Runs one functor through the requested pipeline.
pub fn compute(cfg: &RunConfig, f: &ExponentialFunctor) -> Result<Envelope, String> {
    let mut env = Envelope {
        schema_version: SCHEMA_VERSION,
        group: cfg.group,
        mode: cfg.mode,
        functor: f.display_name(),
        seed: cfg.seed,
        oracle_points: cfg.oracle_points,
        route: None,
        hypothesis_ok: true,
        passed: true,
        su2: None,
        su3: None,
        oracle: Vec::new(),
        matrices: None,
    };
    match cfg.group {
        Group::Su2 => {
            let r = k_groups_su2(f).map_err(|e| e.to_string())?;
            env.hypothesis_ok = r.status == Su2Status::Computed;
            env.passed = r.all_passed();
            if cfg.mode == Mode::Verify {
                env.oracle =
                    verify_su2(f, &r, cfg.oracle_points, cfg.seed).map_err(|e| e.to_string())?;
            }
            if cfg.mode == Mode::ExportMatrices {
                let mv = r
                    .mv_matrix
                    .iter()
                    .map(|row| row.iter().map(|x| x.to_text()).collect())
                    .collect();
                env.matrices = Some(Matrices::Su2 { mv });
            }
            env.su2 = Some(r);
        }
        Group::Su3 => {
            let opts = Su3Options {
                route: cfg.route.into(),
                seed: cfg.seed,
            };
            env.route = Some(opts.route);
            let r = k_groups_su3(f, &opts).map_err(|e| e.to_string())?;
            env.hypothesis_ok = r.hypothesis_ok;
            env.passed = r.all_passed();
            if cfg.mode == Mode::Verify {
                env.oracle =
                    verify_su3(f, &r, cfg.oracle_points, cfg.seed).map_err(|e| e.to_string())?;
            }
            if cfg.mode == Mode::ExportMatrices {
                let cx = build_differentials(f).map_err(|e| e.to_string())?;
                env.matrices = Some(Matrices::Su3(MatrixExport::new(f, &cx)));
            }
            env.su3 = Some(r);
        }
    }
    env.passed &= env.oracle.iter().all(|c| c.passed);
    Ok(env)
}

fn exit_for(env: &Envelope) -> Exit {
    if !env.hypothesis_ok {
        Exit::Hypothesis
    } else if !env.passed {
        Exit::Internal
    } else {
        Exit::Success
    }
}

/// Runs a full invocation without touching the file system for output.
pub fn run(cfg: &RunConfig) -> Outcome {
    if let Some(path) = &cfg.batch {
        return run_batch(cfg, path);
    }
    let spec = cfg.functor.as_deref().unwrap_or_default();
    let f = match parse_functor(spec) {
        Ok(f) => f,
        Err(e) => return Outcome::failure(Exit::BadInput, parse_error_message(spec, &e)),
    };
    let env = match compute(cfg, &f) {
        Ok(env) => env,
        Err(e) => return Outcome::failure(Exit::Internal, format!("internal error: {e}")),
    };
    let exit = exit_for(&env);
    let mut diagnostics: Vec<String> = env
        .su2
        .iter()
        .flat_map(|r| r.warnings.iter())
        .chain(env.su3.iter().flat_map(|r| r.warnings.iter()))
        .map(|w| format!("warning: {w}"))
        .collect();
    match exit {
        Exit::Hypothesis => diagnostics.push(hypothesis_message(cfg.group).to_string()),
        Exit::Internal => {
            let failed = failed_checks(&env);
            diagnostics.push(format!("verification failed: {}", failed.join("; ")));
        }
        _ => {}
    }
    Outcome {
        exit,
        output: emit(&env, cfg.emit),
        diagnostics,
    }
}

pub fn failed_checks(env: &Envelope) -> Vec<String> {
    let report_checks = env
        .su2
        .iter()
        .flat_map(|r| r.checks.iter())
        .chain(env.su3.iter().flat_map(|r| r.checks.iter()));
    report_checks
        .chain(env.oracle.iter())
        .filter(|c| !c.passed)
        .map(|c| c.name.clone())
        .collect()
}
