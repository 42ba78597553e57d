//! Batch experiment runner for the jacobi-mult laboratory: configurable
//! parameter sweeps with versioned CSV/JSON reports and a run manifest.
//!
//! Exit codes: 0 when every case is ok, warned or an expected domain error;
//! 1 when any case fails; 2 for configuration errors.

pub mod config;
pub mod error;
pub mod identities;
pub mod norm_bound;
pub mod reconstruct;
pub mod report;
pub mod runner;
pub mod sweep;

use config::{default_config, ExperimentConfig, Format};
use error::{CliError, Result};
use report::{CaseRecord, Row, RunManifest};
use runner::{mark_expected, run_cases, Case, Dump};
use std::path::{Path, PathBuf};

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_OUT: &str = "jmult-out";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Identities,
    Sweep(String),
    Reconstruct,
    NormBound,
}

impl Command {
    /// Experiment name used for configs and report files.
    pub fn experiment(&self) -> &str {
        match self {
            Command::Identities => "identities",
            Command::Sweep(f) => f,
            Command::Reconstruct => "reconstruct",
            Command::NormBound => "norm-bound",
        }
    }

    pub fn stem(&self) -> String {
        match self {
            Command::Sweep(f) => format!("sweep-{f}"),
            c => c.experiment().to_string(),
        }
    }
}

/// Flag values that take precedence over the config file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub max_degree: Option<usize>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

impl Overrides {
    fn apply(&self, cfg: &mut ExperimentConfig) {
        if let Some(s) = self.seed {
            cfg.seed = Some(s);
        }
        if let Some(d) = self.max_degree {
            cfg.budgets.max_degree = d;
        }
        if let Some(f) = self.format {
            cfg.format = Some(f);
        }
        if let Some(o) = &self.out {
            cfg.output = Some(o.clone());
        }
    }
}

fn validate(cfg: &ExperimentConfig) -> Result<()> {
    let b = &cfg.budgets;
    if !(b.eps > 0.0 && b.eps.is_finite()) {
        return Err(CliError::config(format!("budgets.eps must be positive, got {}", b.eps)));
    }
    if b.n_max == 0 || b.max_terms == 0 || b.max_degree == 0 {
        return Err(CliError::config("budgets.n_max, max_terms and max_degree must be positive"));
    }
    if b.node_count == Some(0) {
        return Err(CliError::config("budgets.node_count must be positive"));
    }
    let g = &cfg.grid;
    for (name, axis) in [
        ("p", &g.p),
        ("alpha", &g.alpha),
        ("beta", &g.beta),
        ("mu", &g.mu),
        ("nu", &g.nu),
        ("sigma", &g.sigma),
    ] {
        if let Some(v) = axis.iter().find(|v| !v.is_finite()) {
            return Err(CliError::config(format!("grid.{name} contains {v}")));
        }
    }
    Ok(())
}

/// The config a command runs with: the file when given (its experiment name
/// must match the command or be empty), else the built-in default, then the
/// flag overrides.
pub fn resolve_config(cmd: &Command, path: Option<&Path>, overrides: &Overrides) -> Result<ExperimentConfig> {
    if let Command::Sweep(f) = cmd {
        if !sweep::is_functional(f) {
            return Err(CliError::config(format!(
                "unknown functional '{f}'; expected one of {}",
                sweep::FUNCTIONALS.join(", ")
            )));
        }
    }
    let mut cfg = match path {
        Some(p) => {
            let mut c = ExperimentConfig::load(p)?;
            if c.experiment.is_empty() {
                c.experiment = cmd.experiment().to_string();
            } else if c.experiment != cmd.experiment() {
                return Err(CliError::config(format!(
                    "config is for experiment '{}', not '{}'",
                    c.experiment,
                    cmd.experiment()
                )));
            }
            c
        }
        None => default_config(cmd.experiment()).unwrap_or_else(|| ExperimentConfig {
            experiment: cmd.experiment().to_string(),
            ..ExperimentConfig::default()
        }),
    };
    overrides.apply(&mut cfg);
    validate(&cfg)?;
    Ok(cfg)
}

/// Builds the cases of a command. `sweep all` runs every functional's
/// built-in default, with the seed and degree overrides of `cfg`.
pub fn build_cases(cmd: &Command, cfg: &ExperimentConfig) -> Result<Vec<Case>> {
    let mut cases = match cmd {
        Command::Identities => identities::cases(cfg),
        Command::Sweep(f) if f == "all" => {
            let mut out = Vec::new();
            for name in sweep::FUNCTIONALS.iter().filter(|&&n| n != "all") {
                let mut sub = default_config(name).expect("every functional has a default");
                sub.seed = cfg.seed.or(sub.seed);
                sub.budgets.max_degree = cfg.budgets.max_degree;
                let mut cs = sweep::cases(name, &sub);
                mark_expected(&mut cs, &sub);
                out.extend(cs);
            }
            return Ok(out);
        }
        Command::Sweep(f) => sweep::cases(f, cfg),
        Command::Reconstruct => reconstruct::cases(cfg)?,
        Command::NormBound => norm_bound::cases(cfg),
    };
    mark_expected(&mut cases, cfg);
    Ok(cases)
}

/// Everything a run produces, before anything is written.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub rows: Vec<Row>,
    pub dumps: Vec<Dump>,
    pub manifest: RunManifest,
}

impl RunOutput {
    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.status.is_failure()).count()
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.failures() > 0)
    }
}

pub fn execute(cmd: &Command, cfg: &ExperimentConfig, jobs: usize) -> Result<RunOutput> {
    let cases = build_cases(cmd, cfg)?;
    let mut warnings = Vec::new();
    if cases.is_empty() {
        warnings.push("parameter grid produced no cases; the report is empty".to_string());
    }
    let results = run_cases(&cases, jobs);
    let mut rows = Vec::new();
    let mut dumps = Vec::new();
    let mut records = Vec::new();
    for (case, res) in cases.iter().zip(results) {
        let status = res
            .outcome
            .rows
            .iter()
            .map(|r| r.status)
            .max()
            .unwrap_or(report::Status::Ok);
        records.push(CaseRecord {
            experiment: case.experiment.clone(),
            case: case.label.clone(),
            params: report::params_field(&case.params),
            status,
            wall_ms: res.wall_ms,
        });
        rows.extend(res.outcome.rows);
        dumps.extend(res.outcome.dumps);
    }
    Ok(RunOutput {
        rows,
        dumps,
        manifest: RunManifest {
            config_hash: cfg.hash(),
            artifact_version: ARTIFACT_VERSION.to_string(),
            command: cmd.stem(),
            report_sha256: String::new(),
            warnings,
            cases: records,
        },
    })
}

/// Writes the report, the dump (when any) and the manifest; returns the
/// report path.
pub fn write_outputs(cmd: &Command, cfg: &ExperimentConfig, out: &mut RunOutput) -> Result<PathBuf> {
    let dir = cfg.output.clone().unwrap_or_else(|| PathBuf::from(DEFAULT_OUT));
    let stem = cmd.stem();
    let format = cfg.format.unwrap_or_default();
    let bytes = match format {
        Format::Csv => report::csv_bytes(&out.rows)?,
        Format::Json => report::json_bytes(&out.rows),
    };
    let ext = match format {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    let path = dir.join(format!("{stem}.{ext}"));
    report::write_file(&path, &bytes)?;
    if !out.dumps.is_empty() {
        let mut d = serde_json::to_vec_pretty(&out.dumps).expect("dumps serialize");
        d.push(b'\n');
        report::write_file(&dir.join(format!("{stem}.dump.json")), &d)?;
    }
    out.manifest.report_sha256 = report::sha256_hex(&bytes);
    out.manifest.write(&dir, &stem)?;
    Ok(path)
}
