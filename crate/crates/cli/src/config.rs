//! Experiment configuration: a parameter grid, budgets and output settings,
//! read from JSON.

use crate::error::{CliError, Result};
use jacobi_mult::frac_diff::CoefficientSequence;
use jacobi_mult::multiplier_lab::{MultiplierSequence, DEFAULT_N_MAX};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Parameter axes. An axis an experiment needs but the grid leaves empty
/// produces no cases.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct Grid {
    pub p: Vec<f64>,
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub mu: Vec<f64>,
    pub nu: Vec<f64>,
    pub sigma: Vec<f64>,
    pub degrees: Vec<usize>,
    pub seeds: Vec<u64>,
    pub k: Vec<usize>,
    pub i: Vec<u32>,
    pub n: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Budgets {
    pub max_degree: usize,
    /// Fixed quadrature size where an experiment allows one; otherwise the
    /// exactness rule decides.
    pub node_count: Option<usize>,
    pub n_max: usize,
    pub eps: f64,
    pub max_terms: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Self {
            max_degree: 256,
            node_count: None,
            n_max: DEFAULT_N_MAX,
            eps: 1e-10,
            max_terms: 1 << 22,
        }
    }
}

/// The multiplier (or coefficient sequence) an experiment acts on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum MultiplierSpec {
    Identity,
    Constant { value: f64 },
    Dirac { n: usize },
    Cesaro { delta: f64, n: usize },
    Oscillating { sigma: f64 },
    Chi { i: u32 },
    Literal { values: Vec<f64> },
    /// (k+1)^{−σ}
    Power { sigma: f64 },
    /// (−1)^k
    Alternating,
}

impl MultiplierSpec {
    pub fn build(&self) -> jacobi_mult::Result<MultiplierSequence> {
        Ok(match *self {
            MultiplierSpec::Identity => MultiplierSequence::constant(Complex64::new(1.0, 0.0)),
            MultiplierSpec::Constant { value } => MultiplierSequence::constant(Complex64::new(value, 0.0)),
            MultiplierSpec::Dirac { n } => MultiplierSequence::dirac(n),
            MultiplierSpec::Cesaro { delta, n } => MultiplierSequence::cesaro(delta, n)?,
            MultiplierSpec::Oscillating { sigma } => MultiplierSequence::oscillating(sigma)?,
            MultiplierSpec::Chi { i } => MultiplierSequence::chi(i),
            MultiplierSpec::Literal { ref values } => MultiplierSequence::from_real(values),
            MultiplierSpec::Power { sigma } => MultiplierSequence::custom(CoefficientSequence::power_law(sigma))?,
            MultiplierSpec::Alternating => {
                MultiplierSequence::custom(CoefficientSequence::cosine(std::f64::consts::PI))?
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: String,
    pub grid: Grid,
    pub budgets: Budgets,
    pub output: Option<PathBuf>,
    pub format: Option<Format>,
    pub seed: Option<u64>,
    /// Random trials per case for empirical constants.
    pub trials: Option<usize>,
    pub multiplier: Option<MultiplierSpec>,
    /// Coefficient file for `reconstruct`.
    pub coefficients: Option<PathBuf>,
    /// Cases whose parameters match every entry of one of these maps are
    /// expected to fail with a domain error.
    pub expected_domain_errors: Vec<BTreeMap<String, f64>>,
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let mut cfg: Self = serde_json::from_str(&text).map_err(|e| CliError::parse(path, &e))?;
        // a relative coefficient file is relative to the config
        if let (Some(c), Some(dir)) = (&cfg.coefficients, path.parent()) {
            if c.is_relative() {
                cfg.coefficients = Some(dir.join(c));
            }
        }
        Ok(cfg)
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    pub fn trials(&self) -> usize {
        self.trials.unwrap_or(20)
    }

    pub fn expects_domain_error(&self, params: &BTreeMap<String, f64>) -> bool {
        self.expected_domain_errors
            .iter()
            .any(|m| m.iter().all(|(k, v)| params.get(k) == Some(v)))
    }

    /// SHA-256 of the canonical JSON form, after flag overrides.
    pub fn hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let json = serde_json::to_vec(self).expect("config serializes");
        hex::encode(Sha256::digest(json))
    }
}

fn grid(f: impl FnOnce(&mut Grid)) -> Grid {
    let mut g = Grid::default();
    f(&mut g);
    g
}

fn config(experiment: &str, g: Grid) -> ExperimentConfig {
    ExperimentConfig {
        experiment: experiment.into(),
        grid: g,
        ..ExperimentConfig::default()
    }
}

/// The built-in configuration of each experiment, used without `--config`.
/// Budgets are small enough that the whole default suite runs in seconds.
pub fn default_config(experiment: &str) -> Option<ExperimentConfig> {
    let alphas = vec![-0.5, 0.0, 0.5, 1.0, 2.5];
    let mut cfg = match experiment {
        "identities" => config(
            experiment,
            grid(|g| {
                g.alpha = alphas;
                g.beta = vec![-0.5, 0.0, 0.5];
                g.mu = vec![0.25, 0.5, 1.0, 1.75];
                g.p = vec![1.0, 1.5, 2.0, 3.0];
                g.seeds = (0..20).collect();
            }),
        ),
        "sufficiency-d" => {
            let mut c = config(
                experiment,
                grid(|g| {
                    g.p = vec![1.5];
                    g.alpha = vec![0.5, 1.0];
                    g.mu = vec![1.5, 2.5];
                }),
            );
            c.multiplier = Some(MultiplierSpec::Cesaro { delta: 2.0, n: 64 });
            c.budgets.n_max = 256;
            c
        }
        "necessity" => {
            let mut c = config(
                experiment,
                grid(|g| {
                    g.p = vec![1.05, 1.9];
                    g.alpha = vec![1.0];
                    g.beta = vec![1.0];
                }),
            );
            c.multiplier = Some(MultiplierSpec::Oscillating { sigma: 0.25 });
            c.budgets.n_max = 256;
            c.budgets.eps = 1e-6;
            c
        }
        "bounded-variation" => {
            let mut c = config(experiment, Grid::default());
            c.multiplier = Some(MultiplierSpec::Cesaro { delta: 1.0, n: 64 });
            c.budgets.n_max = 256;
            c
        }
        "l1-k" => {
            let mut c = config(
                experiment,
                grid(|g| {
                    g.alpha = vec![0.5, 1.0];
                    g.mu = vec![2.5];
                }),
            );
            c.multiplier = Some(MultiplierSpec::Power { sigma: 1.0 });
            c.budgets.n_max = 256;
            c
        }
        "cohen" => {
            let mut c = config(
                experiment,
                grid(|g| {
                    g.p = vec![1.1];
                    g.alpha = vec![0.0, 1.0];
                    g.n = vec![8, 16, 32, 64];
                }),
            );
            c.multiplier = Some(MultiplierSpec::Dirac { n: 0 });
            c
        }
        "hausdorff-young" => {
            let mut c = config(
                experiment,
                grid(|g| {
                    g.p = vec![1.0, 1.5, 2.0];
                    g.mu = vec![0.0, 0.5];
                    g.nu = vec![0.0, 0.5];
                    g.degrees = vec![16, 32];
                }),
            );
            c.trials = Some(8);
            c
        }
        "hausdorff-young-jacobi" => {
            let mut c = config(
                experiment,
                grid(|g| {
                    g.p = vec![1.5, 2.0];
                    g.alpha = vec![1.0];
                    g.beta = vec![0.5];
                    g.degrees = vec![16, 32];
                }),
            );
            c.trials = Some(8);
            c
        }
        "hausdorff-young-ultraspherical" => {
            let mut c = config(
                experiment,
                grid(|g| {
                    g.p = vec![1.5, 2.0];
                    g.alpha = vec![1.0];
                    g.nu = vec![0.5];
                    g.degrees = vec![16, 32];
                }),
            );
            c.trials = Some(8);
            c
        }
        "parseval" => {
            let mut c = config(
                experiment,
                grid(|g| {
                    g.alpha = vec![1.0];
                    g.mu = vec![-0.25, 0.5, 1.0, 1.9, 3.5];
                    g.degrees = vec![16, 32];
                }),
            );
            c.trials = Some(8);
            c
        }
        "sup-coefficient" => {
            let mut c = config(
                experiment,
                grid(|g| {
                    g.alpha = vec![1.0];
                    g.nu = vec![0.0, 0.5, 1.5];
                    g.degrees = vec![16, 32];
                }),
            );
            c.trials = Some(8);
            c
        }
        "summed-diff" => {
            let mut c = config(
                experiment,
                grid(|g| {
                    g.alpha = vec![1.0];
                    g.nu = vec![0.5, 1.0, 1.45];
                    g.degrees = vec![16, 32];
                }),
            );
            c.trials = Some(8);
            c
        }
        "cesaro-kernel" => config(
            experiment,
            grid(|g| {
                g.alpha = vec![0.5, 1.0];
                g.mu = vec![0.25, 2.0];
                g.k = vec![8, 16, 32, 64];
            }),
        ),
        "lemma45" => {
            let mut c = config(
                experiment,
                grid(|g| {
                    g.alpha = vec![0.25, 1.0];
                    g.nu = vec![0.5, 0.75];
                    g.k = vec![64];
                }),
            );
            // ν must stay below α + 1/2
            c.expected_domain_errors = vec![BTreeMap::from([("alpha".into(), 0.25), ("nu".into(), 0.75)])];
            c
        }
        "test-function" => config(
            experiment,
            grid(|g| {
                g.p = vec![1.5, 2.0];
                g.alpha = vec![0.5, 1.0];
                g.i = vec![1, 2, 3, 4];
            }),
        ),
        "reconstruct" => config(
            experiment,
            grid(|g| {
                g.alpha = vec![0.5, 1.0];
                g.mu = vec![2.0];
                g.degrees = vec![16];
            }),
        ),
        "norm-bound" => {
            let mut c = config(
                experiment,
                grid(|g| {
                    g.p = vec![1.25, 2.0];
                    g.alpha = vec![0.5];
                }),
            );
            c.multiplier = Some(MultiplierSpec::Cesaro { delta: 1.0, n: 16 });
            c.budgets.max_degree = 32;
            c.trials = Some(4);
            c
        }
        _ => return None,
    };
    cfg.seed = Some(7);
    Some(cfg)
}
