//! L¹ reconstruction from prescribed coefficients and the analysis round trip.

use crate::config::ExperimentConfig;
use crate::error::{CliError, Result as CliResult};
use crate::report::Row;
use crate::runner::{label, product, usize_axis, Case, Dump, Outcome, Params};
use jacobi_mult::fourier_jacobi::{analyze, ExpansionDocument};
use jacobi_mult::frac_diff::CoefficientSequence;
use jacobi_mult::multiplier_lab::l1_reconstruct;
use jacobi_mult::special_fn::JacobiParams;
use jacobi_mult::{Error, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use std::path::Path;
use std::sync::Arc;

const EXPERIMENT: &str = "reconstruct";

pub const ROUND_TRIP_TOL: f64 = 1e-8;

/// A coefficient document, optionally declaring that the sequence it stands
/// for has no sup bound.
#[derive(Debug, Clone, Deserialize)]
pub struct CoefficientFile {
    #[serde(flatten)]
    pub document: ExpansionDocument,
    #[serde(default)]
    pub unbounded: bool,
}

impl CoefficientFile {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| CliError::parse(path, &e))
    }
}

/// Seeded coefficients of the given length, entries uniform in [−1, 1].
pub fn random_coefficients(len: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| rng.random_range(-1.0..1.0)).collect()
}

/// Synthesizes f from c and returns max_k |f̂(k) − c_k| with the grid dump.
pub fn round_trip(c: &CoefficientSequence<f64>, mu: f64, alpha: f64, k_degree: usize) -> Result<(f64, Vec<String>, ExpansionDocument)> {
    let r = l1_reconstruct(c, mu, alpha, k_degree)?;
    let len = c.finite_len().unwrap_or(0);
    let back = analyze(&r.function, &JacobiParams::ultraspherical(alpha)?, len.saturating_sub(1))?;
    let err = (0..len).map(|k| (back.at(k) - c.at(k)).norm()).fold(0.0, f64::max);
    Ok((err, r.warnings, ExpansionDocument::from_grid(&r.function)))
}

fn outcome(case: &str, params: &Params, c: &CoefficientSequence<f64>, mu: f64, alpha: f64, k_degree: usize) -> Result<Outcome> {
    let (err, warnings, document) = round_trip(c, mu, alpha, k_degree)?;
    let row = Row::new(EXPERIMENT, case, params, err).within(ROUND_TRIP_TOL).warned(&warnings);
    Ok(Outcome {
        rows: vec![row],
        dumps: vec![Dump {
            case: case.to_string(),
            document,
        }],
    })
}

/// With a coefficient file: one case per μ. Without: one case per
/// (α, μ, degree, seed) on seeded random coefficients.
pub fn cases(cfg: &ExperimentConfig) -> CliResult<Vec<Case>> {
    let g = &cfg.grid;
    let k_degree = cfg.budgets.max_degree;
    let mut out = Vec::new();
    if let Some(path) = &cfg.coefficients {
        let file = CoefficientFile::load(path)?;
        let doc = Arc::new(file.document);
        for p in product(&[("mu", &g.mu)]) {
            let (q, doc, unbounded) = (p.clone(), doc.clone(), file.unbounded);
            let case = format!("file,{}", label(&p));
            let c2 = case.clone();
            out.push(Case::with_outcome(EXPERIMENT, case, p, move || {
                let e = doc.to_expansion()?;
                let (a, b) = (e.params().alpha(), e.params().beta());
                if a != b {
                    return Err(Error::domain(format!("reconstruction needs α = β, got ({a}, {b})")));
                }
                let mut params = q.clone();
                params.insert("alpha".into(), a);
                let c = if unbounded {
                    let values = e.coefficients().to_vec();
                    let f = move |k: usize| values.get(k).copied().unwrap_or(Complex64::new(0.0, 0.0));
                    CoefficientSequence::opaque(f)
                } else {
                    e.sequence()
                };
                outcome(&c2, &params, &c, q["mu"], a, k_degree)
            }));
        }
        return Ok(out);
    }
    let seeds: Vec<f64> = if g.seeds.is_empty() {
        vec![cfg.seed() as f64]
    } else {
        g.seeds.iter().map(|&s| s as f64).collect()
    };
    for p in product(&[("alpha", &g.alpha), ("mu", &g.mu), ("degree", &usize_axis(&g.degrees)), ("seed", &seeds)]) {
        let q = p.clone();
        let case = label(&p);
        let c2 = case.clone();
        out.push(Case::with_outcome(EXPERIMENT, case, p, move || {
            let c = CoefficientSequence::from_real(&random_coefficients(q["degree"] as usize + 1, q["seed"] as u64));
            outcome(&c2, &q, &c, q["mu"], q["alpha"], k_degree)
        }));
    }
    Ok(out)
}
