//! Multiplier-norm lower bounds over the standard trial family.

use crate::config::{default_config, ExperimentConfig, MultiplierSpec};
use crate::report::Row;
use crate::runner::{label, product, Case};
use jacobi_mult::multiplier_lab::{multiplier_norm_lower_bound, standard_family};
use jacobi_mult::special_fn::JacobiParams;

const EXPERIMENT: &str = "norm-bound";

pub fn cases(cfg: &ExperimentConfig) -> Vec<Case> {
    let spec = cfg
        .multiplier
        .clone()
        .or_else(|| default_config(EXPERIMENT).and_then(|c| c.multiplier))
        .unwrap_or(MultiplierSpec::Identity);
    let (max_degree, trials, seed) = (cfg.budgets.max_degree, cfg.trials(), cfg.seed());
    product(&[("p", &cfg.grid.p), ("alpha", &cfg.grid.alpha)])
        .into_iter()
        .map(|p| {
            let (q, spec) = (p.clone(), spec.clone());
            Case::row(EXPERIMENT, label(&p), p, move || {
                let alpha = q["alpha"];
                let params = JacobiParams::ultraspherical(alpha)?;
                let family = standard_family(max_degree, alpha, trials, seed);
                let b = multiplier_norm_lower_bound(&spec.build()?, q["p"], &params, (alpha, alpha), &family)?;
                let mut row = Row::new(EXPERIMENT, &label(&q), &q, b.value);
                row.blocks = b.ratios.iter().map(|r| r.1).collect();
                row.push_note(&format!("attained by {}", b.best));
                Ok(row)
            })
        })
        .collect()
}
