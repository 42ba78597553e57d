//! Parameter sweeps over the multiplier functionals and inequality checks.
//! One row per parameter tuple, with blocks (or per-budget constants) and
//! the stability verdict.

use crate::config::{default_config, ExperimentConfig, MultiplierSpec};
use crate::report::Row;
use crate::runner::{label, product, usize_axis, Case, Params};
use jacobi_mult::fourier_jacobi::ExpansionPair;
use jacobi_mult::multiplier_lab::{
    bounded_variation_functional, cesaro_kernel_l1, check_family, cohen_exponent, cohen_in_range, estimate_constant,
    hausdorff_young_check, hausdorff_young_jacobi, hausdorff_young_ultraspherical, l1_sufficiency_k, lemma45_check,
    multiplier_norm_lower_bound, necessity_functional, necessity_orders, parseval_weighted, relative_change,
    sufficiency_d, summed_diff_bound, sup_coefficient_bound, test_function_norm, ConstantEstimate, FunctionalOptions,
    FunctionalReport, InequalityCheck, KernelSystem, L1Variant, MultiplierSequence, NecessityOrders, ParsevalSide,
    TrialKind, STABILITY_TOL,
};
use jacobi_mult::special_fn::JacobiParams;
use jacobi_mult::Result;
use std::f64::consts::FRAC_PI_2;
use std::sync::Arc;

pub const FUNCTIONALS: [&str; 15] = [
    "sufficiency-d",
    "necessity",
    "bounded-variation",
    "l1-k",
    "cohen",
    "hausdorff-young",
    "hausdorff-young-jacobi",
    "hausdorff-young-ultraspherical",
    "parseval",
    "sup-coefficient",
    "summed-diff",
    "cesaro-kernel",
    "lemma45",
    "test-function",
    "all",
];

pub fn is_functional(name: &str) -> bool {
    FUNCTIONALS.contains(&name)
}

pub fn options(cfg: &ExperimentConfig) -> FunctionalOptions {
    FunctionalOptions {
        n_max: cfg.budgets.n_max,
        eps: cfg.budgets.eps,
        max_terms: cfg.budgets.max_terms,
    }
}

pub fn functional_row(experiment: &str, case: &str, params: &Params, r: &FunctionalReport) -> Row {
    let mut row = Row::new(experiment, case, params, r.value);
    row.tail_bound = Some(r.tail_bound);
    row.stable = r.stable;
    row.blocks = r.blocks.iter().map(|b| b.value).collect();
    row.warned(&r.warnings)
}

/// Row for an empirical constant: the value at the largest budget, the
/// constant at every budget as blocks and the doubling verdict.
pub fn constant_row(experiment: &str, case: &str, params: &Params, est: &ConstantEstimate, warnings: &[String]) -> Row {
    let mut row = Row::new(experiment, case, params, est.last());
    row.stable = Some(est.stable);
    row.blocks = est.constants.clone();
    row.push_note(&format!("drift {:e}", est.drift));
    row.warned(warnings)
}

/// Largest ratio over the check family at each degree budget; warnings of the
/// individual checks are collected once.
fn family_constant(
    degrees: &[usize],
    alpha: f64,
    trials: usize,
    seed: u64,
    check: impl Fn(&TrialKind) -> Result<InequalityCheck>,
) -> Result<(ConstantEstimate, Vec<String>)> {
    let mut warnings: Vec<String> = Vec::new();
    let est = estimate_constant(degrees, |d| {
        let mut worst = 0.0f64;
        for t in check_family(d, alpha, trials, seed) {
            let c = check(&t)?;
            for w in c.warnings {
                if !warnings.contains(&w) {
                    warnings.push(w);
                }
            }
            worst = worst.max(c.ratio.unwrap_or(0.0));
        }
        Ok(worst)
    })?;
    Ok((est, warnings))
}

fn multiplier_spec(cfg: &ExperimentConfig, functional: &str) -> MultiplierSpec {
    cfg.multiplier
        .clone()
        .or_else(|| default_config(functional).and_then(|c| c.multiplier))
        .unwrap_or(MultiplierSpec::Identity)
}

fn degrees(cfg: &ExperimentConfig) -> Vec<usize> {
    cfg.grid.degrees.iter().copied().filter(|&d| d <= cfg.budgets.max_degree).collect()
}

/// Least-squares slope of log y against log x.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// Lower bound for ‖δ_N‖ on L^p_α from the dilated test functions χ_i with
/// 2^i ≤ N < 2^{i+1} and the two dilates below.
pub fn cohen_lower_bound(n: usize, p: f64, alpha: f64) -> Result<f64> {
    let params = JacobiParams::ultraspherical(alpha)?;
    let j = n.max(1).ilog2();
    let family: Vec<TrialKind> = (j.saturating_sub(2)..=j).map(|i| TrialKind::Chi { i }).collect();
    Ok(multiplier_norm_lower_bound(&MultiplierSequence::dirac(n), p, &params, (alpha, alpha), &family)?.value)
}

/// θ_i = (π/2)·i/51, i = 1..=50.
pub fn lemma_thetas() -> Vec<f64> {
    (1..=50).map(|i| FRAC_PI_2 * i as f64 / 51.0).collect()
}

pub fn cases(functional: &str, cfg: &ExperimentConfig) -> Vec<Case> {
    let exp = format!("sweep-{functional}");
    let g = &cfg.grid;
    let opts = options(cfg);
    let (trials, seed) = (cfg.trials(), cfg.seed());
    let degs = degrees(cfg);
    let mut out = Vec::new();
    let e = exp.as_str();
    match functional {
        "sufficiency-d" => {
            let spec = multiplier_spec(cfg, functional);
            for p in product(&[("p", &g.p), ("alpha", &g.alpha), ("mu", &g.mu)]) {
                let (q, spec, ex) = (p.clone(), spec.clone(), exp.clone());
                out.push(Case::row(e, label(&p), p, move || {
                    let r = sufficiency_d(&spec.build()?, q["mu"], q["p"], q["alpha"], &opts)?;
                    Ok(functional_row(&ex, &label(&q), &q, &r))
                }));
            }
        }
        "necessity" => {
            let spec = multiplier_spec(cfg, functional);
            let optional = |v: &[f64]| -> Vec<Option<f64>> {
                if v.is_empty() {
                    vec![None]
                } else {
                    v.iter().map(|&x| Some(x)).collect()
                }
            };
            for base in product(&[("p", &g.p), ("alpha", &g.alpha), ("beta", &g.beta)]) {
                for nu in optional(&g.nu) {
                    for mu in optional(&g.mu) {
                        let mut p = base.clone();
                        nu.map(|v| p.insert("nu".into(), v));
                        mu.map(|v| p.insert("mu".into(), v));
                        let (q, spec, ex) = (p.clone(), spec.clone(), exp.clone());
                        out.push(Case::row(e, label(&p), p, move || {
                            let orders = NecessityOrders { nu, mu };
                            let r = necessity_functional(&spec.build()?, q["p"], q["alpha"], q["beta"], orders, &opts)?;
                            Ok(functional_row(&ex, &label(&q), &q, &r))
                        }));
                    }
                }
            }
        }
        "bounded-variation" => {
            let (spec, ex) = (multiplier_spec(cfg, functional), exp.clone());
            out.push(Case::row(e, "bounded-variation", Params::new(), move || {
                let r = bounded_variation_functional(&spec.build()?, &opts)?;
                Ok(functional_row(&ex, "bounded-variation", &Params::new(), &r))
            }));
        }
        "l1-k" => {
            let spec = multiplier_spec(cfg, functional);
            for p in product(&[("alpha", &g.alpha), ("mu", &g.mu), ("variant", &[42.0, 43.0])]) {
                let (q, spec, ex) = (p.clone(), spec.clone(), exp.clone());
                out.push(Case::row(e, label(&p), p, move || {
                    let variant = if q["variant"] == 42.0 { L1Variant::Thm42 } else { L1Variant::Thm43 };
                    let m = spec.build()?;
                    let r = l1_sufficiency_k(m.sequence(), q["mu"], q["alpha"], variant, &opts)?;
                    Ok(functional_row(&ex, &label(&q), &q, &r))
                }));
            }
        }
        "cohen" => {
            let ns: Vec<usize> = g.n.clone();
            if ns.is_empty() {
                return out;
            }
            for p in product(&[("p", &g.p), ("alpha", &g.alpha)]) {
                let (q, ns, ex) = (p.clone(), ns.clone(), exp.clone());
                out.push(Case::new(e, label(&p), p, move || {
                    let (pp, alpha) = (q["p"], q["alpha"]);
                    let mut rows = Vec::new();
                    let mut points = Vec::new();
                    for &n in &ns {
                        let v = cohen_lower_bound(n, pp, alpha)?;
                        let mut params = q.clone();
                        params.insert("n".into(), n as f64);
                        rows.push(Row::new(&ex, "norm", &params, v));
                        points.push((n as f64, v));
                    }
                    let mut slope = Row::new(&ex, "slope", &q, if points.len() >= 2 { loglog_slope(&points) } else { f64::NAN });
                    slope.blocks = points.iter().map(|pt| pt.1).collect();
                    slope.push_note(&format!("predicted exponent {:e}", cohen_exponent(pp, alpha)));
                    if !cohen_in_range(pp, alpha) {
                        slope = slope.warned(&[format!("p = {pp} outside 1 < p < (4α+4)/(2α+3)")]);
                    }
                    rows.push(slope);
                    Ok(rows)
                }));
            }
        }
        "hausdorff-young" => {
            let degs = Arc::new(degs);
            for p in product(&[("p", &g.p), ("mu", &g.mu), ("nu", &g.nu)]) {
                let (q, degs, ex) = (p.clone(), degs.clone(), exp.clone());
                out.push(Case::row(e, label(&p), p, move || {
                    let cheb = JacobiParams::ultraspherical(-0.5)?;
                    let (est, w) = family_constant(&degs, -0.5, trials, seed, |t| {
                        hausdorff_young_check(&t.coefficients(&cheb), q["mu"], q["nu"], q["p"])
                    })?;
                    Ok(constant_row(&ex, &label(&q), &q, &est, &w))
                }));
            }
        }
        "hausdorff-young-jacobi" => {
            let degs = Arc::new(degs);
            for p in product(&[("p", &g.p), ("alpha", &g.alpha), ("beta", &g.beta)]) {
                let (q, degs, ex) = (p.clone(), degs.clone(), exp.clone());
                out.push(Case::row(e, label(&p), p, move || {
                    let params = JacobiParams::new(q["alpha"], q["beta"])?;
                    let (nu, mu) = necessity_orders(q["p"], q["alpha"], q["beta"]);
                    let (est, w) = family_constant(&degs, q["alpha"], trials, seed, |t| {
                        hausdorff_young_jacobi(&t.pair(&params), mu, nu, q["p"])
                    })?;
                    Ok(constant_row(&ex, &label(&q), &q, &est, &w))
                }));
            }
        }
        "hausdorff-young-ultraspherical" => {
            let degs = Arc::new(degs);
            for p in product(&[("p", &g.p), ("alpha", &g.alpha), ("nu", &g.nu)]) {
                let (q, degs, ex) = (p.clone(), degs.clone(), exp.clone());
                out.push(Case::row(e, label(&p), p, move || {
                    let params = JacobiParams::ultraspherical(q["alpha"])?;
                    let (est, w) = family_constant(&degs, q["alpha"], trials, seed, |t| {
                        hausdorff_young_ultraspherical(&t.pair(&params), q["nu"], q["p"])
                    })?;
                    Ok(constant_row(&ex, &label(&q), &q, &est, &w))
                }));
            }
        }
        "parseval" | "sup-coefficient" | "summed-diff" => {
            let order = if functional == "parseval" { ("mu", &g.mu) } else { ("nu", &g.nu) };
            let sides: &[f64] = if functional == "parseval" { &[0.0, 1.0] } else { &[0.0] };
            let degs = Arc::new(degs);
            for p in product(&[("alpha", &g.alpha), (order.0, order.1)]) {
                for &side in sides {
                    let (q, degs, ex, name) = (p.clone(), degs.clone(), exp.clone(), functional.to_string());
                    let case = match name.as_str() {
                        "parseval" => format!("side={},{}", if side == 0.0 { "a" } else { "b" }, label(&p)),
                        _ => label(&p),
                    };
                    let c2 = case.clone();
                    out.push(Case::row(e, case, p.clone(), move || {
                        let params = JacobiParams::ultraspherical(q["alpha"])?;
                        let (est, w) = family_constant(&degs, q["alpha"], trials, seed, |t| {
                            let f: ExpansionPair<f64> = t.pair(&params);
                            match name.as_str() {
                                "parseval" => {
                                    let s = if side == 0.0 { ParsevalSide::A } else { ParsevalSide::B };
                                    parseval_weighted(&f, q["mu"], s)
                                }
                                "sup-coefficient" => sup_coefficient_bound(&f, q["nu"]),
                                _ => summed_diff_bound(&f, q["nu"]),
                            }
                        })?;
                        Ok(constant_row(&ex, &c2, &q, &est, &w))
                    }));
                }
            }
        }
        "cesaro-kernel" => {
            let mut ks = g.k.clone();
            ks.sort_unstable();
            if ks.is_empty() {
                return out;
            }
            let ks = Arc::new(ks);
            for p in product(&[("alpha", &g.alpha), ("mu", &g.mu), ("system", &[0.0, 1.0])]) {
                let (q, ks, ex) = (p.clone(), ks.clone(), exp.clone());
                out.push(Case::row(e, label(&p), p, move || {
                    let system = if q["system"] == 0.0 { KernelSystem::EvenHalf } else { KernelSystem::OddHalf };
                    let values = ks
                        .iter()
                        .map(|&k| cesaro_kernel_l1(q["mu"], k, q["alpha"], system))
                        .collect::<Result<Vec<_>>>()?;
                    let k_max = *ks.last().expect("nonempty");
                    let sup = values.iter().copied().fold(0.0, f64::max);
                    let half = ks
                        .iter()
                        .zip(&values)
                        .filter(|(&k, _)| 2 * k <= k_max)
                        .map(|(_, &v)| v)
                        .fold(0.0, f64::max);
                    let mut row = Row::new(&ex, &label(&q), &q, sup);
                    row.blocks = values;
                    row.stable = Some(relative_change(half, sup) < STABILITY_TOL);
                    if q["mu"] <= q["alpha"] + 0.5 {
                        row = row.warned(&[format!("μ = {} at or below α + 1/2", q["mu"])]);
                    }
                    Ok(row)
                }));
            }
        }
        "lemma45" => {
            for p in product(&[("alpha", &g.alpha), ("nu", &g.nu), ("k", &usize_axis(&g.k))]) {
                let (q, ex) = (p.clone(), exp.clone());
                out.push(Case::row(e, label(&p), p, move || {
                    let ks: Vec<usize> = (0..=q["k"] as usize).collect();
                    let r = lemma45_check(q["nu"], q["alpha"], &ks, &lemma_thetas())?;
                    let mut row = Row::new(&ex, &label(&q), &q, r.sup_b);
                    row.blocks = vec![r.half_a, r.sup_a, r.half_b, r.sup_b];
                    row.stable = Some(r.stable);
                    Ok(row.warned(&r.warnings))
                }));
            }
        }
        "test-function" => {
            let budget = cfg.budgets.max_degree;
            let is: Vec<f64> = g.i.iter().map(|&i| i as f64).collect();
            for p in product(&[("p", &g.p), ("alpha", &g.alpha), ("i", &is)]) {
                let (q, ex) = (p.clone(), exp.clone());
                out.push(Case::row(e, label(&p), p, move || {
                    let params = JacobiParams::ultraspherical(q["alpha"])?;
                    let v = test_function_norm(q["i"] as u32, q["p"], &params, budget)?;
                    Ok(Row::new(&ex, &label(&q), &q, v))
                }));
            }
        }
        _ => {}
    }
    out
}
