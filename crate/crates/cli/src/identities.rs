//! Exact identities and oracles: quadratic transformations, normalization
//! doubling, the trigonometric difference closed form, composition of
//! differences, the parity split, Chebyshev reduction and Jacobi symmetry.

use crate::config::ExperimentConfig;
use crate::report::{Row, Status};
use crate::runner::{product, Case, Params};
use jacobi_mult::fourier_jacobi::{analyze, even_odd_decompose, weighted_norm, ExpansionPair, WeightedNormSpec};
use jacobi_mult::frac_diff::{
    andersen_compose_check, frac_diff, trig_diff_closed_form, CoefficientSequence, DifferenceSpec, TrigKind,
    Truncation,
};
use jacobi_mult::special_fn::{jacobi_poly, normalization_table, JacobiParams, JacobiRecurrence};
use jacobi_mult::{Error, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

const EXPERIMENT: &str = "identities";

pub const QUADRATIC_TOL: f64 = 1e-10;
pub const NORMALIZATION_TOL: f64 = 1e-10;
/// Achieved tail bound required of the cosine oracle.
pub const COSINE_BOUND_TOL: f64 = 1e-8;
/// Rounding of the oracle itself: cos((k+μ/2)θ − μπ/2) carries the argument
/// error of kθ, a few ulps of its magnitude.
pub const ORACLE_SLACK: f64 = 1e-13;
pub const COMPOSITION_SLACK: f64 = 1e-13;
pub const PARITY_TOL: f64 = 1e-10;
pub const SANDWICH_TOL: f64 = 1e-9;
pub const CHEBYSHEV_TOL: f64 = 1e-12;
pub const SYMMETRY_TOL: f64 = 1e-10;

pub const COMPOSITION_PAIRS: [(f64, f64); 3] = [(0.5, 0.5), (0.3, 0.9), (1.0, 0.5)];

fn theta_nodes(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| PI * (i as f64 + 0.5) / n as f64)
}

fn identity_row(name: &str, params: &Params, value: f64, tol: f64) -> Row {
    Row::new(EXPERIMENT, name, params, value).within(tol)
}

/// max |R_{2k}^{(α,α)}(cos θ) − R_k^{(α,−1/2)}(cos 2θ)| and the odd analogue
/// with the factor cos θ, over k ≤ 64 and 200 nodes.
pub fn quadratic_transform_error(alpha: f64) -> Result<f64> {
    let pa = JacobiParams::ultraspherical(alpha)?;
    let ra = JacobiRecurrence::new(pa, 129);
    let re = JacobiRecurrence::new(pa.even_companion(), 64);
    let ro = JacobiRecurrence::new(pa.odd_companion(), 64);
    let mut worst = 0.0f64;
    for th in theta_nodes(200) {
        let ta = ra.table(th.cos());
        let te = re.table((2.0 * th).cos());
        let to = ro.table((2.0 * th).cos());
        for k in 0..=64 {
            worst = worst.max((ta[2 * k] - te[k]).abs());
            worst = worst.max((ta[2 * k + 1] - th.cos() * to[k]).abs());
        }
    }
    Ok(worst)
}

/// max relative error of h_{2k}^{(α,α)} = 2^{2α+1} h_k^{(α,−1/2)} and the odd
/// analogue, k ≤ 256.
pub fn normalization_error(alpha: f64) -> Result<f64> {
    let pa = JacobiParams::ultraspherical(alpha)?;
    let ha = normalization_table(&pa, 513);
    let he = normalization_table(&pa.even_companion(), 256);
    let ho = normalization_table(&pa.odd_companion(), 256);
    let c = 2f64.powf(2.0 * alpha + 1.0);
    Ok((0..=256)
        .map(|k| {
            let e = ha.h(2 * k) / (c * he.h(k)) - 1.0;
            let o = ha.h(2 * k + 1) / (c * ho.h(k)) - 1.0;
            e.abs().max(o.abs())
        })
        .fold(0.0, f64::max))
}

/// Worst case of Δ_κ^μ cos kθ against its closed form on θ = πi/51,
/// i = 1..=50, and k ∈ {0, 7, 64}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosineOracle {
    pub max_error: f64,
    pub max_bound: f64,
    /// max(error − bound), negative when every value is inside its bound.
    pub max_excess: f64,
}

pub fn cosine_oracle(mu: f64, kappa: usize, eps: f64, max_terms: usize) -> Result<CosineOracle> {
    let spec = DifferenceSpec::new(mu, kappa, Truncation::Tail { eps, max_terms })?;
    let mut out = CosineOracle {
        max_error: 0.0,
        max_bound: 0.0,
        max_excess: f64::NEG_INFINITY,
    };
    for i in 1..=50 {
        let theta = PI * i as f64 / 51.0;
        let s = CoefficientSequence::cosine(theta);
        for k in [0usize, 7, 64] {
            let exact = trig_diff_closed_form(TrigKind::Cos, k, mu, kappa, theta);
            let (v, bound) = match frac_diff(&s, &spec, k) {
                Ok(v) => (v.value.re, v.bound),
                Err(Error::Tolerance { achieved, value, .. }) => (value.0, achieved),
                Err(e) => return Err(e),
            };
            let err = (v - exact).abs();
            out.max_error = out.max_error.max(err);
            out.max_bound = out.max_bound.max(bound);
            out.max_excess = out.max_excess.max(err - bound);
        }
    }
    Ok(out)
}

/// The seeded bounded test sequences: finite for even seeds, eventually
/// constant for odd ones, length 1..=40 with entries in [−1, 1].
pub fn bounded_sequence(seed: u64) -> CoefficientSequence<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = rng.random_range(1..=40);
    let head: Vec<Complex64> = (0..len).map(|_| Complex64::new(rng.random_range(-1.0..1.0), 0.0)).collect();
    if seed.is_multiple_of(2) {
        CoefficientSequence::finite(head)
    } else {
        let tail = Complex64::new(rng.random_range(-1.0..1.0), 0.0);
        CoefficientSequence::eventually_constant(head, tail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompositionCheck {
    pub max_gap: f64,
    pub max_bound: f64,
    pub max_excess: f64,
}

/// |Δ^{λ+κ}a_k − Δ^λΔ^κ a_k| against the combined bounds, k ∈ {0, 1, 5, 20}.
pub fn composition_check(lambda: f64, kappa: f64, seeds: &[u64], eps: f64) -> Result<CompositionCheck> {
    let mut out = CompositionCheck {
        max_gap: 0.0,
        max_bound: 0.0,
        max_excess: f64::NEG_INFINITY,
    };
    for &seed in seeds {
        let a = bounded_sequence(seed);
        for k in [0usize, 1, 5, 20] {
            let (lhs, rhs) = andersen_compose_check(&a, lambda, kappa, k, Truncation::tail(eps))?;
            let gap = (lhs.value - rhs.value).norm();
            let bound = lhs.bound + rhs.bound;
            out.max_gap = out.max_gap.max(gap);
            out.max_bound = out.max_bound.max(bound);
            out.max_excess = out.max_excess.max(gap - bound);
        }
    }
    Ok(out)
}

/// A seeded polynomial of degree 1..=64 with coefficients u_k/√h_k.
pub fn random_polynomial(params: JacobiParams<f64>, seed: u64) -> ExpansionPair<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let degree = rng.random_range(1..=64);
    let h = normalization_table(&params, degree);
    let c: Vec<f64> = (0..=degree).map(|k| rng.random_range(-1.0..1.0) / h.h(k).sqrt()).collect();
    ExpansionPair::from_real(params, &c)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParityCheck {
    /// max over seeds of the coefficient pattern error relative to max |f̂|.
    pub pattern_error: f64,
    /// per p: max over seeds of max(‖f‖/(‖f_e‖+‖f_o‖), (‖f_e‖+‖f_o‖)/(2‖f‖)).
    pub sandwich: Vec<(f64, f64)>,
}

/// f_e keeps exactly the even coefficients of f and f_o the odd ones, and
/// ‖f‖ ≤ ‖f_e‖ + ‖f_o‖ ≤ 2‖f‖ in every L^p_α.
pub fn parity_check(alpha: f64, ps: &[f64], seeds: &[u64]) -> Result<ParityCheck> {
    let params = JacobiParams::ultraspherical(alpha)?;
    let specs = ps
        .iter()
        .map(|&p| WeightedNormSpec::new(p, alpha, alpha))
        .collect::<Result<Vec<_>>>()?;
    let mut out = ParityCheck {
        pattern_error: 0.0,
        sandwich: ps.iter().map(|&p| (p, 0.0)).collect(),
    };
    for &seed in seeds {
        let e = random_polynomial(params, seed);
        let deg = e.degree();
        let f = e.synthesize()?;
        let (fe, fo) = even_odd_decompose(&f)?;
        let ce = analyze(&fe, &params, deg)?;
        let co = analyze(&fo, &params, deg)?;
        let scale = e.coefficients().iter().map(|c| c.norm()).fold(0.0, f64::max);
        for k in 0..=deg {
            let (vanish, keep) = if k % 2 == 0 { (&co, &ce) } else { (&ce, &co) };
            let err = vanish.at(k).norm().max((keep.at(k) - e.coefficients()[k]).norm());
            out.pattern_error = out.pattern_error.max(err / scale);
        }
        for (spec, slot) in specs.iter().zip(out.sandwich.iter_mut()) {
            let nf = weighted_norm(&f, spec)?;
            let ne = weighted_norm(&fe, spec)?;
            let no = weighted_norm(&fo, spec)?;
            slot.1 = slot.1.max((nf / (ne + no)).max((ne + no) / (2.0 * nf)));
        }
    }
    Ok(out)
}

/// max |R_k^{(−1/2,−1/2)}(cos θ) − cos kθ| over k ≤ 64 and 200 nodes.
pub fn chebyshev_error() -> Result<f64> {
    let r = JacobiRecurrence::new(JacobiParams::ultraspherical(-0.5)?, 64);
    let mut worst = 0.0f64;
    for th in theta_nodes(200) {
        let t = r.table(th.cos());
        for (k, v) in t.iter().enumerate() {
            worst = worst.max((v - (k as f64 * th).cos()).abs());
        }
    }
    Ok(worst)
}

/// max |P_k^{(α,β)}(−x) − (−1)^k P_k^{(β,α)}(x)| / max(1, |P_k^{(β,α)}(x)|)
/// over k ≤ 32 and 50 nodes. Any α, β > −1 is admissible.
pub fn symmetry_error(alpha: f64, beta: f64) -> Result<f64> {
    let pab = JacobiParams::extended(alpha, beta)?;
    let pba = JacobiParams::extended(beta, alpha)?;
    let mut worst = 0.0f64;
    for th in theta_nodes(50) {
        let x = th.cos();
        for k in 0..=32 {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let a = jacobi_poly(k, &pab, -x)?;
            let b = jacobi_poly(k, &pba, x)?;
            worst = worst.max((a - sign * b).abs() / b.abs().max(1.0));
        }
    }
    Ok(worst)
}

pub fn cases(cfg: &ExperimentConfig) -> Vec<Case> {
    let g = &cfg.grid;
    let b = &cfg.budgets;
    let mut out = Vec::new();
    for p in product(&[("alpha", &g.alpha)]) {
        let alpha = p["alpha"];
        let q = p.clone();
        out.push(Case::row(EXPERIMENT, "quadratic-transform", p.clone(), move || {
            Ok(identity_row("quadratic-transform", &q, quadratic_transform_error(alpha)?, QUADRATIC_TOL))
        }));
        let q = p.clone();
        out.push(Case::row(EXPERIMENT, "normalization", p.clone(), move || {
            Ok(identity_row("normalization", &q, normalization_error(alpha)?, NORMALIZATION_TOL))
        }));
        if alpha == -0.5 {
            let q = p.clone();
            out.push(Case::row(EXPERIMENT, "chebyshev-cosine", p.clone(), move || {
                Ok(identity_row("chebyshev-cosine", &q, chebyshev_error()?, CHEBYSHEV_TOL))
            }));
        }
    }
    for p in product(&[("alpha", &g.alpha), ("beta", &g.beta)]) {
        let q = p.clone();
        out.push(Case::row(EXPERIMENT, "jacobi-symmetry", p.clone(), move || {
            Ok(identity_row("jacobi-symmetry", &q, symmetry_error(q["alpha"], q["beta"])?, SYMMETRY_TOL))
        }));
    }
    let (eps, max_terms) = (b.eps, b.max_terms);
    for p in product(&[("mu", &g.mu), ("kappa", &[1.0, 2.0])]) {
        let q = p.clone();
        out.push(Case::row(EXPERIMENT, "frac-diff-cosine", p.clone(), move || {
            let o = cosine_oracle(q["mu"], q["kappa"] as usize, eps, max_terms)?;
            let mut r = identity_row("frac-diff-cosine", &q, o.max_error, COSINE_BOUND_TOL);
            r.tail_bound = Some(o.max_bound);
            if o.max_excess > ORACLE_SLACK || o.max_bound > COSINE_BOUND_TOL {
                r.status = Status::ToleranceFailure;
                r.push_note(&format!("error exceeds reported bound by {:e}", o.max_excess));
            }
            Ok(r)
        }));
    }
    if !g.seeds.is_empty() {
        let seeds = g.seeds.clone();
        for (lambda, kappa) in COMPOSITION_PAIRS {
            let p = Params::from([("lambda".to_string(), lambda), ("kappa".to_string(), kappa)]);
            let (q, seeds) = (p.clone(), seeds.clone());
            out.push(Case::row(EXPERIMENT, "andersen", p, move || {
                let c = composition_check(lambda, kappa, &seeds, eps)?;
                let mut r = Row::new(EXPERIMENT, "andersen", &q, c.max_gap);
                r.tail_bound = Some(c.max_bound);
                r.tolerance = Some(c.max_bound + COMPOSITION_SLACK);
                if c.max_excess > COMPOSITION_SLACK {
                    r.status = Status::ToleranceFailure;
                }
                Ok(r)
            }));
        }
        for p in product(&[("alpha", &g.alpha)]) {
            if g.p.is_empty() {
                break;
            }
            let (q, seeds, ps) = (p.clone(), seeds.clone(), g.p.clone());
            out.push(Case::new(EXPERIMENT, "parity", p, move || {
                let c = parity_check(q["alpha"], &ps, &seeds)?;
                let mut rows = vec![identity_row("parity-pattern", &q, c.pattern_error, PARITY_TOL)];
                for (pp, v) in c.sandwich {
                    let mut params = q.clone();
                    params.insert("p".into(), pp);
                    rows.push(identity_row("parity-sandwich", &params, v, 1.0 + SANDWICH_TOL));
                }
                Ok(rows)
            }));
        }
    }
    out
}
