//! Pointwise bounds for Δ_2^ν R_k^{(α,α)}(cos θ).

use super::report::{relative_change, STABILITY_TOL};
use crate::error::{Error, Result};
use crate::frac_diff::{
    frac_diff, CoefficientSequence, DecayInfo, DiffValue, DifferenceSpec, PowerEnvelope, SequenceRule, Truncation,
};
use crate::special_fn::{cached_x_rule, ln_gamma};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::Mutex;

/// c_α = 2^{α+1/2} Γ(α+1) / (Γ(1/2) Γ(α+1/2)).
pub fn mehler_constant(alpha: f64) -> f64 {
    ((alpha + 0.5) * std::f64::consts::LN_2 + ln_gamma(alpha + 1.0) - 0.5 * PI.ln() - ln_gamma(alpha + 0.5)).exp()
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > -0.5) {
        return Err(Error::domain(format!("α = {alpha} must exceed −1/2")));
    }
    Ok(())
}

/// Δ_2^ν R_k^{(α,α)}(cos θ) from Mehler's integral,
/// c_α (sin θ)^{−2α} ∫_0^θ (cos φ − cos θ)^{α−1/2} (2 sin φ)^ν cos((k+α+ν+1/2)φ − νπ/2) dφ,
/// for 0 < θ < π/2 and ν ≥ 0.
///
/// With φ = θ(1+x)/2 the endpoint factors (1−x)^{α−1/2} and (1+x)^ν become
/// the weight of a Gauss–Jacobi rule and the rest is smooth.
pub fn mehler_diff(k: usize, nu: f64, alpha: f64, theta: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(nu >= 0.0) {
        return Err(Error::domain("Mehler path needs ν ≥ 0"));
    }
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return Err(Error::domain(format!("θ = {theta} outside (0, π/2)")));
    }
    let rule = cached_x_rule(40 + k / 2, alpha - 0.5, nu)?;
    let freq = k as f64 + alpha + nu + 0.5;
    let shift = nu * FRAC_PI_2;
    let half = theta / 2.0;
    let integral = rule.integrate(|x| {
        let phi = half * (1.0 + x);
        let near = 2.0 * ((theta + phi) / 2.0).sin() * ((theta - phi) / 2.0).sin() / (1.0 - x);
        let low = if nu == 0.0 { 1.0 } else { (2.0 * phi.sin() / (1.0 + x)).powf(nu) };
        near.powf(alpha - 0.5) * low * (freq * phi - shift).cos()
    });
    Ok(mehler_constant(alpha) * theta.sin().powf(-2.0 * alpha) * half * integral)
}

/// Recurrence coefficients (a_n, b_n, c_n) of R_n = (a_n x + b_n)R_{n−1} − c_n R_{n−2}, n ≥ 2.
fn recurrence(alpha: f64, n: usize) -> (f64, f64, f64) {
    let (al, be) = (alpha, alpha);
    let s = al + be;
    let nn = n as f64;
    let t = 2.0 * nn + s;
    let a = (t - 1.0) * t / (2.0 * (nn + s) * (nn + al));
    let b = (t - 1.0) * (al - be) * s / (2.0 * (nn + s) * (t - 2.0) * (nn + al));
    let c = (nn + be - 1.0) * t * (nn - 1.0) / ((nn + s) * (t - 2.0) * (nn + al));
    (a, b, c)
}

/// n ↦ R_n^{(α,α)}(x) as a streaming rule. A cursor remembers the last two
/// values so increasing requests cost one recurrence step each; a request
/// behind the cursor restarts from n = 0.
struct JacobiValues {
    alpha: f64,
    x: f64,
    cursor: Mutex<(usize, f64, f64)>,
}

impl JacobiValues {
    fn new(alpha: f64, x: f64) -> Self {
        // R_1^{(α,α)}(x) = x
        Self {
            alpha,
            x,
            cursor: Mutex::new((0, 1.0, x)),
        }
    }

    /// Moves the cursor to n; afterwards it holds (n, R_n, R_{n+1}).
    fn advance(&self, cur: &mut (usize, f64, f64), n: usize) {
        if n < cur.0 {
            *cur = (0, 1.0, self.x);
        }
        while cur.0 < n {
            let m = cur.0 + 2;
            let (a, b, c) = recurrence(self.alpha, m);
            let next = (a * self.x + b) * cur.2 - c * cur.1;
            *cur = (cur.0 + 1, cur.2, next);
        }
    }
}

impl SequenceRule<f64> for JacobiValues {
    fn at(&self, n: usize) -> Complex64 {
        let mut out = [Complex64::new(0.0, 0.0)];
        self.fill(n, 1, &mut out);
        out[0]
    }

    fn fill(&self, start: usize, stride: usize, out: &mut [Complex64]) {
        let mut cur = self.cursor.lock().expect("cursor poisoned");
        for (j, o) in out.iter_mut().enumerate() {
            self.advance(&mut cur, start + stride * j);
            *o = Complex64::new(cur.1, 0.0);
        }
    }
}

/// 2e(2 + √2 α)/π, the uniform bound for (sin θ)^{2α+1} p_n(cos θ)² with p_n
/// orthonormal.
fn emn_constant(alpha: f64) -> f64 {
    2.0 * std::f64::consts::E * (2.0 + std::f64::consts::SQRT_2 * alpha) / PI
}

/// Largest (n+1)^{α+1/2} ‖P_n‖/P_n(1) over n ≤ 2^16, with a 0.1% margin.
fn norm_ratio_bound(alpha: f64) -> f64 {
    let ln_q2 = |n: f64| {
        (2.0 * alpha + 1.0) * std::f64::consts::LN_2 + 2.0 * ln_gamma(alpha + 1.0) + (2.0 * alpha + 1.0) * (n + 1.0).ln()
            + ln_gamma(n + 1.0)
            - (2.0 * n + 2.0 * alpha + 1.0).ln()
            - ln_gamma(n + 2.0 * alpha + 1.0)
    };
    let best = (0..=1usize << 16).map(|n| ln_q2(n as f64)).fold(f64::NEG_INFINITY, f64::max);
    1.001 * (best / 2.0).exp()
}

/// Δ_2^ν R_k(cos θ) = Σ_j A_j^{−ν−1} R_{k+2j}(cos θ) by the tail-controlled
/// series. The envelope |R_n(cos θ)| ≤ C (sin θ)^{−α−1/2}(n+1)^{−α−1/2}
/// bounds the tail, with C from the Erdélyi–Magnus–Nevai inequality.
pub fn direct_diff(k: usize, nu: f64, alpha: f64, theta: f64, eps: f64, max_terms: usize) -> Result<DiffValue<f64>> {
    check_alpha(alpha)?;
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::domain(format!("θ = {theta} outside (0, π)")));
    }
    let e = alpha + 0.5;
    let scale = emn_constant(alpha).sqrt() * norm_ratio_bound(alpha) * theta.sin().powf(-e);
    let decay = DecayInfo {
        sup: Some(1.0),
        vanishing: true,
        envelope: Some(PowerEnvelope::new(scale, e)),
        ..DecayInfo::default()
    };
    let seq = CoefficientSequence::rule(JacobiValues::new(alpha, theta.cos()), decay);
    let spec = DifferenceSpec::new(nu, 2, Truncation::Tail { eps, max_terms })?;
    frac_diff(&seq, &spec, k)
}

/// Sup ratios for the two bounds over a (k, θ) grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lemma45Report {
    pub alpha: f64,
    pub nu: f64,
    /// sup |Δ_2^ν R_k| / (sin θ)^ν.
    pub sup_a: f64,
    /// sup |Δ_2^ν R_k| / ((sin θ)^{ν−α−1/2}(k+1)^{−α−1/2}).
    pub sup_b: f64,
    /// The same sups over k ≤ k_max/2.
    pub half_a: f64,
    pub half_b: f64,
    pub drift_a: f64,
    pub drift_b: f64,
    pub stable: bool,
    /// (k, θ) attaining sup_b.
    pub argmax_b: (usize, f64),
    pub warnings: Vec<String>,
}

/// [a]*: the greatest integer strictly below a.
fn floor_star(a: f64) -> f64 {
    a.ceil() - 1.0
}

/// Evaluates Δ_2^ν R_k(cos θ) by the Mehler path on every (k, θ) and reports
/// the sup ratios against both bounds, with the doubling verdict comparing
/// k ≤ k_max/2 against all k.
pub fn lemma45_check(nu: f64, alpha: f64, k_list: &[usize], theta_grid: &[f64]) -> Result<Lemma45Report> {
    check_alpha(alpha)?;
    if !(nu > 0.0 && nu < alpha + 0.5) {
        return Err(Error::domain(format!("ν = {nu} outside (0, α+1/2)")));
    }
    if let Some(t) = theta_grid.iter().find(|&&t| !(t > 0.0 && t < FRAC_PI_2)) {
        return Err(Error::domain(format!("θ = {t} outside (0, π/2)")));
    }
    if k_list.is_empty() || theta_grid.is_empty() {
        return Err(Error::domain("empty (k, θ) grid"));
    }
    let mut warnings = Vec::new();
    if alpha > 0.5 && nu < floor_star(alpha + 0.5) {
        warnings.push(format!(
            "bound b) assumes ν ≥ [α+1/2]* = {} for α > 1/2",
            floor_star(alpha + 0.5)
        ));
    }
    let k_max = *k_list.iter().max().expect("nonempty");
    let (mut sup_a, mut sup_b, mut half_a, mut half_b) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut argmax_b = (0, 0.0);
    for &k in k_list {
        let kb = ((k + 1) as f64).powf(-alpha - 0.5);
        for &t in theta_grid {
            let v = mehler_diff(k, nu, alpha, t)?.abs();
            let s = t.sin();
            let ra = v / s.powf(nu);
            let rb = v / (s.powf(nu - alpha - 0.5) * kb);
            sup_a = sup_a.max(ra);
            if rb > sup_b {
                sup_b = rb;
                argmax_b = (k, t);
            }
            if 2 * k <= k_max {
                half_a = half_a.max(ra);
                half_b = half_b.max(rb);
            }
        }
    }
    let drift_a = relative_change(half_a, sup_a);
    let drift_b = relative_change(half_b, sup_b);
    Ok(Lemma45Report {
        alpha,
        nu,
        sup_a,
        sup_b,
        half_a,
        half_b,
        drift_a,
        drift_b,
        stable: drift_a < STABILITY_TOL && drift_b < STABILITY_TOL,
        argmax_b,
        warnings,
    })
}
