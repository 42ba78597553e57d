//! Both sides of the Hausdorff–Young, Parseval, sup and summed coefficient
//! inequalities, and the Cesàro kernel L¹ norms.

use super::operator::{expansion_norm, TrialKind};
use super::report::InequalityCheck;
use crate::error::{Error, Result};
use crate::fourier_jacobi::{conjugate_exponent, weighted_norm, ExpansionPair, GridFunction, WeightedNormSpec};
use crate::frac_diff::{difference_sequence, CoefficientSequence};
use crate::special_fn::{binomial_table, cached_rule, default_node_count, normalization_table, JacobiParams};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Δ_2^ν Δ^μ c on a finite sequence (either order may be zero).
pub fn finite_chain(c: &[Complex64], mu: f64, nu: f64) -> Result<Vec<Complex64>> {
    let mut seq = CoefficientSequence::finite(c.to_vec());
    if mu != 0.0 {
        seq = difference_sequence(&seq, mu, 1)?.0;
    }
    if nu != 0.0 {
        seq = difference_sequence(&seq, nu, 2)?.0;
    }
    Ok(seq.take(c.len()))
}

/// (Σ |x_k|^q)^{1/q}, the max for q = ∞.
fn lq_norm(x: &[Complex64], q: f64) -> f64 {
    if q.is_infinite() {
        return x.iter().map(|v| v.norm()).fold(0.0, f64::max);
    }
    x.iter().map(|v| v.norm().powf(q)).sum::<f64>().powf(1.0 / q)
}

fn check_p(p: f64) -> Result<()> {
    if !(1.0..=2.0).contains(&p) {
        return Err(Error::domain(format!("Hausdorff–Young inequalities need 1 ≤ p ≤ 2, got {p}")));
    }
    Ok(())
}

fn check_ultraspherical(f: &ExpansionPair<f64>) -> Result<f64> {
    let params = f.params();
    if !params.is_ultraspherical() {
        return Err(Error::domain("this inequality concerns ultraspherical expansions (α = β)"));
    }
    Ok(params.alpha())
}

/// Σ a_k cos kθ by Clenshaw's recurrence.
fn cosine_sum(a: &[Complex64], theta: f64) -> Complex64 {
    let x = theta.cos();
    let zero = Complex64::new(0.0, 0.0);
    let (mut b1, mut b2) = (zero, zero);
    for &ak in a.iter().skip(1).rev() {
        let b = ak + b1 * (2.0 * x) - b2;
        b2 = b1;
        b1 = b;
    }
    a.first().copied().unwrap_or(zero) + b1 * x - b2
}

/// (Σ |Δ_2^ν Δ^μ a_k|^{p′})^{1/p′} against
/// (∫_0^π |Σ a_k cos kθ (sin θ/2)^{μ+ν}(cos θ/2)^ν|^p dθ)^{1/p}.
pub fn hausdorff_young_check(a: &[Complex64], mu: f64, nu: f64, p: f64) -> Result<InequalityCheck> {
    check_p(p)?;
    if !(mu >= 0.0 && nu >= 0.0) {
        return Err(Error::domain("Hausdorff–Young chain needs μ, ν ≥ 0"));
    }
    let lhs = lq_norm(&finite_chain(a, mu, nu)?, conjugate_exponent(p));
    let spec = WeightedNormSpec::new(p, (p * (mu + nu) - 1.0) / 2.0, (p * nu - 1.0) / 2.0)?;
    let d = a.len().saturating_sub(1);
    let n = default_node_count(if spec.is_even_integer() { 2 * d } else { d });
    let coeffs = a.to_vec();
    let g = GridFunction::from_fn(
        cached_rule(n, spec.a, spec.b)?,
        move |t| cosine_sum(&coeffs, t),
        Some(d),
    );
    let rhs = if a.iter().all(|v| v.norm() == 0.0) {
        0.0
    } else {
        weighted_norm(&g, &spec)?
    };
    Ok(InequalityCheck::new(lhs, rhs))
}

/// The Jacobi form: a_k = s_k f̂(k) on the left, ‖f‖_{L^p_{(α,β)}} on the right.
/// At μ = ν = 0, p = 2 both sides agree by Parseval.
pub fn hausdorff_young_jacobi(f: &ExpansionPair<f64>, mu: f64, nu: f64, p: f64) -> Result<InequalityCheck> {
    check_p(p)?;
    let params = f.params();
    let s = normalization_table(params, f.degree());
    let a: Vec<Complex64> = f
        .coefficients()
        .iter()
        .enumerate()
        .map(|(k, &c)| c * s.s(k))
        .collect();
    let lhs = lq_norm(&finite_chain(&a, mu, nu)?, conjugate_exponent(p));
    let rhs = expansion_norm(f, p, params.alpha(), params.beta())?;
    Ok(InequalityCheck::new(lhs, rhs))
}

/// (Σ |(k+1)^{α+1/2} Δ_2^ν f̂(k)|^{p′})^{1/p′} against
/// (∫_0^π |(sin θ)^{α+ν+1/2} f(θ)|^p dθ)^{1/p}, for an ultraspherical f.
pub fn hausdorff_young_ultraspherical(f: &ExpansionPair<f64>, nu: f64, p: f64) -> Result<InequalityCheck> {
    check_p(p)?;
    let alpha = check_ultraspherical(f)?;
    if !(nu >= 0.0) {
        return Err(Error::domain("ν must be nonnegative"));
    }
    let d = finite_chain(f.coefficients(), 0.0, nu)?;
    let weighted: Vec<Complex64> = d
        .iter()
        .enumerate()
        .map(|(k, &v)| v * ((k + 1) as f64).powf(alpha + 0.5))
        .collect();
    let lhs = lq_norm(&weighted, conjugate_exponent(p));
    let e = alpha + nu + 0.5;
    let c = (p * e - 1.0) / 2.0;
    let rhs = 2f64.powf(e) * expansion_norm(f, p, c, c)?;
    Ok(InequalityCheck::new(lhs, rhs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParsevalSide {
    /// ∫ |f|² w ≤ C Σ |Δ_2^μ f̂|² h_k, for −1/2 < μ < α+2.
    A,
    /// The converse, for μ > −1.
    B,
}

/// I = ∫_0^π |f|² (sin θ/2 · cos θ/2)^{2(α+μ)+1} dθ and S = Σ |Δ_2^μ f̂(k)|² h_k.
///
/// The integral carries the product of half-angle sines and cosines, that is
/// (sin θ)^{2(α+μ)+1} up to the factor 2^{−2(α+μ)−1}, so that μ = 0 is
/// Parseval's identity with ratio exactly 1. Side A reports I/S, side B S/I.
/// A μ outside the side's range is computed anyway and flagged.
pub fn parseval_weighted(f: &ExpansionPair<f64>, mu: f64, side: ParsevalSide) -> Result<InequalityCheck> {
    let alpha = check_ultraspherical(f)?;
    let mut warnings = Vec::new();
    let admissible = match side {
        ParsevalSide::A => mu > -0.5 && mu < alpha + 2.0,
        ParsevalSide::B => mu > -1.0,
    };
    if !admissible {
        warnings.push(format!("mu = {mu} outside the admissible range of side {side:?}"));
    }
    let c = alpha + mu;
    if !(c > -1.0) {
        return Err(Error::domain(format!("weight exponent α + μ = {c} must exceed −1")));
    }
    let h = normalization_table(f.params(), f.degree());
    let d = finite_chain(f.coefficients(), 0.0, mu)?;
    let s: f64 = d.iter().enumerate().map(|(k, v)| v.norm_sqr() * h.h(k)).sum();
    let i = expansion_norm(f, 2.0, c, c)?.powi(2);
    let check = match side {
        ParsevalSide::A => InequalityCheck::new(i, s),
        ParsevalSide::B => InequalityCheck::new(s, i),
    };
    Ok(check.warned(&warnings))
}

/// sup_k |s_k Δ_2^ν f̂(k)| against ∫_0^π |(sin θ)^{α+ν+1/2} f(θ)| dθ.
pub fn sup_coefficient_bound(f: &ExpansionPair<f64>, nu: f64) -> Result<InequalityCheck> {
    let alpha = check_ultraspherical(f)?;
    if !(nu >= 0.0) {
        return Err(Error::domain("ν must be nonnegative"));
    }
    let s = normalization_table(f.params(), f.degree());
    let d = finite_chain(f.coefficients(), 0.0, nu)?;
    let lhs = d
        .iter()
        .enumerate()
        .map(|(k, v)| v.norm() * s.s(k))
        .fold(0.0, f64::max);
    let e = alpha + nu + 0.5;
    let c = (e - 1.0) / 2.0;
    let rhs = 2f64.powf(e) * expansion_norm(f, 1.0, c, c)?;
    Ok(InequalityCheck::new(lhs, rhs))
}

/// Σ (k+1)^{ν−1} |Δ_2^ν f̂(k)| against ‖f‖_{L¹_α}. A ν outside (0, α+1/2) is
/// flagged.
pub fn summed_diff_bound(f: &ExpansionPair<f64>, nu: f64) -> Result<InequalityCheck> {
    let alpha = check_ultraspherical(f)?;
    let mut warnings = Vec::new();
    if !(nu > 0.0 && nu < alpha + 0.5) {
        warnings.push(format!("nu = {nu} outside (0, α+1/2)"));
    }
    let d = finite_chain(f.coefficients(), 0.0, nu)?;
    let lhs: f64 = d
        .iter()
        .enumerate()
        .map(|(k, v)| ((k + 1) as f64).powf(nu - 1.0) * v.norm())
        .sum();
    let rhs = expansion_norm(f, 1.0, alpha, alpha)?;
    Ok(InequalityCheck::new(lhs, rhs).warned(&warnings))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelSystem {
    /// (α, −1/2) kernel, L¹ weight (sin θ/2)^{2α+1}.
    EvenHalf,
    /// (α, 1/2) kernel, L¹ weight (sin θ/2)^{2α+1} cos θ/2.
    OddHalf,
}

/// ∫_0^π |Σ_{j≤k} (A^μ_{k−j}/A^μ_k) h_j R_j(cos θ)| w(θ) dθ in the chosen
/// half system.
pub fn cesaro_kernel_l1(mu: f64, k: usize, alpha: f64, system: KernelSystem) -> Result<f64> {
    if !(mu > -1.0) {
        return Err(Error::domain(format!("Cesàro order μ = {mu} must exceed −1")));
    }
    let (params, b) = match system {
        KernelSystem::EvenHalf => (JacobiParams::new(alpha, -0.5)?, -0.5),
        KernelSystem::OddHalf => (JacobiParams::extended(alpha, 0.5)?, 0.0),
    };
    let a = binomial_table(mu, k);
    let coeffs: Vec<f64> = (0..=k).map(|j| a.get(k - j) / a.get(k)).collect();
    expansion_norm(&ExpansionPair::from_real(params, &coeffs), 1.0, alpha, b)
}

/// Trials for empirical constants at a degree budget: `random` seeded random
/// polynomials of full degree, and Cesàro kernels of order α + 3/2 centred at
/// 0, π/6, π/3 and π/2 at every dyadic degree 8, 16, …, up to the budget. The
/// kernel families are nested, so the sup over a larger budget never drops.
pub fn check_family(degree: usize, alpha: f64, random: usize, seed: u64) -> Vec<TrialKind> {
    let delta = alpha + 1.5;
    let mut out: Vec<TrialKind> = (0..random as u64)
        .map(|j| TrialKind::Random {
            degree,
            seed: seed.wrapping_add(j),
        })
        .collect();
    let mut n = 8.min(degree);
    loop {
        out.push(TrialKind::Cesaro { n, delta });
        for q in [6.0, 3.0, 2.0] {
            out.push(TrialKind::Kernel {
                n,
                delta,
                theta: std::f64::consts::PI / q,
            });
        }
        if n >= degree {
            break;
        }
        n = (2 * n).min(degree);
    }
    out
}
