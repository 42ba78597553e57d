//! Constructive synthesis of an L¹_α function with prescribed coefficients
//! through Cesàro kernels of the two half-angle systems.

use crate::error::{Error, Result};
use crate::fourier_jacobi::{ExpansionPair, GridFunction};
use crate::frac_diff::{difference_sequence, CoefficientSequence};
use crate::special_fn::{binomial_table, cached_rule, default_node_count, JacobiParams};
use num_complex::Complex64;

/// The synthesized f together with its two half-angle components.
#[derive(Debug, Clone)]
pub struct Reconstruction {
    /// f on an (α, α) rule exact for analysis through the coefficient degree.
    pub function: GridFunction<f64>,
    /// f_1 in the (α, −1/2) system, f_e(θ) = f_1(2θ).
    pub f1: ExpansionPair<f64>,
    /// f_2 in the (α, 1/2) system, f_o(θ) = cos θ f_2(2θ).
    pub f2: ExpansionPair<f64>,
    pub warnings: Vec<String>,
}

/// e_j = 2^{2α+1} Σ_{k≥j} A^μ_k Δ^{μ+1}x_k · A^μ_{k−j}/A^μ_k, the coefficient of
/// h_j R_j in the Cesàro kernel series for the half sequence x.
fn kernel_series(x: &[Complex64], mu: f64, scale: f64) -> Result<Vec<Complex64>> {
    let seq = CoefficientSequence::finite(x.to_vec());
    let d = difference_sequence(&seq, mu + 1.0, 1)?.0.take(x.len());
    let a = binomial_table(mu, x.len());
    Ok((0..x.len())
        .map(|j| {
            d[j..]
                .iter()
                .enumerate()
                .fold(Complex64::new(0.0, 0.0), |acc, (i, &dk)| acc + dk * a.get(i))
                * scale
        })
        .collect())
}

/// f = f_e + f_o with f_e(θ) = f_1(2θ), f_o(θ) = cos θ f_2(2θ), where f_1 and
/// f_2 are the Cesàro kernel series of order μ built from c_{2k} and c_{2k+1}.
///
/// The half-angle coefficients carry the factor 2^{2α+1} that the quadratic
/// transforms attach to the even and odd parts, so f̂_{(α,α)}(k) = c_k.
/// Sequences without a sup bound are refused with a convergence error,
/// non-finite entries with a domain error, and a degree above `k_degree` with
/// a resource error. A μ at or below α + 1/2 is flagged.
pub fn l1_reconstruct(c: &CoefficientSequence<f64>, mu: f64, alpha: f64, k_degree: usize) -> Result<Reconstruction> {
    if !c.is_bounded() {
        return Err(Error::convergence("reconstruction needs a bounded coefficient sequence"));
    }
    let len = c
        .finite_len()
        .ok_or_else(|| Error::domain("reconstruction needs finite support"))?;
    let values = c.take(len);
    if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::domain("coefficients must be finite numbers"));
    }
    let degree = len.saturating_sub(1);
    if degree > k_degree {
        return Err(Error::Resource(format!("degree {degree} above the budget {k_degree}")));
    }
    let mut warnings = Vec::new();
    if !(mu > alpha + 0.5) {
        warnings.push(format!("mu = {mu} not above α + 1/2 = {}", alpha + 0.5));
    }
    let full = JacobiParams::ultraspherical(alpha)?;
    let scale = 2f64.powf(2.0 * alpha + 1.0);
    let even: Vec<Complex64> = values.iter().step_by(2).copied().collect();
    let odd: Vec<Complex64> = values.iter().skip(1).step_by(2).copied().collect();
    let f1 = ExpansionPair::new(full.even_companion(), kernel_series(&even, mu, scale)?);
    let f2 = ExpansionPair::new(full.odd_companion(), kernel_series(&odd, mu, scale)?);
    let rule = cached_rule(default_node_count(2 * degree), alpha, alpha)?;
    let (g1, g2) = (f1.clone(), f2.clone());
    let function = GridFunction::from_fn(
        rule,
        move |t| g1.evaluate(2.0 * t) + g2.evaluate(2.0 * t) * t.cos(),
        Some(degree),
    );
    Ok(Reconstruction {
        function,
        f1,
        f2,
        warnings,
    })
}
