//! Multiplier operators on finite trial polynomials and the lower bounds they
//! give for multiplier norms.

use super::sequence::{MultiplierSequence, TestSequenceChi};
use crate::error::{Error, Result};
use crate::fourier_jacobi::{quad_transform_inverse, weighted_norm, ExpansionPair, WeightedNormSpec};
use crate::frac_diff::{CoefficientSequence, Parity};
use crate::special_fn::{
    binomial_table, cached_rule, default_node_count, normalization_table, JacobiParams, JacobiRecurrence,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Largest synthesis degree accepted by [`test_function_norm`] by default.
pub const TEST_FUNCTION_MAX_DEGREE: usize = 1 << 14;

/// T_m on a coefficient sequence: m_k f̂(k).
pub fn apply_multiplier_coeffs(m: &MultiplierSequence, coeffs: &CoefficientSequence<f64>) -> Result<CoefficientSequence<f64>> {
    if !coeffs.is_finite() {
        return Err(Error::domain("multipliers act on finite coefficient sequences"));
    }
    coeffs.pointwise_mul(m.sequence())
}

/// T_m f for a polynomial in its own Jacobi system.
pub fn apply_multiplier(m: &MultiplierSequence, f: &ExpansionPair<f64>) -> ExpansionPair<f64> {
    f.multiply(m.sequence())
}

/// ‖f‖_{L^p_{(a,b)}} of a polynomial.
pub fn expansion_norm(f: &ExpansionPair<f64>, p: f64, a: f64, b: f64) -> Result<f64> {
    let spec = WeightedNormSpec::new(p, a, b)?;
    let d = f.degree();
    let n = if spec.is_even_integer() {
        default_node_count(p as usize * d)
    } else {
        default_node_count(d)
    };
    weighted_norm(&f.to_grid(cached_rule(n, a, b)?), &spec)
}

/// Named trial polynomials, given by their coefficients in a Jacobi system.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TrialKind {
    /// f̂(k) = 1 for k ≤ n: the Dirichlet kernel at θ' = 0.
    Dirichlet { n: usize },
    /// f̂(k) = A_{n−k}^δ / A_n^δ.
    Cesaro { n: usize, delta: f64 },
    /// f̂(k) = A_{n−k}^δ / A_n^δ · R_k(cos θ0), the Cesàro kernel centred at θ0.
    Kernel { n: usize, delta: f64, theta: f64 },
    /// f̂(k) = s_k^{−1} χ_i(k).
    Chi { i: u32 },
    /// f̂(k) = δ_{kn}.
    Single { n: usize },
    /// f̂(k) = u_k / s_k with u_k uniform in [−1, 1], k ≤ degree.
    Random { degree: usize, seed: u64 },
}

impl TrialKind {
    pub fn degree(&self) -> usize {
        match *self {
            TrialKind::Dirichlet { n }
            | TrialKind::Cesaro { n, .. }
            | TrialKind::Kernel { n, .. }
            | TrialKind::Single { n } => n,
            TrialKind::Chi { i } => TestSequenceChi::new(i).support().end - 1,
            TrialKind::Random { degree, .. } => degree,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            TrialKind::Dirichlet { n } => format!("dirichlet(n={n})"),
            TrialKind::Cesaro { n, delta } => format!("cesaro(n={n},delta={delta})"),
            TrialKind::Kernel { n, delta, theta } => format!("kernel(n={n},delta={delta},theta={theta})"),
            TrialKind::Chi { i } => format!("chi(i={i})"),
            TrialKind::Single { n } => format!("single(n={n})"),
            TrialKind::Random { degree, seed } => format!("random(degree={degree},seed={seed})"),
        }
    }

    /// Coefficients f̂(0..=degree) in the system `params`.
    pub fn coefficients(&self, params: &JacobiParams<f64>) -> Vec<Complex64> {
        let d = self.degree();
        let re = |v: Vec<f64>| v.into_iter().map(|x| Complex64::new(x, 0.0)).collect();
        match *self {
            TrialKind::Dirichlet { n } => re(vec![1.0; n + 1]),
            TrialKind::Cesaro { n, delta } => re(cesaro_weights(n, delta)),
            TrialKind::Kernel { n, delta, theta } => {
                let r = JacobiRecurrence::new(*params, n).table(theta.cos());
                re(cesaro_weights(n, delta).iter().zip(&r).map(|(w, r)| w * r).collect())
            }
            TrialKind::Chi { i } => {
                let s = normalization_table(params, d);
                re(TestSequenceChi::new(i)
                    .values()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c / s.s(k))
                    .collect())
            }
            TrialKind::Single { n } => {
                let mut v = vec![0.0; n + 1];
                v[n] = 1.0;
                re(v)
            }
            TrialKind::Random { degree, seed } => {
                let s = normalization_table(params, degree);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                re((0..=degree).map(|k| rng.random_range(-1.0..=1.0) / s.s(k)).collect())
            }
        }
    }

    pub fn pair(&self, params: &JacobiParams<f64>) -> ExpansionPair<f64> {
        ExpansionPair::new(*params, self.coefficients(params))
    }
}

fn cesaro_weights(n: usize, delta: f64) -> Vec<f64> {
    let a = binomial_table(delta, n);
    (0..=n).map(|k| a.get(n - k) / a.get(n)).collect()
}

/// Dirichlet and (C, 1) kernels at dyadic degrees, χ_i test functions, Cesàro
/// kernels of order α + 3/2 centred at π/4, π/2, 3π/4, and `random` seeded
/// random polynomials, all of degree at most `max_degree`.
pub fn standard_family(max_degree: usize, alpha: f64, random: usize, seed: u64) -> Vec<TrialKind> {
    let mut out = Vec::new();
    let mut n = 1;
    while n <= max_degree {
        out.push(TrialKind::Dirichlet { n });
        out.push(TrialKind::Cesaro { n, delta: 1.0 });
        n *= 2;
    }
    let mut i = 0;
    while (8usize << i) - 1 <= max_degree {
        out.push(TrialKind::Chi { i });
        i += 1;
    }
    for q in 1..=3 {
        out.push(TrialKind::Kernel {
            n: max_degree,
            delta: alpha + 1.5,
            theta: std::f64::consts::PI * q as f64 / 4.0,
        });
    }
    out.extend((0..random as u64).map(|j| TrialKind::Random {
        degree: max_degree,
        seed: seed.wrapping_add(j),
    }));
    out
}

/// Largest ratio ‖T_m f‖/‖f‖ over a trial family, with the trial attaining it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormBound {
    pub value: f64,
    pub best: String,
    pub ratios: Vec<(String, f64)>,
}

/// Lower bound max_f ‖T_m f‖_{L^p_{(a,b)}}/‖f‖_{L^p_{(a,b)}} for ‖m‖ on
/// L^p_{(a,b)}, with trials expanded in the system `params`. Trials of zero
/// norm are skipped.
pub fn multiplier_norm_lower_bound(
    m: &MultiplierSequence,
    p: f64,
    params: &JacobiParams<f64>,
    weight: (f64, f64),
    family: &[TrialKind],
) -> Result<NormBound> {
    if family.is_empty() {
        return Err(Error::domain("empty trial family"));
    }
    let mut ratios = Vec::with_capacity(family.len());
    for t in family {
        let f = t.pair(params);
        let nf = expansion_norm(&f, p, weight.0, weight.1)?;
        if nf == 0.0 {
            continue;
        }
        let ntf = expansion_norm(&apply_multiplier(m, &f), p, weight.0, weight.1)?;
        ratios.push((t.label(), ntf / nf));
    }
    let (best, value) = ratios
        .iter()
        .fold((String::new(), 0.0), |acc, (l, r)| if *r > acc.1 { (l.clone(), *r) } else { acc });
    Ok(NormBound { value, best, ratios })
}

/// Lower-bound estimates for ‖m‖ restricted to one parity in L^p_α and for the
/// half sequence in the companion system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RestrictedEquivalence {
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
}

/// Each trial gives coefficients c_k in the half system, (α, −1/2) for even
/// and (α, 1/2) for odd; the full trial has f̂(2k+o) = c_k/2^{2α+1} in (α, α).
/// The left side takes ratios in L^p_α with the full multiplier, the right
/// side in L^p_{(α,−1/2)} or L^p_{(α,(p−1)/2)} with m_e or m_o.
pub fn restricted_norm_equivalence(
    m: &MultiplierSequence,
    p: f64,
    alpha: f64,
    parity: Parity,
    family: &[TrialKind],
) -> Result<RestrictedEquivalence> {
    if family.is_empty() {
        return Err(Error::domain("empty trial family"));
    }
    let full = JacobiParams::ultraspherical(alpha)?;
    let half = match parity {
        Parity::Even => full.even_companion(),
        Parity::Odd => full.odd_companion(),
    };
    let (half_m, half_b) = match parity {
        Parity::Even => (m.even_part(), -0.5),
        Parity::Odd => (m.odd_part(), (p - 1.0) / 2.0),
    };
    let (mut lhs, mut rhs) = (0.0f64, 0.0f64);
    for t in family {
        let g = t.pair(&half);
        let empty = ExpansionPair::new(match parity {
            Parity::Even => full.odd_companion(),
            Parity::Odd => full.even_companion(),
        }, Vec::new());
        let f = match parity {
            Parity::Even => quad_transform_inverse(&g, &empty)?,
            Parity::Odd => quad_transform_inverse(&empty, &g)?,
        };
        let nf = expansion_norm(&f, p, alpha, alpha)?;
        let ng = expansion_norm(&g, p, alpha, half_b)?;
        if nf == 0.0 || ng == 0.0 {
            continue;
        }
        lhs = lhs.max(expansion_norm(&apply_multiplier(m, &f), p, alpha, alpha)? / nf);
        rhs = rhs.max(expansion_norm(&apply_multiplier(&half_m, &g), p, alpha, half_b)? / ng);
    }
    Ok(RestrictedEquivalence {
        lhs,
        rhs,
        ratio: lhs / rhs,
    })
}

/// ‖Σ s_k^{−1} χ_i(k) h_k R_k‖_{L^p_{(α,β)}}, a polynomial of degree 2^{i+3} − 1.
pub fn test_function_norm(i: u32, p: f64, params: &JacobiParams<f64>, max_degree: usize) -> Result<f64> {
    let t = TrialKind::Chi { i };
    if i > 40 || t.degree() > max_degree {
        return Err(Error::Resource(format!(
            "test function χ_{i} needs degree 2^{} − 1, budget {max_degree}",
            i + 3
        )));
    }
    expansion_norm(&t.pair(params), p, params.alpha(), params.beta())
}
