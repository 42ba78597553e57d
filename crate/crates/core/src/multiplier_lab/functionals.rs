//! Dyadic block functionals of multiplier sequences.

use super::report::{accept_tolerance, relative_change, Aggregate, Block, FunctionalOptions, FunctionalReport, STABILITY_TOL};
use super::sequence::MultiplierSequence;
use crate::error::{Error, Result};
use crate::frac_diff::{
    difference_sequence, frac_diff, frac_diff_composed, kernel_abs_sum, CoefficientSequence, DiffValue,
    DifferenceSpec, Truncation,
};
use crate::special_fn::binomial_table;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Blocks [N, 2N] for N = 1, 2, 4, …, n_max, optionally preceded by [0, 0].
pub fn dyadic_blocks(n_max: usize, include_zero: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    if include_zero {
        out.push((0, 0));
    }
    let mut n = 1;
    while n <= n_max {
        out.push((n, 2 * n));
        n *= 2;
    }
    out
}

fn check_options(opts: &FunctionalOptions) -> Result<()> {
    if opts.n_max == 0 || !opts.n_max.is_power_of_two() {
        return Err(Error::domain(format!("n_max = {} is not a power of two", opts.n_max)));
    }
    Ok(())
}

fn tail(opts: &FunctionalOptions) -> Truncation<f64> {
    Truncation::Tail {
        eps: opts.eps,
        max_terms: opts.max_terms,
    }
}

/// Δ_κ^μ m_k for k < len.
fn single_diffs(
    seq: &CoefficientSequence<f64>,
    order: f64,
    increment: usize,
    len: usize,
    opts: &FunctionalOptions,
    warnings: &mut Vec<String>,
) -> Result<Vec<DiffValue<f64>>> {
    let spec = DifferenceSpec::new(order, increment, tail(opts))?;
    (0..len)
        .map(|k| accept_tolerance(frac_diff(seq, &spec, k), warnings))
        .collect()
}

/// Δ_2^ν Δ^μ m_k for k < len. Finite and eventually constant input goes
/// through the exact difference sequence; rule input through the composed
/// tail-controlled series.
fn composite_diffs(
    seq: &CoefficientSequence<f64>,
    mu: f64,
    nu: f64,
    len: usize,
    opts: &FunctionalOptions,
    warnings: &mut Vec<String>,
) -> Result<Vec<DiffValue<f64>>> {
    if mu == 0.0 {
        return single_diffs(seq, nu, 2, len, opts, warnings);
    }
    if seq.eventual_parts().is_some() {
        let (inner, err) = difference_sequence(seq, mu, 1)?;
        let support = inner.finite_len().unwrap_or(0);
        // Σ_j |A_j^{−ν−1}| over the terms that can meet the support
        let amp = binomial_table(-nu - 1.0, support / 2 + 1)
            .values()
            .iter()
            .map(|a| a.abs())
            .sum::<f64>();
        let outer = single_diffs(&inner, nu, 2, len, opts, warnings)?;
        return Ok(outer
            .into_iter()
            .map(|d| DiffValue {
                bound: d.bound + err * amp,
                ..d
            })
            .collect());
    }
    let s = kernel_abs_sum(nu).unwrap_or(2.0);
    let inner = DifferenceSpec::new(
        mu,
        1,
        Truncation::Tail {
            eps: opts.eps / (4.0 * s),
            max_terms: opts.max_terms,
        },
    )?;
    let outer = DifferenceSpec::new(nu, 2, tail(opts))?;
    (0..len)
        .map(|k| accept_tolerance(frac_diff_composed(seq, &inner, &outer, k), warnings))
        .collect()
}

/// Block values (Σ_{k∈B} ((k+1)^s |d_k|)^q/(k+1))^{1/q} and the largest
/// propagated error (Minkowski in the same weighted ℓ^q).
fn weighted_blocks(d: &[DiffValue<f64>], blocks: &[(usize, usize)], s: f64, q: f64) -> (Vec<Block>, f64) {
    let mut worst = 0.0f64;
    let out = blocks
        .iter()
        .map(|&(start, end)| {
            let (mut v, mut e) = (0.0, 0.0);
            for (k, dk) in d.iter().enumerate().take(end + 1).skip(start) {
                let w = ((k + 1) as f64).powf(s * q - 1.0);
                v += w * dk.value.norm().powf(q);
                e += w * dk.bound.powf(q);
            }
            worst = worst.max(e.powf(1.0 / q));
            Block {
                start,
                end,
                value: v.powf(1.0 / q),
            }
        })
        .collect();
    (out, worst)
}

/// Doubling verdict for sup-type reports: the aggregate over blocks up to
/// n_max against blocks up to n_max/2.
fn sup_stability(r: &FunctionalReport, n_max: usize) -> Option<bool> {
    (n_max >= 2).then(|| relative_change(r.aggregate_until(n_max), r.value) < STABILITY_TOL)
}

/// ‖m‖_∞ + sup_N (Σ_{k=N}^{2N} |(k+1)^μ Δ_2^μ m_k|² /(k+1))^{1/2}.
///
/// The sup runs over N ∈ {0} ∪ {1, 2, 4, …, n_max}. A warning records a μ at
/// or below max{(2α+2)|1/p − 1/2|, 1/2}; the value is computed regardless.
pub fn sufficiency_d(m: &MultiplierSequence, mu: f64, p: f64, alpha: f64, opts: &FunctionalOptions) -> Result<FunctionalReport> {
    check_options(opts)?;
    let mut r = FunctionalReport::new("sufficiency_D", Aggregate::Sup)
        .param("p", p)
        .param("alpha", alpha)
        .param("mu", mu);
    let threshold = ((2.0 * alpha + 2.0) * (1.0 / p - 0.5).abs()).max(0.5);
    if !(mu > threshold) {
        r.warn(format!("mu = {mu} not above the sufficiency threshold {threshold}"));
    }
    let mut warnings = Vec::new();
    let d = single_diffs(m.sequence(), mu, 2, 2 * opts.n_max + 1, opts, &mut warnings)?;
    let (blocks, err) = weighted_blocks(&d, &dyadic_blocks(opts.n_max, true), mu, 2.0);
    r.warnings.extend(warnings);
    r.base = m.sup_norm();
    r.blocks = blocks;
    r.tail_bound = err;
    let mut r = r.finish();
    r.stable = sup_stability(&r, opts.n_max);
    Ok(r)
}

/// Orders of the necessity functional. `None` fields are derived from (p, α, β).
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct NecessityOrders {
    pub nu: Option<f64>,
    pub mu: Option<f64>,
}

/// ν = (2β+1)(1/p − 1/2) and μ = 2(α−β)(1/p − 1/2), so μ + ν = (2α+1)(1/p − 1/2).
pub fn necessity_orders(p: f64, alpha: f64, beta: f64) -> (f64, f64) {
    let t = 1.0 / p - 0.5;
    ((2.0 * beta + 1.0) * t, 2.0 * (alpha - beta) * t)
}

/// ‖m‖_∞ + sup_N (Σ_{k=N}^{2N} |(k+1)^{μ+ν} Δ_2^ν Δ^μ m_k|^{p′}/(k+1))^{1/p′}.
///
/// p > 2 is replaced by its dual exponent (the multiplier spaces coincide);
/// the orders are derived from the exponent actually used.
pub fn necessity_functional(
    m: &MultiplierSequence,
    p: f64,
    alpha: f64,
    beta: f64,
    orders: NecessityOrders,
    opts: &FunctionalOptions,
) -> Result<FunctionalReport> {
    check_options(opts)?;
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::domain(format!("necessity functional needs 1 < p < ∞, got {p}")));
    }
    let mut r = FunctionalReport::new("necessity", Aggregate::Sup)
        .param("p", p)
        .param("alpha", alpha)
        .param("beta", beta);
    let pe = if p > 2.0 {
        r.warn(format!("p = {p} > 2 handled through the dual exponent {}", p / (p - 1.0)));
        p / (p - 1.0)
    } else {
        p
    };
    if !(beta > -0.5 && beta <= alpha) {
        r.warn(format!("(alpha, beta) = ({alpha}, {beta}) outside −1/2 < β ≤ α"));
    }
    let (nu0, mu0) = necessity_orders(pe, alpha, beta);
    let nu = orders.nu.unwrap_or(nu0);
    let mu = orders.mu.unwrap_or(mu0);
    let q = pe / (pe - 1.0);
    let mut r = r.param("nu", nu).param("mu", mu).param("q", q);
    let mut warnings = Vec::new();
    let d = composite_diffs(m.sequence(), mu, nu, 2 * opts.n_max + 1, opts, &mut warnings)?;
    let (blocks, err) = weighted_blocks(&d, &dyadic_blocks(opts.n_max, false), mu + nu, q);
    r.warnings.extend(warnings);
    r.base = m.sup_norm();
    r.blocks = blocks;
    r.tail_bound = err;
    let mut r = r.finish();
    r.stable = sup_stability(&r, opts.n_max);
    Ok(r)
}

/// ‖m‖_∞ + sup_N Σ_{k=N}^{2N} |Δ_2 m_k| over N ∈ {0} ∪ {1, 2, …, n_max}.
pub fn bounded_variation_functional(m: &MultiplierSequence, opts: &FunctionalOptions) -> Result<FunctionalReport> {
    check_options(opts)?;
    let mut r = FunctionalReport::new("bounded_variation", Aggregate::Sup);
    let mut worst = 0.0f64;
    r.blocks = dyadic_blocks(opts.n_max, true)
        .into_iter()
        .map(|(start, end)| {
            let mut v = 0.0;
            let mut e = 0.0;
            for k in start..=end {
                let (a, b) = (m.at(k), m.at(k + 2));
                v += (a - b).norm();
                e += f64::EPSILON * (a.norm() + b.norm());
            }
            worst = worst.max(e);
            Block { start, end, value: v }
        })
        .collect();
    r.base = m.sup_norm();
    r.tail_bound = worst;
    let mut r = r.finish();
    r.stable = sup_stability(&r, opts.n_max);
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum L1Variant {
    /// Σ_j (Σ_{B_j} k^{−1}|c_k|²)^{1/2} + Σ_j (Σ_{B_j} k^{−1}|k^μ Δ_2^μ c_k|²)^{1/2}, μ > α+1.
    Thm42,
    /// Σ_k (k+1)^μ |Δ_2^{μ+1} c_k|, μ > α+1/2.
    Thm43,
}

/// K_{c} for the two L¹ sufficiency criteria, summed over the dyadic blocks
/// B_j = [2^{j−1}, 2^j − 1] (plus k = 0 for the second variant).
///
/// Finite sequences are summed completely. For infinite ones the sum stops at
/// k = 2·n_max − 1 and the remainder is extrapolated geometrically from the
/// last two blocks into `tail_bound`; growing blocks give an infinite bound.
pub fn l1_sufficiency_k(
    c: &CoefficientSequence<f64>,
    mu: f64,
    alpha: f64,
    variant: L1Variant,
    opts: &FunctionalOptions,
) -> Result<FunctionalReport> {
    check_options(opts)?;
    if !c.is_bounded() {
        return Err(Error::convergence("L¹ criteria need a bounded sequence"));
    }
    if !c.is_vanishing() {
        return Err(Error::convergence("L¹ criteria need c_k → 0"));
    }
    let name = match variant {
        L1Variant::Thm42 => "l1_sufficiency_K_blocks",
        L1Variant::Thm43 => "l1_sufficiency_K_summed",
    };
    let mut r = FunctionalReport::new(name, Aggregate::Sum)
        .param("mu", mu)
        .param("alpha", alpha);
    let threshold = match variant {
        L1Variant::Thm42 => alpha + 1.0,
        L1Variant::Thm43 => alpha + 0.5,
    };
    if !(mu > threshold) {
        r.warn(format!("mu = {mu} not above {threshold}"));
    }
    let top = (2 * opts.n_max).max(c.finite_len().unwrap_or(0).next_power_of_two());
    let mut ranges: Vec<(usize, usize)> = Vec::new();
    if variant == L1Variant::Thm43 {
        ranges.push((0, 0));
    }
    let mut j = 1;
    while j < top {
        ranges.push((j, 2 * j - 1));
        j *= 2;
    }
    let mut warnings = Vec::new();
    let (order, power) = match variant {
        L1Variant::Thm42 => (mu, mu),
        L1Variant::Thm43 => (mu + 1.0, mu),
    };
    let d = single_diffs(c, order, 2, top, opts, &mut warnings)?;
    let mut err = 0.0;
    r.blocks = ranges
        .iter()
        .map(|&(start, end)| {
            let mut v = 0.0;
            let mut e = 0.0;
            match variant {
                L1Variant::Thm42 => {
                    let (mut s1, mut s2, mut e2) = (0.0, 0.0, 0.0);
                    for k in start..=end {
                        let kk = k as f64;
                        s1 += c.at(k).norm_sqr() / kk;
                        let w = kk.powf(2.0 * power - 1.0);
                        s2 += w * d[k].value.norm_sqr();
                        e2 += w * d[k].bound * d[k].bound;
                    }
                    v = s1.sqrt() + s2.sqrt();
                    e = e2.sqrt();
                }
                L1Variant::Thm43 => {
                    for k in start..=end {
                        let w = ((k + 1) as f64).powf(power);
                        v += w * d[k].value.norm();
                        e += w * d[k].bound;
                    }
                }
            }
            err += e;
            Block { start, end, value: v }
        })
        .collect();
    r.warnings.extend(warnings);
    r.tail_bound = err;
    let mut r = r.finish();
    if c.is_finite() {
        r.stable = Some(true);
    } else {
        let n = r.blocks.len();
        let (prev, last) = (r.blocks[n - 2].value, r.blocks[n - 1].value);
        let ratio = last / prev;
        if ratio < 1.0 {
            r.tail_bound += last * ratio / (1.0 - ratio);
            r.stable = Some(relative_change(r.aggregate_until(top / 2 - 1), r.value) < STABILITY_TOL);
        } else {
            r.tail_bound = f64::INFINITY;
            r.stable = Some(false);
            r.warn("block sums do not decay; the series is not summable on this evidence");
        }
    }
    Ok(r)
}

/// (2α+2)(1/p − 1/2) − 1/2, the growth exponent in the Cohen-type inequality.
pub fn cohen_exponent(p: f64, alpha: f64) -> f64 {
    (2.0 * alpha + 2.0) * (1.0 / p - 0.5) - 0.5
}

/// The range 1 < p < (4α+4)/(2α+3) where the Cohen-type inequality applies.
pub fn cohen_in_range(p: f64, alpha: f64) -> bool {
    p > 1.0 && p < (4.0 * alpha + 4.0) / (2.0 * alpha + 3.0)
}

/// (N+1)^{(2α+2)(1/p−1/2)−1/2} |m_N|.
pub fn cohen_bound(m_n: Complex64, n: usize, p: f64, alpha: f64) -> f64 {
    ((n + 1) as f64).powf(cohen_exponent(p, alpha)) * m_n.norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_layout() {
        assert_eq!(dyadic_blocks(4, true), vec![(0, 0), (1, 2), (2, 4), (4, 8)]);
        assert_eq!(dyadic_blocks(1, false), vec![(1, 2)]);
    }

    #[test]
    fn identity_multiplier() {
        let one = MultiplierSequence::constant(Complex64::new(1.0, 0.0));
        let o = FunctionalOptions::default().with_n_max(64);
        let d = sufficiency_d(&one, 1.5, 1.5, 0.5, &o).unwrap();
        assert_eq!(d.value, 1.0);
        let n = necessity_functional(&one, 1.5, 1.0, 0.5, NecessityOrders::default(), &o).unwrap();
        assert_eq!(n.value, 1.0);
        let bv = bounded_variation_functional(&one, &o).unwrap();
        assert_eq!(bv.value, 1.0);
    }

    #[test]
    fn alternation_is_inert_for_step_two() {
        let alt = MultiplierSequence::custom(CoefficientSequence::from_fn(
            |k| Complex64::new(if k % 2 == 0 { 1.0 } else { -1.0 }, 0.0),
            crate::frac_diff::DecayInfo::bounded(1.0),
        ))
        .unwrap();
        let bv = bounded_variation_functional(&alt, &FunctionalOptions::default()).unwrap();
        assert_eq!(bv.value, 1.0);
    }

    #[test]
    fn cohen_arithmetic() {
        assert_eq!(cohen_bound(Complex64::new(-3.0, 0.0), 0, 1.2, 1.0), 3.0);
        let v = cohen_bound(Complex64::new(1.0, 0.0), 15, 2.0, 0.7);
        assert!((v - 0.25).abs() < 1e-15);
        assert!(cohen_in_range(1.1, 0.0));
        assert!(!cohen_in_range(1.4, 0.0));
    }
}
