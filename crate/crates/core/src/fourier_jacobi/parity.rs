use super::grid::{GridFunction, Source};
use super::norm::{weighted_norm, WeightedNormSpec};
use super::transform::ExpansionPair;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::special_fn::{cached_rule, default_node_count, JacobiParams};
use num_complex::Complex;
use serde::Serialize;
use std::sync::Arc;

/// f_e(θ) = (f(θ) + f(π−θ))/2 and f_o = f − f_e, computed at the nodes.
///
/// The rule must be symmetric under θ ↦ π − θ, which Gauss rules with a = b
/// are by construction.
pub fn even_odd_decompose<T: Real>(f: &GridFunction<T>) -> Result<(GridFunction<T>, GridFunction<T>)> {
    let rule = f.rule();
    if !rule.is_symmetric() {
        let (a, b) = rule.exponents();
        return Err(Error::Grid(format!(
            "rule with exponents ({a}, {b}) is not symmetric about π/2"
        )));
    }
    let v = f.values();
    let n = v.len();
    let half = T::half();
    let even: Vec<Complex<T>> = (0..n).map(|i| (v[i] + v[n - 1 - i]) * half).collect();
    let odd: Vec<Complex<T>> = v.iter().zip(&even).map(|(&x, &e)| x - e).collect();
    let (se, so) = match f.source() {
        Some(s) => {
            let (s1, s2) = (Arc::clone(s), Arc::clone(s));
            let pi = T::PI();
            let e: Source<T> = Arc::new(move |t| (s1(t) + s1(pi - t)) * half);
            let o: Source<T> = Arc::new(move |t| (s2(t) - s2(pi - t)) * half);
            (Some(e), Some(o))
        }
        None => (None, None),
    };
    Ok((
        GridFunction::from_parts(Arc::clone(rule), even, f.degree(), se),
        GridFunction::from_parts(Arc::clone(rule), odd, f.degree(), so),
    ))
}

fn ultraspherical_alpha<T: Real>(p: &JacobiParams<T>) -> Result<T> {
    if !p.is_ultraspherical() {
        return Err(Error::domain("quadratic transforms need an ultraspherical expansion (α = β)"));
    }
    Ok(p.alpha())
}

fn doubling_factor<T: Real>(alpha: T) -> T {
    T::two().powf(T::two() * alpha + T::one())
}

/// A_k = 2^{2α+1} f̂(2k), coefficients of f_e(θ/2) in the (α, −1/2) system.
pub fn quad_transform_even<T: Real>(f: &ExpansionPair<T>) -> Result<ExpansionPair<T>> {
    let alpha = ultraspherical_alpha(f.params())?;
    let c = doubling_factor(alpha);
    let a: Vec<Complex<T>> = f.coefficients().iter().step_by(2).map(|&v| v * c).collect();
    Ok(ExpansionPair::new(f.params().even_companion(), a))
}

/// B_k = 2^{2α+1} f̂(2k+1), coefficients of f_o(θ/2)/cos(θ/2) in the (α, 1/2) system.
pub fn quad_transform_odd<T: Real>(f: &ExpansionPair<T>) -> Result<ExpansionPair<T>> {
    let alpha = ultraspherical_alpha(f.params())?;
    let c = doubling_factor(alpha);
    let b: Vec<Complex<T>> = f
        .coefficients()
        .iter()
        .skip(1)
        .step_by(2)
        .map(|&v| v * c)
        .collect();
    Ok(ExpansionPair::new(f.params().odd_companion(), b))
}

/// Inverse of the two transforms: f̂(2k) = A_k/2^{2α+1}, f̂(2k+1) = B_k/2^{2α+1}.
pub fn quad_transform_inverse<T: Real>(even: &ExpansionPair<T>, odd: &ExpansionPair<T>) -> Result<ExpansionPair<T>> {
    let (pa, pb) = (even.params(), odd.params());
    let half = T::half();
    if pa.beta() != -half || pb.beta() != half || pa.alpha() != pb.alpha() {
        return Err(Error::domain("inverse transform needs (α, −1/2) and (α, 1/2) coefficients"));
    }
    let alpha = pa.alpha();
    let c = doubling_factor(alpha).recip();
    let (a, b) = (even.coefficients(), odd.coefficients());
    let n = (2 * a.len()).saturating_sub(1).max(2 * b.len());
    let zero = Complex::new(T::zero(), T::zero());
    let coeffs = (0..n)
        .map(|k| {
            let v = if k % 2 == 0 { a.get(k / 2) } else { b.get(k / 2) };
            v.copied().unwrap_or(zero) * c
        })
        .collect();
    Ok(ExpansionPair::new(JacobiParams::ultraspherical(alpha)?, coeffs))
}

/// g(θ) = f_e(θ/2) on the (α, −1/2) rule, degree ⌊d/2⌋.
pub fn half_angle_even<T: Real>(fe: &GridFunction<T>, alpha: T) -> Result<GridFunction<T>> {
    let src = fe.with_interpolant()?.source().expect("interpolant").clone();
    let d = fe.degree().map(|d| d / 2);
    let n = default_node_count(2 * d.unwrap_or(32));
    let rule = cached_rule(n, alpha, -T::half())?;
    Ok(GridFunction::from_fn(rule, move |t| src(t * T::half()), d))
}

/// g(θ) = f_o(θ/2)/cos(θ/2) on the (α, 1/2) rule, degree ⌊(d−1)/2⌋. The
/// rule's nodes are interior, so cos(θ/2) > 0 there.
pub fn half_angle_odd<T: Real>(fo: &GridFunction<T>, alpha: T) -> Result<GridFunction<T>> {
    let src = fo.with_interpolant()?.source().expect("interpolant").clone();
    let d = fo.degree().map(|d| d.saturating_sub(1) / 2);
    let n = default_node_count(2 * d.unwrap_or(32));
    let rule = cached_rule(n, alpha, T::half())?;
    Ok(GridFunction::from_fn(
        rule,
        move |t| {
            let h = t * T::half();
            src(h) / h.cos()
        },
        d,
    ))
}

/// Both sides of one norm relation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormRelation {
    pub lhs: f64,
    pub rhs: f64,
    /// lhs/rhs, absent when the part vanishes.
    pub ratio: Option<f64>,
    /// Both sides at rounding level relative to ‖f‖.
    pub degenerate: bool,
}

/// Parts below this fraction of ‖f‖ count as zero.
pub const DEGENERATE_REL: f64 = 1e-12;

impl NormRelation {
    fn new(lhs: f64, rhs: f64, scale: f64) -> Self {
        let tiny = DEGENERATE_REL * scale;
        let degenerate = lhs <= tiny && rhs <= tiny;
        Self {
            lhs,
            rhs,
            ratio: (!degenerate).then(|| lhs / rhs),
            degenerate,
        }
    }
}

/// ‖f_e‖_{L^p_α} against ‖f_e(θ/2)‖_{L^p_{(α,−1/2)}} and ‖f_o‖_{L^p_α} against
/// ‖f_o(θ/2)/cos(θ/2)^{2/p}‖_{L^p_{(α,1/2)}}.
///
/// The substitution θ → θ/2 makes both relations equalities with the constant
/// 2^{−(2α+1)/p}, recorded in `constant`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParityNormReport {
    pub p: f64,
    pub alpha: f64,
    pub constant: f64,
    pub even: NormRelation,
    pub odd: NormRelation,
}

/// Evaluates both parity relations for a function on a symmetric (α, α) grid.
pub fn parity_norm_relations<T: Real>(f: &GridFunction<T>, p: T) -> Result<ParityNormReport> {
    let (a, b) = f.rule().exponents();
    if a != b {
        return Err(Error::Grid("parity relations need a function on an (α, α) grid".into()));
    }
    let alpha = a;
    let (fe, fo) = even_odd_decompose(f)?;
    let lhs_spec = WeightedNormSpec::new(p, alpha, alpha)?;
    let even_lhs = weighted_norm(&fe, &lhs_spec)?;
    let even_rhs = weighted_norm(&half_angle_even(&fe, alpha)?, &WeightedNormSpec::new(p, alpha, -T::half())?)?;
    let odd_lhs = weighted_norm(&fo, &lhs_spec)?;
    let scale = weighted_norm(f, &lhs_spec)?.f64();
    // |g|^p cos^{p−2}(θ/2) against the (α, 1/2) weight is the (α, (p−1)/2) weight
    let odd_spec = WeightedNormSpec::new(p, alpha, (p - T::one()) * T::half())?;
    let odd_rhs = weighted_norm(&half_angle_odd(&fo, alpha)?, &odd_spec)?;
    let constant = T::two().powf(-(T::two() * alpha + T::one()) / p);
    Ok(ParityNormReport {
        p: p.f64(),
        alpha: alpha.f64(),
        constant: constant.f64(),
        even: NormRelation::new(even_lhs.f64(), even_rhs.f64(), scale),
        odd: NormRelation::new(odd_lhs.f64(), odd_rhs.f64(), scale),
    })
}
