use super::grid::{GridFunction, Source};
use crate::error::{Error, Result};
use crate::frac_diff::CoefficientSequence;
use crate::scalar::Real;
use crate::special_fn::{
    cached_rule, default_node_count, JacobiParams, JacobiRecurrence, NormalizationTable, QuadratureRule,
};
use num_complex::Complex;
use std::sync::Arc;

/// Coefficients f̂(0..=K) of a polynomial in one Jacobi system.
///
/// Stored h_k-free: the function is Σ f̂(k) h_k R_k(cos θ).
#[derive(Debug, Clone)]
pub struct ExpansionPair<T: Real> {
    params: JacobiParams<T>,
    coeffs: Vec<Complex<T>>,
    eval: Arc<Evaluator<T>>,
}

#[derive(Debug)]
struct Evaluator<T> {
    rec: JacobiRecurrence<T>,
    /// f̂(k) h_k
    scaled: Vec<Complex<T>>,
}

impl<T: Real> Evaluator<T> {
    fn at_x(&self, x: T) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        self.rec
            .for_each(x, self.scaled.len(), |k, r| acc += self.scaled[k] * r);
        acc
    }
}

impl<T: Real> ExpansionPair<T> {
    pub fn new(params: JacobiParams<T>, coeffs: Vec<Complex<T>>) -> Self {
        let k = coeffs.len().saturating_sub(1);
        let h = NormalizationTable::new(params, k);
        let scaled = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| c * h.h(i))
            .collect();
        let eval = Arc::new(Evaluator {
            rec: JacobiRecurrence::new(params, k),
            scaled,
        });
        Self {
            params,
            coeffs,
            eval,
        }
    }

    pub fn from_real(params: JacobiParams<T>, coeffs: &[T]) -> Self {
        Self::new(
            params,
            coeffs.iter().map(|&c| Complex::new(c, T::zero())).collect(),
        )
    }

    pub fn from_sequence(params: JacobiParams<T>, seq: &CoefficientSequence<T>) -> Result<Self> {
        let n = seq
            .finite_len()
            .ok_or_else(|| Error::domain("synthesis needs finite support"))?;
        Ok(Self::new(params, seq.take(n)))
    }

    pub fn params(&self) -> &JacobiParams<T> {
        &self.params
    }

    pub fn coefficients(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    /// Degree bound K.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn sequence(&self) -> CoefficientSequence<T> {
        CoefficientSequence::finite(self.coeffs.clone())
    }

    /// Σ f̂(k) h_k R_k(cos θ).
    pub fn evaluate(&self, theta: T) -> Complex<T> {
        self.eval.at_x(theta.cos())
    }

    pub fn evaluate_x(&self, x: T) -> Complex<T> {
        self.eval.at_x(x)
    }

    pub fn source(&self) -> Source<T> {
        let e = Arc::clone(&self.eval);
        Arc::new(move |t: T| e.at_x(t.cos()))
    }

    /// Sampled on a given rule.
    pub fn to_grid(&self, rule: Arc<QuadratureRule<T>>) -> GridFunction<T> {
        let values = rule.cos_nodes().iter().map(|&x| self.eval.at_x(x)).collect();
        GridFunction::from_parts(rule, values, Some(self.degree()), Some(self.source()))
    }

    /// Sampled on the default (α, β) rule, exact for analysis up to degree K.
    pub fn synthesize(&self) -> Result<GridFunction<T>> {
        let n = default_node_count(2 * self.degree());
        let rule = cached_rule(n, self.params.alpha(), self.params.beta())?;
        Ok(self.to_grid(rule))
    }

    /// Coefficient-wise product with a multiplier.
    pub fn multiply(&self, m: &CoefficientSequence<T>) -> Self {
        Self::new(
            self.params,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| c * m.at(k))
                .collect(),
        )
    }
}


/// Σ_i w_i f(θ_i) R_k(x_i) on the function's own nodes, k ≤ K. The caller
/// guarantees the rule's weight is the (α, β) weight.
pub(crate) fn analyze_on_nodes<T: Real>(f: &GridFunction<T>, params: &JacobiParams<T>, k_max: usize) -> ExpansionPair<T> {
    let rule = f.rule();
    let rec = JacobiRecurrence::new(*params, k_max);
    let mut coeffs = vec![Complex::new(T::zero(), T::zero()); k_max + 1];
    for ((&x, &w), &v) in rule.cos_nodes().iter().zip(rule.weights()).zip(f.values()) {
        let wv = v * w;
        rec.for_each(x, k_max + 1, |k, r| coeffs[k] += wv * r);
    }
    ExpansionPair::new(*params, coeffs)
}

/// f̂(k) = ∫ f R_k (sin θ/2)^{2α+1}(cos θ/2)^{2β+1} dθ for k ≤ K.
///
/// Uses the function's own nodes when they carry the (α, β) weight and are
/// exact through degree K + deg f; otherwise resamples on a sufficient rule.
pub fn analyze_pair<T: Real>(f: &GridFunction<T>, params: &JacobiParams<T>, k_max: usize) -> Result<ExpansionPair<T>> {
    let d = f.degree().ok_or_else(|| {
        Error::Precision("function has no declared polynomial degree; quadrature cannot be exact".into())
    })?;
    let need = k_max + d;
    let (a, b) = f.rule().exponents();
    if (a, b) == (params.alpha(), params.beta()) && f.rule().exactness() >= need {
        return Ok(analyze_on_nodes(f, params, k_max));
    }
    let n = default_node_count(need);
    let g = f.resample_on(n, params.alpha(), params.beta())?;
    Ok(analyze_on_nodes(&g, params, k_max))
}

/// Coefficient sequence f̂(0..=K), finite support K+1.
pub fn analyze<T: Real>(f: &GridFunction<T>, params: &JacobiParams<T>, k_max: usize) -> Result<CoefficientSequence<T>> {
    analyze_pair(f, params, k_max).map(|p| p.sequence())
}

/// Σ c_k h_k R_k(cos θ) at the nodes of the default rule.
pub fn synthesize<T: Real>(coeffs: &CoefficientSequence<T>, params: &JacobiParams<T>) -> Result<GridFunction<T>> {
    ExpansionPair::from_sequence(*params, coeffs)?.synthesize()
}
