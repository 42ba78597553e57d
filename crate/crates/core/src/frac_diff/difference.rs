//! Δ_κ^μ c_k = Σ_{j≥0} A_j^{−μ−1} c_{k+κj} with certified truncation.

use super::sequence::{CoefficientSequence, DecayInfo, Phase, PowerEnvelope, Support, TrigKind};
use crate::error::{Error, Result};
use crate::scalar::{is_integer, Real};
use num_complex::Complex;

pub const DEFAULT_TAIL_EPS: f64 = 1e-10;
pub const DEFAULT_MAX_TERMS: usize = 1 << 24;

/// Terms are accumulated in blocks of this size, each block summed left to
/// right and then added to the running total. The order never depends on
/// thread count or input, so results are bit-reproducible.
const BLOCK: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Truncation<T> {
    /// Exact finite sum; only for finite or eventually constant input.
    Exact,
    /// Truncated sum whose guaranteed remainder plus rounding is ≤ `eps`,
    /// using at most `max_terms` terms.
    Tail { eps: T, max_terms: usize },
}

impl<T: Real> Truncation<T> {
    pub fn tail(eps: T) -> Self {
        Truncation::Tail {
            eps,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

impl<T: Real> Default for Truncation<T> {
    fn default() -> Self {
        Self::tail(T::lit(DEFAULT_TAIL_EPS))
    }
}

/// Order μ, increment κ and truncation policy of a difference operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DifferenceSpec<T> {
    order: T,
    increment: usize,
    truncation: Truncation<T>,
}

impl<T: Real> DifferenceSpec<T> {
    pub fn new(order: T, increment: usize, truncation: Truncation<T>) -> Result<Self> {
        if !order.is_finite() {
            return Err(Error::domain("difference order must be finite"));
        }
        if increment == 0 {
            return Err(Error::domain("increment must be a positive integer"));
        }
        if let Truncation::Tail { eps, max_terms } = truncation {
            if !(eps > T::zero()) || max_terms == 0 {
                return Err(Error::domain("tail tolerance needs eps > 0 and a positive budget"));
            }
        }
        Ok(Self {
            order,
            increment,
            truncation,
        })
    }

    pub fn exact(order: T, increment: usize) -> Result<Self> {
        Self::new(order, increment, Truncation::Exact)
    }

    /// Tail policy with the default term budget.
    pub fn tail(order: T, increment: usize, eps: T) -> Result<Self> {
        Self::new(order, increment, Truncation::tail(eps))
    }

    pub fn order(&self) -> T {
        self.order
    }

    pub fn increment(&self) -> usize {
        self.increment
    }

    pub fn truncation(&self) -> Truncation<T> {
        self.truncation
    }

    pub fn with_truncation(mut self, truncation: Truncation<T>) -> Self {
        self.truncation = truncation;
        self
    }
}

/// A difference value with its guaranteed error bound (tail plus rounding)
/// and the number of series terms used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffValue<T> {
    pub value: Complex<T>,
    pub bound: T,
    pub terms: usize,
}

/// Fixed-order blocked accumulator with a running rounding estimate.
struct Accum<T> {
    total: Complex<T>,
    block: Complex<T>,
    in_block: usize,
    longest: usize,
    blocks: usize,
    abs_sum: T,
    weighted: T,
    coef_abs: T,
    extra: T,
}

impl<T: Real> Accum<T> {
    fn new() -> Self {
        let z = Complex::new(T::zero(), T::zero());
        Self {
            total: z,
            block: z,
            in_block: 0,
            longest: 0,
            blocks: 0,
            abs_sum: T::zero(),
            weighted: T::zero(),
            coef_abs: T::zero(),
            extra: T::zero(),
        }
    }

    #[inline]
    fn add(&mut self, a: T, c: Complex<T>, j: usize) {
        self.block += c * a;
        // |re| + |im| ≥ |c| and avoids a hypot per term
        let t = a.abs() * (c.re.abs() + c.im.abs());
        self.abs_sum += t;
        self.weighted += T::idx(j) * t;
        self.coef_abs += a.abs();
        self.in_block += 1;
        if self.in_block == BLOCK {
            self.flush();
        }
    }

    fn flush(&mut self) {
        if self.in_block > 0 {
            self.longest = self.longest.max(self.in_block);
            self.total += self.block;
            self.block = Complex::new(T::zero(), T::zero());
            self.in_block = 0;
            self.blocks += 1;
        }
    }

    fn value(&self) -> Complex<T> {
        self.total + self.block
    }

    /// Bound on accumulated rounding: block and total additions, the product
    /// A_j c, and the 3 roundings per step of the A_j recurrence.
    fn rounding(&self) -> T {
        let u = T::epsilon();
        let depth = T::idx(self.longest.max(self.in_block) + self.blocks + 3);
        T::SQRT_2() * u * (depth * self.abs_sum + T::lit(3.0) * self.weighted)
    }

    fn bound(&self) -> T {
        self.rounding() + self.extra
    }
}

/// Upper bound for Σ_j |A_j^{−μ−1}|, the ℓ¹ norm of the operator's kernel.
pub fn kernel_abs_sum<T: Real>(order: T) -> Result<T> {
    if order < T::zero() && !is_integer(order) {
        return Err(Error::convergence(
            "kernel of a negative non-integer order is not summable",
        ));
    }
    if is_integer(order) {
        return Ok(T::two().powf(order));
    }
    if order < T::one() {
        // A_0 = 1 and the remaining terms are negative with sum −1.
        return Ok(T::two());
    }
    let j_max = 64usize.max((order.f64() * 4.0) as usize + 8);
    let mut a = T::one();
    let mut s = T::zero();
    for j in 0..j_max {
        s += a.abs();
        a = a * (T::idx(j) - order) / T::idx(j + 1);
    }
    Ok(s + a.abs() * (T::one() + T::idx(j_max + 1) / order))
}

/// Computes the guaranteed remainder Σ_{j≥J} A_j^{−μ−1} c_{k+κj}.
struct TailControl<T> {
    mu: T,
    kappa: usize,
    k: usize,
    sup: Option<T>,
    envelope: Option<PowerEnvelope<T>>,
    partial: Option<T>,
    phase: Option<Phase<T>>,
}

/// Most summation-by-parts steps tried on a trigonometric tail.
const BY_PARTS_MAX: usize = 12;

impl<T: Real> TailControl<T> {
    fn new(decay: &DecayInfo<T>, mu: T, kappa: usize, k: usize) -> Result<Self> {
        if decay.sup.is_none() && decay.envelope.is_none() {
            return Err(Error::convergence(
                "sequence has no decay information; refusing to truncate a series of unknown tail",
            ));
        }
        Ok(Self {
            mu,
            kappa,
            k,
            sup: decay.sup,
            envelope: decay.envelope,
            partial: decay.oscillation.as_ref().and_then(|o| o.bound(kappa)),
            phase: decay.phase,
        })
    }

    /// Tail of a trigonometric sequence summed by parts m times. With
    /// w = e^{iκθ}, z_J the phase of term J and b_r = A_{J+r}^{−μ−1−r},
    /// Σ_{j≥J} A_j^{−μ−1} z_J w^{j−J} = z_J Σ_{r<m} w^r b_r/(1−w)^{r+1} + R_m
    /// with |R_m| ≤ 2|b_m|/|1−w|^{m+1}, since b_m has constant sign and
    /// decreasing modulus past μ + 1. Returns the projected correction and the
    /// best remainder bound over m.
    fn by_parts(&self, terms: usize, a: T) -> Option<(Complex<T>, T)> {
        let ph = self.phase?;
        let step = T::idx(self.kappa) * ph.theta;
        let w = Complex::new(step.cos(), step.sin());
        let gap = (Complex::new(T::one(), T::zero()) - w).norm();
        if !(gap > T::lit(1e3) * T::epsilon()) {
            return None;
        }
        let arg = T::idx(self.k + self.kappa * terms) * ph.theta + ph.shift;
        let z = Complex::new(arg.cos(), arg.sin());
        let ratio = w / (Complex::new(T::one(), T::zero()) - w);
        let mut factor = z / (Complex::new(T::one(), T::zero()) - w);
        let mut b = a;
        let mut sum = Complex::new(T::zero(), T::zero());
        let mut size = T::zero();
        let mut best = (sum, T::two() * b.abs() / gap);
        let mut scale = gap.recip();
        for r in 0..BY_PARTS_MAX {
            let term = factor * b;
            sum += term;
            size += term.norm();
            b = b * (-self.mu - T::one() - T::idx(r)) / T::idx(terms + r + 1);
            scale = scale / gap;
            let rem = T::two() * b.abs() * scale + T::lit(4.0 * (BY_PARTS_MAX + 4) as f64) * T::epsilon() * size;
            if rem < best.1 {
                best = (sum, rem);
            }
            factor = factor * ratio;
        }
        let proj = |v: Complex<T>| match ph.kind {
            TrigKind::Cos => Complex::new(v.re, T::zero()),
            TrigKind::Sin => Complex::new(v.im, T::zero()),
            TrigKind::Exp => v,
        };
        Some((proj(best.0), best.1))
    }

    /// Remainder estimate after J = `terms` terms with `a` = A_J^{−μ−1}: a
    /// correction to add to the partial sum (zero unless the tail is summed by
    /// parts) and its guaranteed bound.
    fn remainder(&self, terms: usize, a: T) -> Option<(Complex<T>, T)> {
        let zero = Complex::new(T::zero(), T::zero());
        let plain = self.bound(terms, a.abs()).map(|t| (zero, t));
        if !(T::idx(terms) > self.mu + T::one()) {
            return plain;
        }
        match (plain, self.by_parts(terms, a)) {
            (Some(p), Some(q)) => Some(if q.1 < p.1 { q } else { p }),
            (p, q) => p.or(q),
        }
    }

    /// `terms` = J terms summed, `b` = |A_J^{−μ−1}|. Valid once J > μ + 1, where
    /// A_j has constant sign and b_j (j+1)^{μ+1} is nonincreasing.
    fn bound(&self, terms: usize, b: T) -> Option<T> {
        let mu = self.mu;
        let jj = T::idx(terms);
        if !(jj > mu + T::one()) {
            return None;
        }
        let j1 = jj + T::one();
        let mut best: Option<T> = None;
        let mut take = |x: T| {
            if x.is_finite() {
                best = Some(best.map_or(x, |b: T| b.min(x)));
            }
        };
        if let Some(m) = self.sup {
            take(m * b * (T::one() + j1 / mu));
        }
        if let Some(e) = self.envelope {
            let sigma = e.exponent;
            if mu + sigma > T::zero() {
                // original index of term j is N(j) = k_eff + κ_eff j
                let k_eff = T::idx(e.step * self.k + e.offset);
                let kappa_eff = T::idx(e.step * self.kappa);
                let ratio = (k_eff + kappa_eff * jj + T::one()) / j1;
                let r = kappa_eff.min(ratio);
                let lead = e.scale * r.powf(-sigma) * b * j1.powf(-sigma);
                take(lead * (T::one() + j1 / (mu + sigma)));
            }
        }
        if let Some(p) = self.partial {
            // Abel summation with the nonincreasing weight |A_j| g_{k+κj}
            let g = match self.envelope {
                Some(e) if e.exponent >= T::zero() => Some(e.at(self.k + self.kappa * terms)),
                Some(_) => None,
                None => self.sup,
            };
            if let Some(g) = g {
                take(p * b * g);
            }
        }
        best
    }
}

fn tolerance_error<T: Real>(eps: T, achieved: T, terms: usize, v: Complex<T>) -> Error {
    Error::Tolerance {
        requested: eps.f64(),
        achieved: achieved.f64(),
        terms,
        value: (v.re.f64(), v.im.f64()),
    }
}

fn integer_order<T: Real>(seq: &CoefficientSequence<T>, n: usize, kappa: usize, k: usize) -> DiffValue<T> {
    let mut acc = Accum::new();
    let mut a = T::one();
    let mu = T::idx(n);
    for j in 0..=n {
        acc.add(a, seq.at(k + kappa * j), j);
        a = a * (T::idx(j) - mu) / T::idx(j + 1);
    }
    acc.flush();
    DiffValue {
        value: acc.value(),
        bound: acc.bound(),
        terms: n + 1,
    }
}

fn eventual_sum<T: Real>(
    head: &[Complex<T>],
    tail: Complex<T>,
    mu: T,
    kappa: usize,
    k: usize,
) -> Result<(DiffValue<T>, T)> {
    let len = head.len();
    let j0 = if k < len { (len - 1 - k) / kappa + 1 } else { 0 };
    let mut acc = Accum::new();
    let mut a = T::one();
    // partial sums of A^{−μ−1} are A^{−μ}
    let mut p = T::one();
    for j in 0..j0 {
        acc.add(a, head[k + kappa * j], j);
        if j > 0 {
            p = p * (T::idx(j) - mu) / T::idx(j);
        }
        a = a * (T::idx(j) - mu) / T::idx(j + 1);
    }
    acc.flush();
    if tail.norm() > T::zero() {
        if mu < T::zero() {
            return Err(Error::convergence(
                "negative order on a sequence with a nonzero constant tail diverges",
            ));
        }
        if mu > T::zero() && j0 > 0 {
            // Σ_{j≥J0} A_j^{−μ−1} = −A_{J0−1}^{−μ}
            let t = tail * (-p);
            acc.total += t;
            acc.extra += T::epsilon() * T::lit(4.0) * T::idx(j0) * t.norm();
            acc.coef_abs += p.abs();
        } else if mu == T::zero() {
            acc.total += tail;
        }
    }
    let coef = acc.coef_abs;
    Ok((
        DiffValue {
            value: acc.value(),
            bound: acc.bound(),
            terms: j0,
        },
        coef,
    ))
}

fn rule_sum<T: Real>(
    seq: &CoefficientSequence<T>,
    ctl: &TailControl<T>,
    eps: T,
    max_terms: usize,
) -> Result<DiffValue<T>> {
    let (mu, kappa, k) = (ctl.mu, ctl.kappa, ctl.k);
    let mut acc = Accum::new();
    let mut buf = [Complex::new(T::zero(), T::zero()); BLOCK];
    let mut coef = [T::zero(); BLOCK];
    let mut a = T::one();
    let mut j = 0usize;
    let mut best = T::infinity();
    let mut best_value = Complex::new(T::zero(), T::zero());
    while j < max_terms {
        let n = BLOCK.min(max_terms - j);
        seq.fill(k + kappa * j, kappa, &mut buf[..n]);
        // the ratios are independent, so only the multiply stays serial
        for (i, r) in coef[..n].iter_mut().enumerate() {
            *r = (T::idx(j + i) - mu) / T::idx(j + i + 1);
        }
        for (c, r) in buf[..n].iter().zip(&coef[..n]) {
            acc.add(a, *c, j);
            a *= *r;
            j += 1;
        }
        acc.flush();
        if let Some((corr, t)) = ctl.remainder(j, a) {
            let total = t + acc.bound();
            if total < best {
                best = total;
                best_value = acc.value() + corr;
            }
            if total <= eps {
                return Ok(DiffValue {
                    value: acc.value() + corr,
                    bound: total,
                    terms: j,
                });
            }
        }
    }
    let v = if best.is_finite() { best_value } else { acc.value() };
    Err(tolerance_error(eps, best, j, v))
}

/// Δ_κ^μ c at index k.
///
/// Integer μ ≥ 0 is always the finite sum of μ+1 terms. Finite and eventually
/// constant input is summed exactly (the constant tail contributes
/// −c_∞ A_{J−1}^{−μ}). Rule-defined input needs a tail policy, μ > 0 and decay
/// metadata; the series is then cut as soon as the guaranteed remainder plus
/// rounding drops below ε, or a [`Error::Tolerance`] carrying the partial sum
/// and the achieved bound is returned when the budget runs out.
pub fn frac_diff<T: Real>(
    seq: &CoefficientSequence<T>,
    spec: &DifferenceSpec<T>,
    k: usize,
) -> Result<DiffValue<T>> {
    let mu = spec.order();
    let kappa = spec.increment();
    if mu >= T::zero() && is_integer(mu) {
        let n = mu.to_usize().ok_or_else(|| Error::domain("integer order too large"))?;
        return Ok(integer_order(seq, n, kappa, k));
    }
    if let Some((head, tail)) = seq.eventual_parts() {
        return eventual_sum(head, tail, mu, kappa, k).map(|r| r.0);
    }
    let (eps, max_terms) = match spec.truncation() {
        Truncation::Exact => {
            return Err(Error::domain(
                "exact policy requires finite support or an integer order",
            ))
        }
        Truncation::Tail { eps, max_terms } => (eps, max_terms),
    };
    if mu <= T::zero() {
        return Err(Error::convergence(
            "order μ ≤ 0 on a sequence of infinite support",
        ));
    }
    let ctl = TailControl::new(seq.decay(), mu, kappa, k)?;
    rule_sum(seq, &ctl, eps, max_terms)
}

/// The full sequence Δ_κ^μ c for finite or eventually constant c, together with
/// the largest per-entry error bound.
pub fn difference_sequence<T: Real>(
    seq: &CoefficientSequence<T>,
    order: T,
    increment: usize,
) -> Result<(CoefficientSequence<T>, T)> {
    let (head, tail) = seq.eventual_parts().ok_or_else(|| {
        Error::domain("difference_sequence needs finite or eventually constant input")
    })?;
    if increment == 0 {
        return Err(Error::domain("increment must be a positive integer"));
    }
    let spec = DifferenceSpec::exact(order, increment)?;
    let mut worst = T::zero();
    let mut out = Vec::with_capacity(head.len());
    for k in 0..head.len() {
        let v = frac_diff(seq, &spec, k)?;
        worst = worst.max(v.bound);
        out.push(v.value);
    }
    let zero = Complex::new(T::zero(), T::zero());
    let new_tail = if tail.norm() == T::zero() || order > T::zero() {
        zero
    } else if order == T::zero() {
        tail
    } else {
        return Err(Error::convergence(
            "negative order on a sequence with a nonzero constant tail diverges",
        ));
    };
    Ok((CoefficientSequence::eventually_constant(out, new_tail), worst))
}

/// Δ_κ^μ c_k for k in `range`.
pub fn frac_diff_range<T: Real>(
    seq: &CoefficientSequence<T>,
    spec: &DifferenceSpec<T>,
    range: std::ops::Range<usize>,
) -> Result<Vec<DiffValue<T>>> {
    range.map(|k| frac_diff(seq, spec, k)).collect()
}

/// Same truncation as [`frac_diff`] but with the number of terms fixed to
/// `terms`; used as a brute-force oracle. Only the rounding part is bounded.
pub fn frac_diff_truncated<T: Real>(
    seq: &CoefficientSequence<T>,
    order: T,
    increment: usize,
    k: usize,
    terms: usize,
) -> DiffValue<T> {
    let mut acc = Accum::new();
    let mut a = T::one();
    for j in 0..terms {
        acc.add(a, seq.at(k + increment * j), j);
        a = a * (T::idx(j) - order) / T::idx(j + 1);
    }
    acc.flush();
    DiffValue {
        value: acc.value(),
        bound: acc.rounding(),
        terms,
    }
}

/// Decay metadata of Δ_κ^μ c derived from that of c (μ > 0 or integer):
/// |Δ c_n| ≤ S Σ-weighted sup, and the power envelope survives with scale C·S
/// because (n+κj+1)^{−σ} ≤ (n+1)^{−σ} for σ ≥ 0.
fn differenced_decay<T: Real>(decay: &DecayInfo<T>, order: T) -> Result<DecayInfo<T>> {
    let s = kernel_abs_sum(order)?;
    Ok(DecayInfo {
        sup: decay.sup.map(|m| m * s),
        vanishing: decay.vanishing,
        envelope: decay
            .envelope
            .filter(|e| e.exponent >= T::zero())
            .map(|e| PowerEnvelope {
                scale: e.scale * s,
                ..e
            }),
        oscillation: None,
        phase: None,
    })
}

/// Δ_{κo}^{λ}(Δ_{κi}^{μ} c) at k, with the inner operator applied first.
///
/// The bound combines the outer truncation, the outer rounding and the
/// propagated inner bounds Σ_j |A_j^{−λ−1}| e_in(k + κo j). Inner tolerance
/// failures are absorbed with their achieved bounds; the outer policy decides.
pub fn frac_diff_composed<T: Real>(
    seq: &CoefficientSequence<T>,
    inner: &DifferenceSpec<T>,
    outer: &DifferenceSpec<T>,
    k: usize,
) -> Result<DiffValue<T>> {
    let lambda = outer.order();
    let kappa = outer.increment();
    if seq.eventual_parts().is_some() {
        let (d, b_in) = difference_sequence(seq, inner.order(), inner.increment())?;
        if lambda >= T::zero() && is_integer(lambda) {
            let mut v = frac_diff(&d, outer, k)?;
            v.bound += T::two().powf(lambda) * b_in;
            return Ok(v);
        }
        let (head, tail) = d.eventual_parts().expect("eventual");
        let (mut v, coef) = eventual_sum(head, tail, lambda, kappa, k)?;
        v.bound += coef * b_in;
        return Ok(v);
    }

    let inner_at = |n: usize| -> Result<(Complex<T>, T)> {
        match frac_diff(seq, inner, n) {
            Ok(v) => Ok((v.value, v.bound)),
            Err(Error::Tolerance {
                achieved, value, ..
            }) => Ok((Complex::new(T::lit(value.0), T::lit(value.1)), T::lit(achieved))),
            Err(e) => Err(e),
        }
    };

    let mut acc = Accum::new();
    let mut a = T::one();
    if lambda >= T::zero() && is_integer(lambda) {
        let n = lambda.to_usize().ok_or_else(|| Error::domain("integer order too large"))?;
        for j in 0..=n {
            let (v, e) = inner_at(k + kappa * j)?;
            acc.add(a, v, j);
            acc.extra += a.abs() * e;
            a = a * (T::idx(j) - lambda) / T::idx(j + 1);
        }
        acc.flush();
        return Ok(DiffValue {
            value: acc.value(),
            bound: acc.bound(),
            terms: n + 1,
        });
    }
    let (eps, max_terms) = match outer.truncation() {
        Truncation::Exact => {
            return Err(Error::domain(
                "exact policy requires finite support or an integer order",
            ))
        }
        Truncation::Tail { eps, max_terms } => (eps, max_terms),
    };
    if lambda <= T::zero() {
        return Err(Error::convergence(
            "order λ ≤ 0 on a sequence of infinite support",
        ));
    }
    let inner_order = inner.order();
    if inner_order < T::zero() && !is_integer(inner_order) {
        return Err(Error::convergence(
            "order μ < 0 on a sequence of infinite support",
        ));
    }
    let decay = differenced_decay(seq.decay(), inner_order)?;
    let ctl = TailControl::new(&decay, lambda, kappa, k)?;
    let mut j = 0usize;
    let mut best = T::infinity();
    let mut best_value = Complex::new(T::zero(), T::zero());
    while j < max_terms {
        let n = BLOCK.min(max_terms - j);
        for _ in 0..n {
            let (v, e) = inner_at(k + kappa * j)?;
            acc.add(a, v, j);
            acc.extra += a.abs() * e;
            a = a * (T::idx(j) - lambda) / T::idx(j + 1);
            j += 1;
        }
        acc.flush();
        if let Some((corr, t)) = ctl.remainder(j, a) {
            let total = t + acc.bound();
            if total < best {
                best = total;
                best_value = acc.value() + corr;
            }
            if total <= eps {
                return Ok(DiffValue {
                    value: acc.value() + corr,
                    bound: total,
                    terms: j,
                });
            }
        }
    }
    let v = if best.is_finite() { best_value } else { acc.value() };
    Err(tolerance_error(eps, best, j, v))
}

/// Both sides of Δ^{λ+κ}a_k = Δ^λ(Δ^κ a_k) under a common truncation policy.
pub fn andersen_compose_check<T: Real>(
    seq: &CoefficientSequence<T>,
    lambda: T,
    kappa_ord: T,
    k: usize,
    truncation: Truncation<T>,
) -> Result<(DiffValue<T>, DiffValue<T>)> {
    if !(kappa_ord >= T::zero()) || !(lambda > -T::one()) || !(kappa_ord + lambda > T::zero()) {
        return Err(Error::domain(
            "composition needs κ ≥ 0, λ > −1 and λ + κ > 0",
        ));
    }
    if !seq.is_bounded() {
        return Err(Error::domain("composition needs a bounded sequence"));
    }
    let lhs = frac_diff(seq, &DifferenceSpec::new(lambda + kappa_ord, 1, truncation)?, k)?;
    // the outer kernel amplifies inner errors by at most Σ|A^{−λ−1}|
    let inner_trunc = match truncation {
        Truncation::Tail { eps, max_terms } if lambda >= T::zero() => Truncation::Tail {
            eps: eps / (T::lit(4.0) * kernel_abs_sum(lambda)?),
            max_terms,
        },
        t => t,
    };
    let inner = DifferenceSpec::new(kappa_ord, 1, inner_trunc)?;
    let outer = DifferenceSpec::new(lambda, 1, truncation)?;
    let rhs = frac_diff_composed(seq, &inner, &outer, k)?;
    Ok((lhs, rhs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn offset(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Δ^μ applied to m_e (m_{2k}) or m_o (m_{2k+1}) at k; identical, term for
/// term, to Δ_2^μ m at 2k or 2k+1.
pub fn parity_subsample_diff<T: Real>(
    m: &CoefficientSequence<T>,
    mu: T,
    parity: Parity,
    k: usize,
    truncation: Truncation<T>,
) -> Result<DiffValue<T>> {
    let sub = m.subsample(parity.offset(), 2)?;
    frac_diff(&sub, &DifferenceSpec::new(mu, 1, truncation)?, k)
}

/// Which support class a sequence falls into for the difference engine.
pub fn summation_class<T: Real>(seq: &CoefficientSequence<T>) -> &'static str {
    match seq.support() {
        Support::Finite(_) => "finite",
        Support::EventuallyConstant(_) => "eventually-constant",
        Support::Rule => "rule",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex<f64> {
        Complex::new(re, 0.0)
    }

    #[test]
    fn first_difference() {
        let m = CoefficientSequence::from_real(&[3.0f64, 1.0, 4.0, 1.0, 5.0]);
        let spec = DifferenceSpec::exact(1.0, 1).unwrap();
        for k in 0..6 {
            let v = frac_diff(&m, &spec, k).unwrap();
            assert_eq!(v.value, m.at(k) - m.at(k + 1));
            assert_eq!(v.terms, 2);
        }
    }

    #[test]
    fn constant_sequence_is_annihilated() {
        let m = CoefficientSequence::constant(c(2.5));
        let spec = DifferenceSpec::exact(0.7f64, 2).unwrap();
        for k in 0..5 {
            assert_eq!(frac_diff(&m, &spec, k).unwrap().value, c(0.0));
        }
        // with a head the tail formula must still sum to the exact value
        let e = CoefficientSequence::eventually_constant(vec![c(1.0), c(-2.0), c(0.5)], c(2.5));
        let brute = frac_diff_truncated(&e, 0.7, 2, 1, 1 << 22).value;
        let exact = frac_diff(&e, &spec, 1).unwrap().value;
        // the brute-force remainder is 2.5 |A_J^{-0.7}| ≈ 2.5 J^{-0.7}/Γ(0.3)
        assert_abs_diff_eq!(exact.re, brute.re, epsilon = 2e-4);
    }

    #[test]
    fn policy_errors() {
        let cosine = CoefficientSequence::cosine(0.4f64);
        let exact = DifferenceSpec::exact(0.5, 1).unwrap();
        assert!(matches!(frac_diff(&cosine, &exact, 0), Err(Error::Domain(_))));
        let neg = DifferenceSpec::tail(-0.5, 1, 1e-10).unwrap();
        assert!(matches!(frac_diff(&cosine, &neg, 0), Err(Error::Convergence(_))));
        let opaque = CoefficientSequence::<f64>::opaque(|n| c(1.0 / (n + 1) as f64));
        let tail = DifferenceSpec::tail(0.5, 1, 1e-10).unwrap();
        assert!(matches!(frac_diff(&opaque, &tail, 0), Err(Error::Convergence(_))));
        // integer orders work on anything
        let two = DifferenceSpec::exact(2.0, 1).unwrap();
        assert!(frac_diff(&opaque, &two, 3).is_ok());
    }

    #[test]
    fn budget_exhaustion_reports_achieved_bound() {
        let m = CoefficientSequence::power_law(0.1f64);
        let spec = DifferenceSpec::new(
            0.25,
            1,
            Truncation::Tail {
                eps: 1e-12,
                max_terms: 4096,
            },
        )
        .unwrap();
        match frac_diff(&m, &spec, 0) {
            Err(Error::Tolerance {
                achieved, terms, ..
            }) => {
                assert_eq!(terms, 4096);
                assert!(achieved > 1e-12 && achieved.is_finite());
            }
            other => panic!("expected tolerance error, got {other:?}"),
        }
    }

    #[test]
    fn kernel_sums() {
        assert_eq!(kernel_abs_sum(3.0f64).unwrap(), 8.0);
        assert_eq!(kernel_abs_sum(0.4f64).unwrap(), 2.0);
        let s = kernel_abs_sum(1.5f64).unwrap();
        let brute: f64 = crate::special_fn::binomial_table(-2.5, 1 << 20)
            .values()
            .iter()
            .map(|a: &f64| a.abs())
            .sum();
        assert!(s >= brute && s < brute + 1e-3);
    }
}
