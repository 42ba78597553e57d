//! Coefficient sequences with support and decay metadata.

use crate::error::{Error, Result};
use crate::scalar::Real;
use num_complex::Complex;
use std::fmt;
use std::sync::Arc;

/// A rule producing c_n for every n.
pub trait SequenceRule<T: Real>: Send + Sync {
    fn at(&self, n: usize) -> Complex<T>;

    /// Writes c_{start + stride·j} into `out[j]`.
    fn fill(&self, start: usize, stride: usize, out: &mut [Complex<T>]) {
        for (j, o) in out.iter_mut().enumerate() {
            *o = self.at(start + stride * j);
        }
    }
}

struct FnRule<F>(F);

impl<T: Real, F: Fn(usize) -> Complex<T> + Send + Sync> SequenceRule<T> for FnRule<F> {
    fn at(&self, n: usize) -> Complex<T> {
        (self.0)(n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigKind {
    Cos,
    Sin,
    /// e^{inθ}
    Exp,
}

/// c_n = cos nθ, sin nθ or e^{inθ}. Progressions are filled by complex rotation,
/// re-anchored every 64 steps.
#[derive(Debug, Clone, Copy)]
pub struct Trigonometric<T> {
    pub theta: T,
    pub kind: TrigKind,
}

impl<T: Real> Trigonometric<T> {
    fn project(&self, z: Complex<T>) -> Complex<T> {
        match self.kind {
            TrigKind::Cos => Complex::new(z.re, T::zero()),
            TrigKind::Sin => Complex::new(z.im, T::zero()),
            TrigKind::Exp => z,
        }
    }

    fn phase(&self, n: usize) -> Complex<T> {
        let a = T::idx(n) * self.theta;
        Complex::new(a.cos(), a.sin())
    }
}

impl<T: Real> SequenceRule<T> for Trigonometric<T> {
    fn at(&self, n: usize) -> Complex<T> {
        self.project(self.phase(n))
    }

    fn fill(&self, start: usize, stride: usize, out: &mut [Complex<T>]) {
        let step = self.phase(stride);
        for (c, chunk) in out.chunks_mut(64).enumerate() {
            let mut z = self.phase(start + stride * 64 * c);
            for o in chunk.iter_mut() {
                *o = self.project(z);
                z *= step;
            }
        }
    }
}

/// |c_n| ≤ scale · (step·n + offset + 1)^{−exponent} for every n.
///
/// `step` and `offset` stay 1 and 0 unless the sequence was subsampled; keeping
/// the original index lets a subsequence report the same bounds as its parent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerEnvelope<T> {
    pub scale: T,
    pub exponent: T,
    pub step: usize,
    pub offset: usize,
}

impl<T: Real> PowerEnvelope<T> {
    pub fn new(scale: T, exponent: T) -> Self {
        Self {
            scale,
            exponent,
            step: 1,
            offset: 0,
        }
    }

    pub fn at(&self, n: usize) -> T {
        self.scale * T::idx(self.step * n + self.offset + 1).powf(-self.exponent)
    }
}

/// Declares the factorization c_n = u_n g_n where g_n is the declared envelope
/// (or the constant sup when no envelope is given) and the partial sums of u
/// along every progression k + κj are bounded: |Σ_{j=a}^{b} u_{k+κj}| ≤ P(κ).
/// `None` for a given κ means no such bound.
#[derive(Clone)]
pub struct Oscillation<T> {
    partial_sums: Arc<dyn Fn(usize) -> Option<T> + Send + Sync>,
}

impl<T: Real> Oscillation<T> {
    pub fn new(f: impl Fn(usize) -> Option<T> + Send + Sync + 'static) -> Self {
        Self {
            partial_sums: Arc::new(f),
        }
    }

    pub fn bound(&self, kappa: usize) -> Option<T> {
        (self.partial_sums)(kappa)
    }
}

impl<T> fmt::Debug for Oscillation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Oscillation(..)")
    }
}

/// c_n is the real part, imaginary part or all of e^{i(nθ + φ)}. Only the
/// trigonometric constructors set it; it lets the difference engine sum tails
/// by parts instead of bounding them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phase<T> {
    pub theta: T,
    pub shift: T,
    pub kind: TrigKind,
}

/// Decay information attached to a rule-defined sequence.
#[derive(Debug, Clone)]
pub struct DecayInfo<T> {
    /// sup_n |c_n|, if known (the bounded flag).
    pub sup: Option<T>,
    /// c_n → 0.
    pub vanishing: bool,
    pub envelope: Option<PowerEnvelope<T>>,
    pub oscillation: Option<Oscillation<T>>,
    pub phase: Option<Phase<T>>,
}

impl<T> Default for DecayInfo<T> {
    fn default() -> Self {
        Self {
            sup: None,
            vanishing: false,
            envelope: None,
            oscillation: None,
            phase: None,
        }
    }
}

impl<T: Real> DecayInfo<T> {
    pub fn bounded(sup: T) -> Self {
        Self {
            sup: Some(sup),
            ..Self::default()
        }
    }

    pub fn power(scale: T, exponent: T) -> Self {
        Self {
            sup: Some(scale),
            vanishing: exponent > T::zero(),
            envelope: Some(PowerEnvelope::new(scale, exponent)),
            oscillation: None,
            phase: None,
        }
    }

    pub fn with_oscillation(mut self, osc: Oscillation<T>) -> Self {
        self.oscillation = Some(osc);
        self
    }

    /// Known polynomial decay exponent.
    pub fn decay_exponent(&self) -> Option<T> {
        self.envelope.map(|e| e.exponent)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    /// c_n = 0 for n ≥ len.
    Finite(usize),
    /// c_n equals a nonzero constant for n ≥ len.
    EventuallyConstant(usize),
    Rule,
}

#[derive(Clone)]
enum Repr<T: Real> {
    Eventual {
        head: Vec<Complex<T>>,
        tail: Complex<T>,
    },
    Rule(Arc<dyn SequenceRule<T>>),
}

/// A real or complex sequence {c_k}, k ≥ 0.
#[derive(Clone)]
pub struct CoefficientSequence<T: Real> {
    repr: Repr<T>,
    decay: DecayInfo<T>,
}

impl<T: Real> fmt::Debug for CoefficientSequence<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Eventual { head, tail } => f
                .debug_struct("CoefficientSequence")
                .field("head", head)
                .field("tail", tail)
                .finish(),
            Repr::Rule(_) => f
                .debug_struct("CoefficientSequence")
                .field("rule", &"..")
                .field("decay", &self.decay)
                .finish(),
        }
    }
}

impl<T: Real> CoefficientSequence<T> {
    pub fn finite(values: Vec<Complex<T>>) -> Self {
        Self::eventually_constant(values, Complex::new(T::zero(), T::zero()))
    }

    pub fn from_real(values: &[T]) -> Self {
        Self::finite(values.iter().map(|&v| Complex::new(v, T::zero())).collect())
    }

    pub fn zeros() -> Self {
        Self::finite(Vec::new())
    }

    /// c_n = head[n] for n < head.len(), and `tail` afterwards.
    pub fn eventually_constant(head: Vec<Complex<T>>, tail: Complex<T>) -> Self {
        let sup = head
            .iter()
            .map(|c| c.norm())
            .fold(tail.norm(), |a, b| a.max(b));
        let vanishing = tail.norm() == T::zero();
        Self {
            repr: Repr::Eventual { head, tail },
            decay: DecayInfo {
                sup: Some(sup),
                vanishing,
                envelope: None,
                oscillation: None,
                phase: None,
            },
        }
    }

    pub fn constant(c: Complex<T>) -> Self {
        Self::eventually_constant(Vec::new(), c)
    }

    pub fn rule(rule: impl SequenceRule<T> + 'static, decay: DecayInfo<T>) -> Self {
        Self {
            repr: Repr::Rule(Arc::new(rule)),
            decay,
        }
    }

    pub fn from_fn(
        f: impl Fn(usize) -> Complex<T> + Send + Sync + 'static,
        decay: DecayInfo<T>,
    ) -> Self {
        Self::rule(FnRule(f), decay)
    }

    /// Rule sequence with no decay information at all. Tail-controlled
    /// differences refuse it.
    pub fn opaque(f: impl Fn(usize) -> Complex<T> + Send + Sync + 'static) -> Self {
        Self::from_fn(f, DecayInfo::default())
    }

    fn trig(theta: T, kind: TrigKind) -> Self {
        let osc = Oscillation::new(move |kappa: usize| {
            let s = (T::idx(kappa) * theta * T::half()).sin().abs();
            (s > T::lit(1e3) * T::epsilon()).then(|| s.recip())
        });
        let mut decay = DecayInfo::power(T::one(), T::zero()).with_oscillation(osc);
        decay.phase = Some(Phase {
            theta,
            shift: T::zero(),
            kind,
        });
        Self::rule(Trigonometric { theta, kind }, decay)
    }

    /// c_n = cos nθ.
    pub fn cosine(theta: T) -> Self {
        Self::trig(theta, TrigKind::Cos)
    }

    /// c_n = sin nθ.
    pub fn sine(theta: T) -> Self {
        Self::trig(theta, TrigKind::Sin)
    }

    /// c_n = (n+1)^{−σ}.
    pub fn power_law(sigma: T) -> Self {
        Self::from_fn(
            move |n| Complex::new(T::idx(n + 1).powf(-sigma), T::zero()),
            DecayInfo::power(T::one(), sigma),
        )
    }

    /// c_n = i^n (n+1)^{−σ}.
    pub fn oscillating_power(sigma: T) -> Self {
        let osc = Oscillation::new(|kappa: usize| match kappa % 4 {
            0 => None,
            2 => Some(T::one()),
            _ => Some(T::SQRT_2()),
        });
        Self::from_fn(
            move |n| {
                let g = T::idx(n + 1).powf(-sigma);
                match n % 4 {
                    0 => Complex::new(g, T::zero()),
                    1 => Complex::new(T::zero(), g),
                    2 => Complex::new(-g, T::zero()),
                    _ => Complex::new(T::zero(), -g),
                }
            },
            DecayInfo::power(T::one(), sigma).with_oscillation(osc),
        )
    }

    pub fn at(&self, n: usize) -> Complex<T> {
        match &self.repr {
            Repr::Eventual { head, tail } => head.get(n).copied().unwrap_or(*tail),
            Repr::Rule(r) => r.at(n),
        }
    }

    pub fn re(&self, n: usize) -> T {
        self.at(n).re
    }

    pub fn fill(&self, start: usize, stride: usize, out: &mut [Complex<T>]) {
        match &self.repr {
            Repr::Rule(r) => r.fill(start, stride, out),
            Repr::Eventual { .. } => {
                for (j, o) in out.iter_mut().enumerate() {
                    *o = self.at(start + stride * j);
                }
            }
        }
    }

    pub fn support(&self) -> Support {
        match &self.repr {
            Repr::Eventual { head, tail } => {
                if tail.norm() == T::zero() {
                    Support::Finite(head.len())
                } else {
                    Support::EventuallyConstant(head.len())
                }
            }
            Repr::Rule(_) => Support::Rule,
        }
    }

    /// Support bound K (c_n = 0 for n ≥ K) of a finite sequence.
    pub fn finite_len(&self) -> Option<usize> {
        match self.support() {
            Support::Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.finite_len().is_some()
    }

    /// `(head, tail)` for eventually constant sequences (finite ones included).
    pub fn eventual_parts(&self) -> Option<(&[Complex<T>], Complex<T>)> {
        match &self.repr {
            Repr::Eventual { head, tail } => Some((head, *tail)),
            Repr::Rule(_) => None,
        }
    }

    pub fn decay(&self) -> &DecayInfo<T> {
        &self.decay
    }

    pub fn is_bounded(&self) -> bool {
        self.decay.sup.is_some()
    }

    pub fn is_vanishing(&self) -> bool {
        self.decay.vanishing
    }

    /// sup |c_n| when known.
    pub fn sup_norm(&self) -> Option<T> {
        self.decay.sup
    }

    /// c_0, …, c_{n−1}.
    pub fn take(&self, n: usize) -> Vec<Complex<T>> {
        let mut v = vec![Complex::new(T::zero(), T::zero()); n];
        self.fill(0, 1, &mut v);
        v
    }

    /// Real parts of c_0, …, c_{n−1}.
    pub fn take_re(&self, n: usize) -> Vec<T> {
        self.take(n).into_iter().map(|c| c.re).collect()
    }

    /// Every coefficient has zero imaginary part (only checked for finite data).
    pub fn is_real(&self) -> bool {
        match &self.repr {
            Repr::Eventual { head, tail } => {
                tail.im == T::zero() && head.iter().all(|c| c.im == T::zero())
            }
            Repr::Rule(_) => false,
        }
    }

    /// n ↦ c_{step·n + offset}.
    pub fn subsample(&self, offset: usize, step: usize) -> Result<Self> {
        if step == 0 {
            return Err(Error::domain("subsample step must be positive"));
        }
        Ok(match &self.repr {
            Repr::Eventual { head, tail } => {
                let h = head.iter().skip(offset).step_by(step).copied().collect();
                Self::eventually_constant(h, *tail)
            }
            Repr::Rule(r) => {
                let base = Arc::clone(r);
                let osc = self.decay.oscillation.clone().map(|o| {
                    Oscillation::new(move |kappa: usize| o.bound(kappa * step))
                });
                let decay = DecayInfo {
                    sup: self.decay.sup,
                    vanishing: self.decay.vanishing,
                    envelope: self.decay.envelope.map(|e| PowerEnvelope {
                        step: e.step * step,
                        offset: e.offset + e.step * offset,
                        ..e
                    }),
                    oscillation: osc,
                    phase: self.decay.phase.map(|ph| Phase {
                        theta: ph.theta * T::idx(step),
                        shift: ph.shift + ph.theta * T::idx(offset),
                        kind: ph.kind,
                    }),
                };
                Self::rule(
                    Subsampled {
                        base,
                        offset,
                        step,
                    },
                    decay,
                )
            }
        })
    }

    /// Even-index subsequence m_e(k) = m_{2k}.
    pub fn even_part(&self) -> Self {
        self.subsample(0, 2).expect("step 2")
    }

    /// Odd-index subsequence m_o(k) = m_{2k+1}.
    pub fn odd_part(&self) -> Self {
        self.subsample(1, 2).expect("step 2")
    }

    /// a·x + b·y. Finite data stays finite; otherwise the result is a rule with
    /// the metadata that survives (sup and the weaker envelope).
    pub fn linear_combination(a: Complex<T>, x: &Self, b: Complex<T>, y: &Self) -> Self {
        if let (Some((hx, tx)), Some((hy, ty))) = (x.eventual_parts(), y.eventual_parts()) {
            let n = hx.len().max(hy.len());
            let head = (0..n).map(|i| a * x.at(i) + b * y.at(i)).collect();
            return Self::eventually_constant(head, a * tx + b * ty);
        }
        let sup = match (x.sup_norm(), y.sup_norm()) {
            (Some(sx), Some(sy)) => Some(a.norm() * sx + b.norm() * sy),
            _ => None,
        };
        let envelope = match (x.decay.envelope, y.decay.envelope) {
            (Some(ex), Some(ey)) if (ex.step, ex.offset) == (ey.step, ey.offset) => {
                Some(PowerEnvelope {
                    scale: a.norm() * ex.scale + b.norm() * ey.scale,
                    exponent: ex.exponent.min(ey.exponent),
                    ..ex
                })
            }
            _ => None,
        };
        let decay = DecayInfo {
            sup,
            vanishing: x.is_vanishing() && y.is_vanishing(),
            envelope,
            oscillation: None,
            phase: None,
        };
        let (xc, yc) = (x.clone(), y.clone());
        Self::from_fn(move |n| a * xc.at(n) + b * yc.at(n), decay)
    }

    /// Coefficient-wise product with another sequence, truncated to the
    /// support of `self` (which must be finite).
    pub fn pointwise_mul(&self, m: &Self) -> Result<Self> {
        let n = self
            .finite_len()
            .ok_or_else(|| Error::domain("pointwise product needs finite support"))?;
        Ok(Self::finite(
            (0..n).map(|k| self.at(k) * m.at(k)).collect(),
        ))
    }
}

struct Subsampled<T: Real> {
    base: Arc<dyn SequenceRule<T>>,
    offset: usize,
    step: usize,
}

impl<T: Real> SequenceRule<T> for Subsampled<T> {
    fn at(&self, n: usize) -> Complex<T> {
        self.base.at(self.step * n + self.offset)
    }

    fn fill(&self, start: usize, stride: usize, out: &mut [Complex<T>]) {
        self.base
            .fill(self.step * start + self.offset, self.step * stride, out)
    }
}
