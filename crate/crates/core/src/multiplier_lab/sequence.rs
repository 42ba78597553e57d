use crate::error::{Error, Result};
use crate::frac_diff::CoefficientSequence;
use crate::special_fn::binomial_table;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;

/// e(x) = exp(−1/x) for x > 0, else 0.
fn mollifier(x: f64) -> f64 {
    if x > 0.0 {
        (-1.0 / x).exp()
    } else {
        0.0
    }
}

/// C^∞ step: 0 for x ≤ 0, 1 for x ≥ 1.
pub fn smoothstep(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let (a, b) = (mollifier(x), mollifier(1.0 - x));
    a / (a + b)
}

/// χ(x): 0 on [0, 1/2], 1 on [1, 4], 0 on [8, ∞), smooth in between.
pub fn chi(x: f64) -> f64 {
    if x <= 0.5 || x >= 8.0 {
        0.0
    } else if x < 1.0 {
        smoothstep(2.0 * x - 1.0)
    } else if x <= 4.0 {
        1.0
    } else {
        1.0 - smoothstep((x - 4.0) / 4.0)
    }
}

/// The dilate χ_i(k) = χ(2^{−i} k).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestSequenceChi {
    pub i: u32,
}

impl TestSequenceChi {
    pub fn new(i: u32) -> Self {
        Self { i }
    }

    pub fn at(&self, k: usize) -> f64 {
        chi(k as f64 / (1u64 << self.i) as f64)
    }

    /// Indices with χ_i(k) possibly nonzero: (2^{i−1}, 2^{i+3}).
    pub fn support(&self) -> std::ops::Range<usize> {
        let lo = (1usize << self.i) / 2 + 1;
        lo..(1usize << (self.i + 3))
    }

    /// Plateau where χ_i = 1: [2^i, 2^{i+2}].
    pub fn plateau(&self) -> std::ops::RangeInclusive<usize> {
        (1usize << self.i)..=(1usize << (self.i + 2))
    }

    /// Values for k < 2^{i+3}.
    pub fn values(&self) -> Vec<f64> {
        (0..self.support().end).map(|k| self.at(k)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MultiplierKind {
    Literal,
    Constant { re: f64, im: f64 },
    /// m_k = A_{N−k}^δ / A_N^δ for k ≤ N.
    Cesaro { delta: f64, n: usize },
    /// m_k = i^k (k+1)^{−σ}.
    Oscillating { sigma: f64 },
    Chi { i: u32 },
    Dirac { n: usize },
    Custom,
}

impl fmt::Display for MultiplierKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultiplierKind::Literal => write!(f, "literal"),
            MultiplierKind::Constant { re, im } if *im == 0.0 => write!(f, "constant({re})"),
            MultiplierKind::Constant { re, im } => write!(f, "constant({re}{im:+}i)"),
            MultiplierKind::Cesaro { delta, n } => write!(f, "cesaro(delta={delta},n={n})"),
            MultiplierKind::Oscillating { sigma } => write!(f, "oscillating(sigma={sigma})"),
            MultiplierKind::Chi { i } => write!(f, "chi({i})"),
            MultiplierKind::Dirac { n } => write!(f, "dirac({n})"),
            MultiplierKind::Custom => write!(f, "custom"),
        }
    }
}

/// A bounded multiplier sequence {m_k} with its sup norm.
#[derive(Debug, Clone)]
pub struct MultiplierSequence {
    kind: MultiplierKind,
    seq: CoefficientSequence<f64>,
    sup: f64,
}

impl MultiplierSequence {
    fn with_kind(kind: MultiplierKind, seq: CoefficientSequence<f64>) -> Self {
        let sup = seq.sup_norm().expect("built-in multipliers carry a sup norm");
        Self { kind, seq, sup }
    }

    pub fn literal(values: Vec<Complex64>) -> Self {
        Self::with_kind(MultiplierKind::Literal, CoefficientSequence::finite(values))
    }

    pub fn from_real(values: &[f64]) -> Self {
        Self::with_kind(MultiplierKind::Literal, CoefficientSequence::from_real(values))
    }

    /// m_k = c for all k.
    pub fn constant(c: Complex64) -> Self {
        Self::with_kind(
            MultiplierKind::Constant { re: c.re, im: c.im },
            CoefficientSequence::constant(c),
        )
    }

    /// Cesàro means (C, δ) of degree N.
    pub fn cesaro(delta: f64, n: usize) -> Result<Self> {
        if !(delta > -1.0) {
            return Err(Error::domain(format!("Cesàro order δ = {delta} must exceed −1")));
        }
        let a = binomial_table(delta, n);
        let an = a.get(n);
        let values = (0..=n).map(|k| a.get(n - k) / an).collect::<Vec<_>>();
        Ok(Self::with_kind(
            MultiplierKind::Cesaro { delta, n },
            CoefficientSequence::from_real(&values),
        ))
    }

    pub fn oscillating(sigma: f64) -> Result<Self> {
        if !(sigma >= 0.0) {
            return Err(Error::domain("oscillating example needs σ ≥ 0"));
        }
        Ok(Self::with_kind(
            MultiplierKind::Oscillating { sigma },
            CoefficientSequence::oscillating_power(sigma),
        ))
    }

    pub fn chi(i: u32) -> Self {
        let values = TestSequenceChi::new(i).values();
        Self::with_kind(MultiplierKind::Chi { i }, CoefficientSequence::from_real(&values))
    }

    /// m_k = δ_{kN}.
    pub fn dirac(n: usize) -> Self {
        let mut values = vec![0.0; n + 1];
        values[n] = 1.0;
        Self::with_kind(MultiplierKind::Dirac { n }, CoefficientSequence::from_real(&values))
    }

    /// Any sequence with a known sup norm (finite sequences always have one).
    pub fn custom(seq: CoefficientSequence<f64>) -> Result<Self> {
        let sup = seq
            .sup_norm()
            .ok_or_else(|| Error::domain("custom multiplier must declare its sup norm"))?;
        if !sup.is_finite() {
            return Err(Error::domain("multiplier is unbounded"));
        }
        Ok(Self {
            kind: MultiplierKind::Custom,
            seq,
            sup,
        })
    }

    pub fn kind(&self) -> &MultiplierKind {
        &self.kind
    }

    pub fn sequence(&self) -> &CoefficientSequence<f64> {
        &self.seq
    }

    pub fn at(&self, k: usize) -> Complex64 {
        self.seq.at(k)
    }

    /// ‖m‖_∞.
    pub fn sup_norm(&self) -> f64 {
        self.sup
    }

    /// m_e = {m_{2k}} as a custom multiplier.
    pub fn even_part(&self) -> Self {
        Self::custom(self.seq.even_part()).expect("subsequence of a bounded multiplier")
    }

    /// m_o = {m_{2k+1}}.
    pub fn odd_part(&self) -> Self {
        Self::custom(self.seq.odd_part()).expect("subsequence of a bounded multiplier")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_plateau_and_support() {
        for i in 0..6u32 {
            let c = TestSequenceChi::new(i);
            for k in 0..(1usize << (i + 4)) {
                let v = c.at(k);
                if c.plateau().contains(&k) {
                    assert_eq!(v, 1.0);
                }
                if 2 * k <= 1 << i || k >= 1 << (i + 3) {
                    assert_eq!(v, 0.0, "i={i} k={k}");
                }
                assert!((0.0..=1.0).contains(&v));
            }
        }
        assert_eq!(chi(0.75), 0.5);
        assert_eq!(chi(6.0), 0.5);
    }

    #[test]
    fn cesaro_invariants() {
        let m = MultiplierSequence::cesaro(1.5, 20).unwrap();
        assert_eq!(m.at(0).re, 1.0);
        let an = crate::special_fn::binomial(20, 1.5);
        assert!((m.at(20).re - 1.0 / an).abs() < 1e-15);
        assert_eq!(m.at(21).re, 0.0);
        assert_eq!(m.sup_norm(), 1.0);
    }

    #[test]
    fn oscillating_sup() {
        let m = MultiplierSequence::oscillating(0.25).unwrap();
        assert_eq!(m.sup_norm(), 1.0);
        assert_eq!(m.at(1), Complex64::new(0.0, 2f64.powf(-0.25)));
        assert!(MultiplierSequence::custom(CoefficientSequence::opaque(|_| Complex64::new(1.0, 0.0))).is_err());
    }
}
