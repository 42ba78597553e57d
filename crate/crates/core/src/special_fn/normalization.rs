use super::gamma::{binomial, ln_gamma};
use super::jacobi::JacobiRecurrence;
use super::params::JacobiParams;
use crate::scalar::Real;

/// h_k = ‖R_k(cos θ)‖^{-2} in L²_{(α,β)}, with s_k = √h_k and t_k = s_k/P_k(1).
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizationTable<T> {
    params: JacobiParams<T>,
    h: Vec<T>,
    s: Vec<T>,
    t: Vec<T>,
}

impl<T: Real> NormalizationTable<T> {
    /// Closed form, evaluated through the ratio h_k/h_{k−1} to stay in range.
    pub fn new(params: JacobiParams<T>, k_max: usize) -> Self {
        let (a, b) = (params.alpha(), params.beta());
        let one = T::one();
        let two = T::two();
        let s = a + b;
        let mut h = Vec::with_capacity(k_max + 1);
        let h0 = (ln_gamma(s + two) - ln_gamma(a + one) - ln_gamma(b + one)).exp();
        h.push(h0);
        if k_max >= 1 {
            h.push(h0 * (s + T::lit(3.0)) * (a + one) / (b + one));
        }
        for k in 2..=k_max {
            let kk = T::idx(k);
            let ratio = (two * kk + s + one) / (two * kk + s - one) * (kk + s) * (kk + a)
                / ((kk + b) * kk);
            let prev = h[k - 1];
            h.push(prev * ratio);
        }
        let s_vals: Vec<T> = h.iter().map(|v| v.sqrt()).collect();
        let t = s_vals
            .iter()
            .enumerate()
            .map(|(k, &sk)| sk / binomial(k, a))
            .collect();
        Self {
            params,
            h,
            s: s_vals,
            t,
        }
    }

    pub fn params(&self) -> &JacobiParams<T> {
        &self.params
    }

    pub fn k_max(&self) -> usize {
        self.h.len() - 1
    }

    pub fn h(&self, k: usize) -> T {
        self.h[k]
    }

    pub fn s(&self, k: usize) -> T {
        self.s[k]
    }

    pub fn t(&self, k: usize) -> T {
        self.t[k]
    }

    pub fn h_values(&self) -> &[T] {
        &self.h
    }

    pub fn s_values(&self) -> &[T] {
        &self.s
    }

    /// Empirical (min, max) of h_k/(k+1)^{2α+1} over the table.
    pub fn growth_band(&self) -> (T, T) {
        let e = T::two() * self.params.alpha() + T::one();
        self.h
            .iter()
            .enumerate()
            .map(|(k, &hk)| hk / T::idx(k + 1).powf(e))
            .fold((T::infinity(), T::zero()), |(lo, hi), r| (lo.min(r), hi.max(r)))
    }
}

pub fn normalization_table<T: Real>(params: &JacobiParams<T>, k_max: usize) -> NormalizationTable<T> {
    NormalizationTable::new(*params, k_max)
}

/// φ_k(θ) = t_k P_k(cos θ)(sin θ/2)^{α+1/2}(cos θ/2)^{β+1/2}, orthonormal in L²(0, π).
pub fn orthonormal_phi<T: Real>(k: usize, params: &JacobiParams<T>, theta: T) -> T {
    let table = NormalizationTable::new(*params, k);
    let r = JacobiRecurrence::new(*params, k).eval(k, theta.cos());
    let half = T::half();
    let (sh, ch) = ((theta * half).sin(), (theta * half).cos());
    table.s(k) * r * sh.powf(params.alpha() + half) * ch.powf(params.beta() + half)
}
