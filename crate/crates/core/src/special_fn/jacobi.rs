//! Jacobi polynomials by forward three-term recurrence.

use super::gamma::binomial;
use super::params::JacobiParams;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Recurrence coefficients for the normalized polynomials R_k = P_k / P_k(1):
/// R_n(x) = (a_n x + b_n) R_{n-1}(x) − c_n R_{n-2}(x).
#[derive(Debug, Clone)]
pub struct JacobiRecurrence<T> {
    params: JacobiParams<T>,
    // index n holds (a_n, b_n, c_n); entries 0 and 1 are special
    coef: Vec<(T, T, T)>,
}

impl<T: Real> JacobiRecurrence<T> {
    pub fn new(params: JacobiParams<T>, k_max: usize) -> Self {
        let (al, be) = (params.alpha(), params.beta());
        let s = al + be;
        let one = T::one();
        let two = T::two();
        let mut coef = Vec::with_capacity(k_max + 1);
        coef.push((T::zero(), one, T::zero()));
        if k_max >= 1 {
            // R_1 = 1 + (s+2)(x−1)/(2(α+1))
            let a1 = (s + two) / (two * (al + one));
            coef.push((a1, one - a1, T::zero()));
        }
        for n in 2..=k_max {
            let nn = T::idx(n);
            let t = two * nn + s;
            let a = (t - one) * t / (two * (nn + s) * (nn + al));
            let b = (t - one) * (al - be) * s / (two * (nn + s) * (t - two) * (nn + al));
            let c = (nn + be - one) * t * (nn - one) / ((nn + s) * (t - two) * (nn + al));
            coef.push((a, b, c));
        }
        Self { params, coef }
    }

    pub fn params(&self) -> &JacobiParams<T> {
        &self.params
    }

    pub fn k_max(&self) -> usize {
        self.coef.len() - 1
    }

    /// Fills `out[k] = R_k(x)` for k < out.len() (out.len() ≤ k_max + 1).
    pub fn fill(&self, x: T, out: &mut [T]) {
        let n = out.len();
        if n == 0 {
            return;
        }
        assert!(n <= self.coef.len(), "recurrence built for fewer degrees");
        out[0] = T::one();
        if n == 1 {
            return;
        }
        let (a1, b1, _) = self.coef[1];
        out[1] = a1 * x + b1;
        let (mut r2, mut r1) = (out[0], out[1]);
        for k in 2..n {
            let (a, b, c) = self.coef[k];
            let r = (a * x + b) * r1 - c * r2;
            out[k] = r;
            r2 = r1;
            r1 = r;
        }
    }

    /// R_k(x) for a single k.
    pub fn eval(&self, k: usize, x: T) -> T {
        if k == 0 {
            return T::one();
        }
        let (a1, b1, _) = self.coef[1];
        let (mut r2, mut r1) = (T::one(), a1 * x + b1);
        for &(a, b, c) in &self.coef[2..=k] {
            let r = (a * x + b) * r1 - c * r2;
            r2 = r1;
            r1 = r;
        }
        r1
    }

    /// Visits R_0(x), …, R_{n−1}(x) in order without storing them.
    pub fn for_each(&self, x: T, n: usize, mut f: impl FnMut(usize, T)) {
        assert!(n <= self.coef.len(), "recurrence built for fewer degrees");
        if n == 0 {
            return;
        }
        f(0, T::one());
        if n == 1 {
            return;
        }
        let (a1, b1, _) = self.coef[1];
        let (mut r2, mut r1) = (T::one(), a1 * x + b1);
        f(1, r1);
        for k in 2..n {
            let (a, b, c) = self.coef[k];
            let r = (a * x + b) * r1 - c * r2;
            f(k, r);
            r2 = r1;
            r1 = r;
        }
    }

    pub fn table(&self, x: T) -> Vec<T> {
        let mut v = vec![T::zero(); self.coef.len()];
        self.fill(x, &mut v);
        v
    }
}

fn check_x<T: Real>(x: T) -> Result<()> {
    let tol = T::lit(8.0) * T::epsilon();
    if !(x.abs() <= T::one() + tol) {
        return Err(Error::domain(format!("x = {x} outside [-1, 1]")));
    }
    Ok(())
}

/// P_k(1) = A_k^α.
pub fn jacobi_at_one<T: Real>(k: usize, params: &JacobiParams<T>) -> T {
    binomial(k, params.alpha())
}

/// Normalized Jacobi polynomial R_k(x) = P_k(x)/P_k(1).
pub fn normalized_jacobi<T: Real>(k: usize, params: &JacobiParams<T>, x: T) -> Result<T> {
    check_x(x)?;
    if x == T::one() {
        return Ok(T::one());
    }
    Ok(JacobiRecurrence::new(*params, k).eval(k, x))
}

/// Jacobi polynomial P_k^{(α,β)}(x).
pub fn jacobi_poly<T: Real>(k: usize, params: &JacobiParams<T>, x: T) -> Result<T> {
    Ok(normalized_jacobi(k, params, x)? * jacobi_at_one(k, params))
}

/// Checked convenience constructor for raw parameters (any α, β > −1).
pub fn jacobi_poly_raw<T: Real>(k: usize, alpha: T, beta: T, x: T) -> Result<T> {
    let p = JacobiParams::extended(alpha, beta)?;
    jacobi_poly(k, &p, x)
}
