//! Gauss–Jacobi quadrature from the Jacobi matrix (Golub–Welsch).

use super::gamma::{beta_fn, ln_gamma};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Eigenvalues of a symmetric tridiagonal matrix together with the first
/// component of each normalized eigenvector. Implicit QL with Wilkinson-type
/// shifts; only the first eigenvector row is carried, so the cost is O(n²).
///
/// `diag` has length n, `off[i]` couples rows i and i+1 (length n−1).
pub fn tridiagonal_eigen_first<T: Real>(diag: &[T], off: &[T]) -> Result<(Vec<T>, Vec<T>)> {
    let n = diag.len();
    assert!(off.len() + 1 == n || (n == 0 && off.is_empty()));
    let mut d = diag.to_vec();
    let mut e: Vec<T> = off.iter().copied().chain(std::iter::once(T::zero())).collect();
    let mut z = vec![T::zero(); n];
    if n == 0 {
        return Ok((d, z));
    }
    z[0] = T::one();
    let eps = T::epsilon();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::convergence("tridiagonal QL iteration did not converge"));
            }
            let mut g = (d[l + 1] - d[l]) / (T::two() * e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + if g >= T::zero() { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (T::one(), T::one(), T::zero());
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] -= p;
                    e[m] = T::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + T::two() * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    Ok((d, z))
}

/// Gauss rule on [−1, 1] for the weight (1−x)^a (1+x)^b.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussJacobiX<T> {
    /// Increasing nodes.
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
    pub a: T,
    pub b: T,
}

impl<T: Real> GaussJacobiX<T> {
    pub fn new(n: usize, a: T, b: T) -> Result<Self> {
        check_weight(n, a, b)?;
        let one = T::one();
        let two = T::two();
        let s = a + b;
        let mut diag = Vec::with_capacity(n);
        let mut off = Vec::with_capacity(n.saturating_sub(1));
        diag.push((b - a) / (s + two));
        for k in 1..n {
            let kk = T::idx(k);
            let t = two * kk + s;
            diag.push((b * b - a * a) / (t * (t + two)));
            let beta = if k == 1 {
                T::lit(4.0) * (one + a) * (one + b) / ((two + s) * (two + s) * (T::lit(3.0) + s))
            } else {
                T::lit(4.0) * kk * (kk + a) * (kk + b) * (kk + s)
                    / (t * t * (t + one) * (t - one))
            };
            off.push(beta.sqrt());
        }
        let (x, v) = tridiagonal_eigen_first(&diag, &off)?;
        // mu0 = 2^{a+b+1} B(a+1, b+1)
        let mu0 = ((s + one) * T::LN_2() + ln_gamma(a + one) + ln_gamma(b + one) - ln_gamma(s + two)).exp();
        let mut pairs: Vec<(T, T)> = x.into_iter().zip(v.into_iter().map(|z| mu0 * z * z)).collect();
        pairs.sort_by(|p, q| p.0.partial_cmp(&q.0).expect("finite nodes"));
        let (nodes, weights) = pairs.into_iter().unzip();
        Ok(Self { nodes, weights, a, b })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: Fn(T) -> T>(&self, f: F) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (&x, &w)| acc + w * f(x))
    }
}

fn check_weight<T: Real>(n: usize, a: T, b: T) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("quadrature rule needs at least one node"));
    }
    if !(a > -T::one() && b > -T::one()) {
        return Err(Error::domain(format!(
            "weight exponents (a, b) = ({a}, {b}) not integrable, need a, b > -1"
        )));
    }
    Ok(())
}

/// Gauss–Jacobi rule on [0, π] for ∫ f(θ) (sin θ/2)^{2a+1} (cos θ/2)^{2b+1} dθ.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule<T> {
    theta: Vec<T>,
    cos_theta: Vec<T>,
    weights: Vec<T>,
    a: T,
    b: T,
}

impl<T: Real> QuadratureRule<T> {
    pub fn new(n: usize, a: T, b: T) -> Result<Self> {
        let gx = GaussJacobiX::new(n, a, b)?;
        // (1−x)^a(1+x)^b dx = 2^{a+b+1} w(θ) dθ
        let scale = (-(a + b + T::one()) * T::LN_2()).exp();
        // decreasing x ↔ increasing θ
        let mut cos_theta: Vec<T> = gx.nodes.iter().rev().copied().collect();
        let mut weights: Vec<T> = gx.weights.iter().rev().map(|&w| w * scale).collect();
        if a == b {
            // enforce exact symmetry θ ↦ π − θ
            for i in 0..n / 2 {
                let j = n - 1 - i;
                let c = (cos_theta[i] - cos_theta[j]) * T::half();
                cos_theta[i] = c;
                cos_theta[j] = -c;
                let w = (weights[i] + weights[j]) * T::half();
                weights[i] = w;
                weights[j] = w;
            }
            if n % 2 == 1 {
                cos_theta[n / 2] = T::zero();
            }
        }
        let mut theta: Vec<T> = cos_theta.iter().map(|&c| c.acos()).collect();
        if a == b {
            for i in 0..n / 2 {
                theta[n - 1 - i] = T::PI() - theta[i];
            }
            if n % 2 == 1 {
                theta[n / 2] = T::FRAC_PI_2();
            }
        }
        Ok(Self {
            theta,
            cos_theta,
            weights,
            a,
            b,
        })
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub fn nodes(&self) -> &[T] {
        &self.theta
    }

    /// cos θ_i, computed before θ itself and therefore more accurate near the ends.
    pub fn cos_nodes(&self) -> &[T] {
        &self.cos_theta
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn exponents(&self) -> (T, T) {
        (self.a, self.b)
    }

    /// Highest degree d such that every polynomial of degree ≤ d in cos θ is integrated exactly.
    pub fn exactness(&self) -> usize {
        2 * self.len() - 1
    }

    /// Symmetric under θ ↦ π − θ (node i pairs with node n−1−i).
    pub fn is_symmetric(&self) -> bool {
        self.a == self.b
    }

    pub fn integrate<F: Fn(T) -> T>(&self, f: F) -> T {
        self.theta
            .iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (&t, &w)| acc + w * f(t))
    }

    /// Σ w_i g_i for precomputed node values.
    pub fn integrate_values(&self, g: &[T]) -> T {
        assert_eq!(g.len(), self.len());
        g.iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (&v, &w)| acc + w * v)
    }
}

pub fn gauss_jacobi_rule<T: Real>(n: usize, a: T, b: T) -> Result<QuadratureRule<T>> {
    QuadratureRule::new(n, a, b)
}

/// Total mass ∫_0^π (sin θ/2)^{2a+1} (cos θ/2)^{2b+1} dθ = B(a+1, b+1).
pub fn weight_mass<T: Real>(a: T, b: T) -> T {
    beta_fn(a + T::one(), b + T::one())
}

/// Node count policy: ⌈(degree + headroom)/2⌉.
pub fn default_node_count(degree: usize) -> usize {
    (degree + 32).div_ceil(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_chebyshev_node() {
        let r = gauss_jacobi_rule(1, -0.5f64, -0.5).unwrap();
        assert!((r.nodes()[0] - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!((r.weights()[0] - std::f64::consts::PI).abs() < 1e-13);
    }

    #[test]
    fn mass_of_legendre_type_weight() {
        let r = gauss_jacobi_rule(32, 0.0f64, 0.0).unwrap();
        assert!((r.integrate(|_| 1.0) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn chebyshev_nodes_closed_form() {
        let n = 20;
        let r = gauss_jacobi_rule(n, -0.5f64, -0.5).unwrap();
        for (i, &t) in r.nodes().iter().enumerate() {
            let exact = (2 * i + 1) as f64 * std::f64::consts::PI / (2 * n) as f64;
            assert!((t - exact).abs() < 1e-13);
            assert!((r.weights()[i] - std::f64::consts::PI / n as f64).abs() < 1e-13);
        }
    }

    #[test]
    fn symmetric_rules_are_exactly_symmetric() {
        let r = gauss_jacobi_rule(41, 1.5f64, 1.5).unwrap();
        let n = r.len();
        for i in 0..n {
            assert!((r.nodes()[i] + r.nodes()[n - 1 - i] - std::f64::consts::PI).abs() < 1e-15);
            assert_eq!(r.weights()[i], r.weights()[n - 1 - i]);
        }
        assert!(r.nodes().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rejects_bad_weight() {
        assert!(gauss_jacobi_rule(4, -1.0f64, 0.0).is_err());
        assert!(gauss_jacobi_rule(0, 0.0f64, 0.0).is_err());
    }

    #[test]
    fn tridiagonal_two_by_two() {
        let (mut ev, z) = tridiagonal_eigen_first(&[2.0f64, 2.0], &[1.0]).unwrap();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((ev[0] - 1.0).abs() < 1e-15 && (ev[1] - 3.0).abs() < 1e-15);
        assert!((z[0] * z[0] + z[1] * z[1] - 1.0).abs() < 1e-15);
    }
}
