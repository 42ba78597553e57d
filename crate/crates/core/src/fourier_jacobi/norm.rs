//! Weighted L^p norms ‖f‖ = (∫_0^π |f|^p (sin θ/2)^{2a+1}(cos θ/2)^{2b+1} dθ)^{1/p}.

use super::grid::{GridFunction, Source};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::special_fn::{cached_x_rule, default_node_count};
use num_complex::Complex;
use serde::{Deserialize, Serialize};

/// Relative agreement required between successive refinements.
pub const NORM_REFINE_TOL: f64 = 1e-8;

/// Panel node counts tried in turn before a panel is bisected.
const PANEL_NODES: [usize; 4] = [12, 24, 48, 96];

/// Degree assumed for functions without a declared one.
const FALLBACK_DEGREE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightedNormSpec<T> {
    pub p: T,
    pub a: T,
    pub b: T,
}

impl<T: Real> WeightedNormSpec<T> {
    pub fn new(p: T, a: T, b: T) -> Result<Self> {
        if !(p >= T::one()) || !p.is_finite() {
            return Err(Error::domain(format!("p = {p} outside [1, ∞)")));
        }
        if !(a > -T::one() && b > -T::one()) {
            return Err(Error::domain(format!("weight ({a}, {b}) not integrable")));
        }
        Ok(Self { p, a, b })
    }

    /// p′ with 1/p + 1/p′ = 1 (∞ at p = 1).
    pub fn conjugate(&self) -> T {
        conjugate_exponent(self.p)
    }

    /// p is an even integer, so |f|^p of a polynomial is a polynomial.
    pub fn is_even_integer(&self) -> bool {
        let half = self.p * T::half();
        half == half.round()
    }
}

pub fn conjugate_exponent<T: Real>(p: T) -> T {
    if p == T::one() {
        T::infinity()
    } else {
        p / (p - T::one())
    }
}

/// A norm value with an estimate of its quadrature error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormEstimate<T> {
    pub value: T,
    /// Relative error estimate (difference of the last two refinements, or
    /// zero for the exact even-p path).
    pub rel_error: T,
    /// Function evaluations spent.
    pub evaluations: usize,
}

/// ‖f‖_{L^p_{(a,b)}}.
///
/// Even integer p with a declared degree d: an (a, b) Gauss rule exact for
/// degree p·d. Otherwise |f|^p is integrated on panels split at the real zeros
/// of f. Each panel uses a Gauss–Jacobi rule whose endpoint exponents absorb
/// |θ − z|^p and the weight's endpoint powers. A panel is accepted once two
/// node counts agree to its share of [`NORM_REFINE_TOL`] (or 64ε in single
/// precision) and is bisected otherwise; a [`Error::Precision`] error reports
/// failure.
pub fn weighted_norm<T: Real>(f: &GridFunction<T>, spec: &WeightedNormSpec<T>) -> Result<T> {
    weighted_norm_estimate(f, spec).map(|e| e.value)
}

pub fn weighted_norm_estimate<T: Real>(f: &GridFunction<T>, spec: &WeightedNormSpec<T>) -> Result<NormEstimate<T>> {
    if f.is_zero() && f.source().is_none() {
        return Ok(NormEstimate {
            value: T::zero(),
            rel_error: T::zero(),
            evaluations: 0,
        });
    }
    let p = spec.p;
    if spec.is_even_integer() {
        if let Some(d) = f.degree() {
            let m = p.to_usize().expect("small even integer");
            let need = m * d;
            let rule = f.rule();
            if rule.exponents() == (spec.a, spec.b) && rule.exactness() >= need {
                return Ok(even_power(rule.weights(), f.values(), m));
            }
            let g = f.resample_on(default_node_count(need), spec.a, spec.b)?;
            return Ok(even_power(g.rule().weights(), g.values(), m));
        }
    }
    let g = f.with_interpolant()?;
    let src = g.source().expect("interpolant attached").clone();
    let degree = f.degree().unwrap_or(FALLBACK_DEGREE);
    let real = f.is_real() && probe_real(&src);
    panel_norm(&src, real, degree, spec)
}

fn even_power<T: Real>(w: &[T], vals: &[Complex<T>], m: usize) -> NormEstimate<T> {
    let s = w
        .iter()
        .zip(vals)
        .fold(T::zero(), |acc, (&w, v)| acc + w * v.norm_sqr().powi((m / 2) as i32));
    NormEstimate {
        value: s.powf(T::one() / T::idx(m)),
        rel_error: T::zero(),
        evaluations: vals.len(),
    }
}

fn probe_real<T: Real>(src: &Source<T>) -> bool {
    (0..=16).all(|i| src(T::PI() * T::idx(i) / T::lit(16.0)).im == T::zero())
}

#[derive(Debug, Clone, Copy)]
struct Break<T> {
    at: T,
    zero: bool,
}

/// Breakpoints: uniform panel boundaries plus bracketed real zeros of Re f.
fn breakpoints<T: Real>(src: &Source<T>, real: bool, degree: usize) -> Vec<Break<T>> {
    let panels = 8usize.max(degree.div_ceil(2));
    let pi = T::PI();
    let mut pts: Vec<Break<T>> = (0..=panels)
        .map(|i| Break {
            at: pi * T::idx(i) / T::idx(panels),
            zero: false,
        })
        .collect();
    if real {
        // dense enough to separate neighbouring zeros of a degree-d polynomial
        let samples = 16 * panels.max(degree);
        let grid: Vec<T> = (0..=samples).map(|i| pi * T::idx(i) / T::idx(samples)).collect();
        let vals: Vec<T> = grid.iter().map(|&t| src(t).re).collect();
        for i in 0..samples {
            let (l, r) = (vals[i], vals[i + 1]);
            if i > 0 && l == T::zero() {
                pts.push(Break {
                    at: grid[i],
                    zero: true,
                });
            } else if l * r < T::zero() {
                pts.push(Break {
                    at: bisect(src, grid[i], grid[i + 1], l),
                    zero: true,
                });
            }
        }
    }
    pts.sort_by(|x, y| x.at.partial_cmp(&y.at).expect("finite breakpoints"));
    // merge coincident points, keeping the zero tag
    let tol = T::lit(64.0) * T::epsilon();
    let mut out: Vec<Break<T>> = Vec::with_capacity(pts.len());
    for b in pts {
        match out.last_mut() {
            Some(last) if (b.at - last.at).abs() <= tol => {
                last.zero |= b.zero;
                if last.at == T::zero() || last.at == pi {
                    // keep exact endpoints
                } else {
                    last.at = b.at;
                }
            }
            _ => out.push(b),
        }
    }
    out
}

fn bisect<T: Real>(src: &Source<T>, mut lo: T, mut hi: T, flo: T) -> T {
    let mut slo = flo.signum();
    for _ in 0..200 {
        let mid = (lo + hi) * T::half();
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = src(mid).re;
        if fm == T::zero() {
            return mid;
        }
        if fm.signum() == slo {
            lo = mid;
            slo = fm.signum();
        } else {
            hi = mid;
        }
    }
    (lo + hi) * T::half()
}

/// ∫ |f|^p w over one panel with an m-node rule.
fn panel_integral<T: Real>(src: &Source<T>, l: Break<T>, r: Break<T>, spec: &WeightedNormSpec<T>, m: usize) -> Result<T> {
    let (p, a, b) = (spec.p, spec.a, spec.b);
    let one = T::one();
    let two = T::two();
    let ea = two * a + one;
    let eb = two * b + one;
    let at_zero = l.at == T::zero();
    let at_pi = r.at == T::PI();
    // weight (1−x)^{er}(1+x)^{el}
    let el = if at_zero { ea } else { T::zero() } + if l.zero { p } else { T::zero() };
    let er = if at_pi { eb } else { T::zero() } + if r.zero { p } else { T::zero() };
    let rule = cached_x_rule(m, er, el)?;
    let c = (l.at + r.at) * T::half();
    let h = (r.at - l.at) * T::half();
    let mut s = T::zero();
    for (&x, &wx) in rule.nodes.iter().zip(&rule.weights) {
        let th = c + h * x;
        let (xp, xm) = (one + x, one - x);
        let mut fa = src(th).norm();
        if l.zero {
            fa /= xp;
        }
        if r.zero {
            fa /= xm;
        }
        let sh = (th * T::half()).sin();
        let ch = (th * T::half()).cos();
        let ws = if at_zero { sh / xp } else { sh };
        let wc = if at_pi { ch / xm } else { ch };
        s += wx * fa.powf(p) * ws.powf(ea) * wc.powf(eb);
    }
    Ok(h * s)
}

/// Panels accepted before giving up.
const MAX_PANELS: usize = 1 << 14;

/// Adaptive panel quadrature: every panel is integrated with the two smallest
/// node counts; panels whose two values disagree by more than their share of
/// the tolerance are first refined in node count, then bisected.
fn panel_norm<T: Real>(src: &Source<T>, real: bool, degree: usize, spec: &WeightedNormSpec<T>) -> Result<NormEstimate<T>> {
    let pts = breakpoints(src, real, degree);
    let pi = T::PI();
    let tol = T::lit(NORM_REFINE_TOL).max(T::lit(64.0) * T::epsilon());
    let (m_lo, m_hi) = (PANEL_NODES[1], PANEL_NODES[PANEL_NODES.len() - 1]);
    let mut evals = 0;
    // scale of the integral from a first pass
    let mut scale = T::zero();
    for w in pts.windows(2) {
        scale += panel_integral(src, w[0], w[1], spec, m_lo)?;
        evals += m_lo;
    }
    let scale = scale.max(T::min_positive_value());
    let mut stack: Vec<(Break<T>, Break<T>)> = pts.windows(2).rev().map(|w| (w[0], w[1])).collect();
    let mut total = T::zero();
    let mut err = T::zero();
    let mut accepted = 0usize;
    while let Some((l, r)) = stack.pop() {
        let share = tol * scale * (r.at - l.at) / pi;
        let mut prev = panel_integral(src, l, r, spec, PANEL_NODES[0])?;
        evals += PANEL_NODES[0];
        let mut done = None;
        for &m in &PANEL_NODES[1..] {
            let cur = panel_integral(src, l, r, spec, m)?;
            evals += m;
            let d = (cur - prev).abs();
            if d <= share {
                done = Some((cur, d));
                break;
            }
            prev = cur;
            if m >= m_hi {
                break;
            }
        }
        match done {
            Some((v, d)) => {
                total += v;
                err += d;
                accepted += 1;
            }
            None => {
                let mid = (l.at + r.at) * T::half();
                if accepted + stack.len() >= MAX_PANELS || mid <= l.at || mid >= r.at {
                    return Err(Error::Precision(format!(
                        "weighted L^{} norm did not settle near θ = {} after {} evaluations",
                        spec.p, mid, evals
                    )));
                }
                let m = Break { at: mid, zero: false };
                stack.push((m, r));
                stack.push((l, m));
            }
        }
    }
    let inv_p = T::one() / spec.p;
    let rel = if total > T::zero() { err / total } else { T::zero() };
    Ok(NormEstimate {
        value: total.powf(inv_p),
        rel_error: rel * inv_p,
        evaluations: evals,
    })
}
