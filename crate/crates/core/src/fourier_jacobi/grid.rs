use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::special_fn::{cached_rule, JacobiParams, QuadratureRule};
use num_complex::Complex;
use std::fmt;
use std::sync::Arc;

/// θ ↦ f(θ) on [0, π].
pub type Source<T> = Arc<dyn Fn(T) -> Complex<T> + Send + Sync>;

/// Values of a function at the nodes of a Gauss–Jacobi rule.
///
/// `degree` is the declared polynomial degree in cos θ (the exactness
/// contract); `None` marks a non-polynomial function. The optional source
/// allows evaluation away from the nodes.
#[derive(Clone)]
pub struct GridFunction<T: Real> {
    rule: Arc<QuadratureRule<T>>,
    values: Vec<Complex<T>>,
    degree: Option<usize>,
    source: Option<Source<T>>,
}

impl<T: Real> fmt::Debug for GridFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GridFunction")
            .field("nodes", &self.rule.len())
            .field("exponents", &self.rule.exponents())
            .field("degree", &self.degree)
            .field("has_source", &self.source.is_some())
            .finish()
    }
}

impl<T: Real> GridFunction<T> {
    pub fn from_fn(
        rule: Arc<QuadratureRule<T>>,
        f: impl Fn(T) -> Complex<T> + Send + Sync + 'static,
        degree: Option<usize>,
    ) -> Self {
        Self::from_source(rule, Arc::new(f), degree)
    }

    pub fn from_real_fn(
        rule: Arc<QuadratureRule<T>>,
        f: impl Fn(T) -> T + Send + Sync + 'static,
        degree: Option<usize>,
    ) -> Self {
        Self::from_fn(rule, move |t| Complex::new(f(t), T::zero()), degree)
    }

    pub fn from_source(rule: Arc<QuadratureRule<T>>, source: Source<T>, degree: Option<usize>) -> Self {
        let values = rule.nodes().iter().map(|&t| source(t)).collect();
        Self {
            rule,
            values,
            degree,
            source: Some(source),
        }
    }

    /// Node values only. With a declared degree the function can still be
    /// re-evaluated elsewhere through its own expansion, see [`Self::with_interpolant`].
    pub fn from_values(
        rule: Arc<QuadratureRule<T>>,
        values: Vec<Complex<T>>,
        degree: Option<usize>,
    ) -> Result<Self> {
        if values.len() != rule.len() {
            return Err(Error::Grid(format!(
                "{} values for a {}-node rule",
                values.len(),
                rule.len()
            )));
        }
        if let Some(d) = degree {
            if rule.exactness() < d {
                return Err(Error::Precision(format!(
                    "{}-node rule cannot carry a degree-{d} function",
                    rule.len()
                )));
            }
        }
        Ok(Self {
            rule,
            values,
            degree,
            source: None,
        })
    }

    pub fn rule(&self) -> &Arc<QuadratureRule<T>> {
        &self.rule
    }

    pub fn nodes(&self) -> &[T] {
        self.rule.nodes()
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn real_values(&self) -> Vec<T> {
        self.values.iter().map(|v| v.re).collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn source(&self) -> Option<&Source<T>> {
        self.source.as_ref()
    }

    /// All node values real.
    pub fn is_real(&self) -> bool {
        self.values.iter().all(|v| v.im == T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.re == T::zero() && v.im == T::zero())
    }

    /// f(θ) for arbitrary θ ∈ [0, π]; needs a source.
    pub fn eval(&self, theta: T) -> Result<Complex<T>> {
        self.source
            .as_ref()
            .map(|s| s(theta))
            .ok_or_else(|| Error::Grid("function known only at its nodes".into()))
    }

    /// Attaches an exact interpolant for node-only polynomial data: the
    /// function is expanded in the rule's own Jacobi system up to its degree,
    /// which is exact when the rule integrates degree 2d.
    pub fn with_interpolant(&self) -> Result<Self> {
        if self.source.is_some() {
            return Ok(self.clone());
        }
        let d = self.degree.ok_or_else(|| {
            Error::Precision("node-only data without a declared degree cannot be re-evaluated".into())
        })?;
        if self.rule.exactness() < 2 * d {
            return Err(Error::Precision(format!(
                "{}-node rule too small to interpolate degree {d}",
                self.rule.len()
            )));
        }
        let (a, b) = self.rule.exponents();
        let params = JacobiParams::extended(a, b)?;
        let pair = super::transform::analyze_on_nodes(self, &params, d);
        Ok(Self {
            source: Some(pair.source()),
            ..self.clone()
        })
    }

    /// The same function sampled on another rule.
    pub fn resample(&self, rule: Arc<QuadratureRule<T>>) -> Result<Self> {
        let me = self.with_interpolant()?;
        let src = me.source.clone().expect("interpolant attached");
        Ok(Self::from_source(rule, src, self.degree))
    }

    /// Resample on the cached (a, b) rule with `n` nodes.
    pub fn resample_on(&self, n: usize, a: T, b: T) -> Result<Self> {
        self.resample(cached_rule(n, a, b)?)
    }

    /// x·f + y·g on a common rule.
    pub fn linear_combination(x: Complex<T>, f: &Self, y: Complex<T>, g: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&f.rule, &g.rule) && *f.rule != *g.rule {
            return Err(Error::Grid("functions live on different rules".into()));
        }
        let values = f
            .values
            .iter()
            .zip(&g.values)
            .map(|(&u, &v)| u * x + v * y)
            .collect();
        let degree = match (f.degree, g.degree) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        let source = match (&f.source, &g.source) {
            (Some(s), Some(t)) => {
                let (s, t) = (Arc::clone(s), Arc::clone(t));
                Some(Arc::new(move |th| s(th) * x + t(th) * y) as Source<T>)
            }
            _ => None,
        };
        Ok(Self {
            rule: Arc::clone(&f.rule),
            values,
            degree,
            source,
        })
    }

    pub(crate) fn from_parts(
        rule: Arc<QuadratureRule<T>>,
        values: Vec<Complex<T>>,
        degree: Option<usize>,
        source: Option<Source<T>>,
    ) -> Self {
        Self {
            rule,
            values,
            degree,
            source,
        }
    }
}
