use crate::error::{Error, Result};
use crate::frac_diff::{DiffValue, DEFAULT_MAX_TERMS};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Relative change below which a quantity counts as stable under a doubled budget.
pub const STABILITY_TOL: f64 = 0.1;

/// Default largest dyadic block start.
pub const DEFAULT_N_MAX: usize = 1 << 10;

/// Budgets shared by the block functionals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FunctionalOptions {
    /// Largest block start N (a power of two).
    pub n_max: usize,
    /// Target bound for each tail-truncated difference.
    pub eps: f64,
    pub max_terms: usize,
}

impl Default for FunctionalOptions {
    fn default() -> Self {
        Self {
            n_max: DEFAULT_N_MAX,
            eps: 1e-10,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

impl FunctionalOptions {
    pub fn with_n_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self
    }

    pub fn with_eps(mut self, eps: f64) -> Self {
        self.eps = eps;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Aggregate {
    /// base + max over blocks
    Sup,
    /// base + sum over blocks
    Sum,
}

/// One block value over k ∈ [start, end].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Block {
    pub start: usize,
    pub end: usize,
    pub value: f64,
}

/// Result of a sequence functional: `value = base ⊕ blocks`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionalReport {
    pub name: String,
    pub params: BTreeMap<String, f64>,
    pub value: f64,
    /// The term outside the block aggregate (‖m‖_∞ for multiplier functionals).
    pub base: f64,
    pub aggregate: Aggregate,
    pub blocks: Vec<Block>,
    /// Bound on the error of `value` from truncated differences, rounding and
    /// (for infinite sums) the extrapolated remainder.
    pub tail_bound: f64,
    /// Verdict of the doubling test, when one applies.
    pub stable: Option<bool>,
    pub warnings: Vec<String>,
}

impl FunctionalReport {
    pub fn new(name: &str, aggregate: Aggregate) -> Self {
        Self {
            name: name.to_string(),
            params: BTreeMap::new(),
            value: 0.0,
            base: 0.0,
            aggregate,
            blocks: Vec::new(),
            tail_bound: 0.0,
            stable: None,
            warnings: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, v: f64) -> Self {
        self.params.insert(key.to_string(), v);
        self
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    /// The block aggregate without the base term.
    pub fn block_aggregate(&self) -> f64 {
        aggregate(self.aggregate, self.blocks.iter().map(|b| b.value))
    }

    /// Recomputes `value` from `base` and the block list.
    pub fn recompute(&self) -> f64 {
        self.base + self.block_aggregate()
    }

    /// The aggregate over blocks ending at or before `end`.
    pub fn aggregate_until(&self, end: usize) -> f64 {
        self.base
            + aggregate(
                self.aggregate,
                self.blocks.iter().filter(|b| b.end <= end).map(|b| b.value),
            )
    }

    pub(crate) fn finish(mut self) -> Self {
        self.value = self.recompute();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("report: {e}")))
    }

    /// Column names of [`Self::csv_record`].
    pub const CSV_COLUMNS: [&'static str; 8] = [
        "functional",
        "params",
        "value",
        "base",
        "blocks",
        "tail_bound",
        "stable",
        "warnings",
    ];

    /// One flat CSV record. Params are `key=value` pairs joined by `;` in key
    /// order, blocks are `start-end:value` joined by `;`.
    pub fn csv_record(&self) -> Vec<String> {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";");
        let blocks = self
            .blocks
            .iter()
            .map(|b| format!("{}-{}:{}", b.start, b.end, b.value))
            .collect::<Vec<_>>()
            .join(";");
        vec![
            self.name.clone(),
            params,
            self.value.to_string(),
            self.base.to_string(),
            blocks,
            self.tail_bound.to_string(),
            self.stable.map_or(String::new(), |s| s.to_string()),
            self.warnings.join(" | "),
        ]
    }
}

fn aggregate(kind: Aggregate, values: impl Iterator<Item = f64>) -> f64 {
    match kind {
        Aggregate::Sup => values.fold(0.0, f64::max),
        Aggregate::Sum => values.sum(),
    }
}

/// Two sides of an inequality lhs ≤ C·rhs and their ratio.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub lhs: f64,
    pub rhs: f64,
    /// lhs/rhs; absent when both sides vanish.
    pub ratio: Option<f64>,
    pub warnings: Vec<String>,
}

impl InequalityCheck {
    pub fn new(lhs: f64, rhs: f64) -> Self {
        let ratio = if lhs == 0.0 && rhs == 0.0 {
            None
        } else {
            Some(lhs / rhs)
        };
        Self {
            lhs,
            rhs,
            ratio,
            warnings: Vec::new(),
        }
    }

    pub(crate) fn warned(mut self, w: &[String]) -> Self {
        self.warnings.extend_from_slice(w);
        self
    }
}

/// Empirical constants max(lhs/rhs) at a sequence of doubling budgets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantEstimate {
    pub budgets: Vec<usize>,
    pub constants: Vec<f64>,
    /// Largest relative change between consecutive budgets.
    pub drift: f64,
    pub stable: bool,
}

impl ConstantEstimate {
    pub fn from_values(budgets: Vec<usize>, constants: Vec<f64>) -> Self {
        let drift = constants
            .windows(2)
            .map(|w| relative_change(w[0], w[1]))
            .fold(0.0, f64::max);
        Self {
            budgets,
            stable: drift < STABILITY_TOL,
            constants,
            drift,
        }
    }

    pub fn last(&self) -> f64 {
        *self.constants.last().unwrap_or(&f64::NAN)
    }
}

/// |b − a| / |a| (∞ when a = 0 ≠ b).
pub fn relative_change(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (b - a).abs() / a.abs()
    }
}

/// Runs `constant(budget)` at every budget and records the drift.
pub fn estimate_constant(
    budgets: &[usize],
    mut constant: impl FnMut(usize) -> Result<f64>,
) -> Result<ConstantEstimate> {
    let values = budgets
        .iter()
        .map(|&b| constant(b))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConstantEstimate::from_values(budgets.to_vec(), values))
}

/// max ratio over a list of checks (degenerate checks are skipped).
pub fn max_ratio<'a>(checks: impl IntoIterator<Item = &'a InequalityCheck>) -> f64 {
    checks
        .into_iter()
        .filter_map(|c| c.ratio)
        .fold(0.0, f64::max)
}

/// A difference value, accepting a tolerance miss with its achieved bound.
pub(crate) fn accept_tolerance(r: Result<DiffValue<f64>>, warnings: &mut Vec<String>) -> Result<DiffValue<f64>> {
    match r {
        Err(Error::Tolerance {
            requested,
            achieved,
            terms,
            value,
        }) => {
            if warnings.iter().all(|w| !w.starts_with("tolerance")) {
                warnings.push(format!(
                    "tolerance {requested:e} missed; achieved bound {achieved:e} after {terms} terms"
                ));
            }
            Ok(DiffValue {
                value: num_complex::Complex64::new(value.0, value.1),
                bound: achieved,
                terms,
            })
        }
        other => other,
    }
}
