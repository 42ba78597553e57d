//! JSON exchange format:
//! `{"params": {"alpha", "beta"}, "kind": "coefficients" | "grid", "data": [...]}`.
//!
//! Coefficient rows are `[re]` or `[re, im]`; grid rows are `[theta, re, im]`.

use super::grid::GridFunction;
use super::transform::ExpansionPair;
use crate::error::{Error, Result};
use crate::special_fn::JacobiParams;
use num_complex::Complex;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub alpha: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocumentKind {
    Coefficients,
    Grid,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionDocument {
    pub params: ParamsDoc,
    pub kind: DocumentKind,
    pub data: Vec<Vec<f64>>,
}

impl ExpansionDocument {
    pub fn from_expansion(e: &ExpansionPair<f64>) -> Self {
        Self {
            params: ParamsDoc {
                alpha: e.params().alpha(),
                beta: e.params().beta(),
            },
            kind: DocumentKind::Coefficients,
            data: e.coefficients().iter().map(|c| vec![c.re, c.im]).collect(),
        }
    }

    /// Grid documents carry the rule's weight exponents as (alpha, beta).
    pub fn from_grid(f: &GridFunction<f64>) -> Self {
        let (a, b) = f.rule().exponents();
        Self {
            params: ParamsDoc { alpha: a, beta: b },
            kind: DocumentKind::Grid,
            data: f
                .nodes()
                .iter()
                .zip(f.values())
                .map(|(&t, v)| vec![t, v.re, v.im])
                .collect(),
        }
    }

    pub fn to_expansion(&self) -> Result<ExpansionPair<f64>> {
        if self.kind != DocumentKind::Coefficients {
            return Err(Error::Parse("expected a coefficients document".into()));
        }
        let params = JacobiParams::extended(self.params.alpha, self.params.beta)?;
        let coeffs = self
            .data
            .iter()
            .enumerate()
            .map(|(k, row)| match row.as_slice() {
                [re] => Ok(Complex::new(*re, 0.0)),
                [re, im] => Ok(Complex::new(*re, *im)),
                _ => Err(Error::Parse(format!("coefficient row {k} needs 1 or 2 entries"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ExpansionPair::new(params, coeffs))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}
