//! Report rows, the versioned CSV/JSON writers and the run manifest.

use crate::error::{CliError, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

pub const SCHEMA: &str = "jmult-report v1";

pub const COLUMNS: [&str; 10] = [
    "experiment",
    "case",
    "params",
    "value",
    "tolerance",
    "tail_bound",
    "stable",
    "status",
    "blocks",
    "note",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    DomainWarn,
    ExpectedDomainError,
    DomainError,
    ConvergenceError,
    ToleranceFailure,
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::DomainWarn => "domain-warn",
            Status::ExpectedDomainError => "expected-domain-error",
            Status::DomainError => "domain-error",
            Status::ConvergenceError => "convergence-error",
            Status::ToleranceFailure => "tolerance-failure",
            Status::Error => "error",
        }
    }

    /// Whether the exit-code contract counts this row as a failure.
    pub fn is_failure(self) -> bool {
        !matches!(self, Status::Ok | Status::DomainWarn | Status::ExpectedDomainError)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub experiment: String,
    pub case: String,
    pub params: BTreeMap<String, f64>,
    pub value: f64,
    pub tolerance: Option<f64>,
    pub tail_bound: Option<f64>,
    pub stable: Option<bool>,
    pub status: Status,
    pub blocks: Vec<f64>,
    pub note: String,
}

impl Row {
    pub fn new(experiment: &str, case: &str, params: &BTreeMap<String, f64>, value: f64) -> Self {
        Self {
            experiment: experiment.into(),
            case: case.into(),
            params: params.clone(),
            value,
            tolerance: None,
            tail_bound: None,
            stable: None,
            status: Status::Ok,
            blocks: Vec::new(),
            note: String::new(),
        }
    }

    /// Sets the tolerance and fails the row when the value exceeds it.
    pub fn within(mut self, tol: f64) -> Self {
        self.tolerance = Some(tol);
        // negated so that NaN fails
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(self.value <= tol) {
            self.status = Status::ToleranceFailure;
        }
        self
    }

    pub fn warned(mut self, warnings: &[String]) -> Self {
        if !warnings.is_empty() {
            if self.status == Status::Ok {
                self.status = Status::DomainWarn;
            }
            self.push_note(&warnings.join("; "));
        }
        self
    }

    pub fn push_note(&mut self, note: &str) {
        if !self.note.is_empty() {
            self.note.push_str("; ");
        }
        self.note.push_str(note);
    }
}

/// Shortest round-trip scientific form; identical bytes for identical values.
pub fn num(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{v:e}")
    }
}

pub fn params_field(p: &BTreeMap<String, f64>) -> String {
    p.iter()
        .map(|(k, v)| format!("{k}={}", num(*v)))
        .collect::<Vec<_>>()
        .join(";")
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

pub fn csv_bytes(rows: &[Row]) -> Result<Vec<u8>> {
    let mut out = format!("# {SCHEMA}\n").into_bytes();
    {
        let mut w = csv::Writer::from_writer(&mut out);
        w.write_record(COLUMNS)?;
        for r in rows {
            w.write_record([
                r.experiment.clone(),
                r.case.clone(),
                params_field(&r.params),
                num(r.value),
                opt(r.tolerance),
                opt(r.tail_bound),
                r.stable.map(|s| s.to_string()).unwrap_or_default(),
                r.status.label().to_string(),
                r.blocks.iter().map(|b| num(*b)).collect::<Vec<_>>().join(";"),
                r.note.clone(),
            ])?;
        }
        w.flush().map_err(|e| CliError::io("<csv buffer>", e))?;
    }
    Ok(out)
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema: &'static str,
    columns: [&'static str; 10],
    rows: &'a [Row],
}

pub fn json_bytes(rows: &[Row]) -> Vec<u8> {
    let mut v = serde_json::to_vec_pretty(&JsonReport {
        schema: SCHEMA,
        columns: COLUMNS,
        rows,
    })
    .expect("rows serialize");
    v.push(b'\n');
    v
}

pub fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    let mut f = std::fs::File::create(path).map_err(|e| CliError::io(path, e))?;
    f.write_all(bytes).map_err(|e| CliError::io(path, e))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseRecord {
    pub experiment: String,
    pub case: String,
    pub params: String,
    pub status: Status,
    pub wall_ms: f64,
}

/// Run metadata. Wall times live here only, so the reports stay
/// byte-identical between runs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub config_hash: String,
    pub artifact_version: String,
    pub command: String,
    /// SHA-256 of the report bytes, for regression pinning.
    pub report_sha256: String,
    pub warnings: Vec<String>,
    pub cases: Vec<CaseRecord>,
}

impl RunManifest {
    pub fn write(&self, dir: &Path, stem: &str) -> Result<()> {
        let mut bytes = serde_json::to_vec_pretty(self).expect("manifest serializes");
        bytes.push(b'\n');
        write_file(&dir.join(format!("{stem}.manifest.json")), &bytes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let p = BTreeMap::from([("alpha".to_string(), 0.5), ("p".to_string(), 1.5)]);
        let mut r = Row::new("sweep", "a,b", &p, 0.1).within(1.0);
        r.blocks = vec![1.0, 2.5e-12];
        let text = String::from_utf8(csv_bytes(&[r]).unwrap()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# jmult-report v1");
        assert_eq!(lines[1], COLUMNS.join(","));
        assert_eq!(lines[2], "sweep,\"a,b\",alpha=5e-1;p=1.5e0,1e-1,1e0,,,ok,1e0;2.5e-12,");
    }

    #[test]
    fn tolerance_and_warnings() {
        let p = BTreeMap::new();
        assert_eq!(Row::new("x", "y", &p, 2.0).within(1.0).status, Status::ToleranceFailure);
        assert_eq!(Row::new("x", "y", &p, f64::NAN).within(1.0).status, Status::ToleranceFailure);
        let w = Row::new("x", "y", &p, 0.0).warned(&["outside".into()]);
        assert_eq!((w.status, w.note.as_str()), (Status::DomainWarn, "outside"));
        assert!(!Status::DomainWarn.is_failure() && Status::ConvergenceError.is_failure());
    }
}
