//! Case execution. Cases run on a pool of scoped threads and their rows are
//! stored by case index, so the assembled report never depends on `--jobs`.

use crate::config::ExperimentConfig;
use crate::report::{Row, Status};
use jacobi_mult::fourier_jacobi::ExpansionDocument;
use jacobi_mult::Error;
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

pub type Params = BTreeMap<String, f64>;

/// A function dump produced alongside the rows of a case.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Dump {
    pub case: String,
    pub document: ExpansionDocument,
}

#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub rows: Vec<Row>,
    pub dumps: Vec<Dump>,
}

type Job = Box<dyn Fn() -> Result<Outcome, Error> + Send + Sync>;

/// One parameter tuple of an experiment. Running it yields one or more rows;
/// an error becomes a single row carrying the error's status.
pub struct Case {
    pub experiment: String,
    pub label: String,
    pub params: Params,
    /// A domain error here is expected by the configuration.
    pub expect_domain_error: bool,
    job: Job,
}

impl Case {
    pub fn with_outcome(
        experiment: &str,
        label: impl Into<String>,
        params: Params,
        job: impl Fn() -> Result<Outcome, Error> + Send + Sync + 'static,
    ) -> Self {
        Self {
            experiment: experiment.into(),
            label: label.into(),
            params,
            expect_domain_error: false,
            job: Box::new(job),
        }
    }

    pub fn new(
        experiment: &str,
        label: impl Into<String>,
        params: Params,
        job: impl Fn() -> Result<Vec<Row>, Error> + Send + Sync + 'static,
    ) -> Self {
        Self::with_outcome(experiment, label, params, move || {
            job().map(|rows| Outcome { rows, dumps: Vec::new() })
        })
    }

    /// Single-row case.
    pub fn row(
        experiment: &str,
        label: impl Into<String>,
        params: Params,
        job: impl Fn() -> Result<Row, Error> + Send + Sync + 'static,
    ) -> Self {
        Self::new(experiment, label, params, move || job().map(|r| vec![r]))
    }

    fn error_row(&self, e: &Error, expected: bool) -> Row {
        let status = match e {
            Error::Domain(_) if expected => Status::ExpectedDomainError,
            Error::Domain(_) => Status::DomainError,
            Error::Convergence(_) => Status::ConvergenceError,
            Error::Tolerance { .. } => Status::ToleranceFailure,
            _ => Status::Error,
        };
        let mut r = Row::new(&self.experiment, &self.label, &self.params, f64::NAN);
        r.status = status;
        r.note = e.to_string();
        r
    }
}

/// Flags the cases the configuration expects to fail with a domain error.
pub fn mark_expected(cases: &mut [Case], cfg: &ExperimentConfig) {
    for c in cases {
        c.expect_domain_error = cfg.expects_domain_error(&c.params);
    }
}

/// Outcome of one case and the wall time it took.
pub struct CaseResult {
    pub outcome: Outcome,
    pub wall_ms: f64,
}

pub fn run_cases(cases: &[Case], jobs: usize) -> Vec<CaseResult> {
    let slots: Vec<Mutex<Option<CaseResult>>> = cases.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let worker = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        let Some(case) = cases.get(i) else { break };
        let start = Instant::now();
        let expected = case.expect_domain_error;
        let mut outcome = match (case.job)() {
            Ok(o) => o,
            Err(e) => Outcome {
                rows: vec![case.error_row(&e, expected)],
                dumps: Vec::new(),
            },
        };
        if expected {
            for r in outcome.rows.iter_mut().filter(|r| !r.status.is_failure()) {
                r.push_note("expected a domain error");
            }
        }
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
        *slots[i].lock().expect("slot lock") = Some(CaseResult { outcome, wall_ms });
    };
    std::thread::scope(|s| {
        for _ in 0..jobs.clamp(1, cases.len().max(1)) {
            s.spawn(worker);
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().expect("slot lock").expect("every case ran"))
        .collect()
}

/// Cartesian product of named axes, in the order given.
pub fn product(axes: &[(&str, &[f64])]) -> Vec<Params> {
    axes.iter().fold(vec![Params::new()], |acc, (name, values)| {
        acc.iter()
            .flat_map(|p| {
                values.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.insert(name.to_string(), v);
                    q
                })
            })
            .collect()
    })
}

/// "alpha=0.5,p=1.5"
pub fn label(p: &Params) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

pub fn as_f64<T: Copy + Into<f64>>(v: &[T]) -> Vec<f64> {
    v.iter().map(|&x| x.into()).collect()
}

pub fn usize_axis(v: &[usize]) -> Vec<f64> {
    v.iter().map(|&x| x as f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_order_and_label() {
        let ps = product(&[("a", &[1.0, 2.0]), ("b", &[0.5])]);
        assert_eq!(ps.len(), 2);
        assert_eq!(label(&ps[1]), "a=2,b=0.5");
        assert!(product(&[("a", &[]), ("b", &[1.0])]).is_empty());
    }

    #[test]
    fn results_independent_of_jobs() {
        let cases: Vec<Case> = (0..9)
            .map(|i| {
                let p = Params::from([("i".to_string(), i as f64)]);
                Case::row("t", format!("{i}"), p.clone(), move || {
                    if i == 4 {
                        return Err(Error::domain("x"));
                    }
                    Ok(Row::new("t", "c", &p, (i as f64).sqrt()))
                })
            })
            .collect();
        let rows = |j| -> Vec<Row> { run_cases(&cases, j).into_iter().flat_map(|r| r.outcome.rows).collect() };
        let one = rows(1);
        let bytes = crate::report::csv_bytes(&one).unwrap();
        assert_eq!(bytes, crate::report::csv_bytes(&rows(4)).unwrap());
        assert_eq!(one[4].status, Status::DomainError);
    }
}
