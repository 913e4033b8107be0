use exceptional_core::pipeline::{process, verify_conjecture, ExceptionalReport, PipelineConfig};
use rayon::prelude::*;

use crate::input::{InputError, Located};
use crate::report::{FailureRecord, ReportRecord, SummaryRecord, SCHEMA_VERSION};
use exceptional_core::pipeline::CurveInput;

/// The result for one input record.
#[derive(Debug, Clone)]
pub enum Outcome {
    Report { line: usize, report: Box<ExceptionalReport> },
    Failure(FailureRecord),
}

impl Outcome {
    pub fn to_json(&self) -> String {
        let s = match self {
            Outcome::Report { line, report } => serde_json::to_string(&ReportRecord::new(*line, report)),
            Outcome::Failure(f) => serde_json::to_string(f),
        };
        s.expect("records serialize")
    }

    pub fn report(&self) -> Option<&ExceptionalReport> {
        match self {
            Outcome::Report { report, .. } => Some(report),
            Outcome::Failure(_) => None,
        }
    }
}

/// Processes every record on a pool of `threads` workers (0 means one per
/// core); outcomes come back in input order.
pub fn run_batch(
    inputs: Vec<Result<Located<CurveInput>, InputError>>,
    config: &PipelineConfig,
    threads: usize,
) -> Vec<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(|| {
        inputs
            .into_par_iter()
            .map(|item| match item {
                Ok(Located { line, value }) => match process(&value, config) {
                    Ok(report) => Outcome::Report {
                        line,
                        report: Box::new(report),
                    },
                    Err(e) => Outcome::Failure(FailureRecord {
                        schema: SCHEMA_VERSION,
                        line,
                        label: Some(value.label),
                        error: e.to_string(),
                    }),
                },
                Err(e) => Outcome::Failure(FailureRecord {
                    schema: SCHEMA_VERSION,
                    line: e.line(),
                    label: None,
                    error: e.to_string(),
                }),
            })
            .collect()
    })
}

pub fn summarize(outcomes: &[Outcome]) -> SummaryRecord {
    let failures = outcomes.iter().filter(|o| o.report().is_none()).count();
    let summary = verify_conjecture(outcomes.iter().filter_map(Outcome::report));
    SummaryRecord::new(&summary, failures)
}
