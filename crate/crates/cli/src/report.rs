//! JSON-lines records. Integers that may exceed 64 bits and rationals are
//! written as decimal strings; key order is the field order below.

use exceptional_core::pipeline::{ConjectureSummary, ExceptionalReport, Refined};
use exceptional_core::small_primes::PrimeStatus;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RawEntry {
    pub prime: u64,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct StatusRecord {
    pub status: &'static str,
    pub certificate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&PrimeStatus> for StatusRecord {
    fn from(s: &PrimeStatus) -> Self {
        StatusRecord {
            status: s.status.as_str(),
            certificate: s.certificate.as_ref().map(ToString::to_string),
            note: s.note.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RefinedEntry {
    pub prime: u64,
    #[serde(flatten)]
    pub status: StatusRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ladic: Option<StatusRecord>,
}

impl RefinedEntry {
    fn new(prime: u64, r: &Refined) -> Self {
        RefinedEntry {
            prime,
            status: (&r.mod_ell).into(),
            ladic: r.ladic.as_ref().map(Into::into),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReportRecord {
    pub schema: u32,
    pub line: usize,
    pub label: String,
    pub j: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conductor: Option<String>,
    pub minimal_model: [String; 5],
    pub mode: &'static str,
    pub qlist: Vec<String>,
    pub d: usize,
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_r: Option<u64>,
    #[serde(rename = "raw_S")]
    pub raw_s: Vec<RawEntry>,
    pub refined: Vec<RefinedEntry>,
}

impl ReportRecord {
    pub fn new(line: usize, r: &ExceptionalReport) -> Self {
        ReportRecord {
            schema: SCHEMA_VERSION,
            line,
            label: r.label.clone(),
            j: r.j.to_string(),
            conductor: r.conductor.as_ref().map(ToString::to_string),
            minimal_model: r.model.a_invariants().clone().map(|a| a.to_string()),
            mode: r.mode.as_str(),
            qlist: r.diagnostics.qlist.iter().map(ToString::to_string).collect(),
            d: r.diagnostics.d(),
            r: r.diagnostics.r,
            p_r: r.diagnostics.p_r,
            raw_s: r
                .raw
                .iter()
                .map(|(prime, reason)| RawEntry {
                    prime,
                    reason: reason.to_string(),
                })
                .collect(),
            refined: r.refined.iter().map(|(p, s)| RefinedEntry::new(*p, s)).collect(),
        }
    }
}

/// A curve that produced no report.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FailureRecord {
    pub schema: u32,
    pub line: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub error: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct S0Hit {
    pub label: String,
    pub prime: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ViolationRecord {
    pub label: String,
    pub j: String,
    pub open: Vec<u64>,
    pub expected: Vec<u64>,
    pub undetermined: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SummaryRecord {
    pub schema: u32,
    pub holds: bool,
    pub curves: usize,
    pub failures: usize,
    pub sieve_runs: usize,
    pub shortcut_runs: usize,
    pub max_p_r: Option<u64>,
    pub s0_hits: Vec<S0Hit>,
    pub violations: Vec<ViolationRecord>,
}

impl SummaryRecord {
    /// Failures count against the check: a curve without a report is a
    /// curve the conjecture was not verified for.
    pub fn new(s: &ConjectureSummary, failures: usize) -> Self {
        SummaryRecord {
            schema: SCHEMA_VERSION,
            holds: s.holds() && failures == 0,
            curves: s.curves,
            failures,
            sieve_runs: s.sieve_runs,
            shortcut_runs: s.shortcut_runs,
            max_p_r: s.max_p_r,
            s0_hits: s
                .s0_hits
                .iter()
                .map(|(label, prime)| S0Hit {
                    label: label.clone(),
                    prime: *prime,
                })
                .collect(),
            violations: s
                .violations
                .iter()
                .map(|v| ViolationRecord {
                    label: v.label.clone(),
                    j: v.j.to_string(),
                    open: v.open.clone(),
                    expected: v.expected.clone(),
                    undetermined: v.undetermined.clone(),
                })
                .collect(),
        }
    }
}
