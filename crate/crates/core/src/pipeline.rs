//! Orchestration: raw exceptional set, per-prime refinement, and the batch
//! check that no prime above 13 survives outside the exceptional pairs.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::curve::{conductor, curve_from_j, is_cm_j, minimal_model, WeierstrassModel, DEFAULT_COUNTING_BOUND};
use crate::nonintegral::shortcut_set;
use crate::sieve::{
    compute_qlist_for_model, run_sieve_with, s0_primes, ExceptionalSet, SieveConfig, SieveState, DEFAULT_SEARCH_CAP,
};
use crate::small_primes::{
    certify_large_with, check_ladic, check_mod_11, check_mod_13_with, check_mod_small, PrimeStatus, Status,
    WitnessConfig, DEFAULT_WITNESS_BOUND, DEFAULT_XNS11_BOUND,
};
use crate::{Error, Result};

/// How the raw set is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModeChoice {
    /// Shortcut for non-integral `j`, sieve otherwise.
    #[default]
    Auto,
    Sieve,
    Shortcut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sieve,
    DenominatorShortcut,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Sieve => "sieve",
            Mode::DenominatorShortcut => "denominator_shortcut",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineConfig {
    pub witness_bound: u64,
    pub counting_bound: u64,
    pub xns11_bound: u32,
    pub search_cap: u64,
    pub mode: ModeChoice,
    pub ladic: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            witness_bound: DEFAULT_WITNESS_BOUND,
            counting_bound: DEFAULT_COUNTING_BOUND,
            xns11_bound: DEFAULT_XNS11_BOUND,
            search_cap: DEFAULT_SEARCH_CAP,
            mode: ModeChoice::Auto,
            ladic: true,
        }
    }
}

impl PipelineConfig {
    fn sieve(&self) -> SieveConfig {
        SieveConfig {
            search_cap: self.search_cap,
            counting_bound: self.counting_bound,
        }
    }

    fn witnesses(&self) -> WitnessConfig {
        WitnessConfig {
            witness_bound: self.witness_bound,
            counting_bound: self.counting_bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurvePayload {
    AInvariants([BigInt; 5]),
    J(BigRational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveInput {
    pub label: String,
    pub payload: CurvePayload,
}

impl CurveInput {
    pub fn from_ainvariants(label: impl Into<String>, a: [BigInt; 5]) -> Self {
        CurveInput {
            label: label.into(),
            payload: CurvePayload::AInvariants(a),
        }
    }

    pub fn from_j(label: impl Into<String>, j: BigRational) -> Self {
        CurveInput {
            label: label.into(),
            payload: CurvePayload::J(j),
        }
    }

    /// The curve to work with: the given equation, or a model with the
    /// given `j`. CM curves are refused.
    pub fn model(&self) -> Result<WeierstrassModel> {
        let model = match &self.payload {
            CurvePayload::AInvariants(a) => WeierstrassModel::new(a.clone())?,
            CurvePayload::J(j) => {
                if is_cm_j(j) {
                    return Err(Error::ComplexMultiplication(j.clone()));
                }
                curve_from_j(j)?
            }
        };
        if is_cm_j(model.j_invariant()) {
            return Err(Error::ComplexMultiplication(model.j_invariant().clone()));
        }
        Ok(model)
    }
}

/// Rank-loop data, or only the q-list in shortcut mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics {
    pub qlist: Vec<BigInt>,
    /// `r`; zero when the sieve did not run.
    pub r: usize,
    /// Present exactly in sieve mode.
    pub p_r: Option<u64>,
    pub sieve: Option<SieveState>,
}

impl Diagnostics {
    pub fn d(&self) -> usize {
        self.qlist.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refined {
    pub mod_ell: PrimeStatus,
    /// The `ℓ^∞` status, for `ℓ ∈ {2, 3}` when requested.
    pub ladic: Option<PrimeStatus>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalReport {
    pub label: String,
    pub j: BigRational,
    /// Only for inputs given by an equation.
    pub conductor: Option<BigInt>,
    /// A global minimal model of the curve.
    pub model: WeierstrassModel,
    pub mode: Mode,
    pub diagnostics: Diagnostics,
    pub raw: ExceptionalSet,
    /// Keys are exactly the primes of `raw` once refined.
    pub refined: BTreeMap<u64, Refined>,
}

impl ExceptionalReport {
    /// Primes above 13 not certified surjective.
    pub fn open_large_primes(&self) -> Vec<u64> {
        self.refined
            .iter()
            .filter(|(ell, r)| **ell > 13 && r.mod_ell.status != Status::Surjective)
            .map(|(ell, _)| *ell)
            .collect()
    }
}

/// The raw stage: the candidate set with its reasons.
pub fn exceptional_set(input: &CurveInput, config: &PipelineConfig) -> Result<ExceptionalReport> {
    let given = input.model()?;
    let conductor = match input.payload {
        CurvePayload::AInvariants(_) => Some(conductor(&given)?.value),
        CurvePayload::J(_) => None,
    };
    let model = minimal_model(&given)?;
    let j = model.j_invariant().clone();
    let integral = j.denom().is_one();
    let mode = match (config.mode, integral) {
        (ModeChoice::Auto, true) | (ModeChoice::Sieve, _) => Mode::Sieve,
        (ModeChoice::Auto, false) | (ModeChoice::Shortcut, false) => Mode::DenominatorShortcut,
        (ModeChoice::Shortcut, true) => return Err(Error::IntegralJ),
    };
    let (raw, diagnostics) = match mode {
        Mode::Sieve => {
            let (set, state) = run_sieve_with(&model, &config.sieve())?;
            let diagnostics = Diagnostics {
                qlist: state.qlist.primes().to_vec(),
                r: state.r(),
                p_r: state.p_r(),
                sieve: Some(state),
            };
            (set, diagnostics)
        }
        Mode::DenominatorShortcut => {
            let qlist = compute_qlist_for_model(&model)?;
            let diagnostics = Diagnostics {
                qlist: qlist.primes().to_vec(),
                r: 0,
                p_r: None,
                sieve: None,
            };
            (shortcut_set(&j)?, diagnostics)
        }
    };
    Ok(ExceptionalReport {
        label: input.label.clone(),
        j,
        conductor,
        model,
        mode,
        diagnostics,
        raw,
        refined: BTreeMap::new(),
    })
}

/// Decides each prime of the raw set.
pub fn refine(mut report: ExceptionalReport, config: &PipelineConfig) -> ExceptionalReport {
    let witnesses = config.witnesses();
    let mut refined = BTreeMap::new();
    for ell in report.raw.primes() {
        let mod_ell = match ell {
            2 | 3 | 5 | 7 => check_mod_small(&report.j, ell),
            11 => check_mod_11(&report.j, config.xns11_bound),
            13 => check_mod_13_with(&report.model, &witnesses),
            _ => certify_large_with(&report.model, ell, &witnesses),
        };
        let ladic = (config.ladic && ell <= 3).then(|| check_ladic(&report.j, &mod_ell));
        refined.insert(ell, Refined { mod_ell, ladic });
    }
    report.refined = refined;
    report
}

/// Raw stage followed by refinement.
pub fn process(input: &CurveInput, config: &PipelineConfig) -> Result<ExceptionalReport> {
    exceptional_set(input, config).map(|r| refine(r, config))
}

/// A curve whose open primes above 13 are not what the exceptional pairs
/// predict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub label: String,
    pub j: BigRational,
    pub open: Vec<u64>,
    pub expected: Vec<u64>,
    /// Open primes whose status is undetermined rather than non-surjective.
    pub undetermined: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConjectureSummary {
    pub curves: usize,
    pub sieve_runs: usize,
    pub shortcut_runs: usize,
    pub max_p_r: Option<u64>,
    /// `(label, ℓ)` for every exceptional pair encountered.
    pub s0_hits: Vec<(String, u64)>,
    pub violations: Vec<Violation>,
}

impl ConjectureSummary {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every report, the primes above 13 that are not certified surjective
/// must be exactly those of an exceptional pair for `j`.
pub fn verify_conjecture<'a>(reports: impl IntoIterator<Item = &'a ExceptionalReport>) -> ConjectureSummary {
    let mut summary = ConjectureSummary::default();
    for report in reports {
        summary.curves += 1;
        match report.mode {
            Mode::Sieve => summary.sieve_runs += 1,
            Mode::DenominatorShortcut => summary.shortcut_runs += 1,
        }
        if let Some(p) = report.diagnostics.p_r {
            summary.max_p_r = Some(summary.max_p_r.map_or(p, |m| m.max(p)));
        }
        let open = report.open_large_primes();
        let expected = s0_primes(&report.j);
        if open == expected {
            summary.s0_hits.extend(expected.into_iter().map(|ell| (report.label.clone(), ell)));
        } else {
            let undetermined = open
                .iter()
                .copied()
                .filter(|ell| report.refined[ell].mod_ell.status == Status::Undetermined)
                .collect();
            summary.violations.push(Violation {
                label: report.label.clone(),
                j: report.j.clone(),
                open,
                expected,
                undetermined,
            });
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sieve::Reason;
    use crate::small_primes::Certificate;
    use alloc::vec;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(a: [i64; 5]) -> [BigInt; 5] {
        a.map(BigInt::from)
    }

    #[test]
    fn shortcut_for_37a() {
        let input = CurveInput::from_ainvariants("37a", ints([0, 0, 1, -1, 0]));
        let r = process(&input, &PipelineConfig::default()).unwrap();
        assert_eq!(r.mode, Mode::DenominatorShortcut);
        assert_eq!(r.conductor, Some(BigInt::from(37)));
        assert_eq!(r.diagnostics.p_r, None);
        assert!(r.raw.above_13().is_empty());
        assert_eq!(r.refined.keys().copied().collect::<Vec<_>>(), r.raw.primes());
    }

    #[test]
    fn s0_curve_via_shortcut() {
        let input = CurveInput::from_j("s0", q(-17 * 373 * 373 * 373, 131072));
        let r = process(&input, &PipelineConfig::default()).unwrap();
        assert_eq!(r.mode, Mode::DenominatorShortcut);
        assert_eq!(r.raw.reason(17), Some(Reason::S0Pair));
        assert_eq!(r.refined[&17].mod_ell.status, Status::NonSurjective);
        assert_eq!(r.open_large_primes(), vec![17]);
    }

    #[test]
    fn integral_j_runs_the_sieve() {
        let input = CurveInput::from_j("j37", q(-9317, 1));
        let r = process(&input, &PipelineConfig::default()).unwrap();
        assert_eq!(r.mode, Mode::Sieve);
        assert!(r.diagnostics.p_r.is_some());
        assert_eq!(r.refined[&37].mod_ell.certificate, Some(Certificate::S0Pair));
        assert_eq!(r.refined[&11].mod_ell.status, Status::Surjective);
        let summary = verify_conjecture([&r]);
        assert!(summary.holds());
        assert_eq!(summary.s0_hits, vec![(String::from("j37"), 37)]);
    }

    #[test]
    fn family_refinement() {
        let input = CurveInput::from_j("x", q(102400, 1));
        let r = process(&input, &PipelineConfig::default()).unwrap();
        assert_eq!(r.refined[&5].mod_ell.status, Status::NonSurjective);
    }

    #[test]
    fn cm_inputs_are_refused() {
        let input = CurveInput::from_j("cm", q(1728, 1));
        assert!(matches!(process(&input, &PipelineConfig::default()), Err(Error::ComplexMultiplication(_))));
        let input = CurveInput::from_ainvariants("cm", ints([0, 0, 0, 1, 0]));
        assert!(matches!(process(&input, &PipelineConfig::default()), Err(Error::ComplexMultiplication(_))));
    }

    #[test]
    fn forced_shortcut_needs_a_denominator() {
        let cfg = PipelineConfig {
            mode: ModeChoice::Shortcut,
            ..PipelineConfig::default()
        };
        let input = CurveInput::from_j("x", q(512, 1));
        assert_eq!(process(&input, &cfg), Err(Error::IntegralJ));
    }

    #[test]
    fn empty_batch_is_vacuous() {
        let summary = verify_conjecture(core::iter::empty());
        assert!(summary.holds());
        assert_eq!(summary.curves, 0);
    }
}
