use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::family::{family_member_with, families_for};
use super::xns11::xns11_search;
use crate::curve::{ap_good, minimal_model, WeierstrassModel, DEFAULT_COUNTING_BOUND};
use crate::numtheory::{factorize, legendre_i64, mod_u64, primes_up_to, RootBudget};
use crate::sieve::s0_lookup;
use crate::{Error, Result};

/// Default largest prime scanned for witnesses.
pub const DEFAULT_WITNESS_BOUND: u64 = 10_000;

/// Default `|n|` bound when searching multiples of `(4, 5)` for `ℓ = 11`.
pub const DEFAULT_XNS11_BOUND: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Surjective,
    NonSurjective,
    Undetermined,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Surjective => "surjective",
            Status::NonSurjective => "non_surjective",
            Status::Undetermined => "undetermined",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// `ℓ ∤ a_p` and `a_p² − 4p` a non-zero square mod `ℓ`.
    SquareDiscriminant,
    /// `ℓ ∤ a_p` and `a_p² − 4p` a non-square mod `ℓ`.
    NonSquareDiscriminant,
    /// `a_p²/p mod 13` outside `{0, 1, 2, 4}` and not a root of `x² − 3x + 1`.
    TraceRatio,
}

impl WitnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::SquareDiscriminant => "square",
            WitnessKind::NonSquareDiscriminant => "nonsquare",
            WitnessKind::TraceRatio => "ratio",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Witness {
    pub p: u64,
    pub ap: i64,
    pub kind: WitnessKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    FamilyHit { family: &'static str, t: BigRational },
    ExplicitJ { j: BigRational },
    /// `j = J(n·(4, 5))`.
    XnsMultiple { n: i64 },
    S0Pair,
    Witnesses(Vec<Witness>),
    /// A prime `p` of the denominator with exponent `e` where
    /// `p ≢ ±1 (mod 11)` or `11 ∤ e`.
    DenominatorShape { p: BigInt, e: u32 },
    /// Integral `j` outside the explicit list.
    IntegralJ,
    /// `j` lies in none of the families deciding the question.
    NoFamilyMember,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::FamilyHit { family, t } => write!(f, "family({family}, t={t})"),
            Certificate::ExplicitJ { j } => write!(f, "explicit_j({j})"),
            Certificate::XnsMultiple { n } => write!(f, "xns11_point(n={n})"),
            Certificate::S0Pair => f.write_str("s0_pair"),
            Certificate::Witnesses(ws) => {
                f.write_str("witnesses(")?;
                for (i, w) in ws.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{}:p={},ap={}", w.kind.as_str(), w.p, w.ap)?;
                }
                f.write_str(")")
            }
            Certificate::DenominatorShape { p, e } => write!(f, "denominator_shape(p={p}, e={e})"),
            Certificate::IntegralJ => f.write_str("integral_j"),
            Certificate::NoFamilyMember => f.write_str("no_family_member"),
        }
    }
}

/// The decision for one prime. `certificate` is `Some` exactly when the
/// status is not [`Status::Undetermined`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeStatus {
    pub ell: u64,
    pub status: Status,
    pub certificate: Option<Certificate>,
    pub note: Option<String>,
}

impl PrimeStatus {
    fn decided(ell: u64, status: Status, certificate: Certificate) -> Self {
        PrimeStatus {
            ell,
            status,
            certificate: Some(certificate),
            note: None,
        }
    }

    fn undetermined(ell: u64, note: String) -> Self {
        PrimeStatus {
            ell,
            status: Status::Undetermined,
            certificate: None,
            note: Some(note),
        }
    }

    fn from_error(ell: u64, e: &Error) -> Self {
        Self::undetermined(ell, format!("{e}"))
    }
}

/// Limits shared by the witness scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessConfig {
    pub witness_bound: u64,
    pub counting_bound: u64,
}

impl Default for WitnessConfig {
    fn default() -> Self {
        WitnessConfig {
            witness_bound: DEFAULT_WITNESS_BOUND,
            counting_bound: DEFAULT_COUNTING_BOUND,
        }
    }
}

fn first_family_hit(j: &BigRational, ell: u64, adic: bool, budget: &RootBudget) -> Result<Option<Certificate>> {
    for fam in families_for(ell, adic) {
        if let Some(t) = family_member_with(j, &fam, budget)? {
            return Ok(Some(Certificate::FamilyHit { family: fam.label, t }));
        }
    }
    Ok(None)
}

pub fn check_mod_small(j: &BigRational, ell: u64) -> PrimeStatus {
    check_mod_small_with(j, ell, &RootBudget::default())
}

/// For `ℓ ∈ {2, 3, 5, 7}`: non-surjective iff `j` lies in one of the
/// families for `ℓ`.
pub fn check_mod_small_with(j: &BigRational, ell: u64, budget: &RootBudget) -> PrimeStatus {
    if !matches!(ell, 2 | 3 | 5 | 7) {
        return PrimeStatus::from_error(ell, &Error::InvalidArgument(format!("check_mod_small needs ℓ ∈ {{2,3,5,7}}, got {ell}")));
    }
    match first_family_hit(j, ell, false, budget) {
        Ok(Some(cert)) => PrimeStatus::decided(ell, Status::NonSurjective, cert),
        Ok(None) => PrimeStatus::decided(ell, Status::Surjective, Certificate::NoFamilyMember),
        Err(e) => PrimeStatus::from_error(ell, &e),
    }
}

fn mod11_explicit() -> [BigRational; 2] {
    let m121 = BigInt::from(-121);
    let big = BigInt::from(-11) * num_traits::pow(BigInt::from(131), 3);
    [BigRational::from_integer(m121), BigRational::from_integer(big)]
}

/// The first prime power `p^e` of the denominator breaking
/// `p ≡ ±1 (mod 11)` and `11 | e`.
fn denominator_shape_violation(j: &BigRational) -> Result<Option<(BigInt, u32)>> {
    let fac = factorize(j.denom())?;
    Ok(fac
        .factors()
        .iter()
        .find(|(p, e)| {
            let r = mod_u64(p, 11);
            !(r == 1 || r == 10) || e % 11 != 0
        })
        .cloned())
}

pub fn check_mod_11(j: &BigRational, search_bound: u32) -> PrimeStatus {
    const ELL: u64 = 11;
    if let Some(x) = mod11_explicit().into_iter().find(|x| x == j) {
        return PrimeStatus::decided(ELL, Status::NonSurjective, Certificate::ExplicitJ { j: x });
    }
    if j.is_integer() {
        return PrimeStatus::decided(ELL, Status::Surjective, Certificate::IntegralJ);
    }
    match denominator_shape_violation(j) {
        Ok(Some((p, e))) => return PrimeStatus::decided(ELL, Status::Surjective, Certificate::DenominatorShape { p, e }),
        Ok(None) => {}
        Err(e) => return PrimeStatus::from_error(ELL, &e),
    }
    match xns11_search(j, search_bound) {
        Some(n) => PrimeStatus::decided(ELL, Status::NonSurjective, Certificate::XnsMultiple { n }),
        None => PrimeStatus::undetermined(ELL, format!("no J(nP) match for |n| ≤ {search_bound}")),
    }
}

fn mod13_explicit() -> [BigRational; 3] {
    let p = |b: i64, e: usize| -> BigInt { num_traits::pow(BigInt::from(b), e) };
    let a = BigRational::new(p(2, 4) * 5u32 * p(13, 4) * p(17, 3), p(3, 13));
    let b = BigRational::new(-(p(2, 12) * p(5, 3) * 11u32 * p(13, 4)), p(3, 13));
    let c = BigRational::new(
        p(2, 18) * p(3, 3) * p(13, 4) * p(127, 3) * p(139, 3) * p(157, 3) * p(283, 3) * 929u32,
        p(5, 13) * p(61, 13),
    );
    [a, b, c]
}

/// Walks primes `p ≤ bound` of good reduction not dividing `extra`, yielding
/// `(p, a_p)`. Stops with an error once a count is refused.
struct GoodPrimes {
    minimal: WeierstrassModel,
    extra: u64,
    primes: alloc::vec::IntoIter<u64>,
    counting_bound: u64,
}

impl GoodPrimes {
    fn new(model: &WeierstrassModel, extra: u64, config: &WitnessConfig) -> Result<Self> {
        Ok(GoodPrimes {
            minimal: minimal_model(model)?,
            extra,
            primes: primes_up_to(config.witness_bound).into_iter(),
            counting_bound: config.counting_bound,
        })
    }
}

impl Iterator for GoodPrimes {
    type Item = Result<(u64, i64)>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let p = self.primes.next()?;
            if p == self.extra || mod_u64(self.minimal.discriminant(), p) == 0 {
                continue;
            }
            return Some(ap_good(&self.minimal, p, self.counting_bound).map(|ap| (p, ap)));
        }
    }
}

fn discriminant_kind(p: u64, ap: i64, ell: u64) -> Option<WitnessKind> {
    if ap.rem_euclid(ell as i64) == 0 {
        return None;
    }
    let d = (ap as i128) * (ap as i128) - 4 * p as i128;
    let d = d.rem_euclid(ell as i128) as i64;
    match legendre_i64(d, ell) {
        1 => Some(WitnessKind::SquareDiscriminant),
        -1 => Some(WitnessKind::NonSquareDiscriminant),
        _ => None,
    }
}

fn is_ratio_witness(p: u64, ap: i64) -> bool {
    let p13 = (p % 13) as i64;
    let inv = (1..13).find(|x| (x * p13) % 13 == 1).expect("13 ∤ p");
    let u = (ap.rem_euclid(13) * ap.rem_euclid(13) % 13) * inv % 13;
    !matches!(u, 0 | 1 | 2 | 4) && (u * u - 3 * u + 1).rem_euclid(13) != 0
}

pub fn check_mod_13(model: &WeierstrassModel, witness_bound: u64) -> PrimeStatus {
    check_mod_13_with(
        model,
        &WitnessConfig {
            witness_bound,
            ..WitnessConfig::default()
        },
    )
}

/// Non-surjective on the explicit list or the family; surjective once all
/// three witness kinds occur; undetermined otherwise.
pub fn check_mod_13_with(model: &WeierstrassModel, config: &WitnessConfig) -> PrimeStatus {
    const ELL: u64 = 13;
    let j = model.j_invariant();
    if let Some(x) = mod13_explicit().into_iter().find(|x| x == j) {
        return PrimeStatus::decided(ELL, Status::NonSurjective, Certificate::ExplicitJ { j: x });
    }
    match first_family_hit(j, ELL, false, &RootBudget::default()) {
        Ok(Some(cert)) => return PrimeStatus::decided(ELL, Status::NonSurjective, cert),
        Ok(None) => {}
        Err(e) => return PrimeStatus::from_error(ELL, &e),
    }
    let scan = match GoodPrimes::new(model, ELL, config) {
        Ok(s) => s,
        Err(e) => return PrimeStatus::from_error(ELL, &e),
    };
    let mut found: [Option<Witness>; 3] = [None, None, None];
    for item in scan {
        let (p, ap) = match item {
            Ok(v) => v,
            Err(e) => return PrimeStatus::from_error(ELL, &e),
        };
        if let Some(kind) = discriminant_kind(p, ap, ELL) {
            let slot = if kind == WitnessKind::SquareDiscriminant { 0 } else { 1 };
            found[slot].get_or_insert(Witness { p, ap, kind });
        }
        if is_ratio_witness(p, ap) {
            found[2].get_or_insert(Witness {
                p,
                ap,
                kind: WitnessKind::TraceRatio,
            });
        }
        if found.iter().all(Option::is_some) {
            let ws = found.iter().flatten().copied().collect();
            return PrimeStatus::decided(ELL, Status::Surjective, Certificate::Witnesses(ws));
        }
    }
    PrimeStatus::undetermined(ELL, format!("witness scan up to {} incomplete", config.witness_bound))
}

pub fn certify_large(model: &WeierstrassModel, ell: u64, witness_bound: u64) -> PrimeStatus {
    certify_large_with(
        model,
        ell,
        &WitnessConfig {
            witness_bound,
            ..WitnessConfig::default()
        },
    )
}

/// For `ℓ > 13`: non-surjective on the exceptional pairs, surjective once a
/// prime `p ∤ N·ℓ` with `ℓ ∤ a_p` and `a_p² − 4p` a non-zero square mod `ℓ`
/// turns up.
pub fn certify_large_with(model: &WeierstrassModel, ell: u64, config: &WitnessConfig) -> PrimeStatus {
    if ell <= 13 {
        return PrimeStatus::from_error(ell, &Error::InvalidArgument(format!("certify_large needs ℓ > 13, got {ell}")));
    }
    if s0_lookup(ell, model.j_invariant()) {
        return PrimeStatus::decided(ell, Status::NonSurjective, Certificate::S0Pair);
    }
    let scan = match GoodPrimes::new(model, ell, config) {
        Ok(s) => s,
        Err(e) => return PrimeStatus::from_error(ell, &e),
    };
    for item in scan {
        match item {
            Ok((p, ap)) => {
                if discriminant_kind(p, ap, ell) == Some(WitnessKind::SquareDiscriminant) {
                    let w = Witness {
                        p,
                        ap,
                        kind: WitnessKind::SquareDiscriminant,
                    };
                    return PrimeStatus::decided(ell, Status::Surjective, Certificate::Witnesses(alloc::vec![w]));
                }
            }
            Err(e) => return PrimeStatus::from_error(ell, &e),
        }
    }
    PrimeStatus::undetermined(ell, format!("no witness up to {}", config.witness_bound))
}

/// Re-checks a witness for `ℓ > 13` against the curve.
pub fn validate_large_witness(model: &WeierstrassModel, ell: u64, w: &Witness, counting_bound: u64) -> bool {
    let Ok(min) = minimal_model(model) else { return false };
    if w.p as u128 == ell as u128 || mod_u64(min.discriminant(), w.p) == 0 {
        return false;
    }
    ap_good(&min, w.p, counting_bound) == Ok(w.ap) && discriminant_kind(w.p, w.ap, ell) == Some(WitnessKind::SquareDiscriminant)
}

/// The `ℓ^∞` status given the mod-`ℓ` one.
pub fn check_ladic(j: &BigRational, mod_status: &PrimeStatus) -> PrimeStatus {
    let ell = mod_status.ell;
    if ell >= 5 || mod_status.status == Status::NonSurjective {
        return mod_status.clone();
    }
    match first_family_hit(j, ell, true, &RootBudget::default()) {
        Ok(Some(cert)) => PrimeStatus::decided(ell, Status::NonSurjective, cert),
        Ok(None) if mod_status.status == Status::Surjective => {
            PrimeStatus::decided(ell, Status::Surjective, Certificate::NoFamilyMember)
        }
        Ok(None) => PrimeStatus::undetermined(ell, "mod-ℓ status undetermined".into()),
        Err(e) => PrimeStatus::from_error(ell, &e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::curve_from_j;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn small_examples() {
        let s = check_mod_small(&q(102400), 5);
        assert_eq!(s.status, Status::NonSurjective);
        assert_eq!(s.certificate, Some(Certificate::FamilyHit { family: "mod5-b", t: q(1) }));
        assert_eq!(check_mod_small(&q(2048), 2).status, Status::NonSurjective);
        let s = check_mod_small(&q(1730), 2);
        assert_ne!(s.status, Status::Undetermined);
        assert!(s.certificate.is_some());
    }

    #[test]
    fn mod_11_examples() {
        assert_eq!(check_mod_11(&q(-121), 30).status, Status::NonSurjective);
        let s = check_mod_11(&q(512), 30);
        assert_eq!((s.status, s.certificate), (Status::Surjective, Some(Certificate::IntegralJ)));
        let s = check_mod_11(&BigRational::new(1.into(), 2048.into()), 30);
        assert_eq!(s.status, Status::Surjective);
        assert_eq!(s.certificate, Some(Certificate::DenominatorShape { p: 2.into(), e: 11 }));
    }

    #[test]
    fn mod_11_finds_xns_points() {
        use super::super::xns11::{xns11_j, Xns11Point};
        let j = xns11_j(&Xns11Point::generator().mul(-3)).unwrap();
        assert!(!j.is_integer());
        let s = check_mod_11(&j, 5);
        assert_eq!(s.status, Status::NonSurjective);
        assert_eq!(s.certificate, Some(Certificate::XnsMultiple { n: -3 }));
    }

    #[test]
    fn mod_13_examples() {
        let [_, b, _] = mod13_explicit();
        let e = curve_from_j(&b).unwrap();
        assert_eq!(check_mod_13(&e, 100).status, Status::NonSurjective);

        let e = WeierstrassModel::from_ints([0, 0, 1, -1, 0]).unwrap();
        assert_eq!(check_mod_13(&e, 0).status, Status::Undetermined);
        let s = check_mod_13(&e, 1000);
        assert_eq!(s.status, Status::Surjective);
        let Some(Certificate::Witnesses(ws)) = s.certificate else { panic!() };
        assert_eq!(ws.len(), 3);
    }

    #[test]
    fn ratio_polynomial_has_no_roots_mod_13() {
        assert!((0..13).all(|u: i64| (u * u - 3 * u + 1) % 13 != 0));
    }

    #[test]
    fn large_examples() {
        let e = curve_from_j(&q(-9317)).unwrap();
        assert_eq!(certify_large(&e, 37, 1000).status, Status::NonSurjective);
        assert_eq!(certify_large(&e, 17, 0).status, Status::Undetermined);

        let e = WeierstrassModel::from_ints([0, 0, 1, -1, 0]).unwrap();
        let s = certify_large(&e, 17, 1000);
        assert_eq!(s.status, Status::Surjective);
        let Some(Certificate::Witnesses(ws)) = s.certificate else { panic!() };
        assert!(validate_large_witness(&e, 17, &ws[0], DEFAULT_COUNTING_BOUND));
    }

    #[test]
    fn ladic_examples() {
        let mod2 = check_mod_small(&q(1727), 2);
        let s = check_ladic(&q(1727), &mod2);
        assert_eq!(s.status, Status::NonSurjective);
        let s = check_ladic(&q(-36), &check_mod_small(&q(-36), 2));
        assert_eq!(s.status, Status::NonSurjective);
        let m5 = check_mod_small(&q(102400), 5);
        assert_eq!(check_ladic(&q(102400), &m5), m5);
    }
}
