//! The quadratic-residue rank loop.
//!
//! For integral `j` the set `S` is found by streaming primes `p_i` of
//! reduction type I0 or I0* with `a_i = |a_{p_i}(E_{p_i})| ≠ 0`, recording
//! for each the row `α_{i,·}` (non-residuosity of the q-list mod `p_i`) and
//! `β_i` (non-residuosity of −1), and stopping at the first `r` where
//! `A_r·x = b_r` has no solution over F₂. Then
//! `S = {ℓ ≤ 13} ∪ {ℓ : (ℓ, j) ∈ S₀} ∪ {ℓ > 13 : ℓ | a_i for some i ≤ r}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::curve::{
    ap_good, minimal_model, quadratic_twist, tate_local_data, KodairaSymbol, WeierstrassModel,
    DEFAULT_COUNTING_BOUND,
};
use crate::numtheory::{factorize, legendre, mod_u64, next_prime, valuation, F2System};
use crate::{Error, Result};

/// Primes that are always in the candidate set.
pub const BASE_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

/// Default largest prime examined when looking for the next admissible prime.
pub const DEFAULT_SEARCH_CAP: u64 = 10_000;

/// The pairs `(ℓ, j)` for which `ρ_{E,ℓ}` is known not to be surjective
/// with `ℓ > 13`, as `(ℓ, numerator, denominator)`.
const S0: [(u64, i128, i128); 4] = [
    (17, -297_756_989, 2),
    (17, -882_216_989, 131_072),
    (37, -9317, 1),
    (37, -162_677_523_113_838_677, 1),
];

/// Whether `(ℓ, j)` is one of the four exceptional pairs.
pub fn s0_lookup(ell: u64, j: &BigRational) -> bool {
    s0_primes(j).contains(&ell)
}

/// The primes `ℓ` with `(ℓ, j)` an exceptional pair (at most one).
pub fn s0_primes(j: &BigRational) -> Vec<u64> {
    S0.iter()
        .filter(|(_, n, d)| j.numer() == &BigInt::from(*n) && j.denom() == &BigInt::from(*d))
        .map(|(ell, _, _)| *ell)
        .collect()
}

/// The primes `q_1 < … < q_d`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QList {
    primes: Vec<BigInt>,
}

impl QList {
    pub fn primes(&self) -> &[BigInt] {
        &self.primes
    }
    pub fn len(&self) -> usize {
        self.primes.len()
    }
    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    fn from_candidates(j: &BigRational, odd_candidates: impl Iterator<Item = BigInt>) -> Self {
        let shifted = j - BigRational::from_integer(BigInt::from(1728));
        let mut primes: Vec<BigInt> = odd_candidates
            .filter(|q| q != &BigInt::from(2) && valuation(&shifted, q).is_positive_odd())
            .collect();
        if valuation(j, &BigInt::from(2)).is_one_of(&[3, 6, 9]) {
            primes.push(BigInt::from(2));
        }
        primes.sort();
        primes.dedup();
        QList { primes }
    }
}

impl fmt::Display for QList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, q) in self.primes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{q}")?;
        }
        f.write_str("]")
    }
}

/// The q-list of `j`, factoring the numerator of `j − 1728` outright.
pub fn compute_qlist(j: &BigRational) -> Result<QList> {
    let shifted = j - BigRational::from_integer(BigInt::from(1728));
    let numer = shifted.numer().abs();
    let candidates = if numer.is_zero() {
        Vec::new()
    } else {
        factorize(&numer)?.primes().cloned().collect()
    };
    Ok(QList::from_candidates(j, candidates.into_iter()))
}

/// The q-list of the curve, drawing odd candidates from
/// `gcd(numerator(j − 1728), Δ)` of the given integral model.
pub fn compute_qlist_for_model(model: &WeierstrassModel) -> Result<QList> {
    let j = model.j_invariant();
    let shifted = j - BigRational::from_integer(BigInt::from(1728));
    let g = num_integer::Integer::gcd(shifted.numer(), model.discriminant());
    let candidates = if g.is_zero() || g.is_one() {
        Vec::new()
    } else {
        factorize(&g)?.primes().cloned().collect()
    };
    Ok(QList::from_candidates(j, candidates.into_iter()))
}

/// An odd prime of type I0 or I0* with non-zero trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdmissiblePrime {
    pub p: u64,
    /// The Kodaira symbol at `p` is I0*, so the trace is taken on the
    /// quadratic twist by `p`.
    pub twisted: bool,
    /// `|a_p|`, always positive.
    pub a: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveConfig {
    pub search_cap: u64,
    pub counting_bound: u64,
}

impl Default for SieveConfig {
    fn default() -> Self {
        SieveConfig {
            search_cap: DEFAULT_SEARCH_CAP,
            counting_bound: DEFAULT_COUNTING_BOUND,
        }
    }
}

/// Smallest admissible prime above `after`. Primes of type I0* whose twist
/// by `p` still has bad reduction at `p` are not admissible.
pub fn next_admissible(model: &WeierstrassModel, after: u64, config: &SieveConfig) -> Result<AdmissiblePrime> {
    let mut p = after.max(2);
    loop {
        p = next_prime(p);
        if p > config.search_cap {
            return Err(Error::SearchBoundExceeded { cap: config.search_cap });
        }
        if let Some(adm) = admissible_at(model, p, config.counting_bound)? {
            return Ok(adm);
        }
    }
}

fn admissible_at(model: &WeierstrassModel, p: u64, counting_bound: u64) -> Result<Option<AdmissiblePrime>> {
    let (ap, twisted) = if mod_u64(model.discriminant(), p) != 0 {
        (ap_good(model, p, counting_bound)?, false)
    } else {
        let local = tate_local_data(model, &BigInt::from(p));
        match local.kodaira {
            KodairaSymbol::I0 => (ap_good(&local.minimal_model, p, counting_bound)?, false),
            KodairaSymbol::I0Star => {
                let twist = quadratic_twist(model, &BigInt::from(p))?;
                match ap_good(&twist, p, counting_bound) {
                    Ok(ap) => (ap, true),
                    Err(Error::NotGoodReduction(_)) => return Ok(None),
                    Err(e) => return Err(e),
                }
            }
            _ => return Ok(None),
        }
    };
    Ok((ap != 0).then_some(AdmissiblePrime {
        p,
        twisted,
        a: ap.unsigned_abs(),
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveRow {
    pub prime: AdmissiblePrime,
    /// `α_{i,j}` is set iff `q_j` is not a square mod `p_i`.
    pub alpha: Vec<bool>,
    /// Set iff `p_i ≡ 3 (mod 4)`.
    pub beta: bool,
}

impl SieveRow {
    fn new(qlist: &QList, prime: AdmissiblePrime) -> Self {
        SieveRow {
            alpha: qlist.primes().iter().map(|q| legendre(q, prime.p) != 1).collect(),
            beta: prime.p % 4 == 3,
            prime,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveState {
    pub qlist: QList,
    /// Rows `1..=r`; the first `r − 1` are consistent, all `r` are not.
    pub rows: Vec<SieveRow>,
}

impl SieveState {
    pub fn r(&self) -> usize {
        self.rows.len()
    }
    pub fn p_r(&self) -> Option<u64> {
        self.rows.last().map(|row| row.prime.p)
    }
}

/// Why a prime belongs to an exceptional set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    /// `ℓ ≤ 13`.
    Base,
    /// `(ℓ, j)` is an exceptional pair.
    S0Pair,
    /// `ℓ` divides `a_i` for the `index`-th admissible prime (1-based).
    DividesA { index: usize, p: u64, a: u64 },
    /// `ℓ` divides the denominator invariant `g`.
    DividesG { g: u64 },
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Base => f.write_str("base"),
            Reason::S0Pair => f.write_str("s0_pair"),
            Reason::DividesA { index, p, a } => write!(f, "divides_a(i={index}, p={p}, a={a})"),
            Reason::DividesG { g } => write!(f, "divides_g(g={g})"),
        }
    }
}

/// A set of primes, each with the first reason it was added for.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExceptionalSet {
    reasons: BTreeMap<u64, Reason>,
}

impl ExceptionalSet {
    /// `{2, 3, 5, 7, 11, 13}` together with the exceptional pairs for `j`.
    pub fn base(j: &BigRational) -> Self {
        let mut s = ExceptionalSet::default();
        for ell in BASE_PRIMES {
            s.insert(ell, Reason::Base);
        }
        for ell in s0_primes(j) {
            s.insert(ell, Reason::S0Pair);
        }
        s
    }

    /// Adds `ell` unless it is already present.
    pub fn insert(&mut self, ell: u64, reason: Reason) {
        self.reasons.entry(ell).or_insert(reason);
    }

    pub fn contains(&self, ell: u64) -> bool {
        self.reasons.contains_key(&ell)
    }

    pub fn reason(&self, ell: u64) -> Option<Reason> {
        self.reasons.get(&ell).copied()
    }

    /// The primes, ascending.
    pub fn primes(&self) -> Vec<u64> {
        self.reasons.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, Reason)> + '_ {
        self.reasons.iter().map(|(k, v)| (*k, *v))
    }

    pub fn above_13(&self) -> Vec<u64> {
        self.reasons.keys().copied().filter(|&ell| ell > 13).collect()
    }

    pub fn len(&self) -> usize {
        self.reasons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reasons.is_empty()
    }
}

fn small_prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn run_sieve(model: &WeierstrassModel) -> Result<(ExceptionalSet, SieveState)> {
    run_sieve_with(model, &SieveConfig::default())
}

/// Runs the rank loop on the minimal model of `model`.
pub fn run_sieve_with(model: &WeierstrassModel, config: &SieveConfig) -> Result<(ExceptionalSet, SieveState)> {
    let model = minimal_model(model)?;
    let qlist = compute_qlist_for_model(&model)?;
    let mut set = ExceptionalSet::base(model.j_invariant());
    let mut system = F2System::new(qlist.len());
    let mut rows = Vec::new();
    let mut p = 2;
    loop {
        let prime = next_admissible(&model, p, config)?;
        p = prime.p;
        let row = SieveRow::new(&qlist, prime);
        let index = rows.len() + 1;
        for ell in small_prime_divisors(prime.a).into_iter().filter(|&l| l > 13) {
            set.insert(ell, Reason::DividesA { index, p, a: prime.a });
        }
        let consistent = system.push_bools(&row.alpha, row.beta);
        rows.push(row);
        if !consistent {
            break;
        }
    }
    Ok((set, SieveState { qlist, rows }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::curve_from_j;
    use std::vec;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn qlist(j: BigRational) -> Vec<i64> {
        use num_traits::ToPrimitive;
        compute_qlist(&j).unwrap().primes().iter().map(|p| p.to_i64().unwrap()).collect()
    }

    #[test]
    fn qlist_examples() {
        assert_eq!(qlist(q(512, 1)), vec![2, 19]);
        assert_eq!(qlist(q(1730, 1)), Vec::<i64>::new());
        assert!(qlist(q(64, 1)).contains(&2));
    }

    #[test]
    fn qlist_from_discriminant_agrees() {
        for j in [q(512, 1), q(-9317, 1), q(1730, 1), q(2, 1), q(-121, 1)] {
            let e = curve_from_j(&j).unwrap();
            assert_eq!(compute_qlist_for_model(&e).unwrap(), compute_qlist(&j).unwrap(), "j = {j}");
        }
    }

    #[test]
    fn first_admissible_prime() {
        let e = WeierstrassModel::from_ints([0, 0, 0, 1, 1]).unwrap();
        let adm = next_admissible(&e, 2, &SieveConfig::default()).unwrap();
        assert_eq!(adm, AdmissiblePrime { p: 5, twisted: false, a: 3 });
    }

    #[test]
    fn multiplicative_primes_are_skipped() {
        // 11a1 has I5 at 11
        let e = WeierstrassModel::from_ints([0, -1, 1, -10, -20]).unwrap();
        let adm = next_admissible(&e, 7, &SieveConfig::default()).unwrap();
        assert_ne!(adm.p, 11);
    }

    #[test]
    fn s0_membership() {
        assert!(s0_lookup(37, &q(-9317, 1)));
        assert!(s0_lookup(17, &q(-297756989, 2)));
        assert!(!s0_lookup(37, &q(512, 1)));
        assert!(!s0_lookup(17, &q(-9317, 1)));
    }

    #[test]
    fn sieve_on_j_512() {
        let e = curve_from_j(&q(512, 1)).unwrap();
        let (set, state) = run_sieve(&e).unwrap();
        assert_eq!(state.qlist.len(), 2);
        assert!(set.above_13().is_empty());
        assert_eq!(set.primes(), BASE_PRIMES.to_vec());
    }

    #[test]
    fn s0_curve_keeps_its_prime() {
        let e = curve_from_j(&q(-882216989, 131072)).unwrap();
        let (set, _) = run_sieve(&e).unwrap();
        assert_eq!(set.reason(17), Some(Reason::S0Pair));
    }

    #[test]
    fn empty_qlist_stops_at_first_3_mod_4() {
        // j = 1730 has an empty q-list
        let e = curve_from_j(&q(1730, 1)).unwrap();
        let (_, state) = run_sieve(&e).unwrap();
        assert!(state.qlist.is_empty());
        assert_eq!(state.p_r().unwrap() % 4, 3);
        assert!(state.rows[..state.r() - 1].iter().all(|row| row.prime.p % 4 == 1));
    }

    #[test]
    fn search_cap_is_enforced() {
        let e = WeierstrassModel::from_ints([0, 0, 0, 1, 1]).unwrap();
        let config = SieveConfig { search_cap: 4, ..SieveConfig::default() };
        assert_eq!(next_admissible(&e, 2, &config), Err(Error::SearchBoundExceeded { cap: 4 }));
    }
}
