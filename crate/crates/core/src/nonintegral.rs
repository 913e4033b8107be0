//! The denominator shortcut for non-integral `j`.
//!
//! With `denominator(j) = p_1^{e_1} ⋯ p_s^{e_s}` and
//! `g = gcd(p_1² − 1, …, p_s² − 1, e_1, …, e_s)`, every `ℓ ∉ S` has
//! surjective image, where `S = {ℓ ≤ 13} ∪ {ℓ : (ℓ, j) ∈ S₀} ∪ {ℓ : ℓ | g}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numtheory::{factorize, Factorization};
use crate::sieve::{ExceptionalSet, Reason};
use crate::{Error, Result};

/// Smallest value any of the bounds below can take.
const FLOOR: u64 = 17;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenominatorProfile {
    pub denominator: BigInt,
    pub factorization: Factorization,
    /// `g ≥ 1` divides every `p_i² − 1` and every `e_i`.
    pub g: u64,
}

pub fn denominator_profile(j: &BigRational) -> Result<DenominatorProfile> {
    let denominator = j.denom().clone();
    if denominator.is_one() {
        return Err(Error::IntegralJ);
    }
    let factorization = factorize(&denominator)?;
    let g = factorization
        .factors()
        .iter()
        .fold(BigInt::zero(), |acc, (p, e)| acc.gcd(&(p * p - 1u32)).gcd(&BigInt::from(*e)));
    let g = g.to_u64().expect("g divides an exponent");
    Ok(DenominatorProfile {
        denominator,
        factorization,
        g,
    })
}

fn prime_divisors(mut n: u64) -> impl Iterator<Item = u64> {
    let mut d = 2;
    core::iter::from_fn(move || {
        while d * d <= n {
            if n.is_multiple_of(d) {
                while n.is_multiple_of(d) {
                    n /= d;
                }
                return Some(d);
            }
            d += 1;
        }
        (n > 1).then(|| core::mem::replace(&mut n, 1))
    })
}

/// The exceptional set obtained from the denominator of `j` alone.
pub fn shortcut_set(j: &BigRational) -> Result<ExceptionalSet> {
    let profile = denominator_profile(j)?;
    let mut set = ExceptionalSet::base(j);
    for ell in prime_divisors(profile.g) {
        set.insert(ell, Reason::DividesG { g: profile.g });
    }
    Ok(set)
}

/// Three upper bounds on the largest non-surjective prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CBounds {
    /// `max(17, g)`.
    pub bound_g: u64,
    /// `max(17, ⌈(p + 1)/2⌉)` for the smallest `p` dividing the denominator.
    pub bound_p: BigInt,
    /// `max(17, ⌈ln d⌉)` with `d` the denominator.
    pub bound_logd: u64,
}

pub fn bounds_c(j: &BigRational) -> Result<CBounds> {
    let profile = denominator_profile(j)?;
    let smallest = profile
        .factorization
        .primes()
        .next()
        .expect("denominator > 1 has a prime factor");
    let half: BigInt = (smallest + 2u32) / 2u32;
    Ok(CBounds {
        bound_g: profile.g.max(FLOOR),
        bound_p: half.max(BigInt::from(FLOOR)),
        bound_logd: ceil_ln(&profile.denominator).max(FLOOR),
    })
}

/// `⌈ln d⌉` for `d ≥ 1`, decided exactly.
pub fn ceil_ln(d: &BigInt) -> u64 {
    assert!(d.is_positive(), "ceil_ln needs d ≥ 1");
    if d.is_one() {
        return 0;
    }
    // d ≥ 2^(bits−1) and ln 2 > 0.693, so this n never exceeds ln d
    let bits = d.bits();
    let mut n = (bits - 1) * 693 / 1000;
    while !exp_at_least(n, d) {
        n += 1;
    }
    n
}

/// `eⁿ ≥ d`, using `Σ_{k≤K} 1/k! < e < Σ_{k≤K} 1/k! + 1/(K!·K)`.
fn exp_at_least(n: u64, d: &BigInt) -> bool {
    if n == 0 {
        return d <= &BigInt::one();
    }
    let target = BigRational::from_integer(d.clone());
    let mut lower = BigRational::one();
    let mut term = BigRational::one();
    let mut k = 1u64;
    loop {
        term /= BigRational::from_integer(BigInt::from(k));
        lower += &term;
        let upper = &lower + &term / BigRational::from_integer(BigInt::from(k));
        if k >= 2 {
            if pow(&lower, n) >= target {
                return true;
            }
            if pow(&upper, n) < target {
                return false;
            }
        }
        k += 1;
    }
}

fn pow(x: &BigRational, n: u64) -> BigRational {
    num_traits::pow(x.clone(), n as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::vec;
    use std::vec::Vec;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn with_den(d: BigInt) -> BigRational {
        BigRational::new(BigInt::one(), d)
    }

    #[test]
    fn profile_examples() {
        assert_eq!(denominator_profile(&with_den(BigInt::from(2048))).unwrap().g, 1);
        let d103 = num_traits::pow(BigInt::from(103), 17);
        assert_eq!(denominator_profile(&with_den(d103)).unwrap().g, 17);
        assert_eq!(denominator_profile(&q(1, 6)).unwrap().g, 1);
        assert_eq!(denominator_profile(&q(5, 1)), Err(Error::IntegralJ));
    }

    #[test]
    fn shortcut_examples() {
        let s = shortcut_set(&q(-882216989, 131072)).unwrap();
        assert_eq!(s.primes(), vec![2, 3, 5, 7, 11, 13, 17]);
        assert_eq!(s.reason(17), Some(Reason::S0Pair));

        let d103 = num_traits::pow(BigInt::from(103), 17);
        let s = shortcut_set(&with_den(d103)).unwrap();
        assert_eq!(s.reason(17), Some(Reason::DividesG { g: 17 }));

        let s = shortcut_set(&q(110592, 37)).unwrap();
        assert!(s.above_13().is_empty());
    }

    #[test]
    fn bound_examples() {
        let b = bounds_c(&with_den(BigInt::from(2048))).unwrap();
        assert_eq!((b.bound_g, b.bound_p.clone()), (17, BigInt::from(17)));
        let b = bounds_c(&with_den(num_traits::pow(BigInt::from(103), 17))).unwrap();
        assert_eq!(b.bound_p, BigInt::from(52));
        assert_eq!(b.bound_g, 17);
        let b = bounds_c(&with_den(BigInt::from(131072))).unwrap();
        assert_eq!(b.bound_logd, 17);
    }

    #[test]
    fn ceil_ln_matches_known_values() {
        // ln 2 = 0.69, ln 3 = 1.10, e² = 7.39, e³ = 20.09, e¹⁰ = 22026.47
        let cases: Vec<(i64, u64)> = vec![(1, 0), (2, 1), (3, 2), (7, 2), (8, 3), (20, 3), (21, 4), (22026, 10), (22027, 11)];
        for (d, expected) in cases {
            assert_eq!(ceil_ln(&BigInt::from(d)), expected, "d = {d}");
        }
        // ln(2^200) = 138.63
        assert_eq!(ceil_ln(&(BigInt::one() << 200)), 139);
    }
}
