use alloc::vec;

use num_bigint::BigInt;

use super::model::WeierstrassModel;
use super::tate::{tate_local_data, ReductionType};
use crate::numtheory::mod_u64;
use crate::{Error, Result};

/// Default largest prime for which points are counted.
pub const DEFAULT_COUNTING_BOUND: u64 = 1_000_000;

/// `a_p` at a prime, with `a_p = 0, 1, −1` at additive, split and non-split
/// multiplicative primes respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TraceOfFrobenius {
    pub p: u64,
    pub ap: i64,
}

/// `a_p = p + 1 − #E(F_p)` at a prime of good reduction, by enumeration.
///
/// The model may be non-minimal at `p`; it is then minimalized first.
/// Primes above `counting_bound` are refused.
pub fn ap_good(model: &WeierstrassModel, p: u64, counting_bound: u64) -> Result<i64> {
    if p > counting_bound {
        return Err(Error::CountingBoundExceeded { p, bound: counting_bound });
    }
    if mod_u64(model.discriminant(), p) != 0 {
        return Ok(count_trace(model, p));
    }
    let local = tate_local_data(model, &BigInt::from(p));
    if local.reduction != ReductionType::Good {
        return Err(Error::NotGoodReduction(p));
    }
    Ok(count_trace(&local.minimal_model, p))
}

/// `a_p` under the bad-prime convention.
pub fn trace_of_frobenius(model: &WeierstrassModel, p: u64, counting_bound: u64) -> Result<TraceOfFrobenius> {
    let ap = if mod_u64(model.discriminant(), p) != 0 {
        ap_good(model, p, counting_bound)?
    } else {
        let local = tate_local_data(model, &BigInt::from(p));
        match local.reduction {
            ReductionType::Good => ap_good(&local.minimal_model, p, counting_bound)?,
            ReductionType::SplitMultiplicative => 1,
            ReductionType::NonsplitMultiplicative => -1,
            ReductionType::Additive => 0,
        }
    };
    Ok(TraceOfFrobenius { p, ap })
}

/// Assumes `p ∤ Δ`.
fn count_trace(model: &WeierstrassModel, p: u64) -> i64 {
    if p == 2 {
        let a: [u64; 5] = core::array::from_fn(|i| mod_u64(&model.a_invariants()[i], 2));
        let [a1, a2, a3, a4, a6] = a;
        let mut affine = 0i64;
        for x in 0..2u64 {
            for y in 0..2u64 {
                let lhs = y * y + a1 * x * y + a3 * y;
                let rhs = x * x * x + a2 * x * x + a4 * x + a6;
                if (lhs + rhs) % 2 == 0 {
                    affine += 1;
                }
            }
        }
        return 2 - affine;
    }
    // #E(F_p) = p + 1 + Σ_x χ(4x³ + b2·x² + 2·b4·x + b6)
    let b2 = mod_u64(model.b2(), p) as u128;
    let b4 = mod_u64(model.b4(), p) as u128;
    let b6 = mod_u64(model.b6(), p) as u128;
    let m = p as u128;
    let mut chi = vec![-1i8; p as usize];
    chi[0] = 0;
    for x in 1..=(p / 2) {
        chi[((x as u128 * x as u128) % m) as usize] = 1;
    }
    let mut sum = 0i64;
    for x in 0..m {
        let v = (((4 * x + b2) % m * x + 2 * b4) % m * x + b6) % m;
        sum += chi[v as usize] as i64;
    }
    -sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::primes_up_to;
    use std::vec::Vec;

    fn model(a: [i64; 5]) -> WeierstrassModel {
        WeierstrassModel::from_ints(a).unwrap()
    }

    fn brute(e: &WeierstrassModel, p: u64) -> i64 {
        let a: Vec<i64> = e.a_invariants().iter().map(|c| mod_u64(c, p) as i64).collect();
        let p = p as i64;
        let mut n = 1i64;
        for x in 0..p {
            for y in 0..p {
                let l = y * y + a[0] * x * y + a[2] * y;
                let r = x * x * x + a[1] * x * x + a[3] * x + a[4];
                if (l - r).rem_euclid(p) == 0 {
                    n += 1;
                }
            }
        }
        p + 1 - n
    }

    #[test]
    fn examples() {
        assert_eq!(ap_good(&model([0, 0, 0, 1, 1]), 5, 100).unwrap(), -3);
        assert_eq!(ap_good(&model([0, 0, 0, 1, 0]), 3, 100).unwrap(), 0);
    }

    #[test]
    fn agrees_with_double_loop() {
        for a in [[0, 0, 0, 1, 1], [0, -1, 1, -10, -20], [1, 0, 1, 4, -6], [1, 1, 1, -8, 6]] {
            let e = model(a);
            for p in primes_up_to(100) {
                if mod_u64(e.discriminant(), p) == 0 {
                    continue;
                }
                let ap = ap_good(&e, p, 100).unwrap();
                assert_eq!(ap, brute(&e, p), "{a:?} at {p}");
                assert!((ap * ap) as u64 <= 4 * p);
            }
        }
    }

    #[test]
    fn bound_and_bad_primes() {
        let e = model([0, 0, 0, 1, 1]);
        assert!(matches!(ap_good(&e, 101, 100), Err(Error::CountingBoundExceeded { .. })));
        assert_eq!(ap_good(&e, 31, 100), Err(Error::NotGoodReduction(31)));
        // 11a1 is split at 11, 14a1 non-split at 2
        assert_eq!(trace_of_frobenius(&model([0, -1, 1, -10, -20]), 11, 100).unwrap().ap, 1);
        assert_eq!(trace_of_frobenius(&model([1, 0, 1, 4, -6]), 2, 100).unwrap().ap, -1);
        assert_eq!(trace_of_frobenius(&e, 2, 100).unwrap().ap, 0);
    }

    #[test]
    fn non_minimal_good_prime() {
        let e = model([0, -1, 1, -10, -20]);
        let big = crate::curve::minimal::scale_up(&e, &BigInt::from(3));
        assert_eq!(ap_good(&big, 3, 100).unwrap(), ap_good(&e, 3, 100).unwrap());
    }
}
