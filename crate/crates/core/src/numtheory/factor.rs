use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::primes::{is_prime, is_prime_u64};
use crate::{Error, Result};

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    /// Primes must be strictly increasing and exponents positive.
    pub(crate) fn from_sorted(factors: Vec<(BigInt, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        Factorization { factors }
    }

    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> + '_ {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// The factored integer.
    pub fn value(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize))
    }

    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// All positive divisors, unsorted. `None` when there are more than `limit`.
    pub fn divisors(&self, limit: u128) -> Option<Vec<BigInt>> {
        let count = self
            .factors
            .iter()
            .try_fold(1u128, |acc, (_, e)| acc.checked_mul(*e as u128 + 1))?;
        if count > limit {
            return None;
        }
        let mut out = Vec::with_capacity(count as usize);
        out.push(BigInt::one());
        for (p, e) in &self.factors {
            let len = out.len();
            let mut pk = BigInt::one();
            for _ in 0..*e {
                pk *= p;
                for i in 0..len {
                    let d = &out[i] * &pk;
                    out.push(d);
                }
            }
        }
        Some(out)
    }

    pub fn divisor_count(&self) -> u128 {
        self.factors
            .iter()
            .fold(1u128, |acc, (_, e)| acc.saturating_mul(*e as u128 + 1))
    }
}

/// Effort limits for [`factorize_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorBudget {
    /// Trial division runs over all integers up to this bound.
    pub trial_bound: u64,
    /// Total number of rho iterations allowed for one call.
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        // ample for cofactors with factors around 2^32
        FactorBudget {
            trial_bound: 10_000,
            rho_iterations: 1 << 23,
        }
    }
}

pub fn factorize(n: &BigInt) -> Result<Factorization> {
    factorize_with(n, &FactorBudget::default())
}

pub fn factorize_with(n: &BigInt, budget: &FactorBudget) -> Result<Factorization> {
    if !n.is_positive() {
        return Err(Error::InvalidArgument(alloc::format!(
            "factorize expects a positive integer, got {n}"
        )));
    }
    let mut found: BTreeMap<BigInt, u32> = BTreeMap::new();
    let mut m = n.clone();

    let mut d = 2u64;
    while d <= budget.trial_bound {
        let dd = BigInt::from(d);
        if &dd * &dd > m {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&dd);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            found.insert(dd, e);
        }
        d += if d == 2 { 1 } else { 2 };
    }

    let mut remaining_rho = budget.rho_iterations;
    let mut stack = Vec::new();
    if !m.is_one() {
        stack.push(m);
    }
    while let Some(c) = stack.pop() {
        let tb = BigInt::from(budget.trial_bound);
        if c <= &tb * &tb || is_prime(&c)? {
            *found.entry(c).or_insert(0) += 1;
            continue;
        }
        if let Some(r) = exact_square_root(&c) {
            stack.push(r.clone());
            stack.push(r);
            continue;
        }
        let f = split(&c, &mut remaining_rho).ok_or_else(|| Error::FactorizationIncomplete(c.clone()))?;
        let g = &c / &f;
        stack.push(f);
        stack.push(g);
    }
    Ok(Factorization {
        factors: found.into_iter().collect(),
    })
}

fn exact_square_root(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Non-trivial factor of the composite `n`.
fn split(n: &BigInt, remaining: &mut u64) -> Option<BigInt> {
    if let Some(small) = n.to_u64() {
        debug_assert!(!is_prime_u64(small));
        for c in 1u64.. {
            if *remaining == 0 {
                return None;
            }
            if let Some(f) = brent_u64(small, c, remaining) {
                return Some(BigInt::from(f));
            }
        }
        return None;
    }
    let big = n.to_biguint()?;
    for c in 1u64.. {
        if *remaining == 0 {
            return None;
        }
        if let Some(f) = brent_big(&big, &BigUint::from(c), remaining) {
            return Some(BigInt::from(f));
        }
    }
    None
}

const BATCH: u64 = 128;

fn brent_u64(n: u64, c: u64, remaining: &mut u64) -> Option<u64> {
    let m = n as u128;
    let f = |x: u64| ((x as u128 * x as u128 + c as u128) % m) as u64;
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut g = 1u64;
    let mut x = y;
    let mut ys = y;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(y);
                q = ((q as u128 * x.abs_diff(y) as u128) % m) as u64;
            }
            *remaining = remaining.saturating_sub(steps);
            g = q.gcd(&n);
            k += BATCH;
        }
        r *= 2;
        if g == 1 && *remaining == 0 {
            return None;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn brent_big(n: &BigUint, c: &BigUint, remaining: &mut u64) -> Option<BigUint> {
    let f = |x: &BigUint| (x * x + c) % n;
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let one = BigUint::one();
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = one.clone();
    let mut g = one.clone();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(&y);
                q = (&q * diff(&x, &y)) % n;
            }
            *remaining = remaining.saturating_sub(steps);
            g = q.gcd(n);
            k += BATCH;
        }
        r *= 2;
        if g == one && *remaining == 0 {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = diff(&x, &ys).gcd(n);
            if g > one {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fact(n: u64) -> Vec<(u64, u32)> {
        factorize(&BigInt::from(n))
            .unwrap()
            .factors()
            .iter()
            .map(|(p, e)| (p.to_u64().unwrap(), *e))
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(fact(1), vec![]);
        assert_eq!(fact(1216), vec![(2, 6), (19, 1)]);
        assert_eq!(fact(10608), vec![(2, 4), (3, 1), (13, 1), (17, 1)]);
    }

    #[test]
    fn rejects_non_positive() {
        assert!(factorize(&BigInt::from(0)).is_err());
        assert!(factorize(&BigInt::from(-4)).is_err());
    }

    #[test]
    fn rho_splits_large_semiprimes() {
        let p = 1_000_000_007u64;
        let q = 998_244_353u64;
        assert_eq!(fact(p * q), vec![(q, 1), (p, 1)]);
        // above 2^64
        let big = BigInt::from(4_294_967_311u64) * BigInt::from(4_294_967_357u64) * BigInt::from(1_000_003u64);
        let f = factorize(&big).unwrap();
        assert_eq!(f.value(), big);
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn prime_powers() {
        let p = BigInt::from(1_000_000_007u64);
        let n = num_traits::pow(p.clone(), 3) * 12;
        let f = factorize(&n).unwrap();
        assert_eq!(f.factors(), &[(BigInt::from(2), 2), (BigInt::from(3), 1), (p, 3)]);
    }

    #[test]
    fn exhausted_budget_is_typed() {
        let p = BigInt::from(4_294_967_311u64);
        let q = BigInt::from(4_294_967_357u64);
        let tiny = FactorBudget {
            trial_bound: 100,
            rho_iterations: 10,
        };
        let err = factorize_with(&(&p * &q), &tiny).unwrap_err();
        assert!(err.is_resource_limit());
    }

    #[test]
    fn divisors_of_12() {
        let f = factorize(&BigInt::from(12)).unwrap();
        let mut d: Vec<i64> = f.divisors(100).unwrap().iter().map(|x| x.to_i64().unwrap()).collect();
        d.sort();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
        assert!(f.divisors(5).is_none());
    }
}
