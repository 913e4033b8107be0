//! Conductor-based bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::curve::{conductor, minimal_model, WeierstrassModel};
use crate::numtheory::{ceil_sqrt_rational, factorize, Factorization};
use crate::{Error, Result};

/// Least value the conductor bound reports.
pub const CONDUCTOR_BOUND_FLOOR: u64 = 37;

/// `c = (2/√3)·√(N·∏_{p|N} (p + 1)/(2p))`, kept as its exact square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConductorBound {
    pub n: BigInt,
    pub factorization: Factorization,
    /// `c²`.
    pub value_squared: BigRational,
    /// `⌈c⌉`.
    pub ceiling: BigInt,
    /// `max(37, ⌈c⌉)`.
    pub bound: BigInt,
}

/// `∏_{p|N} (p + 1)/(2p)`.
fn local_factor(f: &Factorization) -> BigRational {
    f.primes().fold(BigRational::one(), |acc, p| {
        acc * BigRational::new(p + 1u32, p * 2u32)
    })
}

/// The bound for a curve without multiplicative primes.
pub fn conductor_bound(model: &WeierstrassModel) -> Result<ConductorBound> {
    let c = conductor(&minimal_model(model)?)?;
    if let Some(bad) = c.local.iter().find(|l| l.reduction.is_multiplicative()) {
        return Err(Error::MultiplicativeReduction(bad.p.clone()));
    }
    Ok(from_factorization(c.value, c.factorization))
}

/// The bound from the conductor alone. A conductor has no multiplicative
/// prime exactly when it is squarefull.
pub fn conductor_bound_from_n(n: &BigInt) -> Result<ConductorBound> {
    let f = factorize(n)?;
    if let Some((p, _)) = f.factors().iter().find(|(_, e)| *e == 1) {
        return Err(Error::MultiplicativeReduction(p.clone()));
    }
    Ok(from_factorization(n.clone(), f))
}

/// The same formula evaluated for any positive `N`, multiplicative primes
/// included. Only [`conductor_bound`] carries the surjectivity guarantee.
pub fn conductor_bound_formula(n: &BigInt) -> Result<ConductorBound> {
    if !n.is_positive() {
        return Err(Error::InvalidArgument(alloc::format!("conductor must be positive, got {n}")));
    }
    Ok(from_factorization(n.clone(), factorize(n)?))
}

fn from_factorization(n: BigInt, factorization: Factorization) -> ConductorBound {
    let value_squared = BigRational::new(BigInt::from(4), BigInt::from(3))
        * BigRational::from_integer(n.clone())
        * local_factor(&factorization);
    let ceiling = ceil_sqrt_rational(&value_squared);
    let bound = ceiling.clone().max(BigInt::from(CONDUCTOR_BOUND_FLOOR));
    debug_assert!(bound <= ceil_sqrt_rational(&BigRational::from_integer(n.clone())).max(BigInt::from(37)));
    ConductorBound {
        n,
        factorization,
        value_squared,
        ceiling,
        bound,
    }
}

/// `⌊N/3 · ∏_{p|N} (p + 1)/(2p) − 1⌋`; may be below 2.
pub fn sturm_prime_bound(n: &BigInt) -> Result<BigInt> {
    if !n.is_positive() {
        return Err(Error::InvalidArgument(alloc::format!("conductor must be positive, got {n}")));
    }
    let f = factorize(n)?;
    let x = BigRational::new(n.clone(), BigInt::from(3)) * local_factor(&f) - BigRational::one();
    Ok(x.floor().to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn conductor_1225() {
        let e = WeierstrassModel::from_ints([1, 1, 1, -8, 6]).unwrap();
        let b = conductor_bound(&e).unwrap();
        assert_eq!(b.n, z(1225));
        assert_eq!(b.value_squared, BigRational::from_integer(z(560)));
        assert_eq!(b.ceiling, z(24));
        assert_eq!(b.bound, z(37));
        assert_eq!(conductor_bound_from_n(&z(1225)).unwrap(), b);
    }

    #[test]
    fn multiplicative_primes_are_rejected() {
        let e = WeierstrassModel::from_ints([0, -1, 1, -10, -20]).unwrap();
        assert_eq!(conductor_bound(&e), Err(Error::MultiplicativeReduction(z(11))));
        assert_eq!(conductor_bound_from_n(&z(14450)), Err(Error::MultiplicativeReduction(z(2))));
    }

    #[test]
    fn never_above_sqrt_n() {
        for n in [4i64, 9, 25, 36, 1225, 3969, 10000, 2_250_000, 123_454_321] {
            let Ok(b) = conductor_bound_from_n(&z(n)) else { continue };
            let root = ceil_sqrt_rational(&BigRational::from_integer(z(n)));
            assert!(b.bound <= root.clone().max(z(37)), "N = {n}");
        }
        for n in 1..2000i64 {
            let b = conductor_bound_formula(&z(n)).unwrap();
            let root = ceil_sqrt_rational(&BigRational::from_integer(z(n)));
            assert!(b.bound <= root.max(z(37)), "N = {n}");
        }
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_prime_bound(&z(1225)).unwrap(), z(139));
        assert_eq!(sturm_prime_bound(&z(11)).unwrap(), z(1));
        assert!(sturm_prime_bound(&z(1)).unwrap() < z(0));
    }
}
