use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::model::WeierstrassModel;
use super::tate::{tate_local_data, LocalData};
use crate::numtheory::{factorize, Factorization};
use crate::Result;

/// `N = ∏ p^{f_p}` with the local data at every prime dividing `Δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conductor {
    pub value: BigInt,
    pub factorization: Factorization,
    /// One entry per prime dividing the discriminant of the input model,
    /// including primes where the model was merely non-minimal.
    pub local: Vec<LocalData>,
}

impl Conductor {
    pub fn local_at(&self, p: &BigInt) -> Option<&LocalData> {
        self.local.iter().find(|l| &l.p == p)
    }

    /// No prime of multiplicative reduction.
    pub fn is_multiplicative_free(&self) -> bool {
        self.local.iter().all(|l| !l.reduction.is_multiplicative())
    }
}

pub fn conductor(model: &WeierstrassModel) -> Result<Conductor> {
    let disc = factorize(&model.discriminant().abs())?;
    let local: Vec<LocalData> = disc.primes().map(|p| tate_local_data(model, p)).collect();
    let factors: Vec<(BigInt, u32)> = local
        .iter()
        .filter(|l| l.conductor_exponent > 0)
        .map(|l| (l.p.clone(), l.conductor_exponent))
        .collect();
    let value = factors
        .iter()
        .fold(BigInt::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize));
    Ok(Conductor {
        value,
        factorization: Factorization::from_sorted(factors),
        local,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::quadratic_twist;

    fn n(a: [i64; 5]) -> BigInt {
        conductor(&WeierstrassModel::from_ints(a).unwrap()).unwrap().value
    }

    #[test]
    fn known_conductors() {
        assert_eq!(n([0, 0, 0, 1, 1]), BigInt::from(496));
        assert_eq!(n([0, -1, 1, -10, -20]), BigInt::from(11));
        assert_eq!(n([1, 0, 1, 4, -6]), BigInt::from(14));
        assert_eq!(n([1, 1, 1, -8, 6]), BigInt::from(1225));
        assert_eq!(n([1, 1, 1, -208083, -36621194]), BigInt::from(1225));
        assert_eq!(n([1, 0, 1, -3041, 64278]), BigInt::from(14450));
    }

    #[test]
    fn twist_changes_only_at_2d() {
        let e = WeierstrassModel::from_ints([0, -1, 1, -10, -20]).unwrap();
        let t = quadratic_twist(&e, &BigInt::from(-3)).unwrap();
        let c = conductor(&t).unwrap();
        assert_eq!(c.factorization.exponent_of(&BigInt::from(11)), 1);
        assert_eq!(c.value, BigInt::from(99));
        assert!(!c.is_multiplicative_free());
    }
}
