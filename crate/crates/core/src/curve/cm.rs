use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::minimal::minimal_model;
use super::model::WeierstrassModel;
use crate::{Error, Result};

/// The thirteen rational j-invariants of curves with complex multiplication.
pub const CM_J_INVARIANTS: [i64; 13] = [
    0,
    1728,
    -3375,
    8000,
    54000,
    287496,
    -32768,
    16581375,
    -884736,
    -12288000,
    -884736000,
    -147197952000,
    -262537412640768000,
];

pub fn is_cm_j(j: &BigRational) -> bool {
    j.is_integer() && CM_J_INVARIANTS.iter().any(|&c| j.numer() == &BigInt::from(c))
}

/// Minimal model of `y² = x³ + 3j(1728 − j)·x + 2j(1728 − j)²`, which has
/// j-invariant `j` whenever `j ∉ {0, 1728}`.
pub fn curve_from_j(j: &BigRational) -> Result<WeierstrassModel> {
    let k = j * (BigRational::from_integer(BigInt::from(1728)) - j);
    if k.is_zero() {
        return Err(Error::ComplexMultiplication(j.clone()));
    }
    let zero = BigRational::zero();
    let a4 = BigRational::from_integer(BigInt::from(3)) * &k;
    let a6 = BigRational::from_integer(BigInt::from(2)) * &k * (BigRational::from_integer(BigInt::from(1728)) - j);
    let e = WeierstrassModel::from_rational(&[zero.clone(), zero.clone(), zero, a4, a6])?;
    minimal_model(&e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::count::ap_good;
    use crate::numtheory::primes_up_to;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn table_membership() {
        assert!(is_cm_j(&q(0, 1)));
        assert!(is_cm_j(&q(1728, 1)));
        assert!(!is_cm_j(&q(512, 1)));
        assert!(!is_cm_j(&q(1728, 5)));
    }

    #[test]
    fn round_trip() {
        for j in [q(512, 1), q(-9317, 1), q(-297756989, 2), q(-882216989, 131072), q(110592, 37)] {
            assert_eq!(curve_from_j(&j).unwrap().j_invariant(), &j);
        }
        assert!(matches!(curve_from_j(&q(0, 1)), Err(Error::ComplexMultiplication(_))));
        assert!(curve_from_j(&q(1728, 1)).is_err());
    }

    #[test]
    fn cm_curves_are_supersingular_at_half_the_primes() {
        // a CM curve has a_p = 0 at every good prime inert in the CM field,
        // so at least a third of the small good primes are supersingular
        for &j in &CM_J_INVARIANTS[2..] {
            let e = curve_from_j(&q(j, 1)).unwrap();
            let good: std::vec::Vec<u64> = primes_up_to(400)
                .into_iter()
                .filter(|&p| crate::numtheory::mod_u64(e.discriminant(), p) != 0)
                .collect();
            let zeros = good.iter().filter(|&&p| ap_good(&e, p, 1000).unwrap() == 0).count();
            assert!(3 * zeros >= good.len(), "j = {j}: {zeros} of {}", good.len());
        }
    }
}
