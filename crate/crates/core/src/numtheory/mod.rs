//! Exact integer and rational primitives.

mod f2;
mod factor;
mod legendre;
mod poly;
mod primes;
mod valuation;

pub use f2::{f2_is_consistent, f2_solve, F2Matrix, F2System};
pub use factor::{factorize, factorize_with, FactorBudget, Factorization};
pub use legendre::{jacobi_u64, legendre, legendre_big, legendre_i64};
pub use poly::{rational_roots, rational_roots_lifted, rational_roots_with, RationalPolynomial, RootBudget};
pub use primes::{is_prime, is_prime_u64, next_prime, primes_up_to, PRIMALITY_BOUND};
pub use valuation::{int_valuation, remove_factor, valuation, Valuation};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `x mod m` as a `u64` in `0..m`.
pub fn mod_u64(x: &BigInt, m: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(m));
    r.to_u64().unwrap_or(0)
}

/// Whether the rational number is an integer.
pub fn is_integral(x: &BigRational) -> bool {
    x.denom().is_one()
}

/// Least `n ≥ 0` with `n² ≥ x` for a non-negative rational `x`.
pub fn ceil_sqrt_rational(x: &BigRational) -> BigInt {
    if !x.is_positive() {
        return BigInt::zero();
    }
    // n² ≥ a/b  ⇔  n²·b ≥ a
    let a = x.numer();
    let b = x.denom();
    let q = a.div_ceil(b);
    let mut n = q.sqrt();
    while &n * &n * b < *a {
        n += 1;
    }
    while n.is_positive() {
        let m = &n - 1;
        if &m * &m * b >= *a {
            n = m;
        } else {
            break;
        }
    }
    n
}
