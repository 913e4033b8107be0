use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::mod_u64;

/// Jacobi symbol `(a/n)` for odd `n`.
pub fn jacobi_u64(a: u64, n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let mut a = a % n;
    let mut n = n;
    let mut t = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                t = -t;
            }
        }
        core::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre(a: &BigInt, p: u64) -> i8 {
    jacobi_u64(mod_u64(a, p), p)
}

pub fn legendre_i64(a: i64, p: u64) -> i8 {
    legendre(&BigInt::from(a), p)
}

/// Legendre symbol for an arbitrary-size odd prime `p`.
pub fn legendre_big(a: &BigInt, p: &BigInt) -> i8 {
    if let Some(small) = p.to_u64() {
        return legendre(a, small);
    }
    let mut a = a.mod_floor(p);
    let mut n = p.clone();
    let mut t = 1i8;
    let eight = BigInt::from(8);
    let four = BigInt::from(4);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = n.mod_floor(&eight);
            if r == BigInt::from(3) || r == BigInt::from(5) {
                t = -t;
            }
        }
        core::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four) == BigInt::from(3) && n.mod_floor(&four) == BigInt::from(3) {
            t = -t;
        }
        a = a.mod_floor(&n);
    }
    if n.abs().is_one() {
        t
    } else {
        0
    }
}
