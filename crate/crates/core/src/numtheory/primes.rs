use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// The first thirteen primes as Miller–Rabin bases are a deterministic
/// test for every input below this bound (Sorenson–Webster).
pub const PRIMALITY_BOUND: u128 = 3_317_044_064_679_887_385_961_981;

const BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

fn strong_probable_prime_u64(n: u64, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    BASES.iter().all(|&a| strong_probable_prime_u64(n, a))
}

fn strong_probable_prime_big(n: &BigUint, a: u64) -> bool {
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let mut x = BigUint::from(a).modpow(&d, n);
    if x == one || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

/// Deterministic primality test. Inputs at or above [`PRIMALITY_BOUND`] that
/// pass every base cannot be certified and yield a resource-limit error.
pub fn is_prime(n: &BigInt) -> Result<bool> {
    let Some(m) = n.to_biguint() else {
        return Ok(false);
    };
    if let Some(small) = m.to_u64() {
        return Ok(is_prime_u64(small));
    }
    for &p in &BASES {
        if (&m % p).is_zero() {
            return Ok(false);
        }
    }
    let passes = BASES.iter().all(|&a| strong_probable_prime_big(&m, a));
    if !passes {
        return Ok(false);
    }
    match m.to_u128() {
        Some(v) if v < PRIMALITY_BOUND => Ok(true),
        _ => Err(Error::FactorizationIncomplete(n.clone())),
    }
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime_u64(c) {
        c += 1;
    }
    c
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut k = i * i;
        while k <= n {
            composite[k] = true;
            k += i;
        }
    }
    out
}
