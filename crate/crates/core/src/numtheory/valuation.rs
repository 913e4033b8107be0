use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A p-adic valuation. `v_p(0)` is the distinguished value `Infinite`,
/// which compares greater than every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// True only for finite values in the given set, so `+∞` never matches.
    pub fn is_one_of(self, values: &[i64]) -> bool {
        matches!(self, Valuation::Finite(v) if values.contains(&v))
    }

    pub fn is_positive_odd(self) -> bool {
        matches!(self, Valuation::Finite(v) if v > 0 && v % 2 != 0)
    }

    pub fn is_negative(self) -> bool {
        matches!(self, Valuation::Finite(v) if v < 0)
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
            (Valuation::Infinite, _) => Ordering::Greater,
            (_, Valuation::Infinite) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("+inf"),
        }
    }
}

/// Splits `n = p^k · m` with `p ∤ m`. Returns `(k, m)`; `n` must be non-zero.
pub fn remove_factor(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    debug_assert!(!n.is_zero());
    debug_assert!(p.abs() > BigInt::one());
    let mut k = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return (k, m);
        }
        m = q;
        k += 1;
    }
}

/// `v_p(n)` for an integer, `None` when `n = 0`.
pub fn int_valuation(n: &BigInt, p: &BigInt) -> Option<u32> {
    if n.is_zero() {
        None
    } else {
        Some(remove_factor(n, p).0)
    }
}

pub fn valuation(x: &BigRational, p: &BigInt) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let num = remove_factor(x.numer(), p).0 as i64;
    let den = remove_factor(x.denom(), p).0 as i64;
    Valuation::Finite(num - den)
}
