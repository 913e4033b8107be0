use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::factor::{factorize_with, FactorBudget};
use super::mod_u64;
use crate::{Error, Result};

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The coefficient list never ends in a zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Multiplies out `c · ∏ fᵢ^eᵢ`.
    pub fn product(c: BigRational, factors: &[(RationalPolynomial, u32)]) -> Self {
        factors
            .iter()
            .fold(Self::constant(c), |acc, (f, e)| &acc * &f.pow(*e))
    }

    /// Integer polynomial with the same roots: denominators cleared and
    /// content removed, positive leading coefficient.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().is_some_and(Signed::is_negative) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        for c in &mut ints {
            *c = &*c / &content * &sign;
        }
        ints
    }
}

impl<'a> Add<&'a RationalPolynomial> for &'a RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        RationalPolynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl<'a> Sub<&'a RationalPolynomial> for &'a RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul<&'a RationalPolynomial> for &'a RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Limits for [`rational_roots_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootBudget {
    /// Factorization effort for the constant and leading coefficients.
    pub factor: FactorBudget,
    /// Maximum number of (numerator, denominator) candidate pairs examined.
    pub max_candidates: u128,
    /// Primes tried for the p-adic search once the candidate enumeration
    /// runs out of budget; 0 disables it.
    pub lifting_primes: u32,
}

impl Default for RootBudget {
    fn default() -> Self {
        RootBudget {
            factor: FactorBudget {
                trial_bound: 10_000,
                rho_iterations: 1 << 12,
            },
            max_candidates: 100_000,
            lifting_primes: 2_000,
        }
    }
}

pub fn rational_roots(f: &RationalPolynomial) -> Result<Vec<BigRational>> {
    rational_roots_with(f, &RootBudget::default())
}

/// All distinct rational roots, sorted ascending.
///
/// Candidates `±u/v` with `u | a₀` and `v | aₙ` of the primitive integer
/// polynomial are filtered by `(v − u) | f(1)` and `(v + u) | f(−1)` before
/// the exact evaluation `Σ aᵢ uⁱ vⁿ⁻ⁱ = 0`. When `a₀` or `aₙ` cannot be
/// factored within budget the roots come from [`rational_roots_lifted`]
/// instead; both searches return the same set.
pub fn rational_roots_with(f: &RationalPolynomial, budget: &RootBudget) -> Result<Vec<BigRational>> {
    search(f, |coeffs| match divisor_candidates(coeffs, budget) {
        Err(e) if e.is_resource_limit() && budget.lifting_primes > 0 => lifted(coeffs, budget.lifting_primes),
        other => other,
    })
}

/// All distinct rational roots by Hensel lifting and rational
/// reconstruction, with no factorization. `Err(RootSearchBudget)` when no
/// prime among the first `primes` tried separates the roots of the
/// squarefree part.
pub fn rational_roots_lifted(f: &RationalPolynomial, primes: u32) -> Result<Vec<BigRational>> {
    search(f, |coeffs| lifted(coeffs, primes))
}

/// Strips the root at zero and the degree ≤ 1 cases, then hands a primitive
/// integer polynomial with `a₀ ≠ 0` and degree ≥ 2 to `nonlinear`.
fn search(
    f: &RationalPolynomial,
    nonlinear: impl FnOnce(&[BigInt]) -> Result<Vec<BigRational>>,
) -> Result<Vec<BigRational>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("rational_roots of the zero polynomial".into()));
    }
    let mut coeffs = f.primitive_integer_coeffs();
    let mut roots = Vec::new();
    let low = coeffs.iter().take_while(|c| c.is_zero()).count();
    if low > 0 {
        roots.push(BigRational::zero());
        coeffs.drain(..low);
    }
    match coeffs.len() - 1 {
        0 => {}
        1 => roots.push(BigRational::new(-&coeffs[0], coeffs[1].clone())),
        _ => roots.extend(nonlinear(&coeffs)?),
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn divisor_candidates(coeffs: &[BigInt], budget: &RootBudget) -> Result<Vec<BigRational>> {
    let n = coeffs.len() - 1;
    let a0 = coeffs[0].abs();
    let an = coeffs[n].abs();
    let fa0 = factorize_with(&a0, &budget.factor)?;
    let fan = factorize_with(&an, &budget.factor)?;
    let candidates = fa0.divisor_count().saturating_mul(fan.divisor_count());
    if candidates > budget.max_candidates {
        return Err(Error::RootSearchBudget {
            candidates,
            budget: budget.max_candidates,
        });
    }
    let nums = fa0.divisors(u128::MAX).unwrap_or_default();
    let dens = fan.divisors(u128::MAX).unwrap_or_default();
    let at_one: BigInt = coeffs.iter().sum();
    let at_minus_one: BigInt = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .sum();

    let divides = |d: &BigInt, x: &BigInt| -> bool { x.is_zero() || (!d.is_zero() && (x % d).is_zero()) };
    let filters: Vec<ModFilter> = FILTER_PRIMES.iter().map(|&q| ModFilter::new(coeffs, q)).collect();
    let nums_mod: Vec<Vec<u64>> = filters.iter().map(|f| nums.iter().map(|u| mod_u64(u, f.q)).collect()).collect();

    let mut roots = Vec::new();
    for v in &dens {
        let v_mod: Vec<u64> = filters.iter().map(|f| mod_u64(v, f.q)).collect();
        for (k, u) in nums.iter().enumerate() {
            for negate in [false, true] {
                // every root u/v makes the homogeneous form vanish mod each q
                let passes = filters.iter().enumerate().all(|(i, f)| {
                    let um = if negate { (f.q - nums_mod[i][k]) % f.q } else { nums_mod[i][k] };
                    f.vanishes(um, v_mod[i])
                });
                if !passes || !u.gcd(v).is_one() {
                    continue;
                }
                let u = if negate { -u } else { u.clone() };
                let minus = v - &u;
                let plus = v + &u;
                // (v·t − u) | f over Z, so (v − u) | f(1) and (−v − u) | f(−1)
                if !divides(&minus, &at_one) || !divides(&plus, &at_minus_one) {
                    continue;
                }
                if homogeneous_eval(coeffs, &u, v).is_zero() {
                    roots.push(BigRational::new(u, v.clone()));
                }
            }
        }
    }
    Ok(roots)
}

/// Remainder of `a` modulo the non-zero `b`, both lowest degree first.
fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let lead = b.last().expect("non-zero divisor");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().expect("non-empty") / lead;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

fn poly_quo(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let lead = b.last().expect("non-zero divisor");
    let mut q = vec![BigRational::zero(); a.len() + 1 - b.len()];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().expect("non-empty") / lead;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        q[shift] = c;
        r.pop();
    }
    q
}

/// `f / gcd(f, f')` as a primitive integer polynomial.
fn squarefree_part(coeffs: &[BigInt]) -> Vec<BigInt> {
    let f: Vec<BigRational> = coeffs.iter().cloned().map(BigRational::from_integer).collect();
    let df: Vec<BigRational> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(i.into()))
        .collect();
    let (mut a, mut b) = (f.clone(), df);
    let primitive = |r: Vec<BigRational>| -> Vec<BigRational> {
        if r.is_empty() {
            return r;
        }
        RationalPolynomial::new(r)
            .primitive_integer_coeffs()
            .into_iter()
            .map(BigRational::from_integer)
            .collect()
    };
    // remainders are kept primitive so coefficients stay small
    while !b.is_empty() {
        let r = primitive(poly_rem(&a, &b));
        a = core::mem::replace(&mut b, r);
    }
    RationalPolynomial::new(poly_quo(&f, &a)).primitive_integer_coeffs()
}

fn horner_mod(coeffs: &[u64], x: u64, q: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| (acc * x + c) % q)
}

/// Roots mod `q` of the reduction, provided `q ∤ aₙ` and every root is
/// simple.
fn simple_roots_mod(coeffs: &[BigInt], q: u64) -> Option<Vec<u64>> {
    let reduced: Vec<u64> = coeffs.iter().map(|c| mod_u64(c, q)).collect();
    if *reduced.last().expect("non-empty") == 0 {
        return None;
    }
    let deriv: Vec<u64> = reduced.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % q) * c % q).collect();
    let mut roots = Vec::new();
    for x in 0..q {
        if horner_mod(&reduced, x, q) == 0 {
            if horner_mod(&deriv, x, q) == 0 {
                return None;
            }
            roots.push(x);
        }
    }
    Some(roots)
}

fn eval_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// The unique `u/v` with `|u| ≤ n`, `0 < v ≤ d` and `u ≡ r·v (mod m)`,
/// given `m > 2nd`.
fn reconstruct(r: &BigInt, m: &BigInt, n: &BigInt, d: &BigInt) -> Option<(BigInt, BigInt)> {
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > n {
        let (quo, rem) = r0.div_rem(&r1);
        let t2 = &t0 - &quo * &t1;
        r0 = core::mem::replace(&mut r1, rem);
        t0 = core::mem::replace(&mut t1, t2);
    }
    let (u, v) = if t1.is_negative() { (-r1, -t1) } else { (r1, t1) };
    (!v.is_zero() && &v <= d && u.gcd(&v).is_one()).then_some((u, v))
}

/// Primes tried on the polynomial itself before passing to its squarefree
/// part; a squarefree polynomial has simple roots modulo all but finitely
/// many primes.
const DIRECT_PRIMES: u32 = 16;

fn lifted(coeffs: &[BigInt], primes: u32) -> Result<Vec<BigRational>> {
    if let Some(roots) = lift_with_primes(coeffs, primes.min(DIRECT_PRIMES)) {
        return Ok(roots);
    }
    lift_with_primes(&squarefree_part(coeffs), primes).ok_or(Error::RootSearchBudget {
        candidates: u128::from(primes) + 1,
        budget: u128::from(primes),
    })
}

/// `None` when none of the first `primes` odd primes gives simple roots.
fn lift_with_primes(f: &[BigInt], primes: u32) -> Option<Vec<BigRational>> {
    let n = f[0].abs();
    let d = f.last().expect("non-empty").abs();
    let target: BigInt = BigInt::from(2u32) * &n * &d;
    let deriv: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();

    let mut q = 2u64;
    for _ in 0..primes {
        q = super::next_prime(q);
        let Some(start) = simple_roots_mod(f, q) else { continue };
        let mut roots = Vec::new();
        for r in start {
            let mut m = BigInt::from(q);
            let mut x = BigInt::from(r);
            // Newton steps square the modulus while f'(x) stays a unit
            while m <= target {
                m = &m * &m;
                let fx = eval_mod(f, &x, &m);
                let inv = inverse_mod(&eval_mod(&deriv, &x, &m), &m).expect("simple root stays simple");
                x = (x - fx * inv).mod_floor(&m);
            }
            if let Some((u, v)) = reconstruct(&x, &m, &n, &d) {
                if homogeneous_eval(f, &u, &v).is_zero() {
                    roots.push(BigRational::new(u, v));
                }
            }
        }
        return Some(roots);
    }
    None
}

const FILTER_PRIMES: [u64; 3] = [2_147_483_647, 2_147_483_629, 2_147_483_587];

/// The integer coefficients reduced modulo a prime `q < 2³¹`.
struct ModFilter {
    q: u64,
    coeffs: Vec<u64>,
}

impl ModFilter {
    fn new(coeffs: &[BigInt], q: u64) -> Self {
        ModFilter {
            q,
            coeffs: coeffs.iter().map(|c| mod_u64(c, q)).collect(),
        }
    }

    /// `Σ aᵢ uⁱ vⁿ⁻ⁱ ≡ 0 (mod q)`.
    fn vanishes(&self, u: u64, v: u64) -> bool {
        let q = self.q;
        let mut it = self.coeffs.iter().rev();
        let mut acc = *it.next().expect("non-empty");
        let mut vpow = 1u64;
        for &a in it {
            vpow = vpow * v % q;
            acc = (acc * u + a * vpow % q) % q;
        }
        acc == 0
    }
}

/// `vⁿ · f(u/v)`.
fn homogeneous_eval(coeffs: &[BigInt], u: &BigInt, v: &BigInt) -> BigInt {
    let n = coeffs.len() - 1;
    let mut acc = BigInt::zero();
    let mut vpow = BigInt::one();
    // Horner on the reversed homogeneous form: ((aₙu + aₙ₋₁v)u + aₙ₋₂v²)…
    let mut first = true;
    for i in (0..=n).rev() {
        if first {
            acc = coeffs[i].clone();
            first = false;
        } else {
            vpow *= v;
            acc = acc * u + &coeffs[i] * &vpow;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn examples() {
        let f = RationalPolynomial::from_ints(&[-4, 0, 1]);
        assert_eq!(rational_roots(&f).unwrap(), vec![q(-2, 1), q(2, 1)]);
        let f = RationalPolynomial::from_ints(&[-2, 0, 1]);
        assert!(rational_roots(&f).unwrap().is_empty());
        // 256(t+1)^3 - 2048 t
        let t1 = RationalPolynomial::from_ints(&[1, 1]);
        let f = &t1.pow(3).scale(&q(256, 1)) - &RationalPolynomial::from_ints(&[0, 2048]);
        assert!(rational_roots(&f).unwrap().contains(&q(1, 1)));
    }

    #[test]
    fn fractional_and_zero_roots() {
        // t (3t - 2)(t + 5/7)
        let f = RationalPolynomial::product(
            q(1, 1),
            &[
                (RationalPolynomial::t(), 1),
                (RationalPolynomial::from_ints(&[-2, 3]), 2),
                (RationalPolynomial::new(vec![q(5, 7), q(1, 1)]), 1),
            ],
        );
        assert_eq!(rational_roots(&f).unwrap(), vec![q(-5, 7), q(0, 1), q(2, 3)]);
    }

    #[test]
    fn roots_at_plus_minus_one() {
        let f = RationalPolynomial::from_ints(&[-1, 0, 1]);
        assert_eq!(rational_roots(&f).unwrap(), vec![q(-1, 1), q(1, 1)]);
        let f = RationalPolynomial::from_ints(&[1, 0, 1]);
        assert!(rational_roots(&f).unwrap().is_empty());
    }

    #[test]
    fn constant_and_zero() {
        assert!(rational_roots(&RationalPolynomial::from_ints(&[7])).unwrap().is_empty());
        assert!(rational_roots(&RationalPolynomial::zero()).is_err());
    }

    #[test]
    fn lifted_search_agrees() {
        let t1 = RationalPolynomial::from_ints(&[1, 1]);
        let polys = [
            RationalPolynomial::from_ints(&[-4, 0, 1]),
            RationalPolynomial::from_ints(&[-2, 0, 1]),
            RationalPolynomial::from_ints(&[1, 0, 1]),
            &t1.pow(3).scale(&q(256, 1)) - &RationalPolynomial::from_ints(&[0, 2048]),
            RationalPolynomial::product(
                q(3, 5),
                &[
                    (RationalPolynomial::from_ints(&[-2, 3]), 3),
                    (RationalPolynomial::from_ints(&[7, -11]), 1),
                    (RationalPolynomial::from_ints(&[1, 1, 1]), 2),
                    (RationalPolynomial::t(), 2),
                ],
            ),
        ];
        for f in &polys {
            assert_eq!(rational_roots_lifted(f, 100).unwrap(), rational_roots(f).unwrap(), "{f}");
        }
    }

    #[test]
    fn unfactorable_coefficients_fall_back() {
        // (v t - u)(t^2 + 1) with u a product of two large primes
        let u = BigInt::from(2_305_843_009_213_693_951u64) * BigInt::from(2_147_483_647u64);
        let v: BigInt = (BigInt::one() << 89u32) - 1;
        let lin = RationalPolynomial::new(vec![BigRational::from_integer(-&u), BigRational::from_integer(v.clone())]);
        let f = &lin * &RationalPolynomial::from_ints(&[1, 0, 1]);
        let budget = RootBudget {
            factor: FactorBudget {
                trial_bound: 100,
                rho_iterations: 10,
            },
            ..RootBudget::default()
        };
        let expected = vec![BigRational::new(u, v)];
        assert_eq!(rational_roots_with(&f, &budget).unwrap(), expected);
        let strict = RootBudget { lifting_primes: 0, ..budget };
        assert!(rational_roots_with(&f, &strict).unwrap_err().is_resource_limit());
    }

    #[test]
    fn display() {
        let f = RationalPolynomial::from_ints(&[1, -3, 0, 2]);
        assert_eq!(alloc::format!("{f}"), "2*t^3 - 3*t + 1");
    }
}
