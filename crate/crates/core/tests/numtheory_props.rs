use std::collections::BTreeSet;

use exceptional_core::nonintegral::ceil_ln;
use exceptional_core::numtheory::{
    f2_is_consistent, factorize, is_prime, legendre, primes_up_to, rational_roots, rational_roots_lifted,
    F2Matrix, F2System, RationalPolynomial,
};
use exceptional_core::{BigInt, BigRational};
use proptest::prelude::*;

fn small_prime() -> impl Strategy<Value = u64> {
    proptest::sample::select(primes_up_to(2000)).prop_filter("odd", |p| *p > 2)
}

proptest! {
    #[test]
    fn f2_matches_exhaustive_search(
        d in 0usize..=8,
        rows in proptest::collection::vec((proptest::collection::vec(any::<bool>(), 8), any::<bool>()), 0..=8),
    ) {
        let a = F2Matrix::from_rows(d, &rows.iter().map(|(r, _)| r[..d].to_vec()).collect::<Vec<_>>());
        let b: Vec<bool> = rows.iter().map(|(_, rhs)| *rhs).collect();
        let brute = (0u32..1 << d).any(|mask| {
            let x: Vec<bool> = (0..d).map(|i| mask >> i & 1 == 1).collect();
            a.mul_vec(&x) == b
        });
        prop_assert_eq!(f2_is_consistent(&a, &b), brute);

        let mut system = F2System::new(d);
        for (row, rhs) in &rows {
            system.push_bools(&row[..d], *rhs);
        }
        prop_assert_eq!(system.is_consistent(), brute);
        if let Some(x) = system.solution() {
            prop_assert_eq!(a.mul_vec(&x), b);
        }
    }

    #[test]
    fn factorization_multiplies_back(n in 1u64..u64::MAX) {
        let n = BigInt::from(n);
        let f = factorize(&n).unwrap();
        let mut product = BigInt::from(1);
        for (p, e) in f.factors() {
            prop_assert!(is_prime(p).unwrap());
            prop_assert!(*e >= 1);
            product *= p.pow(*e);
        }
        prop_assert_eq!(product, n);
    }

    #[test]
    fn legendre_is_euler_criterion(a in any::<i64>(), p in small_prime()) {
        let a = BigInt::from(a);
        let r = a.modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p));
        let r = ((r % p) + p) % p;
        let euler = if r == BigInt::from(0) { 0 } else if r == BigInt::from(1) { 1 } else { -1 };
        prop_assert_eq!(legendre(&a, p), euler);
    }

    #[test]
    fn rational_roots_of_products(
        roots in proptest::collection::vec((-60i64..=60, 1i64..=25), 0..5),
        quad in 1i64..50,
        scale in 1i64..10,
    ) {
        let mut factors: Vec<(RationalPolynomial, u32)> = roots
            .iter()
            .map(|&(u, v)| (RationalPolynomial::from_ints(&[-u, v]), 1 + (u.unsigned_abs() % 2) as u32))
            .collect();
        factors.push((RationalPolynomial::from_ints(&[quad, 0, 1]), 1));
        let f = RationalPolynomial::product(BigRational::new(scale.into(), 7.into()), &factors);
        let expected: BTreeSet<BigRational> = roots.iter().map(|&(u, v)| BigRational::new(u.into(), v.into())).collect();

        let found = rational_roots(&f).unwrap();
        prop_assert_eq!(found.iter().cloned().collect::<BTreeSet<_>>(), expected);
        prop_assert!(found.windows(2).all(|w| w[0] < w[1]));
        for r in &found {
            prop_assert_eq!(f.eval(r), BigRational::from_integer(0.into()));
        }
        prop_assert_eq!(rational_roots_lifted(&f, 200).unwrap(), found);
    }

    #[test]
    fn ceil_ln_brackets(d in 1u64..1_000_000_000_000) {
        let k = ceil_ln(&BigInt::from(d)) as f64;
        let d = d as f64;
        prop_assert!(d <= k.exp() * (1.0 + 1e-12));
        prop_assert!(k == 0.0 || d > (k - 1.0).exp() * (1.0 - 1e-12));
    }
}

#[test]
fn ceil_ln_on_large_powers() {
    assert_eq!(ceil_ln(&BigInt::from(10).pow(99)), 228);
    assert_eq!(ceil_ln(&BigInt::from(10).pow(100)), 231);
    assert_eq!(ceil_ln(&BigInt::from(1)), 0);
    assert_eq!(ceil_ln(&BigInt::from(3)), 2);
}
