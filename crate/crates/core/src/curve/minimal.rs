use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::model::WeierstrassModel;
use crate::numtheory::{factorize, int_valuation};
use crate::{Error, Result};

/// Global minimal model, normalized so that `a1, a3 ∈ {0, 1}` and
/// `a2 ∈ {−1, 0, 1}`.
pub fn minimal_model(model: &WeierstrassModel) -> Result<WeierstrassModel> {
    let g = model.c4().gcd(model.c6());
    let primes: Vec<BigInt> = if g.is_zero() {
        Vec::new()
    } else {
        factorize(&g.abs())?.primes().cloned().collect()
    };
    minimize_at(model, &primes)
}

/// Model minimal at each prime of `primes`, unchanged (up to normalization)
/// elsewhere.
pub fn minimize_at(model: &WeierstrassModel, primes: &[BigInt]) -> Result<WeierstrassModel> {
    let mut c4 = model.c4().clone();
    let mut c6 = model.c6().clone();
    let mut disc = model.discriminant().clone();
    for p in primes {
        let v4 = int_valuation(&c4, p).map_or(u32::MAX, |v| v / 4);
        let v6 = int_valuation(&c6, p).map_or(u32::MAX, |v| v / 6);
        let vd = int_valuation(&disc, p).map_or(u32::MAX, |v| v / 12);
        let mut e = v4.min(v6).min(vd);
        while e > 0 {
            let (n4, n6) = scaled(&c4, &c6, p, e);
            if local_kraus(&n4, &n6, p) {
                break;
            }
            e -= 1;
        }
        if e > 0 {
            let (n4, n6) = scaled(&c4, &c6, p, e);
            c4 = n4;
            c6 = n6;
            disc /= num_traits::pow(p.clone(), 12 * e as usize);
        }
    }
    kraus_model(&c4, &c6).ok_or_else(|| {
        Error::InvalidArgument(alloc::format!(
            "c-invariants ({c4}, {c6}) do not come from an integral model"
        ))
    })
}

fn scaled(c4: &BigInt, c6: &BigInt, p: &BigInt, e: u32) -> (BigInt, BigInt) {
    let u4 = num_traits::pow(p.clone(), 4 * e as usize);
    let u6 = num_traits::pow(p.clone(), 6 * e as usize);
    (c4 / u4, c6 / u6)
}

/// Local conditions at 2 and 3 for `(c4, c6)` to be the invariants of an
/// integral model; vacuous at other primes.
fn local_kraus(c4: &BigInt, c6: &BigInt, p: &BigInt) -> bool {
    if p == &BigInt::from(3) {
        int_valuation(c6, p) != Some(2)
    } else if p == &BigInt::from(2) {
        let m4 = c6.mod_floor(&BigInt::from(4));
        let m32 = c6.mod_floor(&BigInt::from(32));
        m4 == BigInt::from(3)
            || (int_valuation(c4, p).is_none_or(|v| v >= 4) && (m32.is_zero() || m32 == BigInt::from(8)))
    } else {
        true
    }
}

/// The normalized integral model with the given `c4, c6`, if one exists.
fn kraus_model(c4: &BigInt, c6: &BigInt) -> Option<WeierstrassModel> {
    let twelve = BigInt::from(12);
    let mut b2 = (-c6).mod_floor(&twelve);
    if b2 > BigInt::from(6) {
        b2 -= &twelve;
    }
    let num4: BigInt = &b2 * &b2 - c4;
    if !(&num4 % 24u32).is_zero() {
        return None;
    }
    let b4 = num4 / 24u32;
    let b2_cubed: BigInt = &b2 * &b2 * &b2;
    let num6: BigInt = 36 * &b2 * &b4 - c6 - b2_cubed;
    if !(&num6 % 216u32).is_zero() {
        return None;
    }
    let b6 = num6 / 216u32;
    let two = BigInt::from(2);
    let a1 = b2.mod_floor(&two);
    let a3 = b6.mod_floor(&two);
    let a2 = (&b2 - &a1) / 4;
    let a4 = (&b4 - &a1 * &a3) / 2;
    let a6 = (&b6 - &a3) / 4;
    let m = WeierstrassModel::with_invariants([a1, a2, a3, a4, a6]);
    (m.c4() == c4 && m.c6() == c6 && !m.discriminant().is_zero()).then_some(m)
}

/// Whether the model has the least `v_p(Δ)` among integral models.
pub fn is_minimal_at(model: &WeierstrassModel, p: &BigInt) -> bool {
    let v = |x: &BigInt| int_valuation(x, p).unwrap_or(u32::MAX);
    if v(model.discriminant()) < 12 || v(model.c4()) < 4 || v(model.c6()) < 6 {
        return true;
    }
    let (n4, n6) = scaled(model.c4(), model.c6(), p, 1);
    !local_kraus(&n4, &n6, p)
}

/// `(x, y) ↦ (u²x, u³y)` for a positive integer `u`; the result has
/// `aᵢ·uⁱ` as coefficients.
pub fn scale_up(model: &WeierstrassModel, u: &BigInt) -> WeierstrassModel {
    let weights = [1usize, 2, 3, 4, 6];
    let a = model.a_invariants();
    WeierstrassModel::with_invariants(core::array::from_fn(|i| &a[i] * num_traits::pow(u.clone(), weights[i])))
}

impl WeierstrassModel {
    pub fn minimal(&self) -> Result<WeierstrassModel> {
        minimal_model(self)
    }
}
