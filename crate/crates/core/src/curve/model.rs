use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// An integral Weierstrass equation
/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6` together with its standard
/// invariants. Rational equations are brought to an isomorphic integral
/// one on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassModel {
    a: [BigInt; 5],
    b2: BigInt,
    b4: BigInt,
    b6: BigInt,
    b8: BigInt,
    c4: BigInt,
    c6: BigInt,
    disc: BigInt,
    j: BigRational,
}

/// Builds the model and its invariants, rejecting singular equations.
pub fn compute_invariants(a: [BigInt; 5]) -> Result<WeierstrassModel> {
    WeierstrassModel::new(a)
}

impl WeierstrassModel {
    pub fn new(a: [BigInt; 5]) -> Result<Self> {
        let m = Self::with_invariants(a);
        if m.disc.is_zero() {
            Err(Error::SingularCurve)
        } else {
            Ok(m)
        }
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self> {
        Self::new(a.map(BigInt::from))
    }

    /// Accepts rational coefficients; the result is the isomorphic model
    /// obtained by `(x, y) ↦ (m²x, m³y)` with `m` the lcm of the denominators.
    pub fn from_rational(a: &[BigRational; 5]) -> Result<Self> {
        let m = a.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let weights = [1u32, 2, 3, 4, 6];
        let scaled: [BigInt; 5] = core::array::from_fn(|i| {
            let v = &a[i] * BigRational::from_integer(num_traits::pow(m.clone(), weights[i] as usize));
            v.to_integer()
        });
        Self::new(scaled)
    }

    pub(crate) fn with_invariants(a: [BigInt; 5]) -> Self {
        let [a1, a2, a3, a4, a6] = &a;
        let b2 = a1 * a1 + 4 * a2;
        let b4 = 2 * a4 + a1 * a3;
        let b6 = a3 * a3 + 4 * a6;
        let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        let c4 = &b2 * &b2 - 24 * &b4;
        let b2_cubed: BigInt = &b2 * &b2 * &b2;
        let c6 = 36 * &b2 * &b4 - 216 * &b6 - b2_cubed;
        let b2sq_b8: BigInt = &b2 * &b2 * &b8;
        let disc: BigInt = 9 * &b2 * &b4 * &b6 - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6 - b2sq_b8;
        let j = if disc.is_zero() {
            BigRational::zero()
        } else {
            BigRational::new(&c4 * &c4 * &c4, disc.clone())
        };
        WeierstrassModel {
            a,
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            disc,
            j,
        }
    }

    pub fn a_invariants(&self) -> &[BigInt; 5] {
        &self.a
    }
    pub fn a1(&self) -> &BigInt {
        &self.a[0]
    }
    pub fn a2(&self) -> &BigInt {
        &self.a[1]
    }
    pub fn a3(&self) -> &BigInt {
        &self.a[2]
    }
    pub fn a4(&self) -> &BigInt {
        &self.a[3]
    }
    pub fn a6(&self) -> &BigInt {
        &self.a[4]
    }
    pub fn b2(&self) -> &BigInt {
        &self.b2
    }
    pub fn b4(&self) -> &BigInt {
        &self.b4
    }
    pub fn b6(&self) -> &BigInt {
        &self.b6
    }
    pub fn b8(&self) -> &BigInt {
        &self.b8
    }
    pub fn c4(&self) -> &BigInt {
        &self.c4
    }
    pub fn c6(&self) -> &BigInt {
        &self.c6
    }
    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }
    pub fn j_invariant(&self) -> &BigRational {
        &self.j
    }

    /// `a1 = a3 = 0`, so the equation reads `y² = x³ + a2·x² + a4·x + a6`.
    pub fn has_no_xy_terms(&self) -> bool {
        self.a[0].is_zero() && self.a[2].is_zero()
    }

    /// Integral change of variables `x = x' + r`, `y = y' + s·x' + t`.
    pub(crate) fn rst(&self, r: &BigInt, s: &BigInt, t: &BigInt) -> Self {
        let [a1, a2, a3, a4, a6] = &self.a;
        let n1 = a1 + 2 * s;
        let n2 = a2 - s * a1 + 3 * r - s * s;
        let n3 = a3 + r * a1 + 2 * t;
        let n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
        let n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
        Self::with_invariants([n1, n2, n3, n4, n6])
    }

    /// `aᵢ ↦ aᵢ / uⁱ`; every division must be exact.
    pub(crate) fn scale_down(&self, u: &BigInt) -> Self {
        let weights = [1usize, 2, 3, 4, 6];
        let a: [BigInt; 5] = core::array::from_fn(|i| {
            let d = num_traits::pow(u.clone(), weights[i]);
            debug_assert!((&self.a[i] % &d).is_zero());
            &self.a[i] / d
        });
        Self::with_invariants(a)
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a6] = &self.a;
        write!(f, "[{a1},{a2},{a3},{a4},{a6}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn y2_x3_plus_1() {
        let e = WeierstrassModel::from_ints([0, 0, 0, 0, 1]).unwrap();
        assert_eq!((e.b2(), e.b4(), e.b6()), (&z(0), &z(0), &z(4)));
        assert_eq!(e.c4(), &z(0));
        assert_eq!(e.c6(), &z(-864));
        assert_eq!(e.discriminant(), &z(-432));
        assert!(e.j_invariant().is_zero());
    }

    #[test]
    fn y2_x3_plus_x() {
        let e = WeierstrassModel::from_ints([0, 0, 0, 1, 0]).unwrap();
        assert_eq!(e.c4(), &z(-48));
        assert_eq!(e.discriminant(), &z(-64));
        assert_eq!(e.j_invariant(), &BigRational::from_integer(z(1728)));
    }

    #[test]
    fn singular_cubic_is_rejected() {
        assert_eq!(WeierstrassModel::from_ints([0, -1, 0, 0, 0]), Err(Error::SingularCurve));
    }

    #[test]
    fn curve_37a() {
        let e = WeierstrassModel::from_ints([0, 0, 1, -1, 0]).unwrap();
        assert_eq!(e.discriminant(), &z(37));
        assert_eq!(e.j_invariant(), &BigRational::new(z(110592), z(37)));
    }

    #[test]
    fn rational_coefficients_are_cleared() {
        let half = BigRational::new(z(1), z(2));
        let a = [
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            half.clone(),
            half,
        ];
        let e = WeierstrassModel::from_rational(&a).unwrap();
        assert_eq!(e.a_invariants(), &[z(0), z(0), z(0), z(8), z(32)]);
        let j_expected = {
            let a4 = BigRational::new(z(1), z(2));
            let a6 = a4.clone();
            let four_a4_cubed = BigRational::from_integer(z(4)) * &a4 * &a4 * &a4;
            BigRational::from_integer(z(1728)) * &four_a4_cubed
                / (four_a4_cubed.clone() + BigRational::from_integer(z(27)) * &a6 * &a6)
        };
        assert_eq!(e.j_invariant(), &j_expected);
    }

    #[test]
    fn coordinate_change_preserves_invariants() {
        let e = WeierstrassModel::from_ints([1, -1, 1, -10, -20]).unwrap();
        let f = e.rst(&z(3), &z(-2), &z(5));
        assert_eq!(e.c4(), f.c4());
        assert_eq!(e.c6(), f.c6());
        assert_eq!(e.discriminant(), f.discriminant());
    }
}
