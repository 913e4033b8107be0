use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::model::WeierstrassModel;
use crate::numtheory::{int_valuation, legendre_big};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KodairaSymbol {
    I0,
    /// `I_n`, `n ≥ 1`.
    I(u32),
    II,
    III,
    IV,
    I0Star,
    /// `I_n*`, `n ≥ 1`.
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl fmt::Display for KodairaSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaSymbol::I0 => f.write_str("I0"),
            KodairaSymbol::I(n) => write!(f, "I{n}"),
            KodairaSymbol::II => f.write_str("II"),
            KodairaSymbol::III => f.write_str("III"),
            KodairaSymbol::IV => f.write_str("IV"),
            KodairaSymbol::I0Star => f.write_str("I0*"),
            KodairaSymbol::IStar(n) => write!(f, "I{n}*"),
            KodairaSymbol::IVStar => f.write_str("IV*"),
            KodairaSymbol::IIIStar => f.write_str("III*"),
            KodairaSymbol::IIStar => f.write_str("II*"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionType {
    Good,
    SplitMultiplicative,
    NonsplitMultiplicative,
    Additive,
}

impl ReductionType {
    pub fn is_multiplicative(self) -> bool {
        matches!(self, ReductionType::SplitMultiplicative | ReductionType::NonsplitMultiplicative)
    }
}

/// Reduction data of a curve at one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalData {
    pub p: BigInt,
    pub kodaira: KodairaSymbol,
    /// `v_p` of the minimal discriminant.
    pub disc_valuation: u32,
    pub conductor_exponent: u32,
    pub reduction: ReductionType,
    /// A model minimal at `p` on which the reduction type can be read off.
    pub minimal_model: WeierstrassModel,
}

struct Field<'a> {
    p: &'a BigInt,
    two: bool,
    half: BigInt,
}

impl Field<'_> {
    fn val(&self, x: &BigInt) -> u32 {
        int_valuation(x, self.p).unwrap_or(u32::MAX)
    }
    fn divides(&self, x: &BigInt) -> bool {
        (x % self.p).is_zero()
    }
    fn reduce(&self, x: &BigInt) -> BigInt {
        x.mod_floor(self.p)
    }
    fn inv(&self, x: &BigInt) -> BigInt {
        let g = x.mod_floor(self.p).extended_gcd(self.p);
        debug_assert!(g.gcd.is_one());
        g.x.mod_floor(self.p)
    }
    /// Whether `a·T² + b·T + c` has a root in `F_p`.
    fn quad_has_root(&self, a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
        let (a, b, c) = (self.reduce(a), self.reduce(b), self.reduce(c));
        if a.is_zero() {
            return !b.is_zero() || c.is_zero();
        }
        if self.two {
            return c.is_zero() || (&a + &b + &c).is_even();
        }
        legendre_big(&(&b * &b - 4 * &a * &c), self.p) >= 0
    }
}

fn exact(x: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!((x % d).is_zero(), "{x} is not divisible by {d}");
    x / d
}

/// Tate's algorithm at the prime `p`. Non-minimal models are minimalized at
/// `p` along the way.
pub fn tate_local_data(model: &WeierstrassModel, p: &BigInt) -> LocalData {
    let two = p == &BigInt::from(2);
    let three = p == &BigInt::from(3);
    let f = Field {
        p,
        two,
        half: if two { BigInt::zero() } else { (p + 1u32) / 2u32 },
    };
    let zero = BigInt::zero();
    let p2 = p * p;
    let p3 = &p2 * p;
    let p4 = &p3 * p;
    let mut c = model.clone();

    loop {
        let vd = f.val(c.discriminant());
        if vd == 0 {
            return LocalData {
                p: p.clone(),
                kodaira: KodairaSymbol::I0,
                disc_valuation: 0,
                conductor_exponent: 0,
                reduction: ReductionType::Good,
                minimal_model: c,
            };
        }

        // move the singular point to (0, 0)
        let (r, t) = {
            let [a1, a2, a3, a4, a6] = c.a_invariants();
            let (b2, b4, b6) = (c.b2(), c.b4(), c.b6());
            if two {
                if f.divides(b2) {
                    let r = f.reduce(a4);
                    let t = f.reduce(&(((&r + a2) * &r + a4) * &r + a6));
                    (r, t)
                } else {
                    let r = a3.clone();
                    let t = a4 + &r * &r;
                    (r, t)
                }
            } else if three {
                let r = if f.divides(b2) { -b6 } else { -f.inv(b2) * b4 };
                let t = a1 * &r + a3;
                (r, t)
            } else {
                let c4 = c.c4();
                let r = if f.divides(c4) {
                    -f.inv(&BigInt::from(12)) * b2
                } else {
                    -f.inv(&(12 * c4)) * (c.c6() + b2 * c4)
                };
                let t = -&f.half * (a1 * &r + a3);
                (r, t)
            }
        };
        c = c.rst(&f.reduce(&r), &zero, &f.reduce(&t));
        debug_assert!(f.divides(c.a3()) && f.divides(c.a4()) && f.divides(c.a6()));

        let done = |c: WeierstrassModel, kodaira, fp, reduction| LocalData {
            p: p.clone(),
            kodaira,
            disc_valuation: vd,
            conductor_exponent: fp,
            reduction,
            minimal_model: c,
        };

        if !f.divides(c.c4()) {
            let reduction = if f.quad_has_root(&BigInt::one(), c.a1(), &-c.a2()) {
                ReductionType::SplitMultiplicative
            } else {
                ReductionType::NonsplitMultiplicative
            };
            return done(c, KodairaSymbol::I(vd), 1, reduction);
        }
        let additive = ReductionType::Additive;
        if f.val(c.a6()) < 2 {
            return done(c, KodairaSymbol::II, vd, additive);
        }
        if f.val(c.b8()) < 3 {
            return done(c, KodairaSymbol::III, vd - 1, additive);
        }
        if f.val(c.b6()) < 3 {
            return done(c, KodairaSymbol::IV, vd - 2, additive);
        }

        // arrange p | a1, a2; p² | a3, a4; p³ | a6
        let (s, t) = if two {
            (f.reduce(c.a2()), 2 * f.reduce(&exact(c.a6(), &BigInt::from(4))))
        } else if three {
            (c.a1().clone(), c.a3().clone())
        } else {
            (-c.a1() * &f.half, -c.a3() * &f.half)
        };
        c = c.rst(&zero, &s, &t);

        // roots of T³ + b·T² + c·T + d mod p
        let b = exact(c.a2(), p);
        let cc = exact(c.a4(), &p2);
        let d = exact(c.a6(), &p3);
        let w = 27 * &d * &d - &b * &b * &cc * &cc + 4 * &b * &b * &b * &d - 18 * &b * &cc * &d
            + 4 * &cc * &cc * &cc;
        let x = 3 * &cc - &b * &b;

        if !f.divides(&w) {
            return done(c, KodairaSymbol::I0Star, vd - 4, additive);
        }

        if !f.divides(&x) {
            // double root, moved to T = 0
            let r = if two {
                f.reduce(&cc)
            } else if three {
                &cc * f.inv(&b)
            } else {
                (&b * &cc - 9 * &d) * f.inv(&(2 * &x))
            };
            c = c.rst(&(p * f.reduce(&r)), &zero, &zero);
            let mut ix = 3u32;
            let mut iy = 3u32;
            let mut mx = p2.clone();
            let mut my = p2.clone();
            loop {
                let a3t = exact(c.a3(), &my);
                let a6t = exact(c.a6(), &(&mx * &my));
                if !f.divides(&(&a3t * &a3t + 4 * &a6t)) {
                    break;
                }
                let t = if two {
                    &my * f.reduce(&a6t)
                } else {
                    &my * f.reduce(&(-&a3t * &f.half))
                };
                c = c.rst(&zero, &zero, &t);
                my *= p;
                iy += 1;
                let a2t = exact(c.a2(), p);
                let a4t = exact(c.a4(), &(p * &mx));
                let a6t = exact(c.a6(), &(&mx * &my));
                if !f.divides(&(&a4t * &a4t - 4 * &a6t * &a2t)) {
                    break;
                }
                let r = if two {
                    &mx * f.reduce(&(&a6t * f.inv(&a2t)))
                } else {
                    &mx * f.reduce(&(-&a4t * f.inv(&(2 * &a2t))))
                };
                c = c.rst(&r, &zero, &zero);
                mx *= p;
                ix += 1;
            }
            let m = ix + iy - 5;
            return done(c, KodairaSymbol::IStar(m), vd - m - 4, additive);
        }

        // triple root, moved to T = 0
        let r = if two {
            b.clone()
        } else if three {
            f.reduce(&-&d)
        } else {
            -&b * f.inv(&BigInt::from(3))
        };
        c = c.rst(&(p * f.reduce(&r)), &zero, &zero);
        let x3t = exact(c.a3(), &p2);
        let x6t = exact(c.a6(), &p4);
        if !f.divides(&(&x3t * &x3t + 4 * &x6t)) {
            return done(c, KodairaSymbol::IVStar, vd - 6, additive);
        }
        let t = if two { x6t } else { &x3t * &f.half };
        c = c.rst(&zero, &zero, &(-&p2 * f.reduce(&t)));
        if f.val(c.a4()) < 4 {
            return done(c, KodairaSymbol::IIIStar, vd - 7, additive);
        }
        if f.val(c.a6()) < 6 {
            return done(c, KodairaSymbol::IIStar, vd - 8, additive);
        }
        c = c.scale_down(p);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::minimal::scale_up;

    fn local(a: [i64; 5], p: i64) -> LocalData {
        tate_local_data(&WeierstrassModel::from_ints(a).unwrap(), &BigInt::from(p))
    }

    #[test]
    fn good_and_multiplicative() {
        let l = local([0, 0, 0, 1, 1], 7);
        assert_eq!((l.kodaira, l.conductor_exponent), (KodairaSymbol::I0, 0));
        let l = local([0, 0, 0, 1, 1], 31);
        assert_eq!((l.kodaira, l.conductor_exponent), (KodairaSymbol::I(1), 1));
        assert!(l.reduction.is_multiplicative());
    }

    #[test]
    fn additive_at_two() {
        // Δ = −496 = −2⁴·31
        let l = local([0, 0, 0, 1, 1], 2);
        assert_eq!(l.kodaira, KodairaSymbol::II);
        assert_eq!(l.conductor_exponent, 4);
        assert_eq!(l.reduction, ReductionType::Additive);
    }

    #[test]
    fn split_and_nonsplit() {
        // 11a1: split at 11
        let l = local([0, -1, 1, -10, -20], 11);
        assert_eq!(l.kodaira, KodairaSymbol::I(5));
        assert_eq!(l.reduction, ReductionType::SplitMultiplicative);
        // 14a1: 2 is split, 7 is split? a_7 = 1 for 14a1
        let l = local([1, 0, 1, 4, -6], 7);
        assert_eq!(l.kodaira, KodairaSymbol::I(3));
        assert_eq!(l.reduction, ReductionType::SplitMultiplicative);
        let l = local([1, 0, 1, 4, -6], 2);
        assert_eq!(l.kodaira, KodairaSymbol::I(6));
        assert_eq!(l.reduction, ReductionType::NonsplitMultiplicative);
    }

    #[test]
    fn non_minimal_models_are_reduced() {
        let e = WeierstrassModel::from_ints([0, -1, 1, -10, -20]).unwrap();
        for p in [2i64, 3, 5, 11] {
            let big = scale_up(&e, &BigInt::from(p));
            let l = tate_local_data(&big, &BigInt::from(p));
            let base = tate_local_data(&e, &BigInt::from(p));
            assert_eq!(l.kodaira, base.kodaira);
            assert_eq!(l.disc_valuation, base.disc_valuation);
        }
    }

    #[test]
    fn star_types() {
        let kod = |a, p| local(a, p).kodaira;
        assert_eq!(kod([0, 0, 0, -25, 0], 5), KodairaSymbol::I0Star);
        assert_eq!(kod([0, 0, 0, 0, 625], 5), KodairaSymbol::IVStar);
        assert_eq!(kod([0, 0, 0, 125, 0], 5), KodairaSymbol::IIIStar);
        assert_eq!(kod([0, 0, 0, 0, 3125], 5), KodairaSymbol::IIStar);
        assert_eq!(kod([0, 0, 0, 0, 32], 2), KodairaSymbol::IIStar);
        // twist of 11a1 by −11
        let l = local([0, 11, 11, -1210, 26257], 11);
        assert_eq!((l.kodaira, l.conductor_exponent), (KodairaSymbol::IStar(5), 2));
    }
}
