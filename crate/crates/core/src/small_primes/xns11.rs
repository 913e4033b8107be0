use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// A rational point on `y² + y = x³ − x² − 7x + 10`, whose Mordell–Weil
/// group is infinite cyclic generated by `(4, 5)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Xns11Point {
    Infinity,
    Affine { x: BigRational, y: BigRational },
}

// a1 = 0, a2 = −1, a3 = 1, a4 = −7, a6 = 10
const A2: i64 = -1;
const A3: i64 = 1;
const A4: i64 = -7;
const A6: i64 = 10;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Xns11Point {
    pub fn generator() -> Self {
        Xns11Point::Affine { x: q(4), y: q(5) }
    }

    /// Checks the curve equation; `None` if the point is off the curve.
    pub fn new(x: BigRational, y: BigRational) -> Option<Self> {
        let p = Xns11Point::Affine { x, y };
        p.is_on_curve().then_some(p)
    }

    pub fn is_on_curve(&self) -> bool {
        match self {
            Xns11Point::Infinity => true,
            Xns11Point::Affine { x, y } => {
                y * y + y * q(A3) == x * x * x + x * x * q(A2) + x * q(A4) + q(A6)
            }
        }
    }

    /// `−(x, y) = (x, −y − 1)`.
    pub fn neg(&self) -> Self {
        match self {
            Xns11Point::Infinity => Xns11Point::Infinity,
            Xns11Point::Affine { x, y } => Xns11Point::Affine {
                x: x.clone(),
                y: -y - q(A3),
            },
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (Xns11Point::Affine { x: x1, y: y1 }, Xns11Point::Affine { x: x2, y: y2 }) = (self, other) else {
            return if matches!(self, Xns11Point::Infinity) { other.clone() } else { self.clone() };
        };
        let lambda = if x1 != x2 {
            (y2 - y1) / (x2 - x1)
        } else {
            let denom = y1 + y2 + q(A3);
            if denom.is_zero() {
                return Xns11Point::Infinity;
            }
            (q(3) * x1 * x1 + q(2 * A2) * x1 + q(A4)) / (q(2) * y1 + q(A3))
        };
        let nu = y1 - &lambda * x1;
        let x3 = &lambda * &lambda - q(A2) - x1 - x2;
        let y3 = -(&lambda * &x3) - nu - q(A3);
        Xns11Point::Affine { x: x3, y: y3 }
    }

    /// `n·P` by double-and-add.
    pub fn mul(&self, n: i64) -> Self {
        let base = if n < 0 { self.neg() } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Xns11Point::Infinity;
        let mut pow = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.add(&pow);
            }
            k >>= 1;
            if k > 0 {
                pow = pow.add(&pow);
            }
        }
        acc
    }
}

/// `J(x, y) = (f1·f2·f3·f4)³ / (f5²·f6¹¹)`; `None` at the point at
/// infinity and at poles.
pub fn xns11_j(point: &Xns11Point) -> Option<BigRational> {
    let Xns11Point::Affine { x, y } = point else {
        return None;
    };
    let x2 = x * x;
    let x3 = &x2 * x;
    let x4 = &x3 * x;
    let f1 = &x2 + q(3) * x - q(6);
    let f2 = q(11) * (&x2 - q(5)) * y + (q(2) * &x4 + q(23) * &x3 - q(72) * &x2 - q(28) * x + q(127));
    let f3 = q(6) * y + q(11) * x - q(19);
    let f4 = q(22) * (x - q(2)) * y + (q(5) * &x3 + q(17) * &x2 - q(112) * x + q(120));
    let f5 = q(11) * y + (q(2) * &x2 + q(17) * x - q(34));
    let f6 = (x - q(4)) * y - (q(5) * x - q(9));
    let den = num_traits::pow(f5, 2) * num_traits::pow(f6, 11);
    if den.is_zero() {
        return None;
    }
    Some(num_traits::pow(f1 * f2 * f3 * f4, 3) / den)
}

/// `n` with `0 < |n| ≤ bound` and `J(n·(4,5)) = j`, smallest `|n|` first and
/// positive before negative.
pub fn xns11_search(j: &BigRational, bound: u32) -> Option<i64> {
    let g = Xns11Point::generator();
    let mut plus = Xns11Point::Infinity;
    let mut minus = Xns11Point::Infinity;
    let gneg = g.neg();
    for n in 1..=bound as i64 {
        plus = plus.add(&g);
        minus = minus.add(&gneg);
        if xns11_j(&plus).as_ref() == Some(j) {
            return Some(n);
        }
        if xns11_j(&minus).as_ref() == Some(j) {
            return Some(-n);
        }
    }
    None
}
