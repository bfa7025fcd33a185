//! Weierstrass models over Q: invariants, long-to-short conversion,
//! Q-isomorphism of short models, the group law and division polynomials.

mod division;
mod point;

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{factor, rat, rational_is_square, rational_root, Int, Poly, Rat};
use crate::{Error, Result};

pub use division::{division_polynomial, exact_order_factor, DivisionPolynomials};
pub use point::Point;

/// `-16 (4A^3 + 27B^2)`, zero exactly for singular cubics.
pub fn short_discriminant(a: &Int, b: &Int) -> Int {
    -(a * a * a * 4u32 + b * b * 27u32) * 16u32
}

/// `Y^2 = X^3 + A X + B` with integer `A`, `B` and nonzero discriminant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ShortModel {
    a: Int,
    b: Int,
}

impl ShortModel {
    pub fn new(a: impl Into<Int>, b: impl Into<Int>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if short_discriminant(&a, &b).is_zero() {
            return Err(Error::Singular(format!("Y^2 = X^3 + ({a})X + ({b})")));
        }
        Ok(ShortModel { a, b })
    }

    pub fn a(&self) -> &Int {
        &self.a
    }

    pub fn b(&self) -> &Int {
        &self.b
    }

    pub fn discriminant(&self) -> Int {
        short_discriminant(&self.a, &self.b)
    }

    /// `X^3 + A X + B`.
    pub fn cubic(&self) -> Poly {
        Poly::from_ints(&[self.b.clone(), self.a.clone(), Int::zero(), Int::one()])
    }

    pub fn to_long(&self) -> LongModel {
        LongModel {
            a1: Rat::zero(),
            a2: Rat::zero(),
            a3: Rat::zero(),
            a4: Rat::from_integer(self.a.clone()),
            a6: Rat::from_integer(self.b.clone()),
        }
    }

    /// The model `(u^4 A, u^6 B)`.
    pub fn scaled(&self, u: &Int) -> ShortModel {
        let u2 = u * u;
        let u4 = &u2 * &u2;
        ShortModel { a: &self.a * &u4, b: &self.b * &u4 * &u2 }
    }

    pub fn j_invariant(&self) -> Rat {
        let a3 = &self.a * &self.a * &self.a;
        Rat::new(a3.clone() * 6912u32, a3 * 4u32 + &self.b * &self.b * 27u32)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.to_long().contains(p)
    }

    pub fn add(&self, p: &Point, q: &Point) -> Result<Point> {
        self.to_long().add(p, q)
    }

    pub fn mul(&self, n: i64, p: &Point) -> Result<Point> {
        self.to_long().mul(n, p)
    }
}

impl fmt::Display for ShortModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y^2 = X^3 + ({})X + ({})", self.a, self.b)
    }
}

impl fmt::Debug for ShortModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShortModel[{}, {}]", self.a, self.b)
    }
}

/// `Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6` over Q, nonsingular.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LongModel {
    pub(crate) a1: Rat,
    pub(crate) a2: Rat,
    pub(crate) a3: Rat,
    pub(crate) a4: Rat,
    pub(crate) a6: Rat,
}

impl LongModel {
    pub fn new(a1: Rat, a2: Rat, a3: Rat, a4: Rat, a6: Rat) -> Result<Self> {
        let e = LongModel { a1, a2, a3, a4, a6 };
        if e.discriminant().is_zero() {
            return Err(Error::Singular(format!("a-invariants {:?}", e.a_invariants())));
        }
        Ok(e)
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a.map(rat);
        Self::new(a1, a2, a3, a4, a6)
    }

    pub fn a_invariants(&self) -> [Rat; 5] {
        [self.a1.clone(), self.a2.clone(), self.a3.clone(), self.a4.clone(), self.a6.clone()]
    }

    pub fn b2(&self) -> Rat {
        &self.a1 * &self.a1 + &self.a2 * rat(4)
    }

    pub fn b4(&self) -> Rat {
        &self.a4 * rat(2) + &self.a1 * &self.a3
    }

    pub fn b6(&self) -> Rat {
        &self.a3 * &self.a3 + &self.a6 * rat(4)
    }

    pub fn b8(&self) -> Rat {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        a1 * a1 * a6 + a2 * a6 * rat(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    }

    pub fn c4(&self) -> Rat {
        let b2 = self.b2();
        &b2 * &b2 - self.b4() * rat(24)
    }

    pub fn c6(&self) -> Rat {
        let b2 = self.b2();
        -(&b2 * &b2 * &b2) + &b2 * self.b4() * rat(36) - self.b6() * rat(216)
    }

    pub fn discriminant(&self) -> Rat {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        -(&b2 * &b2 * &b8) - &b4 * &b4 * &b4 * rat(8) - &b6 * &b6 * rat(27) + &b2 * &b4 * &b6 * rat(9)
    }

    /// `(-27 c4, -54 c6)`: the rational short model `Y^2 = X^3 - 27c4 X - 54c6`.
    pub fn short_coefficients(&self) -> (Rat, Rat) {
        (self.c4() * rat(-27), self.c6() * rat(-54))
    }

    /// Image of `p` on the integral short model returned by
    /// [`long_to_short_scaled`] with scale `u`:
    /// `X = u^2 (36x + 3 b2)`, `Y = u^3 * 108 (2y + a1 x + a3)`.
    pub fn map_to_short(&self, p: &Point, u: &Int) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                let u = Rat::from_integer(u.clone());
                let u2 = &u * &u;
                let nx = &u2 * (x * rat(36) + self.b2() * rat(3));
                let ny = &u2 * &u * rat(108) * (y * rat(2) + &self.a1 * x + &self.a3);
                Point::Affine { x: nx, y: ny }
            }
        }
    }
}

/// Smallest `u >= 1` with `u^4 a` and `u^6 b` integral.
fn integral_scale(a: &Rat, b: &Rat) -> Int {
    let den = a.denom().lcm(b.denom());
    if den.is_one() {
        return Int::one();
    }
    let mut u = Int::one();
    for (p, _) in factor(&den) {
        let val = |d: &Int| {
            let mut d = d.clone();
            let mut v = 0u32;
            while (&d % &p).is_zero() {
                d /= &p;
                v += 1;
            }
            v
        };
        let e = val(a.denom()).div_ceil(4).max(val(b.denom()).div_ceil(6));
        u *= num_traits::pow(p, e as usize);
    }
    u
}

/// Integral short model `Y^2 = X^3 - 27 c4 u^4 X - 54 c6 u^6` of `e`,
/// together with the scale `u` (1 whenever `-27c4`, `-54c6` are already
/// integers). This is not a minimal model.
pub fn long_to_short_scaled(e: &LongModel) -> Result<(ShortModel, Int)> {
    let (a, b) = e.short_coefficients();
    let u = integral_scale(&a, &b);
    let ur = Rat::from_integer(u.clone());
    let u2 = &ur * &ur;
    let u4 = &u2 * &u2;
    let sa = (a * &u4).to_integer();
    let sb = (b * &u4 * &u2).to_integer();
    Ok((ShortModel::new(sa, sb)?, u))
}

pub fn long_to_short(e: &LongModel) -> Result<ShortModel> {
    long_to_short_scaled(e).map(|(m, _)| m)
}

/// `u` with `A2 = u^4 A1`, `B2 = u^6 B1`, if the models are Q-isomorphic.
/// The positive choice is returned (`-u` works too).
pub fn is_isomorphic(e1: &ShortModel, e2: &ShortModel) -> Option<Rat> {
    let (a1, b1, a2, b2) = (&e1.a, &e1.b, &e2.a, &e2.b);
    if a1.is_zero() != a2.is_zero() || b1.is_zero() != b2.is_zero() {
        return None;
    }
    let u = if a1.is_zero() {
        rational_root(&Rat::new(b2.clone(), b1.clone()), 6)?
    } else if b1.is_zero() {
        rational_root(&Rat::new(a2.clone(), a1.clone()), 4)?
    } else {
        // u^2 = (B2/B1) / (A2/A1)
        rational_is_square(&Rat::new(b2 * a1, b1 * a2))?
    };
    let u = u.abs();
    let u2 = &u * &u;
    let u4 = &u2 * &u2;
    let ok = Rat::from_integer(a1.clone()) * &u4 == Rat::from_integer(a2.clone())
        && Rat::from_integer(b1.clone()) * &u4 * &u2 == Rat::from_integer(b2.clone());
    ok.then_some(u)
}
